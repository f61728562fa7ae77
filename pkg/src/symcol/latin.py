"""Idempotent commutative Latin squares and structural predicates.

The total-coloring constructions over central graphs consume one specific
family: the anti-circulant idempotent commutative Latin square of odd order
2k-1 produced by ``icls``. Everything here is pure and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["LatinSquare", "StructureFlags", "icls", "check_structure"]


@dataclass(frozen=True)
class LatinSquare:
    """A k-by-k array of cells in 1..k.

    The name is aspirational: construction only validates shape and cell
    range, so a non-Latin array can be represented and then rejected by
    ``check_structure``. Cells are addressed 1-based through ``entry``.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = len(self.rows)
        if k == 0:
            raise ValueError("square must have positive order")
        for row in self.rows:
            if len(row) != k:
                raise ValueError(f"expected {k} cells per row, got {len(row)}")
            for cell in row:
                if not 1 <= cell <= k:
                    raise ValueError(f"cell {cell} out of range 1..{k}")

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """Cell in row i, column j, both 1-based."""
        if not (1 <= i <= self.order and 1 <= j <= self.order):
            raise IndexError(f"indices ({i}, {j}) out of range for order {self.order}")
        return self.rows[i - 1][j - 1]

    def to_csv(self) -> str:
        return "\n".join(",".join(str(cell) for cell in row) for row in self.rows)


@dataclass(frozen=True)
class StructureFlags:
    latin: bool
    commutative: bool
    idempotent: bool
    anticirculant: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "latin": self.latin,
            "commutative": self.commutative,
            "idempotent": self.idempotent,
            "anticirculant": self.anticirculant,
        }


def icls(k: int) -> LatinSquare:
    """The anti-circulant idempotent commutative Latin square of order 2k-1.

    Cell (i, j) holds (i+j)*k reduced into the range 1..2k-1, so residue 0
    stands for 2k-1. The diagonal comes out as entry(i, i) == i because k
    is the inverse of 2 modulo 2k-1.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = 2 * k - 1
    rows = tuple(
        tuple(((i + j) * k - 1) % n + 1 for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return LatinSquare(rows)


def check_structure(square: LatinSquare) -> StructureFlags:
    """Evaluate the four structural predicates by their definitions."""
    k = square.order
    symbols = set(range(1, k + 1))
    latin = all(set(row) == symbols for row in square.rows) and all(
        {row[j] for row in square.rows} == symbols for j in range(k)
    )
    commutative = all(
        square.rows[i][j] == square.rows[j][i] for i in range(k) for j in range(i)
    )
    idempotent = all(square.rows[i][i] == i + 1 for i in range(k))
    anticirculant = all(
        square.rows[i + 1] == square.rows[i][1:] + square.rows[i][:1]
        for i in range(k - 1)
    )
    return StructureFlags(latin, commutative, idempotent, anticirculant)
