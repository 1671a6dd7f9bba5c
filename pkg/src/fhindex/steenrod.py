"""Steenrod-square refinement of the numerical C_2-index for two-frame Stiefel manifolds.

The top of V_2(K^l) looks like a stunted projective space: two cells of width
d = dim_R K in dimensions d(l-2) + s and d(l-1) + s, glued by Sq^d exactly
when the binomial coefficient C(l-2, 1) is odd, i.e. when l is odd.  A
connected top cone pushes the numerical index lower bound up by one over the
bound that the index ideal alone provides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charclass import ScalarField

_CELL_WIDTH = {ScalarField.R: 1, ScalarField.C: 2, ScalarField.H: 4}
_SUSPENSION_SHIFT = {ScalarField.R: 0, ScalarField.C: 1, ScalarField.H: 3}
_MANIFOLD_DIM = {ScalarField.R: lambda l: 2 * l - 3, ScalarField.C: lambda l: 4 * l - 5, ScalarField.H: lambda l: 8 * l - 9}


def binom_mod2(n: int, r: int) -> int:
    """C(n, r) mod 2 via Lucas: 1 iff the binary digits of r sit inside n.

    Out-of-range r (r < 0 or r > n) returns 0 by convention.
    """
    if r < 0 or r > n:
        return 0
    return 1 if (n & r) == r else 0


@dataclass(frozen=True)
class StuntedSpace:
    """The two-cell top of V_2(K^l), suspended as it appears in the manifold."""

    base_field: ScalarField
    l: int

    def __post_init__(self) -> None:
        if self.l < 3:
            raise ValueError("the two-cell description needs l >= 3")

    @property
    def cell_width(self) -> int:
        return _CELL_WIDTH[self.base_field]

    @property
    def suspension_shift(self) -> int:
        return _SUSPENSION_SHIFT[self.base_field]

    def cell_dimensions(self) -> tuple[int, int]:
        d, s = self.cell_width, self.suspension_shift
        return (d * (self.l - 2) + s, d * (self.l - 1) + s)


def sq_connects(space: StuntedSpace) -> bool:
    """Whether Sq^d joins the two cells: C(l-2, 1) odd, i.e. l odd."""
    return binom_mod2(space.l - 2, 1) == 1


def c2_numeric_index_bounds(field: ScalarField, l: int) -> tuple[int, int]:
    """(lower, upper) for the numerical C_2-index of V_2(K^l).

    The index ideal starts at degree d(l-1), giving ind >= d(l-1) - 1; a
    connected top cone (l odd) raises that to d(l-1).  The upper bound is the
    manifold dimension bound.
    """
    if l < 2:
        raise ValueError("need l >= 2 for two orthonormal vectors")
    d = _CELL_WIDTH[field]
    lower = d * (l - 1) - 1
    if l >= 3 and sq_connects(StuntedSpace(field, l)):
        lower += 1
    return lower, _MANIFOLD_DIM[field](l)
