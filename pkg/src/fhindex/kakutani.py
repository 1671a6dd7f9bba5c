"""Existence bounds for p^n orthonormal vectors on which a function vanishes equally.

For f : S(K^l) -> R^m continuous, one asks for l large enough that some
p^n-tuple of pairwise orthogonal unit vectors has equal f-values.  A negative
answer would give a C_p^n-map from the Stiefel manifold to the unit sphere of
W^m (W the reduced regular representation), which index monotonicity forbids
once the sphere's index degree sits strictly below every degree where the
Stiefel index is known to begin.  decide() re-derives the guarantee from the
index engine; bound_l() gives the closed-form threshold for comparison.

The closed forms for odd m at rank >= 2 are genuinely rational; bounds are
reported exactly as fractions, with the ceiling alongside.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil

from .charclass import GroupSpec, ScalarField
from .indices import RepSphereSpec, StiefelSpec, index_rep_sphere, index_stiefel
from .steenrod import c2_numeric_index_bounds


class NoKnownBoundError(ValueError):
    """No closed-form bound is available for this configuration (p = 2 with n >= 2)."""


class Mechanism(Enum):
    INDEX_COMPARISON = "IndexComparison"
    STEENROD_REFINEMENT = "SteenrodRefinement"
    CONNECTIVITY = "Connectivity"


@dataclass(frozen=True)
class BoundQuery:
    """How many dimensions m of equal values, for which group and scalar field."""

    m: int
    group: GroupSpec
    field: ScalarField

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be positive")


@dataclass(frozen=True)
class BoundDecision:
    l: int
    guaranteed: bool
    stiefel_index_degree: int
    sphere_index_degree: int
    mechanism: Mechanism
    bound_formula_value: Fraction | None

    def to_record(self) -> dict:
        return {
            "l": self.l,
            "guaranteed": self.guaranteed,
            "stiefel_index_degree": self.stiefel_index_degree,
            "sphere_index_degree": self.sphere_index_degree,
            "mechanism": self.mechanism.value,
            "bound_formula_value": None
            if self.bound_formula_value is None
            else str(self.bound_formula_value),
        }


def bound_l(query: BoundQuery) -> Fraction:
    """Closed-form l guaranteeing the configuration, exact as a rational.

    Raises NoKnownBoundError for p = 2 with n >= 2, where no bound is known.
    """
    m, p, n = query.m, query.group.p, query.group.n
    k = query.group.order
    field = query.field

    if p == 2 and n >= 2:
        raise NoKnownBoundError(
            f"no closed-form bound for p=2 with n={n}; only rank-1 mod-2 machinery exists"
        )

    if field is ScalarField.R:
        if p == 2:
            return Fraction(m + 1 if m % 2 == 0 else m + 2)
        if n == 1:
            return Fraction((m // 2 + 1) * (p - 1) + 1)
        return (Fraction(m, 2) + 1) * (k - 1) + 1

    if field is ScalarField.C:
        if p == 2:
            return Fraction(m + 2, 2) if m % 4 != 2 else Fraction(m + 4, 2)
        if n == 1:
            return Fraction((m // 2 + 1) * (p - 1) + 1)
        return (Fraction(m, 2) + 1) * (k - 1) + 1

    # quaternionic
    if p == 2:
        return Fraction(m + 4, 4) if m % 8 != 4 else Fraction(m + 8, 4)
    if n == 1:
        half = m // 2 + 1
        step = half if half % p == 0 else half + 1
        return Fraction(step * (p - 1), 2) + 1
    return ((Fraction(m, 2) + 2) * (k - 1) + 1) / 2


def sphere_index_degree(query: BoundQuery) -> int:
    """Index degree of S(W^m): the representation dimension m(p^n - 1)."""
    dim = query.m * (query.group.order - 1)
    return index_rep_sphere(RepSphereSpec(query.group, dim)).generator_degree


def decide(l: int, query: BoundQuery) -> BoundDecision:
    """Whether the index engine certifies the guarantee at this l.

    Odd p compares the sphere index degree with where the Stiefel index is
    known to begin.  p = 2 at rank 1 compares the numerical-index lower bound
    (Steenrod-refined for odd l, connectivity-grade for even l) with the
    target sphere dimension.  p = 2 at rank >= 2 never claims.  guaranteed =
    False always means "this method does not conclude", never an error.
    """
    group, field = query.group, query.field
    p, n, m = group.p, group.n, query.m
    if group.order > l:
        raise ValueError(f"need p^n <= l, got p^n={group.order}, l={l}")

    try:
        bound = bound_l(query)
    except NoKnownBoundError:
        bound = None

    sphere_degree = sphere_index_degree(query)
    stiefel_result = index_stiefel(StiefelSpec(field, l, group))
    stiefel_degree = stiefel_result.generator_degree

    if p != 2:
        guaranteed = sphere_degree < stiefel_degree
        mechanism = Mechanism.INDEX_COMPARISON
    elif n == 1:
        ind_lower, _ = c2_numeric_index_bounds(field, l)
        guaranteed = ind_lower >= m
        mechanism = Mechanism.STEENROD_REFINEMENT if l % 2 else Mechanism.CONNECTIVITY
    else:
        guaranteed = False
        mechanism = Mechanism.CONNECTIVITY

    return BoundDecision(
        l=l,
        guaranteed=guaranteed,
        stiefel_index_degree=stiefel_degree,
        sphere_index_degree=sphere_degree,
        mechanism=mechanism,
        bound_formula_value=bound,
    )


def guaranteed_threshold(query: BoundQuery) -> int | None:
    """Smallest l at which decide() certifies the guarantee.

    The search walks l upward from p^n to the ceiling of the closed-form
    bound, which the engine is expected never to exceed.  None when no
    closed-form bound exists (p = 2, n >= 2) or nothing fires in range.
    """
    try:
        limit = ceil(bound_l(query))
    except NoKnownBoundError:
        return None
    for l in range(query.group.order, limit + 1):
        if decide(l, query).guaranteed:
            return l
    return None


@dataclass(frozen=True)
class TableRow:
    field: str
    p: int
    n: int
    m: int
    bound: Fraction | None
    threshold: int | None

    @property
    def bound_ceiling(self) -> int | None:
        return None if self.bound is None else ceil(self.bound)

    def to_record(self) -> dict:
        return {
            "field": self.field,
            "p": self.p,
            "n": self.n,
            "m": self.m,
            "bound": None if self.bound is None else str(self.bound),
            "bound_ceiling": self.bound_ceiling,
            "threshold": self.threshold,
        }


def table(
    field: ScalarField,
    p_values: list[int],
    n_values: list[int],
    m_values: list[int],
) -> list[TableRow]:
    """Closed-form bound and engine-certified threshold per (p, n, m) cell."""
    rows = []
    for p in p_values:
        for n in n_values:
            group = GroupSpec(p, n)
            for m in m_values:
                query = BoundQuery(m, group, field)
                try:
                    bound = bound_l(query)
                except NoKnownBoundError:
                    bound = None
                rows.append(
                    TableRow(
                        field=field.value,
                        p=p,
                        n=n,
                        m=m,
                        bound=bound,
                        threshold=guaranteed_threshold(query),
                    )
                )
    return rows


def rows_to_csv(rows: list[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["field", "p", "n", "m", "bound", "bound_ceiling", "threshold"])
    for row in rows:
        writer.writerow(
            [
                row.field,
                row.p,
                row.n,
                row.m,
                "" if row.bound is None else str(row.bound),
                "" if row.bound_ceiling is None else row.bound_ceiling,
                "" if row.threshold is None else row.threshold,
            ]
        )
    return buffer.getvalue()
