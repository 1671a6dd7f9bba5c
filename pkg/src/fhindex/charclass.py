"""Characteristic classes of the regular representation of C_p^n.

The group G = C_p^n = (Z/p)^n acts on its group algebra over R, C or H by
the regular representation.  The total characteristic class of that bundle
over BG, pulled into the polynomial part of H^*(BG; Z/p), is a product over
the linear forms sum_j i_j v_j indexed by the p^n characters of G:

  * odd p,  R:  Pontrjagin class, one factor (1 - l^2) per conjugate pair of
                nonzero characters (representative: first nonzero coefficient
                in 1..(p-1)/2); the trivial character contributes 1.
  * odd p,  C:  Chern class, one factor (1 + l) per character (all p^n).
  * odd p,  H:  symplectic Pontrjagin class, the square of the Chern total.
  * p = 2,  R:  Stiefel-Whitney class, one factor (1 + l) per character.
  * p = 2,  C:  mod-2 Chern total; each character's underlying real plane
                contributes (1 + l) twice, so the square of the R total.
  * p = 2,  H:  fourth power of the R total.

Variables have weight 2 (odd p) or 1 (p = 2); the degree-one exterior
generators of H^*(BG) at odd p never enter these products and are not
represented.  Transgression arguments downstream consume the formal inverse
of the total class, so the series carries both.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from itertools import product as cartesian_product

from .fppoly import PolyRing, PrimeField, TruncatedPolynomial, product_over_linear_forms


class ScalarField(Enum):
    R = "R"
    C = "C"
    H = "H"


class ClassKind(Enum):
    STIEFEL_WHITNEY = "StiefelWhitney"
    CHERN = "Chern"
    PONTRJAGIN = "Pontrjagin"
    SYMPLECTIC_PONTRJAGIN = "SymplecticPontrjagin"

    @property
    def degree_step(self) -> int:
        """Cohomological degree of the index-1 component: w_1, c_1, p_1, q_1."""
        return {
            ClassKind.STIEFEL_WHITNEY: 1,
            ClassKind.CHERN: 2,
            ClassKind.PONTRJAGIN: 4,
            ClassKind.SYMPLECTIC_PONTRJAGIN: 4,
        }[self]


@dataclass(frozen=True)
class GroupSpec:
    """The elementary abelian group C_p^n."""

    p: int
    n: int

    def __post_init__(self) -> None:
        PrimeField(self.p)  # primality check
        if self.n < 1:
            raise ValueError("rank n must be at least 1")
        if self.order.bit_length() > 40:
            raise ValueError(f"group order p^n = {self.p}^{self.n} is too large")

    @property
    def order(self) -> int:
        return self.p**self.n

    def cohomology_ring(self, cap: int) -> PolyRing:
        """Polynomial part of H^*(BC_p^n; Z/p) truncated at the cap."""
        weight = 1 if self.p == 2 else 2
        return PolyRing(PrimeField(self.p), self.n, weight, cap)

    def ambient_ring_description(self) -> str:
        """Printed form of the full H^*(BC_p^n; Z/p), exterior part included.

        Exterior generators square to zero and never appear in any class or
        transgression image, so the computation stays in the polynomial
        subring; this text is the only place they show up.
        """
        if self.p == 2:
            names = "mu" if self.n == 1 else ", ".join(
                f"mu{i}" for i in range(1, self.n + 1)
            )
            return f"Z/2[{names}]"
        if self.n == 1:
            return f"Z/{self.p}[v] tensor Lambda(u)"
        vs = ", ".join(f"v{i}" for i in range(1, self.n + 1))
        us = ", ".join(f"u{i}" for i in range(1, self.n + 1))
        return f"Z/{self.p}[{vs}] tensor Lambda({us})"


def class_kind_for(group: GroupSpec, field: ScalarField) -> ClassKind:
    if field is ScalarField.C:
        return ClassKind.CHERN
    if field is ScalarField.H:
        return ClassKind.SYMPLECTIC_PONTRJAGIN
    return ClassKind.STIEFEL_WHITNEY if group.p == 2 else ClassKind.PONTRJAGIN


@dataclass(frozen=True)
class RegularRepClassSeries:
    """Total characteristic class of the regular representation and its formal inverse."""

    group: GroupSpec
    field: ScalarField
    class_kind: ClassKind
    total: TruncatedPolynomial
    inverse: TruncatedPolynomial

    @property
    def ring(self) -> PolyRing:
        return self.total.ring

    @property
    def cap(self) -> int:
        return self.total.ring.degree_cap

    @property
    def extrapolation_note(self) -> str | None:
        """Mod-2 C/H classes at rank >= 2 extend the rank-1 computation."""
        if self.group.p == 2 and self.group.n >= 2 and self.field is not ScalarField.R:
            return (
                "mod-2 Chern/symplectic classes at rank >= 2 are an extension "
                "of the rank-1 computation"
            )
        return None


def _form_from_coeffs(ring: PolyRing, coeffs: tuple[int, ...]) -> TruncatedPolynomial:
    terms = {}
    for j, c in enumerate(coeffs):
        if c:
            exps = tuple(1 if i == j else 0 for i in range(len(coeffs)))
            terms[exps] = c
    return ring.poly(terms)


def regular_linear_forms(group: GroupSpec, ring: PolyRing) -> list[TruncatedPolynomial]:
    """All p^n linear forms sum_j i_j v_j, the zero form included.

    These are the first (weight 1) or second (weight 2) characteristic classes
    of the p^n one-dimensional characters of C_p^n.
    """
    if ring.num_vars != group.n or ring.p != group.p:
        raise ValueError("ring shape does not match the group")
    return [
        _form_from_coeffs(ring, coeffs)
        for coeffs in cartesian_product(range(group.p), repeat=group.n)
    ]


def _conjugate_pair_representatives(group: GroupSpec, ring: PolyRing) -> list[TruncatedPolynomial]:
    # one form per pair {l, -l}: keep those whose first nonzero coefficient,
    # read in variable order, lies in 1..(p-1)/2
    half = (group.p - 1) // 2
    reps = []
    for coeffs in cartesian_product(range(group.p), repeat=group.n):
        first = next((c for c in coeffs if c), None)
        if first is not None and first <= half:
            reps.append(_form_from_coeffs(ring, coeffs))
    return reps


def total_class(group: GroupSpec, field: ScalarField, cap: int) -> RegularRepClassSeries:
    """Total class of the regular representation of C_p^n over the given field."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if group.p != 2 and cap < 2 * (group.p - 1):
        warnings.warn(
            f"cap {cap} cannot hold the first nontrivial component "
            f"(degree {2 * (group.p - 1)}); the total class may be 1",
            stacklevel=2,
        )
    ring = group.cohomology_ring(cap)
    forms = regular_linear_forms(group, ring)
    kind = class_kind_for(group, field)

    if group.p == 2:
        base = product_over_linear_forms(ring, forms, "1+l")
        if field is ScalarField.R:
            total = base
        elif field is ScalarField.C:
            total = base * base
        else:
            total = (base * base) ** 2
    else:
        if field is ScalarField.R:
            reps = _conjugate_pair_representatives(group, ring)
            total = product_over_linear_forms(ring, reps, "1-l^2")
        elif field is ScalarField.C:
            total = product_over_linear_forms(ring, forms, "1+l")
        else:
            chern = product_over_linear_forms(ring, forms, "1+l")
            total = chern * chern

    return RegularRepClassSeries(
        group=group,
        field=field,
        class_kind=kind,
        total=total,
        inverse=total.formal_inverse(),
    )


def inverse_component(series: RegularRepClassSeries, index: int) -> TruncatedPolynomial:
    """The index-th class of the formal inverse: p'_i, c'_j, q'_j or w'_j.

    The component sits in cohomological degree index * degree_step and must
    fit under the series cap.
    """
    if index < 1:
        raise ValueError("component index must be >= 1")
    degree = index * series.class_kind.degree_step
    if degree > series.cap:
        raise ValueError(
            f"component degree {degree} exceeds the series cap {series.cap}"
        )
    return series.inverse.homogeneous_component(degree)
