"""Fadell-Husseini indices of Stiefel manifolds and representation spheres.

For the Stiefel manifold of p^n orthonormal vectors in K^l (K = R, C, H)
carrying the permutation action of G = C_p^n, the Borel fibration

    V  -->  V_hG  -->  BG

has first differentials that transgress the exterior fiber generators onto
the components of the formal inverse of the total characteristic class of
the regular representation.  The index engine lists the fiber generators,
scans their transgression targets in increasing degree, and reports the
first nonzero image:

  * rank 1: the image is a monomial and generates the index exactly
    (cross-checked against the closed-form exponent);
  * rank >= 2, odd p: the image certifies containment and a degree bound;
  * rank >= 2, p = 2: no transgression data beyond the connectivity bound.

Representation spheres S(V) for fixed-point-free V are handled directly:
at rank 1 the index is the principal ideal generated by the Euler class, at
higher rank the index is known to meet the dimension degree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .charclass import (
    GroupSpec,
    RegularRepClassSeries,
    ScalarField,
    class_kind_for,
    total_class,
)
from .fppoly import PolyRing, PrimeField, TruncatedPolynomial


class ResultKind(Enum):
    EXACT_PRINCIPAL = "ExactPrincipal"
    CONTAINMENT_BOUND = "ContainmentBound"
    CONNECTIVITY_ONLY = "ConnectivityOnly"


@dataclass(frozen=True)
class StiefelSpec:
    """V_k(K^l) with k = p^n vectors permuted by C_p^n."""

    field: ScalarField
    l: int
    group: GroupSpec

    def __post_init__(self) -> None:
        if self.l < 1:
            raise ValueError("l must be positive")
        if self.group.order > self.l:
            raise ValueError(
                f"need p^n <= l for an action on {self.group.order} orthonormal vectors in K^{self.l}"
            )

    @property
    def k(self) -> int:
        return self.group.order


@dataclass(frozen=True)
class RepSphereSpec:
    """The unit sphere of a real G-representation of the given dimension."""

    group: GroupSpec
    real_dimension: int
    fixed_point_free: bool = True

    def __post_init__(self) -> None:
        if self.real_dimension < 1:
            raise ValueError("real_dimension must be positive")
        if self.group.p != 2 and self.fixed_point_free and self.real_dimension % 2:
            raise ValueError(
                "a fixed-point-free representation of an odd-p group has even real dimension"
            )


@dataclass(frozen=True)
class FiberGenerator:
    """One exterior generator of the Stiefel fiber cohomology.

    Transgressive generators die on the first differential, landing in
    target_degree = fiber_degree + 1; permanent cycles survive and carry no
    target.
    """

    label: str
    fiber_degree: int
    target_degree: int | None
    permanent: bool = False

    def __post_init__(self) -> None:
        if self.permanent:
            if self.target_degree is not None:
                raise ValueError("permanent cycles have no transgression target")
        elif self.target_degree != self.fiber_degree + 1:
            raise ValueError("transgression target must be fiber_degree + 1")


@dataclass(frozen=True)
class IndexResult:
    kind: ResultKind
    query: StiefelSpec | RepSphereSpec
    generator: TruncatedPolynomial | None
    generator_degree: int | None
    certificate: FiberGenerator | None
    ideal_note: str | None

    def generator_text(self) -> str | None:
        return None if self.generator is None else self.generator.to_text()

    def to_record(self) -> dict:
        """Wire form of the result; keys depend on the query flavor."""
        base = {
            "kind": self.kind.value,
            "generator_text": self.generator_text(),
            "degree": self.generator_degree,
            "certificate_label": None if self.certificate is None else self.certificate.label,
            "ideal_note": self.ideal_note,
        }
        if isinstance(self.query, StiefelSpec):
            base.update(
                field=self.query.field.value,
                p=self.query.group.p,
                n=self.query.group.n,
                l=self.query.l,
            )
        else:
            base.update(
                p=self.query.group.p,
                n=self.query.group.n,
                dim=self.query.real_dimension,
            )
        return base


def fiber_generators(spec: StiefelSpec) -> list[FiberGenerator]:
    """Exterior generators of H^*(V_k(K^l)): transgressive ones first, by target."""
    l, k = spec.l, spec.k
    field = spec.field
    p = spec.group.p

    if field is ScalarField.C:
        gens = [FiberGenerator(f"y_{j}", 2 * j - 1, 2 * j) for j in range(l - k + 1, l + 1)]
    elif field is ScalarField.H:
        gens = [FiberGenerator(f"z_{j}", 4 * j - 1, 4 * j) for j in range(l - k + 1, l + 1)]
    elif p == 2:
        gens = [FiberGenerator(f"omega_{j}", j - 1, j) for j in range(l - k + 1, l + 1)]
    else:
        # real Stiefel manifold at odd p; k = p^n is odd, the shape splits on
        # the parity of l.  Besides the transgressive x_i (degree 4i - 1) one
        # low even-degree class survives: sigma_{l-k} for l odd (when l > k),
        # epsilon_l (degree l - 1) for l even.
        if l % 2:
            first, last = (l - k + 2) // 2, (l - 1) // 2
            gens = [FiberGenerator(f"x_{i}", 4 * i - 1, 4 * i) for i in range(first, last + 1)]
            if l > k:
                gens.append(FiberGenerator(f"sigma_{l - k}", l - k, None, permanent=True))
        else:
            first, last = (l - k + 1) // 2, (l - 2) // 2
            gens = [FiberGenerator(f"x_{i}", 4 * i - 1, 4 * i) for i in range(first, last + 1)]
            gens.append(FiberGenerator(f"epsilon_{l}", l - 1, None, permanent=True))
    return gens


def stiefel_connectivity(field: ScalarField, l: int, k: int) -> int:
    """Connectivity of the Stiefel manifold of k frames in K^l."""
    if field is ScalarField.R:
        return l - k - 1
    if field is ScalarField.C:
        return 2 * (l - k)
    return 4 * (l - k) + 2


def closed_form_m(field: ScalarField, p: int, l: int) -> int:
    """Closed form for the rank-1 index exponent multiplier m (odd p, l >= p).

    The index of the Stiefel manifold of p orthonormal vectors in K^l under
    the cyclic shift is (v^{m(p-1)}); over R and C, m = ceil(l/(p-1)) - 1;
    over H the candidate t - 2 with t = ceil(2l/(p-1)) shifts up by one
    exactly when p divides t - 1, since the inverse-class coefficient k + 1
    vanishes mod p at k = t - 2.
    """
    if p == 2:
        raise ValueError("closed_form_m covers odd p only; the mod-2 exponents are (l-1) times 1, 2, 4")
    PrimeField(p)
    if l < p:
        raise ValueError(f"need l >= p, got l={l}, p={p}")
    if field in (ScalarField.R, ScalarField.C):
        return -(-l // (p - 1)) - 1
    t = -(-2 * l // (p - 1))
    return t - 1 if (t - 1) % p == 0 else t - 2


def lower_bound_degree_rank_n(spec: StiefelSpec) -> int:
    """Degree below which the rank >= 2 index has no nonzero classes (odd p)."""
    p, k, l = spec.group.p, spec.k, spec.l
    if p == 2:
        raise ValueError("the rank-n degree bound applies to odd p")
    reach = l - k + 1
    if spec.field is ScalarField.H:
        reach *= 2
    return 2 * (p - 1) * -(-reach // (p - 1))


def _cap_bucket(needed: int) -> int:
    cap = 16
    while cap < needed:
        cap *= 2
    return cap


@lru_cache(maxsize=128)
def _series(p: int, n: int, field_value: str, cap: int) -> RegularRepClassSeries:
    return total_class(GroupSpec(p, n), ScalarField(field_value), cap)


def _fresh_copy(poly: TruncatedPolynomial, cap: int) -> TruncatedPolynomial:
    """Rebuild in a ring capped at the polynomial's own degree, for stable equality."""
    ring = poly.ring
    target = PolyRing(ring.field, ring.num_vars, ring.var_weight, cap)
    return target.poly(poly.terms())


def index_stiefel(spec: StiefelSpec) -> IndexResult:
    """Index of the Stiefel manifold under the permutation action of C_p^n."""
    group, field = spec.group, spec.field
    p, n, l, k = group.p, group.n, spec.l, spec.k

    if p == 2 and n >= 2:
        degree = stiefel_connectivity(field, l, k) + 2
        return IndexResult(
            kind=ResultKind.CONNECTIVITY_ONLY,
            query=spec,
            generator=None,
            generator_degree=degree,
            certificate=None,
            ideal_note=(
                "connectivity bound only: the first differentials give no new "
                f"restrictions at p=2, n>=2; no index classes below degree {degree}"
            ),
        )

    transgressive = [g for g in fiber_generators(spec) if not g.permanent]
    top = max(g.target_degree for g in transgressive)
    series = _series(p, n, field.value, _cap_bucket(top))
    present = series.inverse.degrees_present()

    hit = next((g for g in transgressive if g.target_degree in present), None)
    if hit is None:
        raise RuntimeError(
            f"no nonzero transgression image found for {spec}; "
            "the first-differential engine cannot see this index"
        )
    component = series.inverse.homogeneous_component(hit.target_degree)
    degree = hit.target_degree

    if n == 1:
        if p == 2:
            expected_exponent = class_kind_for(group, field).degree_step * (l - 1)
        else:
            expected_exponent = closed_form_m(field, p, l) * (p - 1)
        (exponents,) = [e for e, _ in component]
        if sum(exponents) != expected_exponent:
            raise RuntimeError(
                f"engine found exponent {sum(exponents)} but the closed form "
                f"gives {expected_exponent} for {spec}"
            )
        ring = PolyRing(PrimeField(p), 1, series.ring.var_weight, degree)
        generator = ring.monomial(exponents)  # stored up to the unit coefficient
        return IndexResult(
            kind=ResultKind.EXACT_PRINCIPAL,
            query=spec,
            generator=generator,
            generator_degree=degree,
            certificate=hit,
            ideal_note=None,
        )

    # odd p, rank >= 2: the image certifies containment only
    if not component.in_power_ideal(p - 1):
        raise RuntimeError(f"transgression image {component} escapes the power ideal")
    if degree % (2 * (p - 1)):
        raise RuntimeError(f"transgression target {degree} is not a multiple of 2(p-1)")
    return IndexResult(
        kind=ResultKind.CONTAINMENT_BOUND,
        query=spec,
        generator=_fresh_copy(component, degree),
        generator_degree=degree,
        certificate=hit,
        ideal_note=(
            f"contained in (v_1^{p - 1}, ..., v_{n}^{p - 1}); nonzero components "
            f"only in degrees divisible by {2 * (p - 1)}; degree is a lower bound "
            "for where the full index begins"
        ),
    )


def index_rep_sphere(spec: RepSphereSpec) -> IndexResult:
    """Index of the unit sphere of a real representation of C_p^n."""
    group = spec.group
    p, n, dim = group.p, group.n, spec.real_dimension

    if not spec.fixed_point_free:
        return IndexResult(
            kind=ResultKind.CONNECTIVITY_ONLY,
            query=spec,
            generator=None,
            generator_degree=None,
            certificate=None,
            ideal_note="zero ideal: a trivial summand gives fixed points on the sphere",
        )

    if n == 1:
        weight = 1 if p == 2 else 2
        exponent = dim if p == 2 else dim // 2
        ring = PolyRing(PrimeField(p), 1, weight, dim)
        return IndexResult(
            kind=ResultKind.EXACT_PRINCIPAL,
            query=spec,
            generator=ring.monomial((exponent,)),
            generator_degree=dim,
            certificate=None,
            ideal_note=None,
        )

    return IndexResult(
        kind=ResultKind.CONTAINMENT_BOUND,
        query=spec,
        generator=None,
        generator_degree=dim,
        certificate=None,
        ideal_note=(
            f"the index meets cohomological degree {dim} exactly "
            "(sphere dimension + 1); the full ideal is not computed"
        ),
    )
