"""Exact sparse polynomial arithmetic over Z/p with a hard degree cap.

Everything downstream works inside truncated polynomial rings

    Z/p[x_1, ..., x_n] / (terms of weighted degree > cap)

where each variable carries a single uniform cohomological weight: 1 for the
degree-one generators available only at p = 2, or 2 for the degree-two
generators at odd primes.  A polynomial is a sparse map from exponent vectors
(tuples of non-negative ints, one slot per variable) to coefficients
canonicalized into 1..p-1; absent keys mean coefficient zero.  Every
operation reduces coefficients mod p and discards terms whose weighted degree
exceeds the ring cap, so computing with a large cap and truncating afterwards
agrees with computing at the small cap from the start.

Formal inverses exist exactly for series with constant term 1 and are built
degree by degree from the convolution recurrence; with a finite cap the
result is an honest polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Iterator, Mapping


class RingMismatchError(ValueError):
    """Raised when operands live in different truncated rings."""


class NotAUnitError(ValueError):
    """Raised when a formal inverse is requested for a series whose constant term is not 1."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The coefficient field Z/p for a prime p."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"p must be an int, got {type(self.p).__name__}")
        if self.p.bit_length() > 63:
            raise ValueError("p beyond 64-bit is not supported")
        if not is_prime(self.p):
            raise ValueError(f"p must be prime; {self.p} is not prime")

    def normalize(self, c: int) -> int:
        return c % self.p


Exponents = tuple[int, ...]


@dataclass(frozen=True)
class PolyRing:
    """A truncated polynomial ring over Z/p with uniformly weighted variables.

    var_weight is the cohomological degree of every variable: weight 1 is the
    mod-2 world (variables print as mu), weight 2 the odd-prime world
    (variables print as v).  degree_cap bounds the weighted degree of stored
    terms.
    """

    field: PrimeField
    num_vars: int
    var_weight: int
    degree_cap: int

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError("ring needs at least one variable")
        if self.var_weight not in (1, 2):
            raise ValueError("var_weight must be 1 or 2")
        if self.var_weight == 1 and self.field.p != 2:
            raise ValueError("weight-1 variables exist only over Z/2")
        if self.degree_cap < 0:
            raise ValueError("degree_cap must be non-negative")

    @property
    def p(self) -> int:
        return self.field.p

    def monomial_degree(self, exponents: Exponents) -> int:
        return self.var_weight * sum(exponents)

    def var_name(self, i: int) -> str:
        base = "mu" if self.var_weight == 1 else "v"
        return base if self.num_vars == 1 else f"{base}{i + 1}"

    def poly(self, terms: Mapping[Exponents, int]) -> "TruncatedPolynomial":
        """Build a polynomial from an exponent-vector -> coefficient map."""
        for exps in terms:
            if len(exps) != self.num_vars:
                raise ValueError(
                    f"exponent vector {exps!r} has {len(exps)} slots, ring has {self.num_vars} variables"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps!r}")
        return TruncatedPolynomial(self, terms)

    def zero(self) -> "TruncatedPolynomial":
        return self.poly({})

    def one(self) -> "TruncatedPolynomial":
        return self.constant(1)

    def constant(self, c: int) -> "TruncatedPolynomial":
        return self.poly({(0,) * self.num_vars: c})

    def variable(self, i: int = 0) -> "TruncatedPolynomial":
        if not 0 <= i < self.num_vars:
            raise ValueError(f"variable index {i} out of range for {self.num_vars} variables")
        exps = tuple(1 if j == i else 0 for j in range(self.num_vars))
        return self.poly({exps: 1})

    def monomial(self, exponents: Exponents, coeff: int = 1) -> "TruncatedPolynomial":
        return self.poly({tuple(exponents): coeff})


def _normalize_terms(ring: PolyRing, raw: Mapping[Exponents, int]) -> dict[Exponents, int]:
    p = ring.p
    cap = ring.degree_cap
    out: dict[Exponents, int] = {}
    for exps, c in raw.items():
        c %= p
        if c and ring.monomial_degree(exps) <= cap:
            out[exps] = c
    return out


class TruncatedPolynomial:
    """An immutable element of a PolyRing.

    Construct through the ring helpers (ring.poly, ring.one, ring.variable,
    ...) rather than directly; arithmetic goes through the operators.
    """

    __slots__ = ("ring", "_terms", "_degrees")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponents, int]):
        self.ring = ring
        self._terms: dict[Exponents, int] = _normalize_terms(ring, terms)
        self._degrees: frozenset[int] | None = None

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def coefficient(self, exponents: Exponents) -> int:
        return self._terms.get(tuple(exponents), 0)

    @property
    def constant_term(self) -> int:
        return self._terms.get((0,) * self.ring.num_vars, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0,) * self.ring.num_vars: 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degrees_present(self) -> frozenset[int]:
        """Weighted degrees carrying at least one nonzero term."""
        if self._degrees is None:
            self._degrees = frozenset(self.ring.monomial_degree(e) for e in self._terms)
        return self._degrees

    def max_degree(self) -> int:
        """Largest weighted degree present; 0 for the zero polynomial."""
        return max(self.degrees_present(), default=0)

    def __iter__(self) -> Iterator[tuple[Exponents, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self._terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "TruncatedPolynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"operands live in different rings: {self.ring} vs {other.ring}"
            )

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        self._check_ring(other)
        acc = dict(self._terms)
        for exps, c in other._terms.items():
            acc[exps] = acc.get(exps, 0) + c
        return TruncatedPolynomial(self.ring, acc)

    def __neg__(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "TruncatedPolynomial | int") -> "TruncatedPolynomial":
        if isinstance(other, int):
            return TruncatedPolynomial(self.ring, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        self._check_ring(other)
        ring = self.ring
        cap = ring.degree_cap
        weight = ring.var_weight
        # iterate the smaller operand on the outside
        a, b = (self._terms, other._terms)
        if len(a) > len(b):
            a, b = b, a
        acc: dict[Exponents, int] = {}
        for ea, ca in a.items():
            da = weight * sum(ea)
            for eb, cb in b.items():
                if da + weight * sum(eb) > cap:
                    continue
                key = tuple(x + y for x, y in zip(ea, eb))
                acc[key] = acc.get(key, 0) + ca * cb
        return TruncatedPolynomial(ring, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not defined here")
        result = self.ring.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- the operations the index machinery is built on ---------------------

    def homogeneous_component(self, degree: int) -> "TruncatedPolynomial":
        """The part of weighted degree exactly `degree`."""
        if not 0 <= degree <= self.ring.degree_cap:
            raise ValueError(
                f"degree {degree} outside [0, {self.ring.degree_cap}]"
            )
        picked = {
            e: c for e, c in self._terms.items() if self.ring.monomial_degree(e) == degree
        }
        return TruncatedPolynomial(self.ring, picked)

    def formal_inverse(self) -> "TruncatedPolynomial":
        """Multiplicative inverse of a series with constant term 1, up to the cap.

        Writing a = 1 + sum_d a_d by weighted degree, the inverse b satisfies
        b_0 = 1 and b_d = -sum_{j=1..d} a_j * b_{d-j}; only degrees reachable
        from the support of a can be nonzero, so the recurrence walks the
        sparse component map rather than every degree.
        """
        if self.constant_term != 1:
            raise NotAUnitError(
                f"formal inverse needs constant term 1, got {self.constant_term}"
            )
        ring = self.ring
        unit_key = (0,) * ring.num_vars
        # components of a by weighted degree, constant part removed
        a_comps: dict[int, dict[Exponents, int]] = {}
        for exps, c in self._terms.items():
            d = ring.monomial_degree(exps)
            if d:
                a_comps.setdefault(d, {})[exps] = c
        b_comps: dict[int, dict[Exponents, int]] = {0: {unit_key: 1}}
        p = ring.p
        for d in range(ring.var_weight, ring.degree_cap + 1, ring.var_weight):
            acc: dict[Exponents, int] = {}
            for j, aj in a_comps.items():
                lower = b_comps.get(d - j)
                if j > d or not lower:
                    continue
                for ea, ca in aj.items():
                    for eb, cb in lower.items():
                        key = tuple(x + y for x, y in zip(ea, eb))
                        acc[key] = (acc.get(key, 0) + ca * cb) % p
            comp = {e: (-c) % p for e, c in acc.items() if c}
            if comp:
                b_comps[d] = comp
        merged: dict[Exponents, int] = {}
        for comp in b_comps.values():
            merged.update(comp)
        return TruncatedPolynomial(ring, merged)

    def in_power_ideal(self, exponent: int) -> bool:
        """Whether every term is divisible by x_i^exponent for some variable i.

        This is membership in the monomial ideal (x_1^e, ..., x_n^e); the
        zero polynomial belongs to every ideal.
        """
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        return all(max(exps) >= exponent for exps in self._terms)

    # -- printing ------------------------------------------------------------

    def to_text(self, balanced: bool = False) -> str:
        """Canonical text form: terms sorted by (weighted degree, exponents).

        With balanced=True coefficients print from the balanced residue range
        (-p/2, p/2], e.g. 1 - v^2 instead of 1 + 2*v^2 over Z/3.
        """
        if not self._terms:
            return "0"
        ring = self.ring
        p = ring.p
        ordered = sorted(
            self._terms.items(), key=lambda kv: (ring.monomial_degree(kv[0]), kv[0])
        )
        pieces: list[str] = []
        for exps, coeff in ordered:
            c = coeff
            negative = False
            if balanced and c > p // 2:
                c = p - c
                negative = True
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(ring.var_name(i))
                elif e > 1:
                    factors.append(f"{ring.var_name(i)}^{e}")
            if not factors:
                body = str(c)
            elif c == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(c)] + factors)
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"<{self.to_text()} over GF({self.ring.p}), cap {self.ring.degree_cap}>"


def _is_linear_or_zero(form: TruncatedPolynomial) -> bool:
    return all(sum(exps) == 1 for exps in form._terms)


def product_over_linear_forms(
    ring: PolyRing,
    forms: Iterable[TruncatedPolynomial],
    pattern: str,
) -> TruncatedPolynomial:
    """prod (1 + l) or prod (1 - l^2) over the given linear forms, truncated.

    Each form must be homogeneous linear (or zero, contributing a factor 1).
    pattern selects the factor shape: "1+l" or "1-l^2".
    """
    if pattern not in ("1+l", "1-l^2"):
        raise ValueError(f"unknown factor pattern {pattern!r}")
    result = ring.one()
    one = ring.one()
    for form in forms:
        if form.ring != ring:
            raise RingMismatchError("form lives in a different ring")
        if not _is_linear_or_zero(form):
            raise ValueError(f"form {form} is not a homogeneous linear polynomial")
        if pattern == "1+l":
            factor = one + form
        else:
            factor = one - form * form
        result = result * factor
    return result
