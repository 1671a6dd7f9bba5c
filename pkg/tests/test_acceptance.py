"""Acceptance gate: the ten headline guarantees, each as one test.

Every comparison here is exact; nothing is tolerance-based.  Each test prints
a single summary line on success, and `pytest -v` gives the per-criterion
pass/fail listing.
"""

import time
from math import ceil

from fhindex.charclass import GroupSpec, ScalarField, total_class
from fhindex.indices import (
    StiefelSpec,
    closed_form_m,
    index_stiefel,
    lower_bound_degree_rank_n,
)
from fhindex.kakutani import (
    BoundQuery,
    NoKnownBoundError,
    bound_l,
    decide,
    guaranteed_threshold,
)
from fhindex.steenrod import StuntedSpace, c2_numeric_index_bounds, sq_connects
from fhindex.verify import run_suite

ODD_PRIMES = [3, 5, 7, 11, 13]


def _generator_exponent(result) -> int:
    ((exps, coeff),) = result.generator.terms().items()
    assert coeff == 1
    return exps[0]


def test_criterion_01_rank_one_real_complex_closed_form():
    checked = 0
    for p in ODD_PRIMES:
        group = GroupSpec(p, 1)
        for field in (ScalarField.R, ScalarField.C):
            for l in range(p, 61):
                result = index_stiefel(StiefelSpec(field, l, group))
                m = -(-l // (p - 1)) - 1
                assert _generator_exponent(result) == m * (p - 1), (field, p, l)
                assert result.kind.value == "ExactPrincipal"
                checked += 1
    print(f"[criterion 01] PASS: {checked} rank-1 R/C cases match m(p-1) exactly")


def test_criterion_02_quaternionic_closed_form():
    checked = 0
    for p in ODD_PRIMES:
        group = GroupSpec(p, 1)
        for l in range(p, 61):
            result = index_stiefel(StiefelSpec(ScalarField.H, l, group))
            m = closed_form_m(ScalarField.H, p, l)
            t = -(-2 * l // (p - 1))
            expected = (t - 1 if (t - 1) % p == 0 else t - 2) * (p - 1)
            assert m * (p - 1) == expected, (p, l)
            assert _generator_exponent(result) == expected, (p, l)
            checked += 1

    witness_l4 = index_stiefel(StiefelSpec(ScalarField.H, 4, GroupSpec(3, 1)))
    assert witness_l4.generator_text() == "v^6"
    witness_l3 = index_stiefel(StiefelSpec(ScalarField.H, 3, GroupSpec(3, 1)))
    assert witness_l3.generator_text() == "v^2"
    print(f"[criterion 02] PASS: {checked} quaternionic cases incl. both branch witnesses")


def test_criterion_03_mod_two_family():
    widths = {ScalarField.R: 1, ScalarField.C: 2, ScalarField.H: 4}
    group = GroupSpec(2, 1)
    checked = 0
    for field, d in widths.items():
        for l in range(2, 41):
            result = index_stiefel(StiefelSpec(field, l, group))
            assert _generator_exponent(result) == d * (l - 1), (field, l)
            checked += 1
    print(f"[criterion 03] PASS: {checked} mod-2 cases give mu^(d(l-1)) for d in 1,2,4")


def test_criterion_04_regular_product_oracle():
    start = time.monotonic()
    results = run_suite("p3")
    total_elapsed = time.monotonic() - start
    assert [r.case for r in results] == [
        "p=3, k=1", "p=5, k=1", "p=7, k=1", "p=3, k=2", "p=5, k=2", "p=3, k=3",
    ]
    assert all(r.passed for r in results), [r for r in results if not r.passed]

    start = time.monotonic()
    run_suite("p3", p=3, k=3)
    rank3_elapsed = time.monotonic() - start
    assert rank3_elapsed < 60.0
    print(
        f"[criterion 04] PASS: 6 power-ideal cases"
        f" ({total_elapsed:.2f}s total, rank-3 case {rank3_elapsed:.2f}s)"
    )


def test_criterion_05_quadratic_residue_vanishing():
    results = run_suite("sigma")
    assert [r.case for r in results] == [f"p={p}" for p in ODD_PRIMES]
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    print("[criterion 05] PASS: sigma_k of residues vanishes below the top, p <= 13")


def test_criterion_06_inverse_contract():
    results = run_suite("inverse")
    assert len(results) == 13
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    # spot-check the contract at a cap that is not a multiple of the step
    series = total_class(GroupSpec(7, 1), ScalarField.H, 50)
    assert (series.total * series.inverse).is_one()
    print("[criterion 06] PASS: total * inverse == 1 across the sweep grid")


def test_criterion_07_rank_two_containment():
    checked = 0
    for p in (3, 5):
        group = GroupSpec(p, 2)
        step = 2 * (p - 1)
        for field in ScalarField:
            for l in range(p * p, p * p + 11):
                spec = StiefelSpec(field, l, group)
                result = index_stiefel(spec)
                assert result.kind.value == "ContainmentBound", (field, p, l)
                assert result.generator.in_power_ideal(p - 1), (field, p, l)
                assert result.generator_degree % step == 0, (field, p, l)
                assert result.generator_degree >= lower_bound_degree_rank_n(spec)
                checked += 1
    print(f"[criterion 07] PASS: {checked} rank-2 containment checks (ideal, step, bound)")


def test_criterion_08_bound_rederivation():
    checked = 0
    for field in ScalarField:
        for p in (3, 5, 7):
            for n in (1, 2):
                group = GroupSpec(p, n)
                for m in range(1, 7):
                    query = BoundQuery(m, group, field)
                    try:
                        bound = bound_l(query)
                    except NoKnownBoundError:
                        continue
                    limit = ceil(bound)
                    assert decide(limit, query).guaranteed, (field.value, p, n, m)
                    threshold = guaranteed_threshold(query)
                    assert threshold is not None, (field.value, p, n, m)
                    assert threshold <= limit, (field.value, p, n, m)
                    checked += 1
    print(f"[criterion 08] PASS: {checked} bounds re-derived; thresholds never exceed them")


def test_criterion_09_steenrod_lower_bounds():
    widths = {ScalarField.R: 1, ScalarField.C: 2, ScalarField.H: 4}
    checked = 0
    for field, d in widths.items():
        for l in range(3, 42):
            space = StuntedSpace(field, l)
            assert sq_connects(space) == (l % 2 == 1), (field, l)
            lower, upper = c2_numeric_index_bounds(field, l)
            if l % 2 == 1:
                assert lower == d * (l - 1), (field, l)
            assert lower <= upper
            checked += 1
    print(f"[criterion 09] PASS: {checked} parity/bound checks; odd-l lower bound is d(l-1)")


def test_criterion_10_sign_discrepancy_record():
    results = run_suite("sign")
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    flags = {r.case: r.detail for r in results}
    for p in (3, 7, 11):
        assert "unit -1" in flags[f"p={p} (3 mod 4)"], flags
    for p in (5, 13):
        assert "unit 1" in flags[f"p={p} (1 mod 4)"], flags
    print("[criterion 10] PASS: ideal-level agreement with the unit -1 flagged at p = 3 mod 4")
