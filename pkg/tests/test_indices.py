import pytest

from fhindex.charclass import GroupSpec, ScalarField
from fhindex.indices import (
    FiberGenerator,
    IndexResult,
    RepSphereSpec,
    ResultKind,
    StiefelSpec,
    closed_form_m,
    fiber_generators,
    index_rep_sphere,
    index_stiefel,
    lower_bound_degree_rank_n,
    stiefel_connectivity,
)

R, C, H = ScalarField.R, ScalarField.C, ScalarField.H


def stiefel(field, p, n, l):
    return StiefelSpec(field, l, GroupSpec(p, n))


class TestSpecValidation:
    def test_too_few_columns_rejected(self):
        with pytest.raises(ValueError, match="p\\^n"):
            stiefel(R, 3, 2, 8)

    def test_l_equals_group_order_allowed(self):
        assert stiefel(R, 3, 1, 3).k == 3

    def test_transgression_target_consistency_enforced(self):
        with pytest.raises(ValueError, match="target"):
            FiberGenerator("y_2", 3, 5)
        with pytest.raises(ValueError, match="permanent"):
            FiberGenerator("sigma_4", 4, 5, permanent=True)

    def test_sphere_dimension_parity(self):
        with pytest.raises(ValueError, match="even"):
            RepSphereSpec(GroupSpec(3, 1), 5)
        RepSphereSpec(GroupSpec(3, 1), 5, fixed_point_free=False)
        RepSphereSpec(GroupSpec(2, 1), 5)


class TestFiberGenerators:
    def test_complex_generators(self):
        gens = fiber_generators(stiefel(C, 3, 1, 4))
        assert [(g.label, g.fiber_degree, g.target_degree) for g in gens] == [
            ("y_2", 3, 4),
            ("y_3", 5, 6),
            ("y_4", 7, 8),
        ]

    def test_quaternionic_generators(self):
        gens = fiber_generators(stiefel(H, 3, 1, 4))
        assert [(g.label, g.target_degree) for g in gens] == [
            ("z_2", 8),
            ("z_3", 12),
            ("z_4", 16),
        ]

    def test_mod2_real_generators(self):
        gens = fiber_generators(stiefel(R, 2, 1, 9))
        assert [(g.label, g.fiber_degree, g.target_degree) for g in gens] == [
            ("omega_8", 7, 8),
            ("omega_9", 8, 9),
        ]

    def test_odd_p_real_generators_l_odd(self):
        gens = fiber_generators(stiefel(R, 3, 1, 7))
        assert [(g.label, g.fiber_degree, g.target_degree, g.permanent) for g in gens] == [
            ("x_3", 11, 12, False),
            ("sigma_4", 4, None, True),
        ]

    def test_odd_p_real_generators_l_even(self):
        gens = fiber_generators(stiefel(R, 3, 1, 8))
        assert [(g.label, g.fiber_degree, g.target_degree, g.permanent) for g in gens] == [
            ("x_3", 11, 12, False),
            ("epsilon_8", 7, None, True),
        ]

    def test_square_stiefel_manifold_has_no_sigma(self):
        gens = fiber_generators(stiefel(R, 3, 1, 3))
        assert [(g.label, g.target_degree) for g in gens] == [("x_1", 4)]

    def test_rank_two_real_window(self):
        gens = fiber_generators(stiefel(R, 3, 2, 9))
        labels = [g.label for g in gens]
        assert labels == ["x_1", "x_2", "x_3", "x_4"]
        assert all(not g.permanent for g in gens)


class TestStiefelIndexRankOne:
    def test_real_p3_l7(self):
        result = index_stiefel(stiefel(R, 3, 1, 7))
        assert result.kind is ResultKind.EXACT_PRINCIPAL
        assert result.generator_text() == "v^6"
        assert result.generator_degree == 12
        assert result.certificate.label == "x_3"

    def test_quaternionic_skips_vanishing_coefficient(self):
        # q'_2 = 0 mod 3, so the scan must pass z_2 and land on z_3
        result = index_stiefel(stiefel(H, 3, 1, 4))
        assert result.generator_text() == "v^6"
        assert result.generator_degree == 12
        assert result.certificate.label == "z_3"

    def test_quaternionic_small_case(self):
        result = index_stiefel(stiefel(H, 3, 1, 3))
        assert result.generator_text() == "v^2"
        assert result.generator_degree == 4
        assert result.certificate.label == "z_1"

    def test_mod2_family(self):
        for field, d in ((R, 1), (C, 2), (H, 4)):
            result = index_stiefel(stiefel(field, 2, 1, 5))
            assert result.kind is ResultKind.EXACT_PRINCIPAL
            assert result.generator_degree == d * 4
            exponent = d * 4  # mu carries weight 1
            assert result.generator_text() == f"mu^{exponent}"

    def test_square_case_mod2(self):
        result = index_stiefel(stiefel(R, 2, 1, 2))
        assert result.generator_text() == "mu"
        assert result.generator_degree == 1

    def test_generator_is_a_monomial(self):
        for field in (R, C, H):
            for p, l in ((3, 9), (5, 11), (7, 13)):
                result = index_stiefel(stiefel(field, p, 1, l))
                assert result.generator.is_monomial()
                assert result.certificate is not None
                assert not result.certificate.permanent

    def test_engine_matches_closed_form_small_sweep(self):
        for p in (3, 5):
            for l in range(p, 26):
                for field in (R, C, H):
                    result = index_stiefel(stiefel(field, p, 1, l))
                    m = closed_form_m(field, p, l)
                    assert result.generator_degree == 2 * m * (p - 1)


class TestClosedForm:
    def test_real_complex_formula(self):
        assert closed_form_m(R, 3, 3) == 1
        assert closed_form_m(R, 3, 4) == 1
        assert closed_form_m(C, 3, 5) == 2
        assert closed_form_m(R, 3, 7) == 3
        assert closed_form_m(C, 5, 21) == 5

    def test_quaternionic_branches(self):
        # t = ceil(2l/(p-1)); the candidate t-2 is skipped iff p divides t-1
        assert closed_form_m(H, 3, 3) == 1
        assert closed_form_m(H, 3, 4) == 3
        assert closed_form_m(H, 5, 5) == 1

    def test_mod2_rejected(self):
        with pytest.raises(ValueError, match="odd"):
            closed_form_m(R, 2, 5)

    def test_small_l_rejected(self):
        with pytest.raises(ValueError, match="l >= p"):
            closed_form_m(R, 5, 4)


class TestStiefelIndexHigherRank:
    def test_rank_two_real_p3_frozen_value(self):
        # oracle: prod over pair reps {v1, v2, v1+v2, v1+2v2} of (1 - l^2) has
        # elementary symmetric components e1 = e2 = 0, so the first inverse
        # component is -e3 at degree 12: v1^6 + v1^4 v2^2 + v1^2 v2^4 + v2^6
        result = index_stiefel(stiefel(R, 3, 2, 9))
        assert result.kind is ResultKind.CONTAINMENT_BOUND
        assert result.generator_degree == 12
        assert result.generator.terms() == {
            (6, 0): 1,
            (4, 2): 1,
            (2, 4): 1,
            (0, 6): 1,
        }
        assert result.certificate.label == "x_3"
        assert "v_1^2" in result.ideal_note

    def test_rank_two_structural_checks(self):
        for p, field in ((3, R), (3, C), (3, H), (5, R)):
            spec = stiefel(field, p, 2, p * p + 4)
            result = index_stiefel(spec)
            assert result.kind is ResultKind.CONTAINMENT_BOUND
            assert result.generator_degree % (2 * (p - 1)) == 0
            assert result.generator.in_power_ideal(p - 1)
            assert result.generator_degree >= lower_bound_degree_rank_n(spec)

    def test_rank_two_degree_monotone_in_l(self):
        degrees = [
            index_stiefel(stiefel(R, 3, 2, l)).generator_degree for l in range(9, 21)
        ]
        assert degrees == sorted(degrees)

    def test_mod2_rank_two_connectivity_only(self):
        result = index_stiefel(stiefel(R, 2, 2, 9))
        assert result.kind is ResultKind.CONNECTIVITY_ONLY
        assert result.generator is None
        assert result.generator_degree == stiefel_connectivity(R, 9, 4) + 2 == 6
        assert "connectivity" in result.ideal_note

    def test_mod2_rank_three(self):
        result = index_stiefel(stiefel(C, 2, 3, 10))
        assert result.kind is ResultKind.CONNECTIVITY_ONLY
        assert result.generator_degree == 2 * (10 - 8) + 2


class TestConnectivity:
    def test_values(self):
        assert stiefel_connectivity(R, 5, 2) == 2
        assert stiefel_connectivity(C, 5, 2) == 6
        assert stiefel_connectivity(H, 5, 2) == 14


class TestLowerBoundRankN:
    def test_real_example(self):
        assert lower_bound_degree_rank_n(stiefel(R, 3, 1, 7)) == 12

    def test_rank_two_values(self):
        assert lower_bound_degree_rank_n(stiefel(R, 3, 2, 10)) == 4
        assert lower_bound_degree_rank_n(stiefel(C, 3, 2, 12)) == 8
        assert lower_bound_degree_rank_n(stiefel(H, 3, 2, 10)) == 8

    def test_mod2_rejected(self):
        with pytest.raises(ValueError, match="odd"):
            lower_bound_degree_rank_n(stiefel(R, 2, 2, 9))

    def test_engine_never_beats_the_bound(self):
        for l in range(9, 16):
            spec = stiefel(R, 3, 2, l)
            assert index_stiefel(spec).generator_degree >= lower_bound_degree_rank_n(spec)


class TestRepSpheres:
    def test_cyclic_odd_p(self):
        result = index_rep_sphere(RepSphereSpec(GroupSpec(3, 1), 4))
        assert result.kind is ResultKind.EXACT_PRINCIPAL
        assert result.generator_text() == "v^2"
        assert result.generator_degree == 4

    def test_cyclic_mod2(self):
        result = index_rep_sphere(RepSphereSpec(GroupSpec(2, 1), 3))
        assert result.generator_text() == "mu^3"
        assert result.generator_degree == 3

    def test_fixed_points_kill_the_index(self):
        result = index_rep_sphere(RepSphereSpec(GroupSpec(3, 1), 4, fixed_point_free=False))
        assert result.kind is ResultKind.CONNECTIVITY_ONLY
        assert result.generator is None
        assert result.generator_degree is None
        assert "zero ideal" in result.ideal_note

    def test_higher_rank_meets_dimension(self):
        result = index_rep_sphere(RepSphereSpec(GroupSpec(3, 2), 16))
        assert result.kind is ResultKind.CONTAINMENT_BOUND
        assert result.generator_degree == 16
        assert "meets" in result.ideal_note


class TestRecords:
    def test_stiefel_record_shape(self):
        record = index_stiefel(stiefel(R, 3, 1, 7)).to_record()
        assert record == {
            "kind": "ExactPrincipal",
            "field": "R",
            "p": 3,
            "n": 1,
            "l": 7,
            "generator_text": "v^6",
            "degree": 12,
            "certificate_label": "x_3",
            "ideal_note": None,
        }

    def test_sphere_record_shape(self):
        record = index_rep_sphere(RepSphereSpec(GroupSpec(2, 1), 3)).to_record()
        assert record["kind"] == "ExactPrincipal"
        assert record["dim"] == 3
        assert record["generator_text"] == "mu^3"
        assert "field" not in record
