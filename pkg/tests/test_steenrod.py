import pytest

from fhindex.charclass import ScalarField
from fhindex.steenrod import StuntedSpace, binom_mod2, c2_numeric_index_bounds, sq_connects

R, C, H = ScalarField.R, ScalarField.C, ScalarField.H


def pascal_mod2(n, r):
    if r < 0 or r > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [(a + b) % 2 for a, b in zip(row, row[1:])] + [1]
    return row[r]


class TestLucas:
    def test_matches_pascal_triangle(self):
        for n in range(65):
            for r in range(n + 1):
                assert binom_mod2(n, r) == pascal_mod2(n, r), (n, r)

    def test_out_of_range_is_zero(self):
        assert binom_mod2(3, 5) == 0
        assert binom_mod2(3, -1) == 0

    def test_edge_values(self):
        assert binom_mod2(0, 0) == 1
        assert binom_mod2(7, 3) == 1
        assert binom_mod2(4, 2) == 0


class TestStuntedSpace:
    def test_cell_dimensions(self):
        assert StuntedSpace(R, 9).cell_dimensions() == (7, 8)
        assert StuntedSpace(C, 5).cell_dimensions() == (7, 9)
        assert StuntedSpace(H, 4).cell_dimensions() == (11, 15)

    def test_needs_three_columns(self):
        with pytest.raises(ValueError):
            StuntedSpace(R, 2)

    def test_sq_connects_iff_l_odd(self):
        for l in range(3, 30):
            for field in (R, C, H):
                assert sq_connects(StuntedSpace(field, l)) == (l % 2 == 1)


class TestNumericBounds:
    def test_real_bounds(self):
        assert c2_numeric_index_bounds(R, 9) == (8, 15)  # l odd: lower = l-1
        assert c2_numeric_index_bounds(R, 8) == (6, 13)  # l even: lower = l-2

    def test_complex_bounds(self):
        assert c2_numeric_index_bounds(C, 5) == (8, 15)
        assert c2_numeric_index_bounds(C, 6) == (9, 19)

    def test_quaternionic_bounds(self):
        assert c2_numeric_index_bounds(H, 5) == (16, 31)
        assert c2_numeric_index_bounds(H, 6) == (19, 39)

    def test_odd_l_family(self):
        for l in range(3, 42, 2):
            assert c2_numeric_index_bounds(R, l)[0] == l - 1
            assert c2_numeric_index_bounds(C, l)[0] == 2 * l - 2
            assert c2_numeric_index_bounds(H, l)[0] == 4 * l - 4

    def test_lower_never_exceeds_upper(self):
        for l in range(2, 101):
            for field in (R, C, H):
                lower, upper = c2_numeric_index_bounds(field, l)
                assert lower <= upper

    def test_l_two_is_allowed_without_stunted_data(self):
        assert c2_numeric_index_bounds(R, 2) == (0, 1)

    def test_too_small_l_rejected(self):
        with pytest.raises(ValueError):
            c2_numeric_index_bounds(R, 1)
