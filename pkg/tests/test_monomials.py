import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz.monomials import (DimensionMismatch, HVector, Monomial,
                                 MonomialIdeal, NotArtinian,
                                 complete_intersection,
                                 ideal_from_socle_monomials, minimalize,
                                 monomials_of_degree, random_level_ideal,
                                 revlex_key)


def ci_hilbert_oracle(exponents):
    """Coefficients of prod_i (1 + t + ... + t^(a_i - 1))."""
    coeffs = [1]
    for a in exponents:
        out = [0] * (len(coeffs) + a - 1)
        for i, c in enumerate(coeffs):
            for j in range(a):
                out[i + j] += c
        coeffs = out
    return tuple(coeffs)


class TestMonomial:
    def test_basics(self):
        m = Monomial((2, 0, 1))
        assert m.degree == 3
        assert m.times_var(1) == Monomial((2, 1, 1))
        assert Monomial((1, 0, 0)).divides(m)
        assert not Monomial((0, 1, 0)).divides(m)
        assert m * Monomial((0, 1, 0)) == Monomial((2, 1, 1))

    def test_degree_counts(self):
        for r in range(1, 5):
            for d in range(6):
                assert len(monomials_of_degree(r, d)) == math.comb(d + r - 1, r - 1)

    def test_revlex_order(self):
        # last variable weakest: x^2 comes after y^2 in 2 variables? no:
        # revlex sorts by reversed exponents, so (2,0) < (1,1) < (0,2)
        assert monomials_of_degree(2, 2) == ((2, 0), (1, 1), (0, 2))
        assert revlex_key((2, 0, 1)) == (1, 0, 2)


class TestHVector:
    def test_trailing_zeros_stripped(self):
        assert tuple(HVector([1, 3, 0, 0])) == (1, 3)

    def test_must_start_with_one(self):
        with pytest.raises(ValueError):
            HVector([2, 3])

    def test_socle_degree(self):
        assert HVector([1, 3, 6]).socle_degree == 2


class TestMonomialIdeal:
    def test_minimalize_drops_multiples(self):
        ideal = MonomialIdeal.of(2, [(2, 0), (2, 1), (0, 3), (2, 0)])
        assert tuple(g.exponents for g in ideal.gens) == ((2, 0), (0, 3))

    def test_minimalize_dimension_check(self):
        with pytest.raises(DimensionMismatch):
            minimalize(2, [Monomial((1, 1, 1))])

    def test_contains(self):
        ideal = MonomialIdeal.of(2, [(2, 0)])
        assert ideal.contains(Monomial((3, 1)))
        assert not ideal.contains(Monomial((1, 5)))

    def test_hilbert_needs_artinian(self):
        with pytest.raises(NotArtinian):
            MonomialIdeal.of(2, [(1, 1)]).hilbert_function()

    @given(st.lists(st.integers(1, 5), min_size=1, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_ci_hilbert_matches_product_formula(self, exps):
        ci = complete_intersection(exps)
        assert tuple(ci.hilbert_function()) == ci_hilbert_oracle(exps)

    def test_fixture_hilbert(self):
        ideal = MonomialIdeal.of(3, [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)])
        assert tuple(ideal.hilbert_function()) == (1, 3, 6, 6, 3)

    def test_standard_basis_cached_and_consistent(self):
        ideal = complete_intersection((2, 2))
        first = ideal.standard_basis(1)
        assert ideal.standard_basis(1) is first

    def test_dim_zero_in_high_degree(self):
        ideal = complete_intersection((2, 3))
        assert ideal.dim(4) == 0


class TestSocle:
    def test_ci_socle_is_corner(self):
        prof = complete_intersection((3, 4, 2)).socle_profile()
        assert prof.cm_type == 1
        assert prof.is_level
        assert prof.monomials[0].exponents == (2, 3, 1)

    def test_fixture_socle(self):
        ideal = MonomialIdeal.of(3, [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)])
        prof = ideal.socle_profile()
        assert prof.cm_type == 3
        assert prof.is_level
        assert set(prof.socle_degrees) == {4}

    def test_non_level_example(self):
        # x^2, xy, y^3: socle is x (degree 1) and y^2 (degree 2)
        ideal = MonomialIdeal.of(2, [(2, 0), (1, 1), (0, 3)])
        prof = ideal.socle_profile()
        assert prof.cm_type == 2
        assert not prof.is_level
        assert sorted(prof.socle_degrees) == [1, 2]


class TestInverseSystem:
    @given(st.integers(2, 3), st.integers(2, 6), st.data())
    @settings(max_examples=60, deadline=None)
    def test_socle_is_exactly_the_chosen_monomials(self, r, e, data):
        pool = monomials_of_degree(r, e)
        t = data.draw(st.integers(1, min(4, len(pool))))
        chosen = data.draw(st.permutations(pool)).copy()[:t]
        ideal = ideal_from_socle_monomials(r, chosen)
        prof = ideal.socle_profile()
        assert prof.is_level
        assert prof.cm_type == t
        assert set(m.exponents for m in prof.monomials) == set(chosen)

    def test_empty_socle_rejected(self):
        with pytest.raises(ValueError):
            ideal_from_socle_monomials(2, [])

    def test_random_level_ideal_reproducible(self):
        a = random_level_ideal(3, 4, 2, random.Random(11))
        b = random_level_ideal(3, 4, 2, random.Random(11))
        assert a == b
        assert a.socle_profile().cm_type == 2

    def test_random_level_type_bound(self):
        with pytest.raises(ValueError):
            random_level_ideal(2, 1, 5, random.Random(0))
