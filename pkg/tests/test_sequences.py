"""Growth predicates on candidate Hilbert functions, cross-checked
against Hilbert functions produced by actual monomial algebras."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz.monomials import complete_intersection, random_level_ideal
from lefschetz.sequences import (first_difference, hausel_halfcheck,
                                 is_O_sequence, is_SI_sequence,
                                 is_differentiable_O, is_strictly_unimodal,
                                 is_unimodal, macaulay_bound,
                                 wlp_hilbert_shape)

SPIKE = (1, 13, 12, 13, 1)


class TestMacaulayBound:
    def test_frozen_values(self):
        assert macaulay_bound(3, 1) == 6
        assert macaulay_bound(5, 2) == 7
        assert macaulay_bound(0, 3) == 0
        assert macaulay_bound(1, 5) == 1

    def test_full_polynomial_growth(self):
        # h = dim R_d keeps growing like a polynomial ring
        for r in (2, 3, 4):
            for d in (1, 2, 3):
                import math
                h = math.comb(d + r - 1, r - 1)
                assert macaulay_bound(h, d) == math.comb(d + r, r - 1)

    def test_errors(self):
        with pytest.raises(ValueError):
            macaulay_bound(3, 0)
        with pytest.raises(ValueError):
            macaulay_bound(-1, 2)


class TestOSequence:
    def test_accepts(self):
        assert is_O_sequence(())
        assert is_O_sequence((1,))
        assert is_O_sequence((1, 3, 6, 10))
        assert is_O_sequence((1, 4, 2, 1))
        assert is_O_sequence((1, 100))  # degree-1 value unconstrained

    def test_rejects(self):
        assert not is_O_sequence((2, 3))
        assert not is_O_sequence((1, 2, 4))
        assert not is_O_sequence((1, 3, -1))
        assert not is_O_sequence((1, 1, 2))

    def test_spike_is_O_but_not_shapely(self):
        # growth bounds allow the spike; the shape predicates reject it
        assert is_O_sequence(SPIKE)
        assert not is_unimodal(SPIKE)
        assert not is_SI_sequence(SPIKE)
        assert not wlp_hilbert_shape(SPIKE)

    def test_monomial_hilbert_functions_are_O(self):
        for exps in [(2, 2), (3, 4), (2, 3, 4), (3, 3, 3), (2, 2, 2, 3)]:
            assert is_O_sequence(complete_intersection(exps).hilbert_function())
        rng = random.Random("seq-O")
        for _ in range(15):
            ideal = random_level_ideal(3, rng.randint(2, 6), rng.randint(1, 3), rng)
            h = ideal.hilbert_function()
            assert is_O_sequence(h), h
            assert hausel_halfcheck(h), h


class TestUnimodal:
    def test_basic(self):
        assert is_unimodal((1, 3, 5, 5, 2))
        assert is_unimodal((1, 1, 1))
        assert is_unimodal((5, 4, 3))
        assert not is_unimodal((1, 3, 2, 3))

    def test_strict_variant(self):
        assert is_strictly_unimodal((1, 3, 5, 4, 2))
        assert not is_strictly_unimodal((1, 3, 2, 2))
        assert is_strictly_unimodal((1, 3, 3, 2))  # plateau at the top is fine
        assert is_strictly_unimodal((1, 2, 1, 0, 0))

    @given(st.lists(st.integers(0, 9), max_size=8))
    @settings(max_examples=120)
    def test_strict_implies_unimodal(self, seq):
        if is_strictly_unimodal(seq):
            assert is_unimodal(seq)

    @given(st.lists(st.integers(0, 9), min_size=1, max_size=8))
    @settings(max_examples=80)
    def test_reverse_invariance(self, seq):
        assert is_unimodal(seq) == is_unimodal(seq[::-1])


class TestSIAndShapes:
    def test_si_examples(self):
        assert is_SI_sequence((1, 3, 3, 1))
        assert is_SI_sequence((1, 4, 4, 1))
        assert not is_SI_sequence((1, 3, 4))       # not symmetric
        assert not is_SI_sequence((1, 4, 3, 4, 1))

    def test_gorenstein_ci_hilbert_is_si(self):
        for exps in [(2, 2), (3, 3), (2, 3, 4), (3, 3, 3)]:
            assert is_SI_sequence(complete_intersection(exps).hilbert_function())

    def test_wlp_shape_examples(self):
        assert wlp_hilbert_shape((1, 3, 6, 6, 3))
        assert wlp_hilbert_shape((1, 3, 4, 4, 2))
        assert not wlp_hilbert_shape((1, 3, 2, 3))
        assert not wlp_hilbert_shape((2, 3))
        assert not wlp_hilbert_shape((1, 3, 0, 1))  # zero then revival

    def test_differentiable(self):
        assert is_differentiable_O((1, 3, 6))
        assert not is_differentiable_O((1, 3, 2))  # difference dips negative
        assert first_difference((1, 3, 6, 6)) == [1, 2, 3, 0]

    @given(st.lists(st.integers(0, 30), min_size=1, max_size=8))
    @settings(max_examples=80)
    def test_first_difference_roundtrip(self, seq):
        acc = list(itertools.accumulate(first_difference(seq)))
        assert acc == list(seq)
