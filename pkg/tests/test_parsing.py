"""Parser round trips and error positions for the ideal text form."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz.monomials import Monomial, complete_intersection, minimalize
from lefschetz.parsing import (IdealExpr, IdealSyntaxError, UndeclaredVariable,
                               parse_ideal, unparse)


class TestParse:
    def test_basic(self):
        expr = parse_ideal("vars: x, y, z; gens: x^3, y^3, z^3, x*y*z")
        assert expr.variables == ("x", "y", "z")
        assert {g.exponents for g in expr.ideal.gens} == {
            (3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)}

    def test_whitespace_insensitive(self):
        a = parse_ideal("vars:x,y;gens:x^2,y^2")
        b = parse_ideal("  vars :  x ,\ty ;\n gens : x ^ 2 , y ^ 2  ")
        assert a == b
        assert a.ideal == complete_intersection((2, 2))

    def test_repeated_factor_accumulates(self):
        expr = parse_ideal("vars: x, y; gens: x*x*y^2*x")
        assert expr.ideal.gens == (Monomial((3, 2)),)

    def test_minimalizes(self):
        expr = parse_ideal("vars: x, y; gens: x^2, x^3, y, x^2*y")
        assert {g.exponents for g in expr.ideal.gens} == {(2, 0), (0, 1)}

    def test_implicit_exponent_one(self):
        expr = parse_ideal("vars: x, y; gens: x, y^4")
        assert {g.exponents for g in expr.ideal.gens} == {(1, 0), (0, 4)}

    def test_long_names(self):
        expr = parse_ideal("vars: alpha, beta_2; gens: alpha^2*beta_2")
        assert expr.variables == ("alpha", "beta_2")


class TestErrors:
    def test_undeclared_variable(self):
        with pytest.raises(UndeclaredVariable) as exc:
            parse_ideal("vars: x, y; gens: x^2, w^2")
        assert exc.value.position == 23
        assert isinstance(exc.value, IdealSyntaxError)

    def test_duplicate_variable(self):
        with pytest.raises(IdealSyntaxError) as exc:
            parse_ideal("vars: x, y, x; gens: x^2")
        assert "duplicate" in str(exc.value)
        assert exc.value.position == 12

    def test_zero_exponent(self):
        with pytest.raises(IdealSyntaxError) as exc:
            parse_ideal("vars: x; gens: x^0")
        assert "positive" in str(exc.value)

    def test_missing_keyword(self):
        with pytest.raises(IdealSyntaxError):
            parse_ideal("variables: x; gens: x^2")

    def test_truncated(self):
        with pytest.raises(IdealSyntaxError) as exc:
            parse_ideal("vars: x, y; gens: x^")
        assert exc.value.position == len("vars: x, y; gens: x^")

    def test_trailing_garbage(self):
        with pytest.raises(IdealSyntaxError) as exc:
            parse_ideal("vars: x; gens: x^2 ; gens: x")
        assert "trailing" in str(exc.value)

    def test_stray_character(self):
        with pytest.raises(IdealSyntaxError) as exc:
            parse_ideal("vars: x; gens: x+y")
        assert exc.value.position == len("vars: x; gens: x")

    def test_empty(self):
        with pytest.raises(IdealSyntaxError):
            parse_ideal("")


class TestUnparse:
    def test_canonical_form(self):
        expr = parse_ideal("vars:x,y,z;gens:z^3 , x ^1, y*y")
        assert unparse(expr) == "vars: x, y, z; gens: x, y^2, z^3"

    def test_round_trip(self):
        text = "vars: x, y, z; gens: x^3, y^3, z^3, x*y*z"
        expr = parse_ideal(text)
        assert parse_ideal(unparse(expr)) == expr

    @given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4),
                              st.integers(0, 4)),
                    min_size=1, max_size=5))
    @settings(max_examples=60)
    def test_round_trip_random(self, exps):
        exps = [e for e in exps if any(e)]
        if not exps:
            return
        expr = IdealExpr(("x", "y", "z"), minimalize(3, [Monomial(e) for e in exps]))
        assert parse_ideal(unparse(expr)) == expr
