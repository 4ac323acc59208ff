from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bei.errors import DomainError, ParseError
from bei.poly import (
    MonomialOrder,
    Polynomial,
    compare,
    default_names,
    is_squarefree,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    parse_polynomial,
)

NV = 4

monomials = st.tuples(*[st.integers(0, 3)] * NV)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(monomials, coeffs, max_size=5).map(lambda d: Polynomial(d, NV))


def lex_oracle(m1, m2):
    """Lex comparison through the first differing exponent."""
    for a, b in zip(m1, m2):
        if a != b:
            return 1 if a > b else -1
    return 0


class TestOrder:
    @given(monomials, monomials)
    def test_lex_matches_first_difference(self, a, b):
        assert compare(a, b, MonomialOrder.lex(NV)) == lex_oracle(a, b)

    def test_x_before_y(self):
        # x1 > ... > xn > y1 > ... > yn
        order = MonomialOrder.lex(4)
        assert compare((0, 1, 0, 0), (0, 0, 5, 5), order) == 1
        assert compare((0, 0, 1, 0), (0, 0, 0, 9), order) == 1

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            compare((1, 0), (1, 0, 0), MonomialOrder.lex(2))

    @given(monomials, monomials)
    def test_eliminating_puts_chosen_variable_first(self, a, b):
        order = MonomialOrder.eliminating(NV, [3])
        rotated = lambda m: (m[3],) + m[:3]
        assert compare(a, b, order) == lex_oracle(rotated(a), rotated(b))

    @given(monomials, monomials, monomials)
    def test_multiplicative(self, a, b, c):
        order = MonomialOrder.lex(NV)
        assert compare(mono_mul(a, c), mono_mul(b, c), order) == compare(a, b, order)


class TestMonomials:
    @given(monomials, monomials)
    def test_lcm_divisibility(self, a, b):
        l = mono_lcm(a, b)
        assert mono_divides(a, l) and mono_divides(b, l)
        assert mono_mul(mono_div(l, a), a) == l

    @given(monomials, monomials)
    def test_coprime_iff_lcm_is_product(self, a, b):
        assert mono_coprime(a, b) == (mono_lcm(a, b) == mono_mul(a, b))

    def test_squarefree(self):
        assert is_squarefree((1, 0, 1, 1))
        assert not is_squarefree((2, 0, 0, 0))

    def test_default_names(self):
        assert default_names(4) == ["x1", "x2", "y1", "y2"]
        assert default_names(5)[-1] == "t"


class TestArithmetic:
    @given(polys, polys, polys)
    def test_ring_axioms(self, f, g, h):
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert (f - f) == Polynomial.zero(NV)

    @given(polys, polys)
    def test_leading_monomial_of_product(self, f, g):
        if not f or not g:
            return
        order = MonomialOrder.lex(NV)
        assert (f * g).leading_monomial(order) == mono_mul(f.leading_monomial(order), g.leading_monomial(order))

    def test_zero_has_no_leading_term(self):
        with pytest.raises(DomainError):
            Polynomial.zero(2).leading_term()

    def test_mismatched_rings(self):
        with pytest.raises(DomainError):
            Polynomial.variable(0, 2) + Polynomial.variable(0, 3)

    def test_monic(self):
        f = Polynomial({(1, 0): 3, (0, 1): 1})
        assert f.monic().terms[(1, 0)] == 1
        assert f.monic().terms[(0, 1)] == Fraction(1, 3)

    def test_extend_and_drop(self):
        f = Polynomial({(1, 0): 2})
        assert f.extend().nvars == 3 and f.extend().drop_trailing() == f
        assert not f.extend().depends_on(2)


class TestText:
    def test_edge_binomial_text(self):
        f = Polynomial({(1, 0, 0, 1): 1, (0, 1, 1, 0): -1})
        assert f.to_text() == "x1*y2 - x2*y1"

    def test_coefficients_and_powers(self):
        f = parse_polynomial("-3/2*x1^2*y1 + 4 - y2", 4)
        assert f.terms == {(2, 0, 1, 0): Fraction(-3, 2), (0, 0, 0, 0): 4, (0, 0, 0, 1): -1}

    @given(polys)
    def test_text_round_trip(self, f):
        assert parse_polynomial(f.to_text(), NV) == f

    @given(polys)
    def test_json_round_trip(self, f):
        assert Polynomial.from_json(f.to_json(), NV) == f

    @pytest.mark.parametrize("text, fragment", [
        ("x1 + + x2", "column 6"),
        ("x1 * ", "incomplete"),
        ("x1 * z9", "column 6"),
        ("x1 x2", "missing operator"),
        ("x1 $ x2", "column 3"),
    ])
    def test_parse_errors(self, text, fragment):
        with pytest.raises(ParseError, match=fragment):
            parse_polynomial(text, 4)
