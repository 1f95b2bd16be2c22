from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gspcheck import root_data as rd
from gspcheck.laurent import LaurentPolynomial as LP
from gspcheck.laurent import poly_product, poly_sum, weyl_act_poly, weyl_act_poly_via_cocharacters

N = 2
coefs = st.builds(Fraction, st.integers(-5, 5), st.sampled_from([1, 2, 3]))
exponents = st.lists(st.integers(-2, 2), min_size=N + 2, max_size=N + 2).map(tuple)
polys = st.dictionaries(exponents, coefs, max_size=5).map(lambda d: LP.from_dict(N, d))
nonzero = st.sampled_from([Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 3)])


def to_sympy(f):
    X, X1, X2, p = sympy.symbols("X X1 X2 p")
    return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * X**e[0] * X1**e[1] * X2**e[2] * p**e[3] for e, c in f.terms])


@given(polys, polys)
def test_ring_operations_match_sympy(f, g):
    assert sympy.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f + g) - to_sympy(f) - to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f - g) - to_sympy(f) + to_sympy(g)) == 0


@given(polys, polys, nonzero, nonzero, nonzero, nonzero)
def test_evaluation_is_a_ring_map(f, g, p, X, x1, x2):
    at = lambda h: h.evaluate(p, X, (x1, x2))
    assert at(f * g) == at(f) * at(g)
    assert at(f + g) == at(f) + at(g)


def test_no_zero_terms_stored():
    f = LP.X(N) - LP.X(N)
    assert not f and len(f) == 0
    assert LP.from_dict(N, {(0, 0, 0, 0): 0}) == LP.zero(N)


def test_powers_and_inverses():
    x = LP.Xi(N, 1, 2) * 3
    assert x ** -1 * x == LP.constant(N, 1)
    assert (1 + LP.Xi(N, 1)) ** 2 == 1 + 2 * LP.Xi(N, 1) + LP.Xi(N, 1, 2)
    with pytest.raises(ValueError):
        (1 + LP.Xi(N, 1)) ** -1
    with pytest.raises(ValueError):
        LP.Xi(N, 3)
    with pytest.raises(rd.RankMismatch):
        LP.X(1) + LP.X(2)


def test_substitution_and_format():
    f = LP.p(N, 3) * LP.X(N, -1) * (1 + LP.Xi(N, 1))
    g = f.substitute_Xi_power(2)
    assert g == LP.p(N, 3) * LP.X(N, -1) * (1 + LP.Xi(N, 1, 2))
    assert "1 * p^3 * X^-1 * X1^2 * X2^0" in g.format_terms()
    assert str(LP.zero(N)) == "0"
    assert f.to_json()[0] == {"coef": "1", "p": 3, "X": -1, "Xi": [0, 0]}


def test_sign_flip_fixes_rank_one_transform():
    f = LP.X(1, -1) * (1 + LP.Xi(1, 1))
    flip = rd.SignedPermutation((-1,), (1,))
    assert weyl_act_poly(flip, LP.X(1)) == LP.X(1) * LP.Xi(1, 1, -1)
    assert weyl_act_poly(flip, LP.Xi(1, 1)) == LP.Xi(1, 1, -1)
    assert weyl_act_poly(flip, f) == f


def test_transposition_fixes_symmetric_polynomial():
    f = LP.Xi(N, 1) + LP.Xi(N, 2) + LP.Xi(N, 1) * LP.Xi(N, 2)
    swap = rd.SignedPermutation((1, 1), (2, 1))
    assert weyl_act_poly(swap, f) == f
    assert weyl_act_poly(rd.SignedPermutation.identity(N), f) == f


@given(polys, st.sampled_from(rd.weyl_group_list(N)), st.sampled_from(rd.weyl_group_list(N)))
def test_action_routes_agree_and_compose(f, w, v):
    assert weyl_act_poly(w, f) == weyl_act_poly_via_cocharacters(w, f)
    assert weyl_act_poly(w * v, f) == weyl_act_poly(w, weyl_act_poly(v, f))


@given(polys, polys, st.sampled_from(rd.weyl_group_list(N)))
def test_action_is_a_ring_automorphism(f, g, w):
    assert weyl_act_poly(w, f * g) == weyl_act_poly(w, f) * weyl_act_poly(w, g)
    assert weyl_act_poly(w, f + g) == weyl_act_poly(w, f) + weyl_act_poly(w, g)


def test_sum_and_product_helpers():
    parts = [LP.Xi(N, 1), LP.Xi(N, 2)]
    assert poly_sum(N, parts) == parts[0] + parts[1]
    assert poly_product(N, parts) == parts[0] * parts[1]
    assert poly_product(N, []) == LP.constant(N, 1)
    assert poly_sum(N, []) == LP.zero(N)
