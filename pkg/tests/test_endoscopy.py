from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gspcheck import endoscopy as en
from gspcheck import root_data as rd
from gspcheck.suites import n_MH_H_brute


def all_triples(n_max):
    for n in range(1, n_max + 1):
        for M in en.cuspidal_levis(n):
            for g in en.g_triples(M):
                yield M, g


# ---------------------------------------------------------------- elliptic data


def test_elliptic_data_small_ranks():
    assert [(d.n1, d.label, d.lambda_order) for d in en.elliptic_data(1)] == [(1, "GSp_2", 1)]
    assert [(d.n1, d.label, d.lambda_order) for d in en.elliptic_data(2)] == [(2, "GSp_4", 1), (0, "GSO_4", 2)]
    assert [(d.n1, d.label, d.lambda_order) for d in en.elliptic_data(3)] == [
        (3, "GSp_6", 1),
        (1, "G(Sp_2xSO_4)", 2),
        (0, "GSO_6", 2),
    ]


@pytest.mark.parametrize("n", range(1, 8))
def test_elliptic_data_count(n):
    data = en.elliptic_data(n)
    assert len(data) == (1 if n == 1 else n)
    assert all(d.n2 != 1 and d.n == n for d in data)


def test_datum_validation():
    with pytest.raises(ValueError):
        en.EndoscopicDatum(2, 1)
    with pytest.raises(ValueError):
        en.EndoscopicDatum(0, 0)
    with pytest.raises(ValueError):
        en.elliptic_data(0)


@pytest.mark.parametrize("n", range(1, 5))
def test_outer_automorphisms_from_root_data(n):
    for d in en.elliptic_data(n):
        assert en.lambda_H_brute(d) == d.lambda_order


# ---------------------------------------------------------------- constants


def test_tamagawa_values():
    assert en.tamagawa_number(3, 0) == 1
    assert en.tamagawa_number(0, 2) == 2
    assert en.tamagawa_number(1, 2) == 2
    with pytest.raises(ValueError):
        en.tamagawa_number(1, 1)


def test_k_table():
    assert en.k_constant(2, 0) == 2
    assert en.k_constant(1, 2) == 2
    assert en.k_constant(1, 0) == 1
    assert en.k_constant(0, 0) == 1
    assert en.k_constant(0, 4) == 4
    with pytest.raises(ValueError):
        en.k_constant(1, 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_k_of_G_is_packet_size(n):
    assert en.k_constant(n, 0) == rd.discrete_series_packet_size(n)


def test_iota_values():
    assert en.iota(2, en.EndoscopicDatum(0, 2)) == Fraction(1, 4)
    assert en.iota(3, en.EndoscopicDatum(1, 2)) == Fraction(1, 4)
    assert en.iota(4, en.EndoscopicDatum(4, 0)) == 1
    with pytest.raises(ValueError):
        en.iota(3, en.EndoscopicDatum(0, 2))


# ---------------------------------------------------------------- Levis and triples


def test_cuspidal_levis():
    key = lambda L: {(M.r, M.t, M.m) for M in L}
    assert key(en.cuspidal_levis(0)) == {(0, 0, 0)}
    assert key(en.cuspidal_levis(1)) == {(0, 0, 1), (1, 0, 0)}
    assert key(en.cuspidal_levis(2)) == {(0, 0, 2), (1, 0, 1), (2, 0, 0), (0, 1, 0)}


@pytest.mark.parametrize("rtm,value", [((1, 0, 1), 2), ((2, 0, 0), 8), ((0, 1, 0), 2), ((2, 1, 0), 16)])
def test_n_M_G_values(rtm, value):
    assert en.n_M_G(en.LeviDatum(*rtm)) == value


@pytest.mark.parametrize("n", range(1, 5))
def test_n_M_G_from_root_data(n):
    for M in en.cuspidal_levis(n):
        assert en.n_M_G_brute(M) == en.n_M_G(M)


def test_triples_of_a_rank_three_levi():
    M = en.LeviDatum(1, 0, 2)
    got = [(sorted(g.A), g.m1, g.m2, g.H_label) for g in en.g_triples(M)]
    assert got == [([], 2, 0, "GSp_6"), ([], 0, 2, "G(Sp_2xSO_4)"), ([1], 0, 2, "GSO_6")]
    ell0 = [(sorted(g.A), g.m2) for g in en.g_triples(M, ell0_only=True)]
    assert ell0 == [([], 0), ([], 2)]
    loose = en.g_triples(M, require_n2_ne_1=False)
    assert any(g.n2 == 1 for g in loose) and len(loose) == 4


@pytest.mark.parametrize("n", range(1, 6))
def test_triples_of_whole_group_match_elliptic_data(n):
    M = en.LeviDatum(0, 0, n)
    key = lambda d: (d.n1, d.n2)
    assert sorted((g.datum() for g in en.g_triples(M)), key=key) == sorted(en.elliptic_data(n), key=key)
    for g in en.g_triples(M):
        assert g.lambda_G == g.datum().lambda_order == en.lambda_G_brute(g)


def test_triple_validation():
    M = en.LeviDatum(1, 1, 2)
    with pytest.raises(ValueError):
        en.GTriple(M, {2}, set(), 2, 0)
    with pytest.raises(ValueError):
        en.GTriple(M, set(), set(), 1, 1)
    with pytest.raises(ValueError):
        en.GTriple(M, set(), set(), 1, 0)


def test_triple_signs_and_labels():
    g = en.GTriple(en.LeviDatum(1, 1, 2), {1}, {1}, 0, 2)
    assert g.signs == (-1, -1, -1, -1, -1)
    assert (g.n1, g.n2) == (0, 5)
    assert g.M_prime_label == "G_m^1 x GL_2^1 x GSO_4"


@pytest.mark.parametrize("n", range(1, 6))
def test_k_tau_identity_on_cuspidal_triples(n):
    for M in en.cuspidal_levis(n):
        for g in en.g_triples(M, cuspidal_only=True, ell0_only=True):
            assert en.k_tau_identity(M, g)


def test_k_tau_identity_rejects_bad_input():
    M = en.LeviDatum(1, 0, 2)
    odd = en.GTriple(M, {1}, set(), 0, 2)
    with pytest.raises(ValueError):
        en.k_tau_identity(M, odd)
    with pytest.raises(ValueError):
        en.k_tau_identity(en.LeviDatum(0, 0, 3), en.g_triples(M)[0])


# ---------------------------------------------------------------- closed values against root data


def test_n_MH_H_closed_formula_against_root_data():
    """The closed formula is exact except for a factor 2 when M' has no
    orthogonal factor and some G_m sits on the orthogonal side: flipping that
    G_m is an odd sign change, which the orthogonal Weyl group lacks."""
    for M, g in all_triples(4):
        ratio = Fraction(g.n_MH_H) / n_MH_H_brute(g)
        doubled = g.m2 == 0 and g.r2 >= 1
        assert ratio == (2 if doubled else 1), (M, g)


def test_lambda_G_stated_against_root_data():
    """Stated value 1 away from M = G; root data gives 2 when the orthogonal
    part of M' has rank at least 2."""
    for M, g in all_triples(4):
        expected = g.datum().lambda_order if M.is_whole_group else (2 if g.m2 >= 2 else 1)
        assert en.lambda_G_brute(g) == expected, (M, g)
        assert g.lambda_G == (g.datum().lambda_order if M.is_whole_group else 1)


# ---------------------------------------------------------------- Levi classes of H


@pytest.mark.parametrize("n", range(1, 5))
def test_levi_class_types_cover_triples(n):
    """Cuspidal Levi classes of each H are exactly the types of the G-triples
    landing on H, and the two cuspidality tests agree."""
    for d in en.elliptic_data(n):
        classes = en.levi_classes(d.signs)
        assert all(c.cuspidal_by_type == c.cuspidal_by_weyl for c in classes)
        from_classes = {c.levi_type for c in classes if c.cuspidal_by_type}
        from_triples = {
            g.levi_type
            for M in en.cuspidal_levis(n)
            for g in en.g_triples(M)
            if g.datum() == d and g.m2 % 2 == 0
        }
        assert from_classes == from_triples


def test_levi_classes_of_GSp4():
    classes = en.levi_classes((1, 1))
    assert len(classes) == 4
    assert sum(1 / c.n_H for c in classes if c.levi_type == (2, 0, 0, 0, 0, 0)) == Fraction(1, 8)


# ---------------------------------------------------------------- double counting


def indicator(d, typ):
    return Fraction(0) if typ[5] % 2 else Fraction(1)


def test_double_counting_zero_and_indicator():
    assert en.double_counting_check(2, lambda d, typ: Fraction(0)) == (0, 0)
    lhs, rhs = en.double_counting_check(2, indicator)
    assert lhs == rhs != 0


@given(st.integers(2, 4), st.integers(0, 2**32 - 1))
def test_double_counting_random_phi(n, seed):
    lhs, rhs = en.double_counting_check(n, en.random_phi(seed))
    assert lhs == rhs


def test_double_counting_with_stated_lambda():
    # the stated outer automorphism orders only matter once M != G can carry m2 >= 2
    phi = en.random_phi(7)
    lhs, rhs = en.double_counting_sides(2, phi, "stated")
    assert lhs == rhs
    for n in (3, 4):
        lhs, rhs = en.double_counting_sides(n, phi, "stated")
        assert lhs != rhs
        assert en.double_counting_sides(n, phi, "computed") == (lhs, lhs)


def test_random_phi_is_deterministic_and_cuspidal():
    d = en.EndoscopicDatum(1, 2)
    phi = en.random_phi(3)
    assert phi(d, (1, 0, 0, 0, 0, 2)) == en.random_phi(3)(d, (1, 0, 0, 0, 0, 2))
    assert phi(d, (0, 0, 0, 0, 0, 3)) == 0
