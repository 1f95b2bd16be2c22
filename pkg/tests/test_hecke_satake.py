import itertools

import pytest

from gspcheck import endoscopy as en
from gspcheck import hecke_satake as hs
from gspcheck import root_data as rd
from gspcheck.laurent import LaurentPolynomial as LP
from gspcheck.laurent import weyl_act_poly


def families(n_max, a_values=(1, 2)):
    for n in range(1, n_max + 1):
        for M in en.cuspidal_levis(n):
            for g in en.g_triples(M):
                for a in a_values:
                    yield hs.build_family(M, g, a)


# ---------------------------------------------------------------- transforms


def test_base_transforms():
    assert hs.satake_phi(1, 1) == LP.p(1) * LP.X(1, -1) * (1 + LP.Xi(1, 1))
    assert hs.satake_phi(2, 1) == LP.p(2, 3) * LP.X(2, -1) * (1 + LP.Xi(2, 1)) * (1 + LP.Xi(2, 2))
    assert hs.satake_phi(0, 1) == LP.X(0, -1)
    assert len(hs.satake_phi(4, 2)) == 16
    with pytest.raises(ValueError):
        hs.satake_phi(2, 0)


def test_transfers():
    assert hs.satake_transfer(2, 1, {1, 2}) == LP.p(2, 3) * LP.X(2, -1) * (1 - LP.Xi(2, 1)) * (1 - LP.Xi(2, 2))
    assert hs.satake_transfer(2, 1, set()) == hs.satake_phi(2, 1)
    assert hs.satake_transfer(1, 2, {1}) == LP.p(1, 2) * LP.X(1, -2) * (1 - LP.Xi(1, 1, 2))
    with pytest.raises(ValueError):
        hs.satake_transfer(2, 1, {3})


@pytest.mark.parametrize("n", range(1, 4))
@pytest.mark.parametrize("a", [1, 2, 3])
def test_transfer_with_empty_K_is_phi_with_powers(n, a):
    assert hs.satake_transfer(n, a, ()) * LP.X(n, a - 1) == hs.satake_phi(n, a).substitute_Xi_power(a)


# ---------------------------------------------------------------- invariance


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("a", [1, 2])
def test_phi_is_weyl_invariant(n, a):
    assert hs.phi_is_invariant(n, a)


@pytest.mark.parametrize("n", range(1, 4))
def test_transfer_invariance_and_its_limits(n):
    """Invariant under the endoscopic Weyl group, but not under the full one
    once K is a nonempty proper subset or a single index."""
    W = rd.weyl_group_list(n)
    for a in (1, 2):
        for k in range(n + 1):
            for K in itertools.combinations(range(1, n + 1), k):
                assert hs.transfer_is_invariant(n, a, K)
                full = hs.is_weyl_invariant(hs.satake_transfer(n, a, K), W)
                assert full == (k == 0)


# ---------------------------------------------------------------- families


def test_family_for_rank_two_levi():
    M = en.LeviDatum(1, 0, 1)
    g = en.GTriple(M, set(), set(), 1, 0)
    fam = hs.build_family(M, g, 1)
    psi_h = LP.X(2, -1) * (1 + LP.Xi(2, 2))
    assert fam.psi_h == psi_h
    assert fam.f_H_M_H == LP.p(2, 3) * (1 + LP.Xi(2, 1)) * psi_h
    assert fam.K == frozenset() and fam.K_prime == frozenset()


def test_family_sign_conventions():
    M = en.LeviDatum(1, 0, 2)
    g = en.GTriple(M, {1}, set(), 0, 2)
    fam = hs.build_family(M, g, 1)
    assert fam.K_prime == {2, 3} and fam.K == {1, 2, 3}
    assert fam.psi_h == LP.X(3, -1) * (1 - LP.Xi(3, 2)) * (1 - LP.Xi(3, 3))
    assert fam.f_H == LP.p(3, 6) * (1 - LP.Xi(3, 1)) * fam.psi_h


def test_whole_group_family_collapses():
    for n in (2, 3):
        M = en.LeviDatum(0, 0, n)
        for g in en.g_triples(M):
            fam = hs.build_family(M, g, 2)
            assert fam.f_H == hs.satake_transfer(n, 2, fam.K_prime)
            assert fam.f_M_prime == fam.f_H


@pytest.mark.parametrize(
    "rtm,A,B,m1,m2", [((1, 1, 0), (), (1,), 0, 0), ((0, 1, 2), (), (1,), 0, 2), ((2, 1, 0), (1, 2), (), 0, 0)]
)
def test_pinned_factorizations(rtm, A, B, m1, m2):
    M = en.LeviDatum(*rtm)
    fam = hs.build_family(M, en.GTriple(M, A, B, m1, m2), 1)
    assert hs.verify_factorizations(fam)


def test_all_factorizations_up_to_rank_four():
    for fam in families(4):
        assert hs.factorization_results(fam) == {"f_M_prime": True, "psi_M_prime": True, "f_H_M_H": True}


def test_uniform_minus_sign_needs_every_block_orthogonal():
    """The minus sign on the middle GL_2 factor belongs to the blocks in B only;
    putting it on every block is right exactly when B is all of them."""
    seen_wrong = False
    for fam in families(4, (1,)):
        uniform = hs.uniform_minus_f_H_factorization(fam)
        assert uniform == (fam.g.B == frozenset(range(1, fam.M.t + 1)))
        seen_wrong |= not uniform
    assert seen_wrong


def test_displayed_base_change_needs_powers():
    """psi^{M'} with X_i to the first power agrees with the X_i^a version
    only for a = 1."""
    for fam in families(3):
        same = fam.psi_M_prime_displayed == fam.psi_M_prime
        assert same == (fam.a == 1)


def test_family_json_and_validation():
    M = en.LeviDatum(0, 1, 0)
    g = en.g_triples(M)[0]
    data = hs.build_family(M, g, 1).to_json()
    assert set(data["polynomials"]) == {"phi", "phi_M", "phi_upper_M", "f_H", "f_H_M_H", "psi_M_prime", "f_M_prime"}
    with pytest.raises(ValueError):
        hs.build_family(M, g, 0)
    with pytest.raises(ValueError):
        hs.build_family(en.LeviDatum(2, 0, 0), g, 1)


def test_weyl_action_preserves_family_members():
    M = en.LeviDatum(0, 1, 2)
    fam = hs.build_family(M, en.GTriple(M, (), (1,), 0, 2), 2)
    W_H = rd.endoscopic_weyl_group(fam.K, fam.n)
    assert all(weyl_act_poly(w, fam.f_H) == fam.f_H for w in W_H)
