"""Satake transforms of the unramified test functions and the factorizations
used to compare constant terms along a Levi with endoscopic transfers.

All identities are exact equalities of Laurent polynomials, with p kept
as a formal variable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .endoscopy import GTriple, LeviDatum
from .laurent import LaurentPolynomial, poly_product, poly_sum, weyl_act_poly
from .root_data import endoscopic_weyl_group, weyl_group_list

LP = LaurentPolynomial


def _subsets(items: Iterable[int]) -> list[frozenset[int]]:
    items = sorted(items)
    return [frozenset(c) for k in range(len(items) + 1) for c in itertools.combinations(items, k)]


def _signed_subset_sum(n: int, support: Iterable[int], K: frozenset[int], power: int) -> LaurentPolynomial:
    """sum over I in support of (-1)^|I∩K| prod_{i in I} X_i^power."""
    d = {}
    for I in _subsets(support):
        e = [0] * n
        for i in I:
            e[i - 1] = power
        d[(0,) + tuple(e) + (0,)] = (-1) ** len(I & K)
    return LP.from_dict(n, d)


def _check_K(n: int, K: Iterable[int]) -> frozenset[int]:
    K = frozenset(K)
    if not K <= frozenset(range(1, n + 1)):
        raise ValueError(f"K={sorted(K)} is not inside 1..{n}")
    return K


def satake_phi(n: int, a: int) -> LaurentPolynomial:
    if n < 0 or a < 1:
        raise ValueError("need n >= 0 and a >= 1")
    return LP.p(n, a * n * (n + 1) // 2) * LP.X(n, -1) * _signed_subset_sum(n, range(1, n + 1), frozenset(), 1)


def satake_transfer(n: int, a: int, K: Iterable[int]) -> LaurentPolynomial:
    K = _check_K(n, K)
    return LP.p(n, a * n * (n + 1) // 2) * LP.X(n, -a) * _signed_subset_sum(n, range(1, n + 1), K, a)


@dataclass(frozen=True)
class SatakeFamily:
    M: LeviDatum
    g: GTriple
    a: int
    K: frozenset[int]
    K_prime: frozenset[int]
    phi: LaurentPolynomial
    phi_M: LaurentPolynomial
    phi_upper_M: LaurentPolynomial
    f_H: LaurentPolynomial
    f_H_M_H: LaurentPolynomial
    psi_M_prime: LaurentPolynomial
    psi_M_prime_displayed: LaurentPolynomial
    f_M_prime: LaurentPolynomial
    psi_I: dict[frozenset[int], LaurentPolynomial] = field(repr=False)
    psi_j: tuple[tuple[LaurentPolynomial, LaurentPolynomial, LaurentPolynomial], ...] = field(repr=False)
    psi_h: LaurentPolynomial = field(repr=False)

    @property
    def n(self) -> int:
        return self.M.n

    def polynomials(self) -> dict[str, LaurentPolynomial]:
        return {
            "phi": self.phi,
            "phi_M": self.phi_M,
            "phi_upper_M": self.phi_upper_M,
            "f_H": self.f_H,
            "f_H_M_H": self.f_H_M_H,
            "psi_M_prime": self.psi_M_prime,
            "f_M_prime": self.f_M_prime,
        }

    def to_json(self) -> dict:
        return {
            "M": self.M.to_json(),
            "triple": self.g.to_json(),
            "a": self.a,
            "K": sorted(self.K),
            "K_prime": sorted(self.K_prime),
            "polynomials": {k: v.to_json() for k, v in self.polynomials().items()},
        }


def build_family(M: LeviDatum, g: GTriple, a: int) -> SatakeFamily:
    if g.M != M:
        raise ValueError("triple belongs to another Levi")
    if a < 1:
        raise ValueError("a must be positive")
    n, r, t, m = M.n, M.r, M.t, M.m
    head = r + 2 * t
    tail = range(head + 1, n + 1)
    K_prime = frozenset(range(head + g.m1 + 1, n + 1))
    K = frozenset(g.A) | frozenset(x for j in g.B for x in (r + 2 * j - 1, r + 2 * j)) | K_prime
    pn = LP.p(n, a * n * (n + 1) // 2)
    pm = LP.p(n, a * m * (m + 1) // 2)

    phi = satake_phi(n, a)
    phi_upper_M = pm * LP.X(n, -1) * _signed_subset_sum(n, tail, frozenset(), 1)
    f_H = satake_transfer(n, a, K)
    f_M_prime = pm * LP.X(n, -a) * _signed_subset_sum(n, tail, K_prime, a)
    psi_M_prime = pn * LP.X(n, -a) * _signed_subset_sum(n, range(1, n + 1), K_prime, a)
    psi_M_prime_displayed = pn * LP.X(n, -a) * _signed_subset_sum(n, range(1, n + 1), K_prime, 1)

    psi_I = {I: poly_product(n, (LP.Xi(n, i, a) for i in I)) for I in _subsets(range(1, r + 1))}
    psi_j = tuple(
        (
            LP.constant(n, 1),
            LP.Xi(n, r + 2 * j - 1, a) + LP.Xi(n, r + 2 * j, a),
            LP.Xi(n, r + 2 * j - 1, a) * LP.Xi(n, r + 2 * j, a),
        )
        for j in range(1, t + 1)
    )
    psi_h = LP.X(n, -a) * _signed_subset_sum(n, tail, K_prime, a)
    return SatakeFamily(
        M=M,
        g=g,
        a=a,
        K=K,
        K_prime=K_prime,
        phi=phi,
        phi_M=phi,
        phi_upper_M=phi_upper_M,
        f_H=f_H,
        f_H_M_H=f_H,
        psi_M_prime=psi_M_prime,
        psi_M_prime_displayed=psi_M_prime_displayed,
        f_M_prime=f_M_prime,
        psi_I=psi_I,
        psi_j=psi_j,
        psi_h=psi_h,
    )


def _f_M_prime_product(fam: SatakeFamily) -> LaurentPolynomial:
    n, m = fam.n, fam.M.m
    empty = fam.psi_I[frozenset()]
    return LP.p(n, fam.a * m * (m + 1) // 2) * empty * poly_product(n, (j[0] for j in fam.psi_j)) * fam.psi_h


def _psi_M_prime_product(fam: SatakeFamily) -> LaurentPolynomial:
    n = fam.n
    return (
        LP.p(n, fam.a * n * (n + 1) // 2)
        * poly_sum(n, fam.psi_I.values())
        * poly_product(n, (j0 + j1 + j2 for j0, j1, j2 in fam.psi_j))
        * fam.psi_h
    )


def _f_H_product(fam: SatakeFamily, minus_for: Iterable[int]) -> LaurentPolynomial:
    n = fam.n
    minus_for = frozenset(minus_for)
    A = frozenset(fam.g.A)
    head = poly_sum(n, ((-1) ** len(I & A) * q for I, q in fam.psi_I.items()))
    blocks = poly_product(
        n,
        (j0 - j1 + j2 if j in minus_for else j0 + j1 + j2 for j, (j0, j1, j2) in enumerate(fam.psi_j, start=1)),
    )
    return LP.p(n, fam.a * n * (n + 1) // 2) * head * blocks * fam.psi_h


def factorization_results(fam: SatakeFamily) -> dict[str, bool]:
    """The three product formulas; the middle factor of the last one takes
    its minus sign exactly on the GL_2 blocks sent to the orthogonal side."""
    return {
        "f_M_prime": fam.f_M_prime == _f_M_prime_product(fam),
        "psi_M_prime": fam.psi_M_prime == _psi_M_prime_product(fam),
        "f_H_M_H": fam.f_H_M_H == _f_H_product(fam, fam.g.B),
    }


def verify_factorizations(fam: SatakeFamily) -> bool:
    return all(factorization_results(fam).values())


def uniform_minus_f_H_factorization(fam: SatakeFamily) -> bool:
    """Variant with the minus sign on every GL_2 block."""
    return fam.f_H_M_H == _f_H_product(fam, range(1, fam.M.t + 1))


def is_weyl_invariant(f: LaurentPolynomial, group) -> bool:
    return all(weyl_act_poly(w, f) == f for w in group)


def phi_is_invariant(n: int, a: int) -> bool:
    return is_weyl_invariant(satake_phi(n, a), weyl_group_list(n))


def transfer_is_invariant(n: int, a: int, K: Iterable[int]) -> bool:
    K = _check_K(n, K)
    return is_weyl_invariant(satake_transfer(n, a, K), endoscopic_weyl_group(K, n))
