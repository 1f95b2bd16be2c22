"""Elliptic endoscopic data of GSp_2n, cuspidal Levis, G-triples and the
constants attached to them.

Groups are handled through their discrete labels.  Where a constant can
also be recomputed from root data (normalizer indices, outer automorphism
groups, Levi classes of an endoscopic group), a brute-force routine is
provided next to the closed formula.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .root_data import SignedPermutation, generated_group, weyl_group_list

FVec = tuple[int, ...]


# ---------------------------------------------------------------- labels


def group_label(n1: int, n2: int) -> str:
    if n2 == 0:
        return f"GSp_{2 * n1}"
    if n1 == 0:
        return f"GSO_{2 * n2}"
    return f"G(Sp_{2 * n1}xSO_{2 * n2})"


@dataclass(frozen=True)
class EndoscopicDatum:
    n1: int
    n2: int

    def __post_init__(self) -> None:
        if self.n1 < 0 or self.n2 < 0 or self.n1 + self.n2 < 1:
            raise ValueError("need n1, n2 >= 0 and n >= 1")
        if self.n2 == 1:
            raise ValueError("n2 = 1 is not elliptic")

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def label(self) -> str:
        return group_label(self.n1, self.n2)

    @property
    def lambda_order(self) -> int:
        return 1 if self.n2 == 0 else 2

    @property
    def signs(self) -> tuple[int, ...]:
        return (1,) * self.n1 + (-1,) * self.n2

    def to_json(self) -> dict:
        return {
            "n1": self.n1,
            "n2": self.n2,
            "label": self.label,
            "lambda_order": self.lambda_order,
            "tamagawa": tamagawa(self),
            "iota": str(iota(self.n, self)),
            "has_elliptic_torus": self.n2 % 2 == 0,
        }


def elliptic_data(n: int) -> list[EndoscopicDatum]:
    if n < 1:
        raise ValueError("n must be positive")
    return [EndoscopicDatum(n1, n - n1) for n1 in range(n, -1, -1) if n1 != n - 1]


def tamagawa_number(n1: int, n2: int) -> int:
    if n2 == 1 or n2 < 0 or n1 < 0:
        raise ValueError("tamagawa number needs n2 != 1")
    return 1 if n2 == 0 else 2


def tamagawa(d: EndoscopicDatum) -> int:
    return tamagawa_number(d.n1, d.n2)


def k_constant(n1: int, n2: int) -> int:
    if n2 % 2:
        raise ValueError("odd n2: no elliptic maximal torus")
    n = n1 + n2
    if n == 0:
        return 1
    if n2 == 0:
        return 2 ** (n - 1)
    return 2 ** (n - 2)


def iota(n: int, d: EndoscopicDatum) -> Fraction:
    if d.n != n:
        raise ValueError("datum rank differs from n")
    return Fraction(1, tamagawa(d) * d.lambda_order)


# ---------------------------------------------------------------- Levis


@dataclass(frozen=True, order=True)
class LeviDatum:
    """G_m^r x GL_2^t x GSp_2m, embedded in block-diagonal standard form."""

    r: int
    t: int
    m: int

    def __post_init__(self) -> None:
        if min(self.r, self.t, self.m) < 0:
            raise ValueError("negative Levi parameter")

    @property
    def n(self) -> int:
        return self.r + 2 * self.t + self.m

    @property
    def is_whole_group(self) -> bool:
        return self.r == 0 and self.t == 0

    @property
    def S(self) -> frozenset[int]:
        return frozenset(range(1, self.r + 1)) | frozenset(self.r + 2 * j for j in range(1, self.t + 1))

    @property
    def label(self) -> str:
        parts = []
        if self.r:
            parts.append(f"G_m^{self.r}")
        if self.t:
            parts.append(f"GL_2^{self.t}")
        parts.append(f"GSp_{2 * self.m}")
        return " x ".join(parts)

    def to_json(self) -> dict:
        return {"r": self.r, "t": self.t, "m": self.m, "label": self.label, "n_M_G": n_M_G(self)}


def cuspidal_levis(n: int) -> list[LeviDatum]:
    if n < 0:
        raise ValueError("negative rank")
    return [LeviDatum(r, t, n - r - 2 * t) for t in range(n // 2 + 1) for r in range(n - 2 * t + 1)]


def n_M_G(M: LeviDatum) -> int:
    return 2**M.r * math.factorial(M.r) * 2**M.t * math.factorial(M.t)


# ---------------------------------------------------------------- triples


@dataclass(frozen=True, order=True)
class GTriple:
    M: LeviDatum
    A: frozenset[int]
    B: frozenset[int]
    m1: int
    m2: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        if not self.A <= frozenset(range(1, self.M.r + 1)) or not self.B <= frozenset(range(1, self.M.t + 1)):
            raise ValueError("A or B out of range")
        if self.m1 < 0 or self.m2 < 0 or self.m1 + self.m2 != self.M.m:
            raise ValueError("m1 + m2 must equal m")
        if self.m2 == 1:
            raise ValueError("m2 = 1 is excluded")

    @property
    def r1(self) -> int:
        return self.M.r - len(self.A)

    @property
    def r2(self) -> int:
        return len(self.A)

    @property
    def t1(self) -> int:
        return self.M.t - len(self.B)

    @property
    def t2(self) -> int:
        return len(self.B)

    @property
    def n1(self) -> int:
        return self.r1 + 2 * self.t1 + self.m1

    @property
    def n2(self) -> int:
        return self.r2 + 2 * self.t2 + self.m2

    @property
    def levi_type(self) -> tuple[int, int, int, int, int, int]:
        """(r1, t1, m1, r2, t2, m2): shape of M' as a Levi of H."""
        return (self.r1, self.t1, self.m1, self.r2, self.t2, self.m2)

    @property
    def H_label(self) -> str:
        return group_label(self.n1, self.n2)

    @property
    def M_prime_label(self) -> str:
        parts = []
        if self.M.r:
            parts.append(f"G_m^{self.M.r}")
        if self.M.t:
            parts.append(f"GL_2^{self.M.t}")
        parts.append(group_label(self.m1, self.m2) if self.M.m else "G_m")
        return " x ".join(parts)

    @property
    def is_cuspidal(self) -> bool:
        return self.m2 % 2 == 0 and len(self.A) % 2 == 0

    @property
    def is_ell0(self) -> bool:
        return self.n2 % 2 == 0

    @property
    def n_MH_H(self) -> int:
        return (
            2 ** (self.M.r + self.M.t)
            * math.factorial(self.r1)
            * math.factorial(self.t1)
            * math.factorial(self.r2)
            * math.factorial(self.t2)
        )

    @property
    def lambda_G(self) -> int:
        """Order of the outer automorphism group as stated for these triples."""
        if self.M.is_whole_group:
            return EndoscopicDatum(self.n1, self.n2).lambda_order
        return 1

    @property
    def signs(self) -> tuple[int, ...]:
        M = self.M
        s = [-1 if i in self.A else 1 for i in range(1, M.r + 1)]
        for j in range(1, M.t + 1):
            s += [-1, -1] if j in self.B else [1, 1]
        return tuple(s + [1] * self.m1 + [-1] * self.m2)

    def datum(self) -> EndoscopicDatum:
        return EndoscopicDatum(self.n1, self.n2)

    def to_json(self) -> dict:
        return {
            "A": sorted(self.A),
            "B": sorted(self.B),
            "m1": self.m1,
            "m2": self.m2,
            "n1": self.n1,
            "n2": self.n2,
            "H": self.H_label,
            "M_prime": self.M_prime_label,
            "n_MH_H": self.n_MH_H,
            "lambda_G": self.lambda_G,
            "cuspidal": self.is_cuspidal,
            "ell0": self.is_ell0,
        }


def _subsets(k: int) -> Iterator[frozenset[int]]:
    for size in range(k + 1):
        for c in itertools.combinations(range(1, k + 1), size):
            yield frozenset(c)


def g_triples(
    M: LeviDatum,
    require_n2_ne_1: bool = True,
    cuspidal_only: bool = False,
    ell0_only: bool = False,
) -> list[GTriple]:
    out = []
    for A in _subsets(M.r):
        for B in _subsets(M.t):
            for m2 in range(M.m + 1):
                if m2 == 1:
                    continue
                g = GTriple(M, A, B, M.m - m2, m2)
                if require_n2_ne_1 and g.n2 == 1:
                    continue
                if cuspidal_only and not g.is_cuspidal:
                    continue
                if ell0_only and not g.is_ell0:
                    continue
                out.append(g)
    return sorted(out, key=lambda g: (sorted(g.A), sorted(g.B), -g.m1))


def k_tau_identity(M: LeviDatum, g: GTriple) -> bool:
    """tau(G)/tau(H) * tau(M')/tau(M) == k(H)/k(G) * k(M)/k(M')."""
    if g.M != M:
        raise ValueError("triple belongs to another Levi")
    if not g.is_cuspidal or not g.is_ell0:
        raise ValueError("identity is stated for cuspidal M' and H")
    n = M.n
    lhs = Fraction(1, tamagawa_number(g.n1, g.n2)) * Fraction(tamagawa_number(g.m1, g.m2), 1)
    rhs = Fraction(k_constant(g.n1, g.n2), k_constant(n, 0)) * Fraction(k_constant(M.m, 0), k_constant(g.m1, g.m2))
    return lhs == rhs


# ---------------------------------------------------------------- root subsystems on integer f-vectors


@lru_cache(maxsize=None)
def f_roots(n: int) -> tuple[FVec, ...]:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for a in (1, -1):
                for b in (1, -1):
                    v = [0] * n
                    v[i], v[j] = a, b
                    out.append(tuple(v))
        for a in (2, -2):
            v = [0] * n
            v[i] = a
            out.append(tuple(v))
    return tuple(sorted(out))


def f_positive(v: FVec) -> bool:
    for x in v:
        if x:
            return x > 0
    raise ValueError("zero vector")


def f_act(w: SignedPermutation, v: FVec) -> FVec:
    return tuple(w.on_balanced(v))


def f_reflection(v: FVec) -> SignedPermutation:
    n = len(v)
    norm2 = sum(x * x for x in v)
    perm, signs = [0] * n, [1] * n
    for i in range(n):
        k = Fraction(2 * v[i], norm2)
        img = [-k * x for x in v]
        img[i] += 1
        (j,) = [t for t in range(n) if img[t] != 0]
        perm[i] = j + 1
        signs[j] = 1 if img[j] > 0 else -1
    return SignedPermutation(tuple(signs), tuple(perm))


def coroot_value(v: FVec, s: Sequence[int]) -> int:
    """alpha^vee(s) for s in {±1}^n: the coroot of v has entries 2v_i/|v|^2."""
    norm2 = sum(x * x for x in v)
    out = 1
    for x, si in zip(v, s):
        if (2 * x // norm2) % 2:
            out *= si
    return out


def endoscopic_f_roots(s: Sequence[int]) -> frozenset[FVec]:
    return frozenset(v for v in f_roots(len(s)) if coroot_value(v, s) == 1)


def levi_f_roots(M: LeviDatum) -> frozenset[FVec]:
    """Roots of the standard Levi G_m^r x GL_2^t x GSp_2m."""
    n = M.n
    out = set()
    for j in range(M.t):
        a, b = M.r + 2 * j, M.r + 2 * j + 1
        for sg in (1, -1):
            v = [0] * n
            v[a], v[b] = sg, -sg
            out.add(tuple(v))
    lo = M.r + 2 * M.t
    for v in f_roots(n):
        if all(x == 0 for x in v[:lo]):
            out.add(v)
    return frozenset(out)


def weyl_of(roots: Iterable[FVec], n: int) -> frozenset[SignedPermutation]:
    return generated_group((f_reflection(v) for v in roots), n)


def stabilizer(group: Iterable[SignedPermutation], roots: frozenset[FVec]) -> list[SignedPermutation]:
    return [w for w in group if frozenset(f_act(w, v) for v in roots) == roots]


def n_M_G_brute(M: LeviDatum) -> Fraction:
    roots = levi_f_roots(M)
    return Fraction(len(stabilizer(weyl_group_list(M.n), roots)), len(weyl_of(roots, M.n)))


def _preserves_pattern(w: SignedPermutation, s: Sequence[int]) -> bool:
    return all(s[w.perm[i] - 1] == s[i] for i in range(len(s)))


def lambda_order_brute(ambient: Iterable[SignedPermutation], levi_roots: frozenset[FVec], s: Sequence[int]) -> Fraction:
    """Elements of ``ambient`` preserving the roots of the endoscopic Levi and
    the sign pattern of s, modulo the Weyl group of that Levi."""
    n = len(s)
    sub = frozenset(v for v in levi_roots if coroot_value(v, s) == 1)
    keep = [w for w in ambient if _preserves_pattern(w, s) and frozenset(f_act(w, v) for v in sub) == sub]
    return Fraction(len(keep), len(weyl_of(sub, n)))


@lru_cache(maxsize=None)
def lambda_G_brute(g: GTriple) -> Fraction:
    M = g.M
    W_M = weyl_of(levi_f_roots(M), M.n)
    return lambda_order_brute(W_M, levi_f_roots(M), g.signs)


def lambda_H_brute(d: EndoscopicDatum) -> Fraction:
    return lambda_order_brute(weyl_group_list(d.n), frozenset(f_roots(d.n)), d.signs)


# ---------------------------------------------------------------- Levi classes of an endoscopic group


def simple_system(roots: frozenset[FVec]) -> list[FVec]:
    pos = [v for v in roots if f_positive(v)]
    posset = set(pos)
    out = []
    for v in pos:
        decomposable = any(
            tuple(a - b for a, b in zip(v, u)) in posset for u in pos if u != v
        )
        if not decomposable:
            out.append(v)
    return sorted(out)


def _coordinates(v: FVec, basis: Sequence[FVec]) -> tuple[Fraction, ...]:
    from .linalg import row_reduce

    rows = [[Fraction(b[i]) for b in basis] + [Fraction(v[i])] for i in range(len(v))]
    red, piv = row_reduce(rows)
    k = len(basis)
    if k in piv:
        raise ValueError("vector outside the span")
    sol = [Fraction(0)] * k
    for row, p in zip(red, piv):
        sol[p] = row[k]
    return tuple(sol)


def classify_levi(roots: frozenset[FVec], s: Sequence[int]) -> tuple[tuple[int, int, int, int, int, int], bool]:
    """Read (r1, t1, m1, r2, t2, m2) off a Levi subsystem of the endoscopic
    group attached to s; the flag says whether every factor admits an
    elliptic torus (GL_k with k <= 2, D-factor of even rank)."""
    n = len(s)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    long_at = set()
    plus_minus: dict[tuple[int, int], set[int]] = {}
    for v in roots:
        nz = [i for i, x in enumerate(v) if x]
        if len(nz) == 1:
            long_at.add(nz[0])
            continue
        i, j = nz
        parent[find(i)] = find(j)
        plus_minus.setdefault((i, j), set()).add(v[i] * v[j])
    comps: dict[int, list[int]] = {}
    for i in range(n):
        comps.setdefault(find(i), []).append(i)
    r1 = t1 = m1 = r2 = t2 = m2 = 0
    ok = True
    for members in comps.values():
        side = {s[i] for i in members}
        if len(side) != 1:
            raise ValueError("component mixes the two factors")
        size = len(members)
        if side == {1}:
            if long_at.intersection(members):
                if m1:
                    raise ValueError("two symplectic components")
                m1 = size
            elif size == 1:
                r1 += 1
            else:
                t1 += size == 2
                ok = ok and size == 2
        else:
            d_type = any(len(plus_minus.get((i, j), ())) == 2 for i in members for j in members if i < j)
            if d_type:
                if m2:
                    raise ValueError("two orthogonal components")
                m2 = size
                ok = ok and size % 2 == 0
            elif size == 1:
                r2 += 1
            else:
                t2 += size == 2
                ok = ok and size == 2
    return (r1, t1, m1, r2, t2, m2), ok


@dataclass(frozen=True)
class LeviClass:
    roots: frozenset[FVec]
    n_H: Fraction
    levi_type: tuple[int, int, int, int, int, int]
    cuspidal_by_type: bool
    cuspidal_by_weyl: bool


@lru_cache(maxsize=None)
def levi_classes(signs: tuple[int, ...]) -> tuple[LeviClass, ...]:
    """Conjugacy classes of Levi subgroups of the endoscopic group attached
    to ``signs``, found as Weyl orbits of standard Levi subsystems."""
    n = len(signs)
    phi_H = endoscopic_f_roots(signs)
    W_H = weyl_of(phi_H, n)
    delta = simple_system(phi_H)
    coords = {v: _coordinates(v, delta) for v in phi_H}
    seen: dict[tuple, LeviClass] = {}
    for size in range(len(delta) + 1):
        for T in itertools.combinations(range(len(delta)), size):
            Tset = set(T)
            L = frozenset(v for v in phi_H if all(c == 0 or k in Tset for k, c in enumerate(coords[v])))
            key = min(tuple(sorted(f_act(w, v) for v in L)) for w in W_H)
            if key in seen:
                continue
            W_L = weyl_of(L, n)
            n_true = Fraction(len(stabilizer(W_H, L)), len(W_L))
            typ, ok = classify_levi(L, signs)
            by_weyl = any(all(f_act(w, v) == tuple(-x for x in v) for v in L) for w in W_L) if L else True
            seen[key] = LeviClass(L, n_true, typ, ok, by_weyl)
    return tuple(seen[k] for k in sorted(seen))


# ---------------------------------------------------------------- double counting


PhiFunction = Callable[[EndoscopicDatum, tuple[int, int, int, int, int, int]], Fraction]


def random_phi(seed: int) -> PhiFunction:
    """Deterministic rational values on (H, Levi type), zero off cuspidal types."""

    def phi(d: EndoscopicDatum, typ: tuple[int, ...]) -> Fraction:
        r1, t1, m1, r2, t2, m2 = typ
        if m2 % 2:
            return Fraction(0)
        rng = random.Random(f"{seed}:{d.n1}:{d.n2}:{typ}")
        return Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3)))

    return phi


def double_counting_sides(n: int, phi: PhiFunction, lambda_source: str = "computed") -> tuple[Fraction, Fraction]:
    """Both sides of the Levi/endoscopy double count.

    Left: elliptic data H, weighted by 1/|Lambda(H)|, and Levi classes of H
    found by orbit enumeration with their true normalizer indices.
    Right: cuspidal Levis M of G and their G-triples with n2 != 1.
    ``lambda_source`` selects the outer automorphism orders used on the right:
    ``computed`` (from root data) or ``stated`` (the closed values stored on
    each triple).  Only cuspidal Levi types contribute, so phi is assumed to
    vanish off them.
    """
    lhs = Fraction(0)
    for d in elliptic_data(n):
        inner = Fraction(0)
        for cls in levi_classes(d.signs):
            if cls.cuspidal_by_type:
                inner += phi(d, cls.levi_type) / cls.n_H
        lhs += inner / d.lambda_order
    rhs = Fraction(0)
    for M in cuspidal_levis(n):
        inner = Fraction(0)
        for g in g_triples(M, require_n2_ne_1=True):
            if g.m2 % 2:
                continue
            lam = lambda_G_brute(g) if lambda_source == "computed" else Fraction(g.lambda_G)
            inner += phi(g.datum(), g.levi_type) / lam
        rhs += inner / n_M_G(M)
    return lhs, rhs


def double_counting_check(n: int, phi: PhiFunction) -> tuple[Fraction, Fraction]:
    return double_counting_sides(n, phi, "computed")


def class_weight_by_type(d: EndoscopicDatum) -> dict[tuple[int, ...], Fraction]:
    """sum of 1/n_H over Levi classes of H of each cuspidal type."""
    out: dict[tuple[int, ...], Fraction] = {}
    for cls in levi_classes(d.signs):
        if cls.cuspidal_by_type:
            out[cls.levi_type] = out.get(cls.levi_type, Fraction(0)) + 1 / cls.n_H
    return out
