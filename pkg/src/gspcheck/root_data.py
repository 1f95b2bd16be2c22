"""Root datum of GSp_2n and its Weyl group.

Characters are written in the basis (c, e_1, ..., e_n) where c is the
similitude character.  Coefficients live in half-integers, so a
:class:`Weight` stores them doubled.  Cocharacters are written in the dual
basis (c*, ê_1, ..., ê_n).

The Weyl group {±1}^n ⋊ S_n acts by signed permutations on the
"balanced" coordinates f_i = e_i - c/2 and fixes c.  A sign flip at i
therefore sends e_i to c - e_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class RankMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Weight:
    """a_c*c + sum a_i*e_i, stored as (2a_c, 2a_1, ..., 2a_n)."""

    doubled: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.doubled) < 1:
            raise ValueError("a weight needs at least the c coordinate")
        object.__setattr__(self, "doubled", tuple(int(x) for x in self.doubled))

    @property
    def rank(self) -> int:
        return len(self.doubled) - 1

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * (n + 1))

    @classmethod
    def from_coeffs(cls, c: Fraction | int, es: Sequence[Fraction | int]) -> "Weight":
        vals = [Fraction(c)] + [Fraction(x) for x in es]
        doubled = []
        for v in vals:
            d = 2 * v
            if d.denominator != 1:
                raise ValueError(f"coefficient {v} is not a half-integer")
            doubled.append(int(d))
        return cls(tuple(doubled))

    @classmethod
    def from_balanced(cls, z: Fraction | int, f: Sequence[Fraction | int]) -> "Weight":
        """z*c + sum f_i*(e_i - c/2)."""
        f = [Fraction(x) for x in f]
        return cls.from_coeffs(Fraction(z) - sum(f, Fraction(0)) / 2, f)

    @property
    def c_coeff(self) -> Fraction:
        return Fraction(self.doubled[0], 2)

    @property
    def e_coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled[1:])

    def balanced(self) -> tuple[Fraction, tuple[Fraction, ...]]:
        """Return (z, f) with self = z*c + sum f_i*(e_i - c/2)."""
        f = self.e_coeffs
        return self.c_coeff + sum(f, Fraction(0)) / 2, f

    def is_integral(self) -> bool:
        return all(d % 2 == 0 for d in self.doubled)

    def _check(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.doubled))

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.doubled))

    def to_json(self) -> list[int]:
        return list(self.doubled)

    def __str__(self) -> str:
        parts = []
        names = ["c"] + [f"e{i}" for i in range(1, self.rank + 1)]
        for name, d in zip(names, self.doubled):
            if d:
                parts.append(f"{Fraction(d, 2)}*{name}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True, order=True)
class Coweight:
    """y_c*c* + sum y_i*ê_i with integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = []
        for x in self.coeffs:
            q = Fraction(x)
            if q.denominator != 1:
                raise ValueError(f"coweight coefficient {x} is not integral")
            vals.append(int(q))
        object.__setattr__(self, "coeffs", tuple(vals))

    @property
    def rank(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "Coweight") -> "Coweight":
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")
        return Coweight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, k: int) -> "Coweight":
        return Coweight(tuple(k * a for a in self.coeffs))

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def pairing(x: Weight, y: Coweight) -> Fraction:
    if x.rank != y.rank:
        raise RankMismatch(f"rank {x.rank} vs {y.rank}")
    return Fraction(sum(a * b for a, b in zip(x.doubled, y.coeffs)), 2)


def e_hat(n: int, i: int) -> Coweight:
    v = [0] * (n + 1)
    v[i] = 1
    return Coweight(tuple(v))


def shimura_cocharacter(n: int) -> Coweight:
    """z -> diag(z I_n, I_n): pairs to 1 with every e_i and with c."""
    return Coweight((1,) + (1,) * n)


def fundamental_coweight(n: int, s: int) -> Coweight:
    """z -> diag(z I_s, I_{2(n-s)}, z^{-1} I_s)."""
    if not 1 <= s <= n:
        raise ValueError(f"s={s} outside 1..{n}")
    return Coweight((0,) + (1,) * s + (0,) * (n - s))


# ---------------------------------------------------------------- roots


def basis_f(n: int, i: int) -> Weight:
    """f_i = e_i - c/2."""
    d = [0] * (n + 1)
    d[0] = -1
    d[i] = 2
    return Weight(tuple(d))


def c_weight(n: int) -> Weight:
    return Weight((2,) + (0,) * n)


def _from_f(n: int, f: Sequence[int]) -> Weight:
    return Weight.from_balanced(0, f)


@lru_cache(maxsize=None)
def roots(n: int) -> frozenset[Weight]:
    if n < 0:
        raise ValueError("negative rank")
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    f = [0] * n
                    f[i], f[j] = si, sj
                    out.add(_from_f(n, f))
        for s in (2, -2):
            f = [0] * n
            f[i] = s
            out.add(_from_f(n, f))
    return frozenset(out)


def is_positive_root(alpha: Weight) -> bool:
    """Positivity for the upper-triangular Borel: first nonzero f-coordinate > 0."""
    _, f = alpha.balanced()
    for x in f:
        if x:
            return x > 0
    raise ValueError("zero is not a root")


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[Weight, ...]:
    return tuple(sorted(a for a in roots(n) if is_positive_root(a)))


@lru_cache(maxsize=None)
def simple_roots(n: int) -> tuple[Weight, ...]:
    """alpha_i = e_i - e_{i+1} (i<n), alpha_n = 2e_n - c."""
    out = []
    for i in range(1, n):
        f = [0] * n
        f[i - 1], f[i] = 1, -1
        out.append(_from_f(n, f))
    if n >= 1:
        f = [0] * n
        f[n - 1] = 2
        out.append(_from_f(n, f))
    return tuple(out)


def rho(n: int) -> Weight:
    return Weight.from_balanced(0, [n - i for i in range(n)])


def coroot(alpha: Weight) -> Coweight:
    _, f = alpha.balanced()
    norm2 = sum(x * x for x in f)
    return Coweight((0,) + tuple(2 * x / norm2 for x in f))


# ---------------------------------------------------------------- Weyl group


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """w(f_i) = signs[perm[i]-1] * f_{perm[i]}; perm holds 1-based images."""

    signs: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.signs) != len(self.perm):
            raise ValueError("signs and perm differ in length")
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"{self.perm} is not a permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")

    @property
    def rank(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls((1,) * n, tuple(range(1, n + 1)))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """(self*other)(x) = self(other(x))."""
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")
        n = self.rank
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(n))
        signs = [1] * n
        for i in range(n):
            mid = other.perm[i]
            signs[perm[i] - 1] = other.signs[mid - 1] * self.signs[perm[i] - 1]
        return SignedPermutation(tuple(signs), perm)

    def inverse(self) -> "SignedPermutation":
        n = self.rank
        perm = [0] * n
        signs = [1] * n
        for i in range(n):
            j = self.perm[i]
            perm[j - 1] = i + 1
            signs[i] = self.signs[j - 1]
        return SignedPermutation(tuple(signs), tuple(perm))

    def on_balanced(self, f: Sequence) -> list:
        out = [0] * self.rank
        for i, x in enumerate(f):
            j = self.perm[i] - 1
            out[j] = self.signs[j] * x
        return out

    def to_json(self) -> dict:
        return {"signs": list(self.signs), "perm": list(self.perm)}


def weyl_group(n: int) -> Iterator[SignedPermutation]:
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(signs, perm)


@lru_cache(maxsize=None)
def weyl_group_list(n: int) -> tuple[SignedPermutation, ...]:
    return tuple(weyl_group(n))


def act(w: SignedPermutation, x: Weight) -> Weight:
    if w.rank != x.rank:
        raise RankMismatch(f"rank {w.rank} vs {x.rank}")
    z, f = x.balanced()
    return Weight.from_balanced(z, w.on_balanced(f))


def act_coweight(w: SignedPermutation, y: Coweight) -> Coweight:
    """Contragredient action, so that <w x, w y> = <x, y>."""
    if w.rank != y.rank:
        raise RankMismatch(f"rank {w.rank} vs {y.rank}")
    yc = Fraction(y.coeffs[0])
    g = [Fraction(v) - yc / 2 for v in y.coeffs[1:]]
    g2 = w.on_balanced(g)
    return Coweight((y.coeffs[0],) + tuple(v + yc / 2 for v in g2))


def inversion_set(w: SignedPermutation, n: int | None = None) -> frozenset[Weight]:
    """Phi(w) = Phi^+ ∩ (-w Phi^+)."""
    n = w.rank if n is None else n
    if n != w.rank:
        raise RankMismatch(f"rank {w.rank} vs {n}")
    winv = w.inverse()
    return frozenset(a for a in positive_roots(n) if not is_positive_root(act(winv, a)))


def length(w: SignedPermutation) -> int:
    return len(inversion_set(w))


def sign(w: SignedPermutation) -> int:
    return -1 if length(w) % 2 else 1


def reflection(alpha: Weight) -> SignedPermutation:
    """The reflection s_alpha, read off from its action on the f-basis."""
    n = alpha.rank
    _, a = alpha.balanced()
    norm2 = sum(x * x for x in a)
    perm = [0] * n
    signs = [1] * n
    for i in range(n):
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        k = 2 * sum(x * y for x, y in zip(v, a)) / norm2
        img = [x - k * y for x, y in zip(v, a)]
        (j,) = [t for t in range(n) if img[t] != 0]
        perm[i] = j + 1
        signs[j] = 1 if img[j] > 0 else -1
    return SignedPermutation(tuple(signs), tuple(perm))


def generated_group(gens: Iterable[SignedPermutation], n: int) -> frozenset[SignedPermutation]:
    ident = SignedPermutation.identity(n)
    gens = list(gens)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(seen)


def root_subsystem_weyl_group(subsystem: Iterable[Weight], n: int) -> frozenset[SignedPermutation]:
    return generated_group((reflection(a) for a in subsystem), n)


# ---------------------------------------------------------------- parabolics


@dataclass(frozen=True)
class ParabolicIndex:
    """Standard parabolic P_S; S lists the simple roots outside the Levi."""

    n: int
    S: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "S", frozenset(int(s) for s in self.S))
        if any(not 1 <= s <= self.n for s in self.S):
            raise ValueError(f"S={sorted(self.S)} not inside 1..{self.n}")

    @property
    def block_sizes(self) -> tuple[int, ...]:
        """GL block sizes r_1, ..., r_m; the hermitian part has rank n - sum."""
        out, prev = [], 0
        for s in sorted(self.S):
            out.append(s - prev)
            prev = s
        return tuple(out)

    @property
    def hermitian_rank(self) -> int:
        return self.n - (max(self.S) if self.S else 0)

    def coweights(self) -> tuple[Coweight, ...]:
        return tuple(fundamental_coweight(self.n, s) for s in sorted(self.S))

    def levi_roots(self) -> frozenset[Weight]:
        cw = self.coweights()
        return frozenset(a for a in roots(self.n) if all(pairing(a, y) == 0 for y in cw))

    def levi_positive_roots(self) -> tuple[Weight, ...]:
        lr = self.levi_roots()
        return tuple(a for a in positive_roots(self.n) if a in lr)

    def levi_simple_roots(self) -> tuple[Weight, ...]:
        return tuple(a for i, a in enumerate(simple_roots(self.n), start=1) if i not in self.S)

    def nilradical_roots(self) -> tuple[Weight, ...]:
        lr = self.levi_roots()
        return tuple(a for a in positive_roots(self.n) if a not in lr)

    def levi_weyl_group(self) -> frozenset[SignedPermutation]:
        cw = self.coweights()
        return frozenset(w for w in weyl_group_list(self.n) if all(act_coweight(w, y) == y for y in cw))


def kostant_representatives(n: int, S: ParabolicIndex | Iterable[int]) -> list[SignedPermutation]:
    """{w : Phi(w) inside the nilradical roots}: minimal coset representatives."""
    P = S if isinstance(S, ParabolicIndex) else ParabolicIndex(n, frozenset(S))
    if P.n != n:
        raise RankMismatch(f"rank {P.n} vs {n}")
    nil = set(P.nilradical_roots())
    return [w for w in weyl_group_list(n) if inversion_set(w) <= nil]


# ---------------------------------------------------------------- endoscopic sub-data


def endoscopic_roots(signs: Sequence[int]) -> frozenset[Weight]:
    """Roots alpha with alpha^vee(s) = 1 for s in {±1}^n.

    Long roots 2f_i survive iff s_i = 1; f_i ± f_j survive iff s_i = s_j.
    The result is C on {s=+1} times D on {s=-1}.
    """
    n = len(signs)
    out = set()
    for a in roots(n):
        y = coroot(a)
        val = 1
        for s, k in zip(signs, y.coeffs[1:]):
            if k % 2:
                val *= s
        if val == 1:
            out.add(a)
    return frozenset(out)


def endoscopic_weyl_group(K: Iterable[int], n: int) -> frozenset[SignedPermutation]:
    """Omega_1 x Omega_2: signed permutations of the complement of K, and
    evenly-signed permutations of K."""
    K = frozenset(K)
    out = []
    for w in weyl_group_list(n):
        if any((i in K) != (w.perm[i - 1] in K) for i in range(1, n + 1)):
            continue
        flips = sum(1 for j in K if w.signs[j - 1] == -1)
        if flips % 2 == 0:
            out.append(w)
    return frozenset(out)


def discrete_series_packet_size(n: int) -> int:
    """Index in the Weyl group of the subgroup generated by -1 and S_n."""
    real = generated_group(
        [SignedPermutation((-1,) * n, tuple(range(1, n + 1)))]
        + [SignedPermutation((1,) * n, p) for p in _transpositions(n)],
        n,
    )
    return len(weyl_group_list(n)) // len(real)


def _transpositions(n: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(n - 1):
        p = list(range(1, n + 1))
        p[i], p[i + 1] = p[i + 1], p[i]
        out.append(tuple(p))
    return out


def d_constant(n: int) -> int:
    """Size of a discrete-series L-packet of GSp_2n(R)."""
    if n < 1:
        raise ValueError("n must be positive")
    return 2 ** (n - 1)
