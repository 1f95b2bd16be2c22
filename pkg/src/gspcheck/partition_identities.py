"""Signed ordered-partition identities with brute-force evaluators.

Index sets are finite sets of integers with their natural order.  A vector
``lam`` is either a mapping index -> rational or a sequence, in which case
entry ``k`` belongs to index ``k + 1``.

All positivity tests are exact: vectors are scaled to integers by a common
denominator before any enumeration, which does not change any sign.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

MAX_ORDERED = 9
MAX_UNORDERED = 12
NEG_INF = float("-inf")

Vector = Mapping[int, Fraction] | Sequence


class SizeOverflow(ValueError):
    pass


class HypothesisViolation(ValueError):
    pass


# ---------------------------------------------------------------- vectors


def as_vector(lam: Vector) -> dict[int, Fraction]:
    if isinstance(lam, Mapping):
        return {int(k): Fraction(v) for k, v in lam.items()}
    return {i + 1: Fraction(v) for i, v in enumerate(lam)}


def subset_sum(lam: Vector, J: Iterable[int]) -> Fraction:
    v = as_vector(lam)
    return sum((v[j] for j in J), Fraction(0))


def is_positive_sequence(values: Sequence) -> bool:
    """lambda > 0: every prefix sum is strictly positive."""
    s = 0
    for x in values:
        s += x
        if s <= 0:
            return False
    return True


def _integer_scaled(values: Sequence[Fraction]) -> list[int]:
    den = 1
    for v in values:
        den = den * v.denominator // math.gcd(den, v.denominator)
    return [int(v * den) for v in values]


# ---------------------------------------------------------------- partitions


@dataclass(frozen=True)
class OrderedPartition:
    """Sequence of disjoint nonempty blocks; each block stored ascending."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(int(x) for x in b)) for b in self.blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if seen.intersection(b):
                raise ValueError("blocks overlap")
            seen.update(b)
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def _trusted(cls, blocks: tuple[tuple[int, ...], ...]) -> "OrderedPartition":
        """Skip validation for blocks taken from an existing partition."""
        P = object.__new__(cls)
        object.__setattr__(P, "blocks", blocks)
        return P

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(x for b in self.blocks for x in b))

    def sequence(self) -> tuple[int, ...]:
        return tuple(x for b in self.blocks for x in b)

    def restrict(self, J: Iterable[int]) -> "OrderedPartition":
        J = set(J)
        return OrderedPartition(tuple(tuple(x for x in b if x in J) for b in self.blocks if J.intersection(b)))

    def forget(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.blocks)

    def canonical(self) -> "OrderedPartition":
        return OrderedPartition(tuple(sorted(self.blocks)))

    def eps(self) -> int:
        return permutation_sign(self.sequence())

    def eps_prime(self) -> int:
        return eps_prime_of_sizes(len(b) for b in self.blocks)

    def block_sums(self, lam: Vector) -> tuple[Fraction, ...]:
        v = lam if isinstance(lam, Mapping) else as_vector(lam)
        return tuple(sum(v[x] for x in b) for b in self.blocks)

    def is_positive(self, lam: Vector) -> bool:
        return is_positive_sequence(self.block_sums(lam))

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def permutation_sign(seq: Sequence[int]) -> int:
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def eps_prime_of_sizes(sizes: Iterable[int]) -> int:
    e = sum(s * (s - 1) // 2 for s in sizes)
    return -1 if e % 2 else 1


def split_sign(J: Iterable[int], K: Iterable[int]) -> int:
    """eps(J, K): sign of the shuffle listing J then K, each ascending."""
    return permutation_sign(tuple(sorted(J)) + tuple(sorted(K)))


def odd_block_count(P: OrderedPartition) -> int:
    return sum(1 for b in P.blocks if len(b) % 2)


# masks over positions 0..n-1 --------------------------------------------


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _set_partitions_of_mask(mask: int) -> Iterator[tuple[int, ...]]:
    if mask == 0:
        yield ()
        return
    low = mask & -mask
    rest = mask ^ low
    for sub in _submasks(rest):
        block = low | sub
        for tail in _set_partitions_of_mask(rest ^ sub):
            yield (block,) + tail


@lru_cache(maxsize=None)
def _set_partition_masks(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_set_partitions_of_mask((1 << n) - 1))


def _ordered_partition_masks_stream(n: int) -> Iterator[tuple[int, ...]]:
    for p in _set_partition_masks(n):
        yield from itertools.permutations(p)


@lru_cache(maxsize=None)
def _ordered_partition_masks(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_ordered_partition_masks_stream(n))


def _ordered_masks(n: int) -> Iterable[tuple[int, ...]]:
    if n > MAX_ORDERED:
        raise SizeOverflow(f"ordered enumeration limited to {MAX_ORDERED} indices, got {n}")
    if n <= 7:
        return _ordered_partition_masks(n)
    return _ordered_partition_masks_stream(n)


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _to_partition(masks: Sequence[int], index: Sequence[int]) -> OrderedPartition:
    return OrderedPartition(tuple(tuple(index[i] for i in _bits(m)) for m in masks))


def _subset_sums(values: Sequence[int]) -> list[int]:
    n = len(values)
    sums = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + values[low.bit_length() - 1]
    return sums


def _positive_masks(masks: Sequence[int], sums: Sequence[int]) -> bool:
    s = 0
    for m in masks:
        s += sums[m]
        if s <= 0:
            return False
    return True


def _nonnegative_masks(masks: Sequence[int], sums: Sequence[int]) -> bool:
    s = 0
    for m in masks:
        s += sums[m]
        if s < 0:
            return False
    return True


def _mask_sequence(masks: Sequence[int]) -> tuple[int, ...]:
    return tuple(x for m in masks for x in _bits(m))


def _restricted_sign(masks: Sequence[int], J: int) -> int:
    seq = [x for m in masks for x in _bits(m & J)]
    return permutation_sign(seq)


def _restricted_eps_prime(masks: Sequence[int], J: int) -> int:
    return eps_prime_of_sizes((m & J).bit_count() for m in masks)


# ---------------------------------------------------------------- enumeration


def _index(I: Iterable[int]) -> tuple[int, ...]:
    idx = tuple(sorted(set(int(i) for i in I)))
    return idx


def par0_le2(I: Iterable[int]) -> Iterator[OrderedPartition]:
    """Partitions into pairs plus at most one singleton, via matchings."""
    idx = _index(I)
    if len(idx) > MAX_UNORDERED:
        raise SizeOverflow(f"at most {MAX_UNORDERED} indices, got {len(idx)}")

    def matchings(items: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for k, other in enumerate(rest):
            remaining = rest[:k] + rest[k + 1:]
            for m in matchings(remaining):
                yield [(first, other)] + m

    if len(idx) % 2 == 0:
        for m in matchings(idx):
            yield OrderedPartition(tuple(m)).canonical()
    else:
        for k, single in enumerate(idx):
            for m in matchings(idx[:k] + idx[k + 1:]):
                yield OrderedPartition(tuple(m) + ((single,),)).canonical()


def paired_ordered_partitions(n: int, m: int) -> Iterator[OrderedPartition]:
    """Ordered partitions of {1..n+2m} keeping n+2i-1 and n+2i together."""
    if n + m > MAX_ORDERED:
        raise SizeOverflow(f"n+m={n + m} exceeds {MAX_ORDERED}")
    groups = [(i,) for i in range(1, n + 1)] + [(n + 2 * i - 1, n + 2 * i) for i in range(1, m + 1)]
    for masks in _ordered_masks(n + m):
        yield OrderedPartition(tuple(tuple(x for g in _bits(mask) for x in groups[g]) for mask in masks))


def enumerate_partitions(
    I: Iterable[int],
    kind: str,
    lam: Vector | None = None,
    k: int | None = None,
    m: int | None = None,
) -> Iterator:
    """Stream partitions of ``I`` of the given kind.

    kinds: ``Par``, ``Par_ord``, ``Par^k`` (needs ``k``), ``Par_ord^k``,
    ``Par^0_le2``, ``Par(n,m)`` (``I`` is {1..n}, needs ``m``), ``Dcal``.
    Unordered kinds yield partitions with blocks sorted by least element.
    With ``lam``, ordered kinds keep positive prefix sums and unordered
    kinds keep positive block sums.
    """
    idx = _index(I)
    n = len(idx)
    if kind == "Dcal":
        for bits in itertools.product((0, 1), repeat=n):
            yield (tuple(i for i, b in zip(idx, bits) if b == 0), tuple(i for i, b in zip(idx, bits) if b == 1))
        return
    if kind == "Par(n,m)":
        if m is None:
            raise ValueError("Par(n,m) needs m")
        for P in paired_ordered_partitions(n, m):
            if lam is None or P.is_positive(lam):
                yield P
        return
    if kind == "Par^0_le2":
        for p in par0_le2(idx):
            if lam is None or all(s > 0 for s in p.block_sums(lam)):
                yield p
        return
    ordered = kind in ("Par_ord", "Par_ord^k")
    if kind in ("Par^k", "Par_ord^k") and k is None:
        raise ValueError(f"{kind} needs k")
    if kind not in ("Par", "Par_ord", "Par^k", "Par_ord^k"):
        raise ValueError(f"unknown kind {kind!r}")
    if ordered:
        source = (_to_partition(ms, idx) for ms in _ordered_masks(n))
    else:
        if n > MAX_UNORDERED:
            raise SizeOverflow(f"at most {MAX_UNORDERED} indices, got {n}")
        source = (_to_partition(ms, idx) for ms in _set_partition_masks(n))
    for P in source:
        if k is not None and odd_block_count(P) not in (2 * k, 2 * k + 1):
            continue
        if lam is not None:
            if ordered and not P.is_positive(lam):
                continue
            if not ordered and not all(s > 0 for s in P.block_sums(lam)):
                continue
        yield P


# ---------------------------------------------------------------- c-functions


def c1(a) -> int:
    return 1 if a > 0 else 0


def c2(a, b) -> int:
    if a + b <= 0 or a <= 0:
        return 0
    if b > 0:
        return 1
    return 2


def c2_C(a, b) -> int:
    return 1 if (0 < a < b) or (0 < -b < a) else 0


def c2_D(a, b) -> int:
    return 1 if a > abs(b) else 0


def c_block(block: Sequence[int], lam: Vector) -> int:
    v = as_vector(lam)
    if len(block) == 1:
        return c1(v[block[0]])
    if len(block) == 2:
        i, j = sorted(block)
        return c2(v[i], v[j])
    raise ValueError("c is defined on blocks of size 1 or 2")


def c_partition(p: OrderedPartition, lam: Vector) -> int:
    out = 1
    for b in p.blocks:
        out *= c_block(b, lam)
        if not out:
            return 0
    return out


def herb_c(mu: Vector, I_plus: Iterable[int], I_minus: Iterable[int], nu: Sequence = ()) -> Fraction:
    """c1(nu_1)...c1(nu_t) times the product of the two one-sided sums of
    eps(p) c(p, mu) over pair-partitions p of I_plus and of I_minus."""
    I_plus, I_minus = _index(I_plus), _index(I_minus)
    if set(I_plus) & set(I_minus):
        raise ValueError("I_plus and I_minus must be disjoint")
    front = 1
    for x in nu:
        front *= c1(x)
    if not front:
        return Fraction(0)
    v = as_vector(mu)
    sides = []
    for side in (I_plus, I_minus):
        sides.append(sum(p.eps() * c_partition(p, v) for p in par0_le2(side)))
    return Fraction(front * sides[0] * sides[1])


# ---------------------------------------------------------------- sign systems


@dataclass
class SignSystem:
    """A pair (a, c): a on splits (J, K) and c on ordered partitions."""

    name: str
    a: Callable[[tuple[int, ...], tuple[int, ...]], int]
    c: Callable[[OrderedPartition], int]
    _validated: dict = field(default_factory=dict, repr=False, compare=False)

    def __mul__(self, other: "SignSystem") -> "SignSystem":
        return SignSystem(
            f"{self.name}*{other.name}",
            lambda J, K, s=self, o=other: s.a(J, K) * o.a(J, K),
            lambda P, s=self, o=other: s.c(P) * o.c(P),
        )

    def validate(self, size: int) -> tuple[int, ...] | None:
        """Check the prefix-split law on {1..size}; return a witness or None.

        Systems in this module only see the relative order of indices, so
        checking I' = {1..k} for k <= size covers every I' of size <= size.
        """
        if size in self._validated:
            return self._validated[size]
        witness = None
        for k in range(0, size + 1):
            idx = tuple(range(1, k + 1))
            for masks in _ordered_masks(k):
                P = _to_partition(masks, idx)
                cP = self.c(P)
                for r in range(1, len(P) + 1):
                    J = tuple(sorted(x for b in P.blocks[:r] for x in b))
                    K = tuple(sorted(x for b in P.blocks[r:] for x in b))
                    rhs = self.a(J, K) * self.c(P.restrict(J)) * self.c(P.restrict(K))
                    if rhs != cP:
                        witness = (k, r) + P.sequence()
                        break
                if witness:
                    break
            if witness:
                break
        self._validated[size] = witness
        return witness


TRIVIAL = SignSystem("trivial", lambda J, K: 1, lambda P: 1)
EPS_PRIME = SignSystem("eps_prime", lambda J, K: 1, lambda P: P.eps_prime())
EPS = SignSystem("eps", split_sign, lambda P: P.eps())
EPS_EPS_PRIME = SignSystem("eps_eps_prime", split_sign, lambda P: P.eps() * P.eps_prime())
BASE_SYSTEMS = (TRIVIAL, EPS_PRIME, EPS, EPS_EPS_PRIME)


def product_systems() -> tuple[SignSystem, ...]:
    return tuple(x * y for x, y in itertools.combinations(BASE_SYSTEMS, 2))


def split_system(sysC: SignSystem, sysD: SignSystem, I_plus: Iterable[int], I_minus: Iterable[int]) -> SignSystem:
    """Use sysC on the I_plus part and sysD on the I_minus part."""
    Ip, Im = frozenset(I_plus), frozenset(I_minus)

    def a(J, K):
        return sysC.a(tuple(x for x in J if x in Ip), tuple(x for x in K if x in Ip)) * sysD.a(
            tuple(x for x in J if x in Im), tuple(x for x in K if x in Im)
        )

    def c(P):
        return sysC.c(P.restrict(Ip)) * sysD.c(P.restrict(Im))

    return SignSystem(f"split({sysC.name},{sysD.name})", a, c)


def _check_split(I_plus: tuple[int, ...], I_minus: tuple[int, ...], n: int) -> None:
    if set(I_plus) & set(I_minus) or set(I_plus) | set(I_minus) != set(range(1, n + 1)):
        raise ValueError("I_plus and I_minus must split {1..n}")


def _one_sided_all(systems: Sequence[SignSystem], values: tuple[Fraction, ...], index: tuple[int, ...]) -> list[Fraction]:
    """_one_sided for several systems with one enumeration."""
    sums = _subset_sums(_integer_scaled(list(values)))
    totals = [0] * len(systems)
    for masks in _ordered_masks(len(values)):
        if _positive_masks(masks, sums):
            P = _to_partition(masks, index)
            sgn = -1 if len(masks) % 2 else 1
            for k, x in enumerate(systems):
                totals[k] += sgn * x.c(P)
    return [Fraction(t) for t in totals]


def check_split_factorization(
    sysC: SignSystem, sysD: SignSystem, lam: Sequence, I_plus: Iterable[int], I_minus: Iterable[int]
) -> tuple[Fraction, Fraction]:
    """Signed sum over positive ordered partitions against the product of the
    two one-sided sums."""
    vals = tuple(Fraction(x) for x in lam)
    n = len(vals)
    Ip, Im = _index(I_plus), _index(I_minus)
    _check_split(Ip, Im, n)
    for s in (sysC, sysD):
        w = s.validate(n)
        if w is not None:
            raise ValueError(f"sign system {s.name} violates the prefix-split law at {w}")
    return split_factorization_many([(sysC, sysD)], vals, Ip, Im)[0]


def split_factorization_many(
    pairs: Sequence[tuple[SignSystem, SignSystem]],
    lam: Sequence[Fraction],
    I_plus: tuple[int, ...],
    I_minus: tuple[int, ...],
) -> list[tuple[Fraction, Fraction]]:
    """Both sides for several system pairs, sharing one enumeration."""
    vals = tuple(Fraction(x) for x in lam)
    n = len(vals)
    idx = tuple(range(1, n + 1))
    sums = _subset_sums(_integer_scaled(list(vals)))
    pmask = sum(1 << (i - 1) for i in I_plus)
    mmask = sum(1 << (i - 1) for i in I_minus)
    # signed multiplicity of each (P cap I_plus, P cap I_minus)
    weight: dict[tuple, int] = {}
    for masks in _ordered_masks(n):
        if not _positive_masks(masks, sums):
            continue
        key = (tuple(m & pmask for m in masks if m & pmask), tuple(m & mmask for m in masks if m & mmask))
        weight[key] = weight.get(key, 0) + (-1 if len(masks) % 2 else 1)
    systems: list[SignSystem] = []
    for pair in pairs:
        for sysm in pair:
            if all(sysm is not x for x in systems):
                systems.append(sysm)
    pos = {id(x): k for k, x in enumerate(systems)}
    memo: dict = {}

    def values_on(key: tuple) -> list[int]:
        if key not in memo:
            P = _to_partition(key, idx)
            memo[key] = [x.c(P) for x in systems]
        return memo[key]

    lhs = [0] * len(pairs)
    for (kp, km), w in weight.items():
        if not w:
            continue
        cp, dm = values_on(kp), values_on(km)
        for t, (c, d) in enumerate(pairs):
            lhs[t] += w * cp[pos[id(c)]] * dm[pos[id(d)]]
    plus = _one_sided_all(systems, tuple(vals[i - 1] for i in I_plus), I_plus)
    minus = _one_sided_all(systems, tuple(vals[i - 1] for i in I_minus), I_minus)
    return [(Fraction(lhs[t]), plus[pos[id(c)]] * minus[pos[id(d)]]) for t, (c, d) in enumerate(pairs)]


# ---------------------------------------------------------------- corollaries


def alternating_count(lam: Sequence) -> Fraction:
    vals = tuple(Fraction(x) for x in lam)
    sums = _subset_sums(_integer_scaled(list(vals)))
    total = 0
    for masks in _ordered_masks(len(vals)):
        if _positive_masks(masks, sums):
            total += -1 if len(masks) % 2 else 1
    return Fraction(total)


def alternating_count_closed_form(lam: Sequence) -> Fraction:
    n = len(lam)
    return Fraction((-1) ** n if all(Fraction(x) > 0 for x in lam) else 0)


def check_alternating_count(lam: Sequence) -> tuple[Fraction, Fraction]:
    return alternating_count(lam), alternating_count_closed_form(lam)


def _pair_side(lam: Mapping[int, Fraction], I: Iterable[int]) -> int:
    return sum(p.eps() * c_partition(p, lam) for p in par0_le2(I))


def check_signed_pair_expansion(lam: Sequence) -> tuple[Fraction, Fraction]:
    """sum (-1)^|P| eps eps' over positive P  vs  (-1)^n sum eps(p) c(p, lam)."""
    vals = tuple(Fraction(x) for x in lam)
    n = len(vals)
    sums = _subset_sums(_integer_scaled(list(vals)))
    lhs = 0
    for masks in _ordered_masks(n):
        if _positive_masks(masks, sums):
            sgn = -1 if len(masks) % 2 else 1
            lhs += sgn * permutation_sign(_mask_sequence(masks)) * eps_prime_of_sizes(m.bit_count() for m in masks)
    rhs = (-1) ** n * _pair_side(as_vector(vals), range(1, n + 1))
    return Fraction(lhs), Fraction(rhs)


def check_paired_signed_expansion(
    n: int, m: int, lam: Sequence, I_plus: Iterable[int], I_minus: Iterable[int]
) -> tuple[Fraction, Fraction]:
    """Ordered partitions with glued pairs, signed on the I_plus / I_minus parts."""
    vals = tuple(Fraction(x) for x in lam)
    if len(vals) != n + 2 * m:
        raise ValueError(f"expected {n + 2 * m} entries, got {len(vals)}")
    Ip, Im = _index(I_plus), _index(I_minus)
    _check_split(Ip, Im, n)
    v = as_vector(vals)
    scaled = _integer_scaled(list(vals))
    pmask = sum(1 << (i - 1) for i in Ip)
    mmask = sum(1 << (i - 1) for i in Im)
    # glue into n+m positions: position n+i carries the i-th pair
    glued = scaled[:n] + [scaled[n + 2 * i] + scaled[n + 2 * i + 1] for i in range(m)]
    sums = _subset_sums(glued)
    lhs = 0
    for masks in _ordered_masks(n + m):
        if not _positive_masks(masks, sums):
            continue
        sgn = -1 if len(masks) % 2 else 1
        lhs += (
            sgn
            * _restricted_sign(masks, pmask)
            * _restricted_sign(masks, mmask)
            * _restricted_eps_prime(masks, pmask)
            * _restricted_eps_prime(masks, mmask)
        )
    front = (-1) ** (n + m)
    for i in range(m):
        front *= c1(vals[n + 2 * i] + vals[n + 2 * i + 1])
    rhs = front * _pair_side(v, Ip) * _pair_side(v, Im) if front else 0
    return Fraction(lhs), Fraction(rhs)


def check_herb_reduction(
    r: int, t: int, mu, I_plus: Iterable[int], I_minus: Iterable[int]
) -> tuple[Fraction, Fraction]:
    """Herb coefficient of the coordinates y_mu against the signed sum over
    glued ordered partitions of {1..r+2t} with indicator of mu >_P 0.

    ``mu`` is a Weight of rank at least r+2t, or a plain vector of
    coordinates e_i-coefficients.  y_i is the e_i-coefficient, which equals
    <mu, varpi_i> - <mu, varpi_{i-1}>.
    """
    from .root_data import Weight, fundamental_coweight, pairing

    if isinstance(mu, Weight):
        if mu.rank < r + 2 * t:
            raise ValueError("weight rank smaller than r+2t")
        y = []
        prev = Fraction(0)
        for i in range(1, r + 2 * t + 1):
            cur = pairing(mu, fundamental_coweight(mu.rank, i))
            y.append(cur - prev)
            prev = cur
    else:
        y = [Fraction(x) for x in mu][: r + 2 * t]
        if len(y) != r + 2 * t:
            raise ValueError("need r+2t coordinates")
    Ip, Im = _index(I_plus), _index(I_minus)
    _check_split(Ip, Im, r)
    nu = [y[r + 2 * j] + y[r + 2 * j + 1] for j in range(t)]
    lhs = herb_c({i + 1: y[i] for i in range(r)}, Ip, Im, nu)
    total = 0
    for P in paired_ordered_partitions(r, t):
        if not P.is_positive(y):
            continue
        sgn = (-1) ** len(P)
        Pp, Pm = P.restrict(Ip), P.restrict(Im)
        total += sgn * Pp.eps() * Pm.eps() * Pp.eps_prime() * Pm.eps_prime()
    rhs = (-1) ** (r + t) * total
    return lhs, Fraction(rhs)


@lru_cache(maxsize=None)
def _glued_sign_table(r: int, t: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Per ordered partition of the r + t glued positions, the signed weight
    (-1)^|P| eps eps' (on S) eps eps' (on the rest of 1..r) for every S."""
    full = (1 << r) - 1
    rows = []
    for masks in _ordered_masks(r + t):
        sgn = -1 if len(masks) % 2 else 1
        row = []
        for S in range(1 << r):
            C = full ^ S
            row.append(
                sgn
                * _restricted_sign(masks, S)
                * _restricted_eps_prime(masks, S)
                * _restricted_sign(masks, C)
                * _restricted_eps_prime(masks, C)
            )
        rows.append((masks, tuple(row)))
    return tuple(rows)


def herb_reduction_all_splits(r: int, t: int, y: Sequence) -> dict[tuple[int, ...], tuple[Fraction, Fraction]]:
    """Both sides of the Herb reduction for every split (I_plus, complement) of 1..r.

    Keys are the I_plus tuples.  The partition side shares one enumeration of
    positive glued partitions across all splits.
    """
    vals = [Fraction(x) for x in y]
    if len(vals) != r + 2 * t:
        raise ValueError("need r+2t coordinates")
    scaled = _integer_scaled(vals) if vals else []
    glued = scaled[:r] + [scaled[r + 2 * j] + scaled[r + 2 * j + 1] for j in range(t)]
    sums = _subset_sums(glued)
    acc = [0] * (1 << r)
    for masks, row in _glued_sign_table(r, t):
        if _positive_masks(masks, sums):
            acc = [a + b for a, b in zip(acc, row)]
    sign = (-1) ** (r + t)
    front = 1
    for j in range(t):
        front *= c1(vals[r + 2 * j] + vals[r + 2 * j + 1])
    v = {i + 1: vals[i] for i in range(r)}
    side: dict[int, int] = {}
    for S in range(1 << r):
        side[S] = sum(p.eps() * c_partition(p, v) for p in par0_le2(i + 1 for i in _bits(S)))
    full = (1 << r) - 1
    out = {}
    for S in range(1 << r):
        key = tuple(i + 1 for i in _bits(S))
        out[key] = (Fraction(front * side[S] * side[full ^ S]), Fraction(sign * acc[S]))
    return out


# ---------------------------------------------------------------- delta, N


def delta(lam: Sequence) -> Fraction | float:
    vals = [Fraction(x) for x in lam]
    best: Fraction | None = None
    for k in range(1, len(vals) + 1):
        for J in itertools.combinations(range(len(vals)), k):
            s = sum((vals[j] for j in J), Fraction(0))
            if s > 0:
                q = s / k
                if best is None or q < best:
                    best = q
    return NEG_INF if best is None else best


def N_of(lam: Sequence) -> int:
    d = delta(lam)
    if d == NEG_INF or d <= 0:
        raise HypothesisViolation("N is undefined when no subset has positive sum")
    vals = [Fraction(x) for x in lam]
    for k in range(1, len(vals) + 1):
        for J in itertools.combinations(range(len(vals)), k):
            if sum((vals[j] for j in J), Fraction(0)) == d * k:
                return k
    raise AssertionError("delta is attained")


def minimizing_subsets(lam: Sequence) -> list[tuple[int, ...]]:
    """All J (1-based, ascending) with s_J/|J| = delta and |J| = N, in lex order."""
    d, k = delta(lam), N_of(lam)
    vals = [Fraction(x) for x in lam]
    return [
        tuple(j + 1 for j in J)
        for J in itertools.combinations(range(len(vals)), k)
        if sum((vals[j] for j in J), Fraction(0)) == d * k
    ]


def has_positive_bipartition(lam: Sequence) -> bool:
    vals = [Fraction(x) for x in lam]
    n = len(vals)
    total = sum(vals, Fraction(0))
    for k in range(1, n):
        for J in itertools.combinations(range(n), k):
            s = sum((vals[j] for j in J), Fraction(0))
            if s > 0 and total - s > 0:
                return True
    return False


# ---------------------------------------------------------------- rotations


def rotate_left(values: Sequence, k: int) -> tuple:
    """(x_{k+1}, ..., x_n, x_1, ..., x_k)."""
    k %= len(values) if values else 1
    return tuple(values[k:]) + tuple(values[:k])


def canonical_rotation(lam: Sequence) -> int:
    """Largest k in 1..n where the prefix sums of lam reach their minimum."""
    vals = [Fraction(x) for x in lam]
    if not vals:
        raise ValueError("empty vector")
    s, best, k = Fraction(0), None, 0
    for i, x in enumerate(vals, start=1):
        s += x
        if best is None or s <= best:
            best, k = s, i
    return k


def rotation_remark_holds(lam: Sequence, k: int) -> bool:
    vals = [Fraction(x) for x in lam]
    n = len(vals)
    a = all(sum(vals[k:l], Fraction(0)) > 0 for l in range(k + 1, n + 1))
    b = all(sum(vals[l - 1:k], Fraction(0)) <= 0 for l in range(2, k + 1))
    return a and b


def positive_permutation_count(lam: Sequence) -> int:
    """|{sigma : sigma(lam) > 0}| by enumeration of all permutations."""
    vals = [Fraction(x) for x in lam]
    n = len(vals)
    if n > MAX_ORDERED:
        raise SizeOverflow(f"n={n} exceeds {MAX_ORDERED}")
    return sum(1 for perm in itertools.permutations(range(n)) if is_positive_sequence([vals[i] for i in perm]))


def rotation_lemma(lam: Sequence) -> tuple[int, int]:
    vals = [Fraction(x) for x in lam]
    if sum(vals, Fraction(0)) <= 0:
        raise HypothesisViolation("the entries must have positive sum")
    return canonical_rotation(vals), positive_permutation_count(vals)


def check_rotation_lemma(lam: Sequence) -> list[str]:
    """Return the list of failed assertions (empty when all hold)."""
    vals = [Fraction(x) for x in lam]
    n = len(vals)
    fails = []
    k, count = rotation_lemma(vals)
    if not is_positive_sequence(rotate_left(vals, k)):
        fails.append("canonical rotation is not positive")
    good = [j for j in range(1, n + 1) if rotation_remark_holds(vals, j)]
    if good != [k]:
        fails.append(f"remark conditions single out {good}, expected [{k}]")
    bip = has_positive_bipartition(vals)
    if (N_of(vals) == n) == bip:
        fails.append("N = n does not match absence of a positive bipartition")
    if not bip:
        rots = [j for j in range(n) if is_positive_sequence(rotate_left(vals, j))]
        if len(rots) != 1:
            fails.append(f"positive rotations {rots} not unique mod n")
        if count != math.factorial(n - 1):
            fails.append(f"count {count} differs from (n-1)!")
    return fails


# ---------------------------------------------------------------- reduction by J


@dataclass(frozen=True)
class DeltaReduction:
    lam: tuple[Fraction, ...]
    delta: Fraction
    J: tuple[int, ...]
    K: tuple[int, ...]
    lam_prime: tuple[Fraction, ...]
    mu: tuple[Fraction, ...]
    nu: tuple[Fraction, ...]
    eps0: int


def delta_reduction(lam: Sequence, J: Iterable[int] | None = None) -> DeltaReduction:
    vals = tuple(Fraction(x) for x in lam)
    n = len(vals)
    if sum(vals, Fraction(0)) <= 0:
        raise HypothesisViolation("the entries must have positive sum")
    valid = minimizing_subsets(vals)
    if J is None:
        Jt = valid[0]
    else:
        Jt = tuple(sorted(int(j) for j in J))
        if Jt not in valid:
            raise ValueError(f"J={Jt} does not attain delta with minimal size")
    d = delta(vals)
    Kt = tuple(i for i in range(1, n + 1) if i not in Jt)
    lam_prime = tuple(v - d if i + 1 in Jt else v for i, v in enumerate(vals))
    return DeltaReduction(
        lam=vals,
        delta=d,
        J=Jt,
        K=Kt,
        lam_prime=lam_prime,
        mu=tuple(vals[i - 1] for i in Jt),
        nu=tuple(vals[i - 1] for i in Kt),
        eps0=split_sign(Jt, Kt),
    )


def _compress(mask: int, within: int) -> int:
    """Renumber the bits of ``mask`` by their rank inside ``within``."""
    out, pos = 0, 0
    for b in _bits(within):
        if mask >> b & 1:
            out |= 1 << pos
        pos += 1
    return out


def verify_delta_reduction(red: DeltaReduction) -> list[str]:
    """Check the four assertions of the reduction by enumeration."""
    fails: list[str] = []
    n = len(red.lam)
    scaled = _integer_scaled(list(red.lam) + list(red.lam_prime))
    sv, svp = _subset_sums(scaled[:n]), _subset_sums(scaled[n:])
    Jm = sum(1 << (j - 1) for j in red.J)
    Km = ((1 << n) - 1) ^ Jm
    for mask in range(1, 1 << n):
        if mask != Jm and (sv[mask] > 0) != (svp[mask] > 0):
            fails.append(f"(i) fails for K={tuple(b + 1 for b in _bits(mask))}")

    def prefix_J(masks: tuple[int, ...]) -> int | None:
        acc = 0
        for r, m in enumerate(masks, start=1):
            acc |= m
            if acc == Jm:
                return r
        return None

    all_ord = list(_ordered_masks(n))
    ord_lam = {P for P in all_ord if _positive_masks(P, sv)}
    ord_lamp = {P for P in all_ord if _positive_masks(P, svp)}
    ord_prime = {P for P in all_ord if prefix_J(P) is not None}
    if ord_lamp & ord_prime or ord_lam != ord_lamp | (ord_prime & ord_lam):
        fails.append("(ii) ordered decomposition fails")
    if not len(ord_lamp) < len(ord_lam):
        fails.append("(ii) ordered count does not drop")
    unord = {frozenset(P) for P in _set_partition_masks(n)}
    un_lam = {p for p in unord if all(sv[b] > 0 for b in p)}
    un_lamp = {p for p in unord if all(svp[b] > 0 for b in p)}
    un_prime = {p for p in unord if sum(b for b in p if b & Jm == b) == Jm}
    if un_lamp & un_prime or un_lam != un_lamp | (un_prime & un_lam):
        fails.append("(ii) unordered decomposition fails")
    if not len(un_lamp) < len(un_lam):
        fails.append("(ii) unordered count does not drop")
    images = set()
    for P in ord_prime:
        r = prefix_J(P)
        P1 = tuple(_compress(m, Jm) for m in P[:r])
        P2 = tuple(_compress(m, Km) for m in P[r:])
        e, e1, e2 = permutation_sign(_mask_sequence(P)), permutation_sign(_mask_sequence(P1)), permutation_sign(_mask_sequence(P2))
        if e != red.eps0 * e1 * e2:
            fails.append(f"(iii) eps fails at {P}")
        sizes = lambda Q: [m.bit_count() for m in Q]
        if eps_prime_of_sizes(sizes(P)) != eps_prime_of_sizes(sizes(P1)) * eps_prime_of_sizes(sizes(P2)):
            fails.append(f"(iii) eps' fails at {P}")
        if P in ord_lam:
            images.add((P1, P2))
    smu = _subset_sums(_integer_scaled(list(red.mu)))
    snu = _subset_sums(_integer_scaled(list(red.nu)))
    left = [P for P in _ordered_masks(len(red.mu)) if _positive_masks(P, smu)]
    right = [P for P in _ordered_masks(len(red.nu)) if _positive_masks(P, snu)]
    if images != {(a, b) for a in left for b in right}:
        fails.append("(iv) ordered bijection fails")
    un_images = {
        (frozenset(_compress(b, Jm) for b in p if b & Jm), frozenset(_compress(b, Km) for b in p if b & Km))
        for p in un_prime & un_lam
    }
    uleft = [frozenset(p) for p in _set_partition_masks(len(red.mu)) if all(smu[b] > 0 for b in p)]
    uright = [frozenset(p) for p in _set_partition_masks(len(red.nu)) if all(snu[b] > 0 for b in p)]
    if un_images != {(a, b) for a in uleft for b in uright}:
        fails.append("(iv) unordered bijection fails")
    return fails


# ---------------------------------------------------------------- blocks


def _vec(lam: Vector) -> Mapping:
    return lam if isinstance(lam, dict) else as_vector(lam)


def _centers_from_sums(sums: Sequence) -> list[int]:
    r = len(sums)
    prefix_ok = [True] * (r + 1)  # prefix_ok[k]: all prefixes of length < k positive
    acc = 0
    for i in range(1, r + 1):
        prefix_ok[i] = prefix_ok[i - 1] and (i == 1 or acc > 0)
        acc += sums[i - 1]
    suffix_ok = [True] * (r + 2)  # suffix_ok[k]: all suffixes starting after k nonpositive
    acc = 0
    for k in range(r, 0, -1):
        suffix_ok[k] = suffix_ok[k + 1] and (k == r or acc <= 0)
        acc += sums[k - 1]
    return [k for k in range(1, r + 1) if prefix_ok[k] and suffix_ok[k]]


def block_centers(Q: Sequence[Sequence[int]], lam: Vector) -> list[int]:
    """1-based positions k for which Q is a block centred at its k-th set."""
    v = _vec(lam)
    return _centers_from_sums([sum(v[x] for x in b) for b in Q])


def is_positive_block(Q: Sequence[Sequence[int]], lam: Vector) -> bool:
    v = _vec(lam)
    return sum(v[x] for b in Q for x in b) > 0


@dataclass(frozen=True)
class BlockDecomposition:
    """Consecutive segments of an ordered partition, with one chosen centre
    (1-based position inside the segment) per segment."""

    segments: tuple[tuple[tuple[int, ...], ...], ...]
    centers: tuple[int, ...]
    positive: tuple[bool, ...]

    def flatten(self) -> OrderedPartition:
        return OrderedPartition(tuple(b for s in self.segments for b in s))

    def sizes(self) -> tuple[int, ...]:
        return tuple(sum(len(b) for b in s) for s in self.segments)


def block_decompositions(P: OrderedPartition, lam: Vector) -> list[tuple[tuple[tuple[int, ...], ...], ...]]:
    """Every way of cutting P into consecutive segments that are all blocks."""
    v = _vec(lam)
    blocks = P.blocks
    r = len(blocks)
    bs = [sum(v[x] for x in b) for b in blocks]
    is_block = {(i, j): bool(_centers_from_sums(bs[i:j])) for i in range(r) for j in range(i + 1, r + 1)}
    out: list = []

    # longest first segment first: the order of the cut patterns 0/1 read lexicographically
    def extend(start: int, segs: list) -> None:
        if start == r:
            out.append(tuple(segs))
            return
        for end in range(r, start, -1):
            if is_block[start, end]:
                extend(end, segs + [blocks[start:end]])

    if r:
        extend(0, [])
    return out


@lru_cache(maxsize=4096)
def _is_reduced(vals: tuple) -> bool:
    return sum(vals) > 0 and N_of(vals) == len(vals)


def _require_reduced(lam: Vector, P: OrderedPartition | None = None, positive: bool = True) -> None:
    v = _vec(lam)
    vals = tuple(v[i] for i in sorted(v))
    if sum(vals) <= 0:
        raise HypothesisViolation("the entries must have positive sum")
    if not _is_reduced(vals):
        raise HypothesisViolation("N(lam) must equal n")
    if P is not None and positive and not is_positive_sequence([sum(v[x] for x in b) for b in P.blocks]):
        raise HypothesisViolation("P must have positive prefix sums")


def decompose_with_centers(
    P: OrderedPartition, lam: Vector, centers: Sequence[int], decompositions: Sequence | None = None
) -> BlockDecomposition:
    """The decomposition of P whose l-th segment is centred at P's set number
    centers[l] (1-based, increasing)."""
    lam = _vec(lam)
    _require_reduced(lam, P)
    centers = list(centers)
    if not centers or sorted(set(centers)) != centers or centers[0] < 1 or centers[-1] > len(P):
        raise ValueError("centers must be increasing positions of P")
    found = []
    for segs in block_decompositions(P, lam) if decompositions is None else decompositions:
        if len(segs) != len(centers):
            continue
        start, local = 0, []
        ok = True
        for s, c in zip(segs, centers):
            pos = c - start
            if not 1 <= pos <= len(s) or pos not in block_centers(s, lam):
                ok = False
                break
            local.append(pos)
            start += len(s)
        if ok:
            found.append((segs, tuple(local)))
    if len(found) != 1:
        raise AssertionError(f"expected a unique decomposition, found {len(found)}")
    segs, local = found[0]
    return BlockDecomposition(segs, local, tuple(is_positive_block(s, lam) for s in segs))


def swap_adjacent(dec: BlockDecomposition, l: int, lam: Vector) -> tuple[OrderedPartition, int]:
    """Exchange segments l and l+1 (1-based); return P' and eps(P')/eps(P)."""
    if not 1 <= l < len(dec.segments):
        raise ValueError("l out of range")
    if dec.positive[l - 1] and not dec.positive[l]:
        raise HypothesisViolation("needs segment l negative or segment l+1 positive")
    segs = list(dec.segments)
    segs[l - 1], segs[l] = segs[l], segs[l - 1]
    Pp = OrderedPartition._trusted(tuple(b for s in segs for b in s))
    sizes = dec.sizes()
    return Pp, (-1) ** (sizes[l - 1] * sizes[l])


def rotate_to_positive(segments: Sequence[Sequence[Sequence[int]]], lam: Vector) -> tuple[int, int]:
    """For an ordered partition split into blocks, find the unique cyclic
    shift s (1-based start) landing in the positive set, and the segment l it
    starts at.  Raises if either is not unique."""
    v = _vec(lam)
    segs = [tuple(tuple(b) for b in s) for s in segments]
    if not all(block_centers(s, v) for s in segs):
        raise HypothesisViolation("every segment must be a block")
    P = OrderedPartition(tuple(b for s in segs for b in s))
    _require_reduced(v, P, positive=False)
    r = len(P)
    bs = [sum(v[x] for x in b) for b in P.blocks]
    hits = [s for s in range(1, r + 1) if is_positive_sequence(rotate_left(bs, s - 1))]
    if len(hits) != 1:
        raise AssertionError(f"positive rotations {hits} not unique")
    s = hits[0]
    starts, acc = [], 1
    for seg in segs:
        starts.append(acc)
        acc += len(seg)
    if s not in starts:
        raise AssertionError("positive rotation does not start at a segment")
    return s, starts.index(s) + 1


# ---------------------------------------------------------------- parity lemmas


@dataclass
class LemmaResult:
    name: str
    status: str  # "pass", "fail", "skip"
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    reason: str = ""


def _par0_ordered_signed(vals: Sequence[Fraction], k: int, weak: bool = False) -> Fraction:
    """sum over positive ordered partitions with 2k or 2k+1 odd blocks of
    (-1)^|P| eps eps'; ``weak`` uses >= 0 prefix sums."""
    sums = _subset_sums(_integer_scaled(list(vals)))
    test = _nonnegative_masks if weak else _positive_masks
    total = 0
    for masks in _ordered_masks(len(vals)):
        odd = sum(1 for m in masks if m.bit_count() % 2)
        if odd not in (2 * k, 2 * k + 1) or not test(masks, sums):
            continue
        sgn = -1 if len(masks) % 2 else 1
        total += sgn * permutation_sign(_mask_sequence(masks)) * eps_prime_of_sizes(m.bit_count() for m in masks)
    return Fraction(total)


def _par0_le2_eps_sum(vals: Sequence[Fraction], weak: bool = False) -> Fraction:
    v = as_vector(vals)
    total = 0
    for p in par0_le2(range(1, len(vals) + 1)):
        s = p.block_sums(v)
        if all((x >= 0) if weak else (x > 0) for x in s):
            total += p.eps()
    return Fraction(total)


def perturbation(vals: Sequence[Fraction]) -> Fraction:
    maxden = max((Fraction(x).denominator for x in vals), default=1)
    return Fraction(1, 2 * maxden * (len(vals) + 1))


def odd_pairing_sum(n: int) -> Fraction:
    """sum over partitions into one odd set and pairs of eps(p) eps''(p)."""
    total = 0
    for masks in _set_partition_masks(n):
        sizes = [m.bit_count() for m in masks]
        odd = [s for s in sizes if s % 2]
        if len(odd) != 1 or any(s != 2 for s in sizes if s % 2 == 0):
            continue
        total += permutation_sign(_mask_sequence(masks)) * (-1) ** ((odd[0] - 1) // 2)
    return Fraction(total)


def check_parity_lemmas(lam: Sequence, k: int | None = None) -> list[LemmaResult]:
    vals = [Fraction(x) for x in lam]
    n = len(vals)
    out: list[LemmaResult] = []
    lhs = _par0_ordered_signed(vals, 0)
    rhs = (-1) ** n * _par0_le2_eps_sum(vals)
    out.append(LemmaResult("even_block_sum", "pass" if lhs == rhs else "fail", lhs, rhs))
    lhs_w = _par0_ordered_signed(vals, 0, weak=True)
    rhs_w = (-1) ** n * _par0_le2_eps_sum(vals, weak=True)
    eta = perturbation(vals)
    shifted = [x + eta for x in vals]
    lhs_s = _par0_ordered_signed(shifted, 0)
    rhs_s = (-1) ** n * _par0_le2_eps_sum(shifted)
    ok = lhs_w == rhs_w and lhs_w == lhs_s and rhs_w == rhs_s
    out.append(LemmaResult("even_block_sum_weak", "pass" if ok else "fail", lhs_w, rhs_w))

    total = sum(vals, Fraction(0))
    reduced = n >= 3 and total > 0 and N_of(vals) == n
    reason = "" if reduced else "needs n >= 3, positive sum and N = n"
    if reduced:
        z = _par0_ordered_signed(vals, 0)
        out.append(LemmaResult("even_block_vanishing", "pass" if z == 0 else "fail", z, Fraction(0)))
        ks = range(1, n // 2 + 1) if k is None else [k]
        for kk in ks:
            if kk < 1:
                continue
            z = _par0_ordered_signed(vals, kk)
            out.append(LemmaResult(f"odd_class_vanishing[k={kk}]", "pass" if z == 0 else "fail", z, Fraction(0)))
    else:
        out.append(LemmaResult("even_block_vanishing", "skip", reason=reason))
        out.append(LemmaResult("odd_class_vanishing", "skip", reason=reason))
    if n >= 3 and n % 2 == 1:
        z = odd_pairing_sum(n)
        out.append(LemmaResult("odd_pairing_vanishing", "pass" if z == 0 else "fail", z, Fraction(0)))
    else:
        out.append(LemmaResult("odd_pairing_vanishing", "skip", reason="needs odd n >= 3"))
    return out


def check_block_operations(lam: Sequence, max_partitions: int | None = None) -> list[str]:
    """Exercise the block assertions on positive ordered partitions of lam.

    Swaps are checked for every lam.  Unique decompositions and rotations
    are checked when lam has positive sum and N(lam) = n.  With
    ``max_partitions`` only the first partitions in enumeration order are
    used.
    """
    vals = tuple(Fraction(x) for x in lam)
    n = len(vals)
    idx = tuple(range(1, n + 1))
    scaled = _integer_scaled(list(vals))
    v = {i + 1: x for i, x in enumerate(scaled)}
    fails: list[str] = []
    sums = _subset_sums(scaled)
    positive = [_to_partition(ms, idx) for ms in _ordered_masks(n) if _positive_masks(ms, sums)]
    if max_partitions is not None:
        positive = positive[:max_partitions]
    for P in positive:
        eps_P = P.eps()
        bs = [sum(v[x] for x in b) for b in P.blocks]
        for segs in block_decompositions(P, v):
            seg_sums, start = [], 0
            for seg in segs:
                sums_seg = bs[start : start + len(seg)]
                start += len(seg)
                seg_sums.append(sums_seg)
                if sum(sums_seg) > 0:
                    if not all(x > 0 for x in itertools.accumulate(sums_seg)):
                        fails.append(f"positive block with a nonpositive prefix in {P.to_json()}")
                elif not all(x <= 0 for x in itertools.accumulate(reversed(sums_seg))):
                    fails.append(f"negative block with a positive suffix in {P.to_json()}")
            dec = BlockDecomposition(
                segs, tuple(_centers_from_sums(x)[0] for x in seg_sums), tuple(sum(x) > 0 for x in seg_sums)
            )
            for l in range(1, len(segs)):
                if dec.positive[l - 1] and not dec.positive[l]:
                    continue
                Pp, ratio = swap_adjacent(dec, l, v)
                if not is_positive_sequence(Pp.block_sums(v)) or len(Pp) != len(P) or Pp.eps() != ratio * eps_P:
                    fails.append(f"swap {l} fails on {P.to_json()}")
    if sum(vals, Fraction(0)) <= 0 or N_of(vals) != n:
        return fails
    for P in positive:
        r = len(P)
        decs = block_decompositions(P, v)
        for k in range(1, r + 1):
            for centers in itertools.combinations(range(1, r + 1), k):
                try:
                    dec = decompose_with_centers(P, v, centers, decs)
                except AssertionError as exc:
                    fails.append(f"centers {centers} on {P.to_json()}: {exc}")
                    continue
                if dec.flatten() != P or not dec.positive[0] or (k >= 2 and dec.positive[-1]):
                    fails.append(f"decomposition flags wrong for {P.to_json()} at {centers}")
    everything = [_to_partition(ms, idx) for ms in _ordered_masks(n)]
    if max_partitions is not None:
        everything = everything[: 4 * max_partitions]
    for P in everything:
        for segs in block_decompositions(P, v):
            try:
                rotate_to_positive(segs, v)
            except AssertionError as exc:
                fails.append(f"rotation on {P.to_json()}: {exc}")
    return fails
