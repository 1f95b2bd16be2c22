"""Nilradical cohomology of standard parabolics of GSp_2n.

Kostant's description (one Levi representation per minimal coset
representative) is computed from root data.  An independent oracle builds the
irreducible representation inside polynomial functions on exterior powers of
the standard representation and computes Lie algebra cohomology of the
nilradical from the cochain complex by exact ranks.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import row_reduce, sparse_rank
from .root_data import (
    ParabolicIndex,
    RankMismatch,
    SignedPermutation,
    Weight,
    act,
    fundamental_coweight,
    kostant_representatives,
    length,
    pairing,
    positive_roots,
    rho,
    roots,
    simple_roots,
)

MAX_ORACLE_DIM = 10**4


class OracleTooLarge(ValueError):
    pass


class NotDominant(ValueError):
    pass


class NotRegular(ValueError):
    pass


# ---------------------------------------------------------------- inner products on balanced coordinates


def _f(x: Weight) -> tuple[Fraction, ...]:
    return x.balanced()[1]


def _dot(x: Weight, y: Weight) -> Fraction:
    return sum((a * b for a, b in zip(_f(x), _f(y))), Fraction(0))


def coroot_pairing(x: Weight, alpha: Weight) -> Fraction:
    return 2 * _dot(x, alpha) / _dot(alpha, alpha)


def central_part(lam: Weight) -> Weight:
    """Projection to the span of c along the roots: z*c where lam = z*c + sum f_i (e_i - c/2)."""
    z, _ = lam.balanced()
    return Weight.from_coeffs(z, [0] * lam.rank)


def is_dominant(lam: Weight, simple: Iterable[Weight] | None = None) -> bool:
    simple = simple_roots(lam.rank) if simple is None else simple
    return all(coroot_pairing(lam, a) >= 0 for a in simple)


def _require_dominant(lam: Weight) -> None:
    if not lam.is_integral():
        raise NotDominant(f"{lam} is not integral")
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")


def weyl_dimension(lam: Weight, pos: Sequence[Weight]) -> int:
    """Weyl dimension formula for the root subsystem with positive roots ``pos``."""
    if not pos:
        return 1
    rho_sub = Weight.zero(lam.rank)
    for a in pos:
        rho_sub = rho_sub + a
    num = den = Fraction(1)
    for a in pos:
        num *= _dot(lam, a) + _dot(rho_sub, a) / 2
        den *= _dot(rho_sub, a) / 2
    val = num / den
    if val.denominator != 1:
        raise ValueError(f"non-integral dimension {val}")
    return int(val)


# ---------------------------------------------------------------- Freudenthal multiplicities


def _dot2(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    """4 (x, y) on doubled coordinates; the c coordinate is orthogonal to the roots."""
    return sum(a * b for a, b in zip(x[1:], y[1:]))


def _sub(x: tuple[int, ...], y: tuple[int, ...], k: int = 1) -> tuple[int, ...]:
    return tuple(a - k * b for a, b in zip(x, y))


def weight_multiplicities(highest: Weight, pos: Sequence[Weight], simple: Sequence[Weight]) -> Counter:
    """Freudenthal's recursion for the irreducible module of the subsystem."""
    if any(coroot_pairing(highest, a) < 0 for a in simple):
        raise NotDominant(f"{highest} is not dominant for the subsystem")
    if not simple:
        return Counter({highest: 1})
    lam = highest.doubled
    P = [a.doubled for a in pos]
    D = [a.doubled for a in simple]
    rho2 = tuple(sum(col) for col in zip(*P))  # 2 rho of the subsystem
    # dual basis to the simple roots on their span, to read simple-root coordinates
    coord_maps = _left_inverse(D, len(lam))

    def coords(v: tuple[int, ...]) -> list[Fraction] | None:
        out = [sum((c * x for c, x in zip(row, v[1:])), Fraction(0)) for row in coord_maps]
        recon = [sum(o * d[i] for o, d in zip(out, D)) for i in range(1, len(v))]
        return out if recon == list(v[1:]) else None

    def dominant(mu: tuple[int, ...]) -> tuple[int, ...]:
        changed = True
        while changed:
            changed = False
            for d in D:
                k2 = 2 * _dot2(mu, d)
                nd = _dot2(d, d)
                if k2 < 0:
                    mu = _sub(mu, d, k2 // nd)
                    changed = True
        return mu

    def is_weight(mu: tuple[int, ...]) -> bool:
        c = coords(_sub(lam, dominant(mu)))
        return c is not None and all(x >= 0 and x.denominator == 1 for x in c)

    def norm_shift(x: tuple[int, ...]) -> int:
        y = tuple(2 * a + b for a, b in zip(x, rho2))
        return _dot2(y, y)  # 16 |x + rho|^2

    top = norm_shift(lam)
    mult: dict[tuple[int, ...], int] = {lam: 1}
    level = [lam]
    seen = {lam}
    while level:
        nxt = []
        for mu in level:
            for d in D:
                nu = _sub(mu, d)
                if nu in seen:
                    continue
                seen.add(nu)
                if is_weight(nu):
                    nxt.append(nu)
        for nu in nxt:
            total = 0
            for a in P:
                k = 1
                while True:
                    w = _sub(nu, a, -k)
                    m = mult.get(w)
                    if m is None:
                        break
                    total += m * _dot2(w, a)
                    k += 1
            # m(nu) = 2 sum m (w, a) / (|lam+rho|^2 - |nu+rho|^2); both scaled by 4 and 16
            val = Fraction(8 * total, top - norm_shift(nu))
            if val.denominator != 1 or val <= 0:
                raise ArithmeticError(f"bad multiplicity {val} at {nu}")
            mult[nu] = int(val)
        level = nxt
    return Counter({Weight(k): v for k, v in mult.items()})


def _left_inverse(D: Sequence[tuple[int, ...]], width: int) -> list[list[Fraction]]:
    """Rows L with L . d_j[1:] = delta_ij for linearly independent d_j."""
    k = len(D)
    gram = [[Fraction(_dot2(a, b)) for b in D] for a in D]
    aug = [gram[i] + [Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    red, piv = row_reduce(aug)
    if piv[:k] != list(range(k)):
        raise ValueError("simple roots are not independent")
    ginv = [row[k:] for row in red]
    return [[sum(ginv[i][j] * D[j][t] for j in range(k)) for t in range(1, width)] for i in range(k)]


def character_multiplicities(lam: Weight) -> Counter:
    _require_dominant(lam)
    n = lam.rank
    return weight_multiplicities(lam, positive_roots(n), simple_roots(n))


# ---------------------------------------------------------------- characters


def _check_torus(gamma: Sequence, n: int) -> tuple[list[Fraction], Fraction]:
    if len(gamma) != 2 * n:
        raise RankMismatch(f"expected {2 * n} diagonal entries")
    x = [Fraction(v) for v in gamma]
    if any(v == 0 for v in x):
        raise ValueError("torus entries must be nonzero")
    sim = x[0] * x[2 * n - 1] if n else Fraction(1)
    for i in range(n):
        if x[i] * x[2 * n - 1 - i] != sim:
            raise ValueError("entries do not satisfy the similitude constraint")
    return x, sim


def evaluate_character(chi: Weight, gamma: Sequence) -> Fraction:
    """chi(gamma) for gamma = diag(x_1..x_2n) with x_i x_{2n+1-i} = nu and c(gamma) = nu."""
    n = chi.rank
    x, sim = _check_torus(gamma, n)
    if not chi.is_integral():
        raise ValueError(f"{chi} is not a character")
    out = sim ** int(chi.c_coeff)
    for xi, k in zip(x[:n], chi.e_coeffs):
        out *= xi ** int(k)
    return out


def _require_regular(gamma: Sequence, n: int) -> None:
    for a in roots(n):
        if evaluate_character(a, gamma) == 1:
            raise NotRegular(f"root {a} is trivial on gamma")


def weyl_character_trace(lam: Weight, gamma: Sequence) -> Fraction:
    """Sum over Borel subgroups containing T: (w lam)(gamma) / prod_{beta in w Phi+} (1 - beta^-1(gamma))."""
    _require_dominant(lam)
    n = lam.rank
    _require_regular(gamma, n)
    from .root_data import weyl_group_list

    total = Fraction(0)
    pos = positive_roots(n)
    for w in weyl_group_list(n):
        den = Fraction(1)
        for b in pos:
            den *= 1 - 1 / evaluate_character(act(w, b), gamma)
        total += evaluate_character(act(w, lam), gamma) / den
    return total


def weyl_character_trace_by_lengths(lam: Weight, gamma: Sequence) -> Fraction:
    """Delta_B^-1 sum_w eps(w) (w lam)(gamma) prod_{beta in Phi(w)} beta^-1(gamma)."""
    _require_dominant(lam)
    n = lam.rank
    _require_regular(gamma, n)
    from .root_data import inversion_set, weyl_group_list

    delta = Fraction(1)
    for b in positive_roots(n):
        delta *= 1 - 1 / evaluate_character(b, gamma)
    total = Fraction(0)
    for w in weyl_group_list(n):
        inv = inversion_set(w)
        term = Fraction((-1) ** len(inv)) * evaluate_character(act(w, lam), gamma)
        for b in inv:
            term /= evaluate_character(b, gamma)
        total += term
    return total / delta


def character_by_weights(lam: Weight, gamma: Sequence) -> Fraction:
    return sum(
        (m * evaluate_character(mu, gamma) for mu, m in character_multiplicities(lam).items()),
        Fraction(0),
    )


# ---------------------------------------------------------------- Kostant


@dataclass(frozen=True)
class CohomologyPiece:
    degree: int
    kostant_weight: Weight
    rep_of: ParabolicIndex
    dimension: int
    kept_by_truncation: bool = True
    omega: SignedPermutation = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "kostant_weight": str(self.kostant_weight),
            "kostant_weight_doubled": self.kostant_weight.to_json(),
            "dimension": self.dimension,
            "kept_by_truncation": self.kept_by_truncation,
            "omega": self.omega.to_json() if self.omega is not None else None,
        }


def _parabolic(n: int, S) -> ParabolicIndex:
    P = S if isinstance(S, ParabolicIndex) else ParabolicIndex(n, frozenset(S))
    if P.n != n:
        raise RankMismatch(f"rank {P.n} vs {n}")
    return P


def kostant_cohomology(n: int, S, lam: Weight) -> list[CohomologyPiece]:
    if lam.rank != n:
        raise RankMismatch(f"rank {lam.rank} vs {n}")
    _require_dominant(lam)
    P = _parabolic(n, S)
    shifted = lam + rho(n)
    pos_M = P.levi_positive_roots()
    out = []
    for w in kostant_representatives(n, P):
        kw = act(w, shifted) - rho(n)
        out.append(CohomologyPiece(length(w), kw, P, weyl_dimension(kw, pos_M), True, w))
    return sorted(out, key=lambda p: (p.degree, p.kostant_weight))


def truncation_pairings(piece: CohomologyPiece, lam: Weight, lam0: Weight) -> dict[int, Fraction]:
    n = lam.rank
    v = act(piece.omega, lam + rho(n) + lam0)
    return {s: pairing(v, fundamental_coweight(n, s)) for s in sorted(piece.rep_of.S)}


def truncate(
    pieces: Sequence[CohomologyPiece],
    lam: Weight,
    lam0: Weight | None,
    S,
    direction: str = "above",
) -> list[CohomologyPiece]:
    """Mark pieces with <omega'(lam + rho + lam0), varpi_s> > 0 (above) or < 0 (below) for all s in S."""
    if direction not in ("above", "below"):
        raise ValueError("direction must be 'above' or 'below'")
    expected = central_part(lam)
    if lam0 is None:
        lam0 = expected
    elif lam0 != expected:
        raise ValueError(f"central character {lam0} does not match {expected}")
    P = _parabolic(lam.rank, S)
    out = []
    for piece in pieces:
        if piece.rep_of != P:
            raise ValueError("piece belongs to another parabolic")
        vals = truncation_pairings(piece, lam, lam0).values()
        keep = all(v > 0 for v in vals) if direction == "above" else all(v < 0 for v in vals)
        out.append(replace(piece, kept_by_truncation=keep))
    return out


def levi_weight_multiset(piece: CohomologyPiece) -> Counter:
    P = piece.rep_of
    return weight_multiplicities(piece.kostant_weight, P.levi_positive_roots(), P.levi_simple_roots())


def kostant_graded_weights(n: int, S, lam: Weight) -> dict[int, Counter]:
    out: dict[int, Counter] = {}
    for piece in kostant_cohomology(n, S, lam):
        out.setdefault(piece.degree, Counter()).update(levi_weight_multiset(piece))
    return out


# ---------------------------------------------------------------- explicit model of the representation


def _std_weights(n: int) -> list[Weight]:
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(Weight.from_coeffs(0, e))
    for i in range(n):
        e = [0] * n
        e[i] = -1
        out.append(Weight.from_coeffs(1, e))
    return out


def _symplectic_form(n: int) -> list[list[int]]:
    J = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        J[i][n + i] = 1
        J[n + i][i] = -1
    return J


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def _transpose(A):
    return [list(r) for r in zip(*A)]


@dataclass(frozen=True)
class StandardModel:
    """Root vectors of sp_2n in the standard representation."""

    n: int
    weights: tuple[Weight, ...]
    root_vectors: dict

    @classmethod
    def build(cls, n: int) -> "StandardModel":
        wts = _std_weights(n)
        J = _symplectic_form(n)
        Jinv = [[-x for x in row] for row in J]
        vecs = {}
        for a in roots(n):
            for i, j in itertools.product(range(2 * n), repeat=2):
                if wts[i] - wts[j] != a:
                    continue
                E = [[Fraction(int(r == i and c == j)) for c in range(2 * n)] for r in range(2 * n)]
                tau = _matmul(_matmul(Jinv, _transpose(E)), J)
                X = [[E[r][c] - tau[r][c] for c in range(2 * n)] for r in range(2 * n)]
                if any(any(row) for row in X):
                    vecs[a] = X
                    break
        if len(vecs) != len(roots(n)):
            raise AssertionError("missing root vectors")
        for X in vecs.values():
            lhs = _matmul(_transpose(X), J)
            rhs = _matmul(J, X)
            if any(lhs[r][c] + rhs[r][c] for r in range(2 * n) for c in range(2 * n)):
                raise AssertionError("root vector is not symplectic")
        return cls(n, tuple(wts), vecs)

    def bracket(self, a: Weight, b: Weight) -> tuple[Weight, Fraction] | None:
        """[X_a, X_b] = k X_{a+b}, or None when it vanishes."""
        X, Y = self.root_vectors[a], self.root_vectors[b]
        XY, YX = _matmul(X, Y), _matmul(Y, X)
        Z = [[XY[r][c] - YX[r][c] for c in range(len(X))] for r in range(len(X))]
        if not any(any(row) for row in Z):
            return None
        s = a + b
        T = self.root_vectors.get(s)
        if T is None:
            raise AssertionError(f"bracket lands outside root spaces: {s}")
        k = None
        for r in range(len(X)):
            for c in range(len(X)):
                if T[r][c]:
                    k = Z[r][c] / T[r][c]
                    break
            if k is not None:
                break
        if any(Z[r][c] != k * T[r][c] for r in range(len(X)) for c in range(len(X))):
            raise AssertionError("bracket is not proportional to the root vector")
        return s, k


class PolynomialModel:
    """Irreducible module of highest weight lam, realized as the span of
    lowering-operator images of a highest monomial in polynomial functions on
    exterior powers of the standard representation."""

    def __init__(self, lam: Weight, max_dim: int = MAX_ORACLE_DIM):
        _require_dominant(lam)
        n = lam.rank
        self.n = n
        self.std = StandardModel.build(n)
        self.vars: list[tuple[int, ...]] = [T for k in range(1, n + 1) for T in itertools.combinations(range(2 * n), k)]
        self.var_index = {T: i for i, T in enumerate(self.vars)}
        self.var_weight = []
        for T in self.vars:
            w = Weight.zero(n)
            for t in T:
                w = w + self.std.weights[t]
            self.var_weight.append(w)
        f = list(_f(lam)) + [Fraction(0)]
        exps = [0] * len(self.vars)
        for k in range(1, n + 1):
            a_k = f[k - 1] - f[k]
            exps[self.var_index[tuple(range(k))]] = int(a_k)
        self.top = tuple(exps)
        shift = lam - self.monomial_weight(self.top)
        if any(shift.e_coeffs):
            raise AssertionError("highest monomial has the wrong weight")
        self.shift = shift
        self.max_dim = max_dim
        self._var_images: dict[Weight, list[dict[int, Fraction]]] = {}
        self.basis: dict[Weight, list[dict]] = {}
        self.pivots: dict[Weight, list[tuple]] = {}
        self._generate()

    # -- basic operations

    def monomial_weight(self, mono: tuple[int, ...]) -> Weight:
        w = Weight.zero(self.n)
        for i, e in enumerate(mono):
            if e:
                w = w + self.var_weight[i].scale(e)
        return w

    def weight_of(self, mono: tuple[int, ...]) -> Weight:
        return self.monomial_weight(mono) + self.shift

    def _images(self, a: Weight) -> list[dict[int, Fraction]]:
        if a not in self._var_images:
            X = self.std.root_vectors[a]
            imgs = []
            for T in self.vars:
                out: dict[int, Fraction] = {}
                for pos, t in enumerate(T):
                    for r in range(2 * self.n):
                        coef = X[r][t]
                        if not coef:
                            continue
                        new = list(T)
                        new[pos] = r
                        if len(set(new)) < len(new):
                            continue
                        order = sorted(range(len(new)), key=lambda q: new[q])
                        sgn = _perm_sign(order)
                        idx = self.var_index[tuple(sorted(new))]
                        out[idx] = out.get(idx, 0) + sgn * coef
                imgs.append({k: v for k, v in out.items() if v})
            self._var_images[a] = imgs
        return self._var_images[a]

    def apply(self, a: Weight, vec: dict) -> dict:
        """Root vector X_a acting as a derivation."""
        imgs = self._images(a)
        out: dict = {}
        for mono, c in vec.items():
            for i, e in enumerate(mono):
                if not e:
                    continue
                for j, k in imgs[i].items():
                    m = list(mono)
                    m[i] -= 1
                    m[j] += 1
                    m = tuple(m)
                    out[m] = out.get(m, 0) + c * e * k
        return {m: v for m, v in out.items() if v}

    # -- generation

    def _reduce(self, wt: Weight, vec: dict) -> dict:
        vec = dict(vec)
        for row, piv in zip(self.basis.get(wt, []), self.pivots.get(wt, [])):
            c = vec.get(piv)
            if c:
                for m, v in row.items():
                    nv = vec.get(m, 0) - c * v
                    if nv:
                        vec[m] = nv
                    else:
                        vec.pop(m, None)
        return vec

    def _insert(self, wt: Weight, vec: dict) -> bool:
        vec = self._reduce(wt, vec)
        if not vec:
            return False
        piv = min(vec)
        inv = 1 / vec[piv]
        vec = {m: v * inv for m, v in vec.items()}
        rows = self.basis.setdefault(wt, [])
        pivs = self.pivots.setdefault(wt, [])
        for k, row in enumerate(rows):
            c = row.get(piv)
            if c:
                for m, v in vec.items():
                    nv = row.get(m, 0) - c * v
                    if nv:
                        row[m] = nv
                    else:
                        row.pop(m, None)
        rows.append(vec)
        pivs.append(piv)
        if self.dimension > self.max_dim:
            raise OracleTooLarge(f"module dimension exceeds {self.max_dim}")
        return True

    @property
    def dimension(self) -> int:
        return sum(len(v) for v in self.basis.values())

    def _generate(self) -> None:
        lowering = [-a for a in simple_roots(self.n)]
        start = {self.top: Fraction(1)}
        top_wt = self.weight_of(self.top)
        self._insert(top_wt, start)
        frontier = [(top_wt, start)]
        while frontier:
            nxt = []
            for wt, vec in frontier:
                for a in lowering:
                    img = self.apply(a, vec)
                    if img and self._insert(wt + a, img):
                        nxt.append((wt + a, img))
            frontier = nxt

    def coordinates(self, wt: Weight, vec: dict) -> list[Fraction]:
        rows = self.basis.get(wt, [])
        pivs = self.pivots.get(wt, [])
        coords = [vec.get(p, Fraction(0)) for p in pivs]
        residue = dict(vec)
        for c, row in zip(coords, rows):
            if c:
                for m, v in row.items():
                    nv = residue.get(m, 0) - c * v
                    if nv:
                        residue[m] = nv
                    else:
                        residue.pop(m, None)
        if residue:
            raise AssertionError("vector leaves the module")
        return coords

    def weight_multiset(self) -> Counter:
        return Counter({wt: len(rows) for wt, rows in self.basis.items()})


def _perm_sign(order: Sequence[int]) -> int:
    s = 1
    seq = list(order)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


# ---------------------------------------------------------------- Chevalley-Eilenberg


class CochainComplex:
    """Hom(Lambda^k n, V) for the nilradical n of P_S, graded by degree and torus weight."""

    def __init__(self, n: int, S, lam: Weight, max_dim: int = MAX_ORACLE_DIM):
        if n > 2:
            raise ValueError("the oracle is limited to n <= 2")
        if lam.rank != n:
            raise RankMismatch(f"rank {lam.rank} vs {n}")
        self.P = _parabolic(n, S)
        self.nil = sorted(self.P.nilradical_roots())
        self.V = V = PolynomialModel(lam, max_dim)
        total = V.dimension * 2 ** len(self.nil)
        if total > max_dim:
            raise OracleTooLarge(f"cochain space of dimension {total} exceeds {max_dim}")
        index = {a: i for i, a in enumerate(self.nil)}
        self.brackets = {}
        for i, a in enumerate(self.nil):
            for j, b in enumerate(self.nil):
                if i < j:
                    res = V.std.bracket(a, b)
                    if res is not None:
                        self.brackets[(i, j)] = (index[res[0]], res[1])
        self.graded: list[dict[Weight, list[tuple]]] = []
        for k in range(len(self.nil) + 1):
            d: dict[Weight, list[tuple]] = {}
            for I in itertools.combinations(range(len(self.nil)), k):
                for wt, rows in V.basis.items():
                    mu = wt
                    for i in I:
                        mu = mu - self.nil[i]
                    for b in range(len(rows)):
                        d.setdefault(mu, []).append((I, wt, b))
            self.graded.append(d)
        self.action: list[dict[tuple[Weight, int], list[tuple[int, Fraction]]]] = []
        for a in self.nil:
            table = {}
            for wt, rows in V.basis.items():
                for b, vec in enumerate(rows):
                    img = V.apply(a, vec)
                    table[(wt, b)] = [(pos, c) for pos, c in enumerate(V.coordinates(wt + a, img)) if c] if img else []
            self.action.append(table)

    @property
    def top_degree(self) -> int:
        return len(self.nil)

    def differential(self, k: int, mu: Weight) -> list[dict[int, Fraction]]:
        """Row i is d applied to the i-th basis cochain of degree k and weight mu,
        written in the basis of degree k + 1 and weight mu."""
        V, nil = self.V, self.nil
        src = self.graded[k].get(mu, [])
        tgt = self.graded[k + 1].get(mu, []) if k + 1 < len(self.graded) else []
        tindex = {key: i for i, key in enumerate(tgt)}
        rows = []
        for I, wt, b in src:
            out: dict[int, Fraction] = {}
            for J in itertools.combinations(range(len(nil)), k + 1):
                for i, j0 in enumerate(J):
                    if J[:i] + J[i + 1 :] == I:
                        sg = (-1) ** i
                        tw = wt + nil[j0]
                        for pos, c in self.action[j0][(wt, b)]:
                            key = tindex[(J, tw, pos)]
                            out[key] = out.get(key, 0) + sg * c
                for i in range(len(J)):
                    for j in range(i + 1, len(J)):
                        br = self.brackets.get((J[i], J[j]))
                        if br is None:
                            continue
                        g, kcoef = br
                        seq = (g,) + J[:i] + J[i + 1 : j] + J[j + 1 :]
                        if len(set(seq)) < len(seq) or tuple(sorted(seq)) != I:
                            continue
                        sgn = _perm_sign(sorted(range(len(seq)), key=lambda q: seq[q]))
                        key = tindex[(J, wt, b)]
                        out[key] = out.get(key, 0) + (-1) ** (i + j) * kcoef * sgn
            rows.append({key: c for key, c in out.items() if c})
        return rows

    def squares_to_zero(self) -> bool:
        for k in range(self.top_degree - 1):
            for mu in self.graded[k]:
                first = self.differential(k, mu)
                second = self.differential(k + 1, mu)
                for row in first:
                    acc: dict[int, Fraction] = {}
                    for mid, c in row.items():
                        for key, v in second[mid].items():
                            acc[key] = acc.get(key, 0) + c * v
                    if any(acc.values()):
                        return False
        return True

    def cohomology(self) -> list[tuple[int, Counter]]:
        ranks: dict[tuple[int, Weight], int] = {}
        for k in range(self.top_degree):
            for mu in self.graded[k]:
                ranks[(k, mu)] = sparse_rank([r for r in self.differential(k, mu) if r])
        result = []
        for k in range(self.top_degree + 1):
            counter = Counter()
            for mu, basis in self.graded[k].items():
                h = len(basis) - ranks.get((k, mu), 0) - ranks.get((k - 1, mu), 0)
                if h < 0:
                    raise AssertionError("negative cohomology dimension")
                if h:
                    counter[mu] = h
            result.append((k, counter))
        return result


def chevalley_eilenberg_oracle(n: int, S, lam: Weight, max_dim: int = MAX_ORACLE_DIM) -> list[tuple[int, Counter]]:
    """Graded torus weights of H^*(Lie N_S, V_lam) from the cochain complex."""
    return CochainComplex(n, S, lam, max_dim).cohomology()


def euler_characteristic(graded: Sequence[tuple[int, Counter]]) -> int:
    return sum((-1) ** k * sum(c.values()) for k, c in graded)


def signed_dimension_sum(pieces: Sequence[CohomologyPiece]) -> int:
    return sum((-1) ** p.degree * p.dimension for p in pieces)


def module_dimension(lam: Weight) -> int:
    _require_dominant(lam)
    return weyl_dimension(lam, positive_roots(lam.rank))


def dominant_weights_up_to_dimension(n: int, max_dim: int, central: Sequence[int] = (0,)) -> list[Weight]:
    """Dominant integral weights of dimension <= max_dim, for each listed c-coefficient."""
    out = []

    def grow(prefix: list[int]) -> None:
        if len(prefix) == n:
            for z in central:
                out.append(Weight.from_coeffs(z, prefix))
            return
        top = prefix[-1] if prefix else None
        k = 0
        while top is None or k <= top:
            cand = prefix + [k] + [0] * (n - len(prefix) - 1)
            if module_dimension(Weight.from_coeffs(0, cand)) > max_dim:
                break
            grow(prefix + [k])
            k += 1

    if n == 0:
        return [Weight.from_coeffs(z, []) for z in central]
    grow([])
    return sorted(out)
