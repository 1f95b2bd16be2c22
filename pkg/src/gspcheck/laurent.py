"""Exact Laurent polynomials in X, X_1..X_n with a formal prime p.

A monomial is the exponent vector (e_X, e_1, ..., e_n, e_p); coefficients
are Fractions and zero coefficients are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .root_data import Coweight, RankMismatch, SignedPermutation, act_coweight

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class LaurentPolynomial:
    n: int
    terms: tuple[tuple[Exponent, Fraction], ...]

    @classmethod
    def from_dict(cls, n: int, d: Mapping[Exponent, Fraction | int]) -> "LaurentPolynomial":
        items = []
        for e, c in d.items():
            if len(e) != n + 2:
                raise RankMismatch(f"exponent {e} has wrong length for n={n}")
            c = Fraction(c)
            if c:
                items.append((tuple(int(x) for x in e), c))
        return cls(n, tuple(sorted(items)))

    @classmethod
    def zero(cls, n: int) -> "LaurentPolynomial":
        return cls(n, ())

    @classmethod
    def constant(cls, n: int, c: Fraction | int) -> "LaurentPolynomial":
        return cls.from_dict(n, {(0,) * (n + 2): c})

    @classmethod
    def monomial(cls, n: int, e_X: int = 0, e: Sequence[int] | None = None, e_p: int = 0, coef=1) -> "LaurentPolynomial":
        e = tuple(e) if e is not None else (0,) * n
        return cls.from_dict(n, {(e_X,) + e + (e_p,): coef})

    @classmethod
    def X(cls, n: int, k: int = 1) -> "LaurentPolynomial":
        return cls.monomial(n, e_X=k)

    @classmethod
    def Xi(cls, n: int, i: int, k: int = 1) -> "LaurentPolynomial":
        if not 1 <= i <= n:
            raise ValueError(f"X_{i} does not exist for n={n}")
        e = [0] * n
        e[i - 1] = k
        return cls.monomial(n, e=e)

    @classmethod
    def p(cls, n: int, k: int = 1) -> "LaurentPolynomial":
        return cls.monomial(n, e_p=k)

    def as_dict(self) -> dict[Exponent, Fraction]:
        return dict(self.terms)

    def _check(self, other: "LaurentPolynomial") -> None:
        if self.n != other.n:
            raise RankMismatch(f"rank {self.n} vs {other.n}")

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return LaurentPolynomial.from_dict(self.n, d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.n, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPolynomial.from_dict(self.n, d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((e, c),) = self.terms
            return LaurentPolynomial.from_dict(self.n, {tuple(-x for x in e): 1 / c}) ** (-k)
        out = LaurentPolynomial.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def evaluate(self, p, X, Xs: Sequence) -> Fraction:
        """Numeric specialization at p, X and X_1..X_n (nonzero rationals)."""
        if len(Xs) != self.n:
            raise RankMismatch(f"{len(Xs)} values for n={self.n}")
        vals = [Fraction(X)] + [Fraction(x) for x in Xs] + [Fraction(p)]
        total = Fraction(0)
        for e, c in self.terms:
            term = c
            for v, k in zip(vals, e):
                term *= v**k
            total += term
        return total

    def substitute_Xi_power(self, a: int) -> "LaurentPolynomial":
        """X_i -> X_i^a for every i."""
        d: dict[Exponent, Fraction] = {}
        for e, c in self.terms:
            e2 = (e[0],) + tuple(a * x for x in e[1:-1]) + (e[-1],)
            d[e2] = d.get(e2, 0) + c
        return LaurentPolynomial.from_dict(self.n, d)

    def format_terms(self) -> list[str]:
        return [format_monomial(e, c) for e, c in self.terms]

    def __str__(self) -> str:
        return " + ".join(self.format_terms()) if self.terms else "0"

    def to_json(self) -> list[dict]:
        return [{"coef": str(c), "p": e[-1], "X": e[0], "Xi": list(e[1:-1])} for e, c in self.terms]


def format_monomial(e: Exponent, c: Fraction) -> str:
    parts = [str(c), f"p^{e[-1]}", f"X^{e[0]}"]
    parts += [f"X{i}^{k}" for i, k in enumerate(e[1:-1], start=1)]
    return " * ".join(parts)


def weyl_act_poly(w: SignedPermutation, f: LaurentPolynomial) -> LaurentPolynomial:
    """Action through cocharacters: X is c* + sum ê_i and X_i is ê_i.

    A sign flip at i sends X to X X_i^-1 and X_i to X_i^-1; permutations
    move the X_i.
    """
    if w.rank != f.n:
        raise RankMismatch(f"rank {w.rank} vs {f.n}")
    n = f.n
    d: dict[Exponent, Fraction] = {}
    for e, c in f.terms:
        e0 = e[0]
        new = [0] * n
        for i in range(n):
            j = w.perm[i] - 1
            new[j] = e[i + 1] if w.signs[j] == 1 else -e[i + 1] - e0
        e2 = (e0,) + tuple(new) + (e[-1],)
        d[e2] = d.get(e2, 0) + c
    return LaurentPolynomial.from_dict(n, d)


def weyl_act_poly_via_cocharacters(w: SignedPermutation, f: LaurentPolynomial) -> LaurentPolynomial:
    """Same action computed through the cocharacter lattice."""
    if w.rank != f.n:
        raise RankMismatch(f"rank {w.rank} vs {f.n}")
    d: dict[Exponent, Fraction] = {}
    for e, c in f.terms:
        e0, es = e[0], e[1:-1]
        y = Coweight((e0,) + tuple(e0 + x for x in es))
        y2 = act_coweight(w, y).coeffs
        e2 = (y2[0],) + tuple(v - y2[0] for v in y2[1:]) + (e[-1],)
        d[e2] = d.get(e2, 0) + c
    return LaurentPolynomial.from_dict(f.n, d)


def poly_sum(n: int, polys: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    out = LaurentPolynomial.zero(n)
    for q in polys:
        out = out + q
    return out


def poly_product(n: int, polys: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    out = LaurentPolynomial.constant(n, 1)
    for q in polys:
        out = out * q
    return out
