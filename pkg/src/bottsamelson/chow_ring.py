"""Chow ring of X(word) in the square-free monomial basis.

Products are determined by ``x_i x_j = [X_ij]`` for ``i != j`` and

    x_j^2 = - sum_{i<j} <beta_j, beta_i^vee> x_i x_j,
    beta_i = s_{a_1} ... s_{a_{i-1}} (alpha_{a_i}).

Reduction always eliminates the highest repeated index first; the rewrite
only introduces smaller indices, so it terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .bs_word import BSWord, DivisorClass, format_combination
from .errors import PreconditionError, RankMismatch
from .root_system import Weight
from .weyl_group import WeylElement

Monomial = tuple[int, ...]  # sorted 1-based positions


def _norm(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


@dataclass(frozen=True)
class CycleClass:
    """A class in A^k as coefficients over square-free monomials ``x_S``, ``|S| = k``."""

    d: int
    grade: int
    terms: tuple[tuple[Monomial, int | Fraction], ...]

    @classmethod
    def from_dict(cls, d: int, grade: int, coeffs: Mapping[Iterable[int], int | Fraction]) -> "CycleClass":
        acc: dict[Monomial, Fraction] = {}
        for mono, c in coeffs.items():
            key = tuple(sorted(mono))
            if len(key) != grade or len(set(key)) != grade:
                raise ValueError(f"monomial {key} is not a square-free monomial of degree {grade}")
            if not all(1 <= i <= d for i in key):
                raise ValueError(f"monomial {key} has indices outside 1..{d}")
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        terms = tuple(sorted((k, _norm(v)) for k, v in acc.items() if v != 0))
        return cls(d, grade, terms)

    @classmethod
    def monomial(cls, d: int, mono: Iterable[int]) -> "CycleClass":
        mono = tuple(mono)
        return cls.from_dict(d, len(mono), {mono: 1})

    @classmethod
    def point(cls, d: int) -> "CycleClass":
        return cls.monomial(d, range(1, d + 1))

    @classmethod
    def from_divisor(cls, cls_: Sequence) -> "CycleClass":
        d = len(cls_)
        return cls.from_dict(d, 1, {(i + 1,): c for i, c in enumerate(cls_) if c != 0})

    @classmethod
    def from_vector(cls, d: int, grade: int, vec: Sequence) -> "CycleClass":
        basis = list(combinations(range(1, d + 1), grade))
        if len(vec) != len(basis):
            raise RankMismatch("vector length does not match C(d, k)", length=len(vec), expected=len(basis))
        return cls.from_dict(d, grade, dict(zip(basis, vec)))

    @property
    def coeffs(self) -> dict[Monomial, int | Fraction]:
        return dict(self.terms)

    def vector(self) -> list:
        """Coefficients over the lexicographically ordered square-free basis."""
        c = self.coeffs
        return [c.get(m, 0) for m in combinations(range(1, self.d + 1), self.grade)]

    def _compatible(self, other: "CycleClass"):
        if (self.d, self.grade) != (other.d, other.grade):
            raise RankMismatch("incompatible cycle classes")

    def __add__(self, other: "CycleClass") -> "CycleClass":
        self._compatible(other)
        acc = dict(self.terms)
        for k, v in other.terms:
            acc[k] = acc.get(k, 0) + v
        return CycleClass.from_dict(self.d, self.grade, acc)

    def __neg__(self):
        return CycleClass(self.d, self.grade, tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return CycleClass.from_dict(self.d, self.grade, {m: k * v for m, v in self.terms})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def text(self, symbol: str = "X") -> str:
        keys = [m for m, _ in self.terms]
        return format_combination([v for _, v in self.terms], lambda i: symbol + "".join(map(str, keys[i])))

    def to_json(self) -> dict[str, int | str]:
        return {",".join(map(str, m)): (v if isinstance(v, int) else str(v)) for m, v in self.terms}

    def __repr__(self):
        return f"CycleClass(A^{self.grade}: {self.text()})"


def beta_roots(bsw: BSWord) -> list[tuple[WeylElement, int]]:
    """``beta_i`` as (ordinary prefix u_{i-1}, simple index a_i) pairs."""
    u = bsw.ordinary_prefixes
    return [(u[i], bsw.word[i]) for i in range(bsw.d)]


def beta_weights(bsw: BSWord) -> list[Weight]:
    return [u.apply(bsw.rs.simple_root(a)) for u, a in beta_roots(bsw)]


class ChowRing:
    """Multiplication table of A^*(X(word)); build with :func:`chow_ring`."""

    def __init__(self, bsw: BSWord):
        self.bsw = bsw
        self.d = bsw.d
        self.c = self._beta_pairings()
        self._memo: dict[tuple[int, ...], dict[Monomial, int]] = {}

    def _beta_pairings(self) -> dict[tuple[int, int], int]:
        # <beta_j, beta_i^vee> = <s_{a_i} ... s_{a_{j-1}} alpha_{a_j}, alpha_{a_i}^vee> for i < j
        rs, word = self.bsw.rs, self.bsw.word
        table = {}
        for j in range(1, self.d + 1):
            mu = rs.simple_root(word[j - 1])
            for i in range(j - 1, 0, -1):
                a = word[i - 1]
                mu = rs.reflect(a, mu)
                table[(j, i)] = mu[a - 1]
        return table

    def beta_pairing(self, j: int, i: int) -> int:
        """``<beta_j, beta_i^vee>`` for ``i < j``."""
        return self.c[(j, i)]

    def square(self, j: int) -> CycleClass:
        if not 1 <= j <= self.d:
            raise PreconditionError(f"position {j} outside 1..{self.d}")
        if self.d < 2:
            raise PreconditionError("x_j^2 lives in A^2, which needs d >= 2")
        return CycleClass.from_dict(
            self.d, 2, {(i, j): -self.c[(j, i)] for i in range(1, j) if self.c[(j, i)]}
        )

    def reduce_exponents(self, e: tuple[int, ...]) -> dict[Monomial, int]:
        """Reduce the monomial with exponent vector ``e`` to square-free form."""
        hit = self._memo.get(e)
        if hit is not None:
            return hit
        total = sum(e)
        if total > self.d:
            out: dict[Monomial, int] = {}
        else:
            j = next((k for k in range(self.d - 1, -1, -1) if e[k] >= 2), None)
            if j is None:
                out = {tuple(k + 1 for k in range(self.d) if e[k]): 1}
            else:
                out = {}
                for i in range(j):
                    coef = -self.c[(j + 1, i + 1)]
                    if coef == 0:
                        continue
                    f = list(e)
                    f[j] -= 1
                    f[i] += 1
                    for mono, v in self.reduce_exponents(tuple(f)).items():
                        out[mono] = out.get(mono, 0) + coef * v
                out = {k: v for k, v in out.items() if v}
        self._memo[e] = out
        return out

    def multiply(self, u: CycleClass, v: CycleClass) -> CycleClass:
        if u.d != self.d or v.d != self.d:
            raise RankMismatch("cycle classes on a different variety", d=self.d)
        k = u.grade + v.grade
        if k > self.d:
            raise PreconditionError(f"grade {k} exceeds dimension {self.d}", grade=k, d=self.d)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in u.terms:
            for m2, c2 in v.terms:
                e = [0] * self.d
                for i in m1 + m2:
                    e[i - 1] += 1
                for mono, c in self.reduce_exponents(tuple(e)).items():
                    acc[mono] = acc.get(mono, 0) + c1 * c2 * c
        return CycleClass.from_dict(self.d, k, acc)

    def product(self, *classes: CycleClass) -> CycleClass:
        out = CycleClass.monomial(self.d, ())
        for c in classes:
            out = self.multiply(out, c)
        return out

    def degree(self, c: CycleClass) -> int | Fraction:
        if c.grade != self.d:
            raise PreconditionError(f"degree needs a class of grade {self.d}, got {c.grade}")
        return c.coeffs.get(tuple(range(1, self.d + 1)), 0)

    def pairing_matrix(self, k: int) -> list[list[int]]:
        if not 0 <= k <= self.d:
            raise PreconditionError(f"grade {k} outside 0..{self.d}")
        rows = list(combinations(range(1, self.d + 1), k))
        cols = list(combinations(range(1, self.d + 1), self.d - k))
        return [
            [self.degree(self.multiply(CycleClass.monomial(self.d, r), CycleClass.monomial(self.d, c))) for c in cols]
            for r in rows
        ]

    def intersection_matrix(self, classes: Sequence[CycleClass]) -> list[list]:
        """Degrees of all pairwise products of the given classes."""
        return [[self.degree(self.multiply(a, b)) for b in classes] for a in classes]


@lru_cache(maxsize=4096)
def chow_ring(bsw: BSWord) -> ChowRing:
    return ChowRing(bsw)


def square_reduce(bsw: BSWord, j: int) -> CycleClass:
    return chow_ring(bsw).square(j)


def multiply(bsw: BSWord, u: CycleClass, v: CycleClass) -> CycleClass:
    return chow_ring(bsw).multiply(u, v)


def degree(bsw: BSWord, c: CycleClass) -> int | Fraction:
    return chow_ring(bsw).degree(c)


def pairing_matrix(bsw: BSWord, k: int) -> list[list[int]]:
    return chow_ring(bsw).pairing_matrix(k)


def fiber_pairing(bsw: BSWord, cls: DivisorClass) -> int | Fraction:
    """Degree of ``cls * x_1 ... x_{d-1}``: the pairing with a fiber of the last P^1-bundle."""
    ring = chow_ring(bsw)
    curve = CycleClass.monomial(bsw.d, range(1, bsw.d))
    return ring.degree(ring.multiply(CycleClass.from_divisor(cls), curve))
