"""Cartan data, weights and roots.

Weights are stored in fundamental-weight coordinates, so that the pairing
``<lambda, alpha_j^vee>`` is a coordinate read.  Simple-root indices are
1-based throughout the public API.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import CartanError, IndexOutOfRange, NonFiniteTypeError, RankMismatch

DEFAULT_ROOT_CAP = 10_000


@dataclass(frozen=True)
class CartanMatrix:
    """A generalized Cartan matrix with ``entries[i][j] = <alpha_j, alpha_i^vee>``."""

    entries: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise CartanError("Cartan matrix must have positive rank")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise CartanError("Cartan matrix must be square", row=i + 1)
            if row[i] != 2:
                raise CartanError("diagonal entries must equal 2", row=i + 1)
        for i, j in combinations(range(n), 2):
            a, b = rows[i][j], rows[j][i]
            if a > 0 or b > 0:
                raise CartanError("off-diagonal entries must be <= 0", entry=[i + 1, j + 1])
            if (a == 0) != (b == 0):
                raise CartanError("a_ij = 0 must imply a_ji = 0", entry=[i + 1, j + 1])

    @property
    def rank(self) -> int:
        return len(self.entries)

    def column(self, j: int) -> tuple[int, ...]:
        """Column ``j`` (1-based): the fundamental-weight coordinates of alpha_j."""
        check_index(self.rank, j)
        return tuple(row[j - 1] for row in self.entries)

    def transpose(self) -> "CartanMatrix":
        return CartanMatrix(tuple(zip(*self.entries)))

    @classmethod
    def from_type(cls, name: str) -> "CartanMatrix":
        return cartan_from_type(name)

    @classmethod
    def from_json(cls, data: dict) -> "CartanMatrix":
        try:
            rank = int(data["rank"])
            matrix = data["matrix"]
        except (KeyError, TypeError, ValueError) as exc:
            raise CartanError('expected {"rank": n, "matrix": [[...], ...]}') from exc
        if not isinstance(matrix, list) or len(matrix) != rank:
            raise CartanError("matrix must have `rank` rows", rank=rank)
        for row in matrix:
            if not isinstance(row, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
                raise CartanError("matrix entries must be integers")
        return cls(tuple(tuple(row) for row in matrix))

    @classmethod
    def load(cls, path: str | Path) -> "CartanMatrix":
        with open(path, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise CartanError(f"cannot parse {path}: {exc}") from exc
        return cls.from_json(data)

    def to_json(self) -> dict:
        return {"rank": self.rank, "matrix": [list(r) for r in self.entries]}


def check_index(rank: int, j: int) -> None:
    if not isinstance(j, int) or not 1 <= j <= rank:
        raise IndexOutOfRange(f"simple root index {j} outside 1..{rank}", index=j, rank=rank)


# Simple roots in the usual Euclidean models (Bourbaki numbering).
def _euclidean_simple_roots(kind: str, n: int) -> list[list[Fraction]]:
    def e(i: int, dim: int) -> list[Fraction]:
        v = [Fraction(0)] * dim
        v[i] = Fraction(1)
        return v

    def sub(a, b):
        return [x - y for x, y in zip(a, b)]

    def add(a, b):
        return [x + y for x, y in zip(a, b)]

    if kind == "A":
        return [sub(e(i, n + 1), e(i + 1, n + 1)) for i in range(n)]
    chain = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
    if kind == "B":
        return chain + [e(n - 1, n)]
    if kind == "C":
        return chain + [[2 * x for x in e(n - 1, n)]]
    if kind == "D":
        return chain + [add(e(n - 2, n), e(n - 1, n))]
    if kind == "G":
        return [[Fraction(1), Fraction(-1), Fraction(0)], [Fraction(-2), Fraction(1), Fraction(1)]]
    if kind == "F":
        h = Fraction(1, 2)
        return [
            [0, 1, -1, 0],
            [0, 0, 1, -1],
            [0, 0, 0, 1],
            [h, -h, -h, -h],
        ]
    raise AssertionError(kind)


_E_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def cartan_from_type(name: str) -> CartanMatrix:
    """Cartan matrix of a finite type given as ``"A2"``, ``"C3"``, ``"G2"``, ..."""
    m = _TYPE_RE.match(name)
    if not m:
        raise CartanError(f"unknown root system type {name!r}", type=name)
    kind, n = m.group(1).upper(), int(m.group(2))
    valid = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }[kind]
    if not valid:
        raise CartanError(f"unknown root system type {name!r}", type=name)
    label = f"{kind}{n}"
    if kind == "E":
        entries = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for a, b in _E_EDGES:
            if a <= n and b <= n:
                entries[a - 1][b - 1] = entries[b - 1][a - 1] = -1
        return CartanMatrix(tuple(map(tuple, entries)), name=label)
    roots = _euclidean_simple_roots(kind, n)

    def ip(a, b):
        return sum(Fraction(x) * Fraction(y) for x, y in zip(a, b))

    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            val = 2 * ip(roots[j], roots[i]) / ip(roots[i], roots[i])
            assert val.denominator == 1
            row.append(int(val))
        entries.append(tuple(row))
    return CartanMatrix(tuple(entries), name=label)


class Weight(tuple):
    """A weight in fundamental-weight coordinates (``coords[i] = <lambda, alpha_{i+1}^vee>``).

    Coordinates are integers, or exact rationals where a rational weight is
    needed (e.g. the solution of a linear system).
    """

    def __new__(cls, coords: Iterable = ()):
        return super().__new__(cls, (_normalize(x) for x in coords))

    @property
    def coords(self) -> tuple:
        return tuple(self)

    @property
    def rank(self) -> int:
        return len(self)

    def _check(self, other: Sequence) -> None:
        if len(other) != len(self):
            raise RankMismatch("weights of different rank", left=len(self), right=len(other))

    def __add__(self, other):
        self._check(other)
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, k):
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return Weight(k * a for a in self)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self)

    def __repr__(self):
        return f"Weight({list(self)!r})"


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if isinstance(x, bool):
        raise TypeError("boolean weight coordinate")
    return x


def zero_weight(rank: int) -> Weight:
    return Weight([0] * rank)


def fundamental_weight(rank: int, j: int) -> Weight:
    check_index(rank, j)
    return Weight(int(i == j - 1) for i in range(rank))


def rho(rank: int) -> Weight:
    return Weight([1] * rank)


def simple_root(cartan: CartanMatrix, j: int) -> Weight:
    return Weight(cartan.column(j))


def pairing(lam: Sequence, j: int) -> int | Fraction:
    """``<lambda, alpha_j^vee>``, i.e. coordinate ``j`` (1-based) of the weight."""
    check_index(len(lam), j)
    return lam[j - 1]


def reflect(cartan: CartanMatrix, j: int, lam: Sequence) -> Weight:
    """The simple reflection ``s_j`` applied to ``lam``: ``lam - <lam, alpha_j^vee> alpha_j``."""
    check_index(cartan.rank, j)
    if len(lam) != cartan.rank:
        raise RankMismatch("weight rank does not match Cartan matrix", weight=len(lam), cartan=cartan.rank)
    c = lam[j - 1]
    if c == 0:
        return Weight(lam)
    return Weight(x - c * row[j - 1] for x, row in zip(lam, cartan.entries))


def reflect_root_coords(cartan: CartanMatrix, j: int, root: Sequence[int]) -> tuple[int, ...]:
    """``s_j`` acting on a vector in simple-root coordinates."""
    c = sum(cartan.entries[j - 1][i] * x for i, x in enumerate(root))
    if c == 0:
        return tuple(root)
    out = list(root)
    out[j - 1] -= c
    return tuple(out)


def root_sign(root: Sequence[int]) -> int:
    """+1 for a positive root, -1 for a negative one (by simple-root coordinates)."""
    if all(x >= 0 for x in root) and any(root):
        return 1
    if all(x <= 0 for x in root) and any(root):
        return -1
    raise ValueError(f"{tuple(root)} is not a root")


@dataclass(frozen=True)
class RootDatum:
    cartan: CartanMatrix
    positive_roots: tuple[tuple[int, ...], ...]
    finite: bool

    def root_to_weight(self, root: Sequence[int]) -> Weight:
        return root_to_weight(self.cartan, root)

    def require_finite(self, what: str = "this operation") -> None:
        if not self.finite:
            raise NonFiniteTypeError(f"{what} requires a finite root system")


def root_to_weight(cartan: CartanMatrix, root: Sequence[int]) -> Weight:
    """Convert simple-root coordinates to fundamental-weight coordinates."""
    return Weight(sum(row[i] * c for i, c in enumerate(root)) for row in cartan.entries)


def enumerate_positive_roots(cartan: CartanMatrix, cap: int = DEFAULT_ROOT_CAP) -> RootDatum:
    """Close the simple roots under simple reflections, keeping positive images.

    If more than ``cap`` roots turn up the matrix is declared non-finite and
    the partial list is discarded.
    """
    n = cartan.rank
    simples = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    seen = set(simples)
    order = list(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for j in range(1, n + 1):
                s = reflect_root_coords(cartan, j, r)
                if s in seen or not all(x >= 0 for x in s):
                    continue
                seen.add(s)
                order.append(s)
                nxt.append(s)
                if len(order) > cap:
                    return RootDatum(cartan, (), False)
        frontier = nxt
    order.sort(key=lambda r: (sum(r), r))
    return RootDatum(cartan, tuple(order), True)


class RootSystem:
    """A Cartan matrix together with lazily computed root data."""

    def __init__(self, cartan: CartanMatrix, cap: int = DEFAULT_ROOT_CAP):
        self.cartan = cartan
        self.cap = cap

    @classmethod
    def from_type(cls, name: str) -> "RootSystem":
        return cls(cartan_from_type(name))

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def name(self) -> str:
        return self.cartan.name or f"GCM{self.cartan.to_json()['matrix']}"

    @cached_property
    def datum(self) -> RootDatum:
        return enumerate_positive_roots(self.cartan, self.cap)

    @property
    def finite(self) -> bool:
        return self.datum.finite

    def require_finite(self, what: str = "this operation") -> None:
        self.datum.require_finite(what)

    def simple_root(self, j: int) -> Weight:
        return simple_root(self.cartan, j)

    def fundamental_weight(self, j: int) -> Weight:
        return fundamental_weight(self.rank, j)

    @property
    def rho(self) -> Weight:
        return rho(self.rank)

    def reflect(self, j: int, lam: Sequence) -> Weight:
        return reflect(self.cartan, j, lam)

    def check_word(self, word: Sequence[int]) -> tuple[int, ...]:
        for j in word:
            check_index(self.rank, j)
        return tuple(word)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __repr__(self):
        return f"RootSystem({self.name})"
