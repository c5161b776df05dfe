"""Weyl group elements, Demazure products and Bruhat order.

An element is stored by two integer matrices: its action on weights (in
fundamental-weight coordinates) and its action on the root lattice (in
simple-root coordinates).  The second one decides positivity of roots and
keeps equality faithful for non-finite Cartan matrices, where the action on
the span of the fundamental weights alone can forget translations.

Words act left to right: the word ``(a, b, c)`` is the product
``s_a s_b s_c``, and right multiplication by ``s_j`` appends ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import RankMismatch
from .root_system import (
    CartanMatrix,
    RootDatum,
    RootSystem,
    Weight,
    check_index,
    root_sign,
    root_to_weight,
)

IntMatrix = tuple[tuple[int, ...], ...]


def _cartan(x: RootSystem | CartanMatrix) -> CartanMatrix:
    return x.cartan if isinstance(x, RootSystem) else x


@dataclass(frozen=True)
class WeylElement:
    cartan: CartanMatrix = field(compare=False, repr=False)
    matrix: IntMatrix
    root_matrix: IntMatrix = field(repr=False)
    length: int = field(compare=False)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def is_identity(self) -> bool:
        return self.length == 0

    def apply(self, lam: Sequence) -> Weight:
        if len(lam) != self.rank:
            raise RankMismatch("weight rank does not match group", weight=len(lam), group=self.rank)
        return Weight(sum(a * x for a, x in zip(row, lam)) for row in self.matrix)

    def apply_root(self, root: Sequence[int]) -> tuple[int, ...]:
        """Action on a vector in simple-root coordinates."""
        return tuple(sum(a * x for a, x in zip(row, root)) for row in self.root_matrix)

    def image_of_simple_root(self, j: int) -> tuple[int, ...]:
        """``w(alpha_j)`` in simple-root coordinates."""
        return tuple(row[j - 1] for row in self.root_matrix)

    def has_right_descent(self, j: int) -> bool:
        check_index(self.rank, j)
        return root_sign(self.image_of_simple_root(j)) < 0

    def has_left_descent(self, j: int) -> bool:
        # w^{-1}(alpha_j) < 0  iff  <w rho, alpha_j^vee> < 0
        check_index(self.rank, j)
        return sum(self.matrix[j - 1]) < 0

    def multiply_simple(self, j: int) -> "WeylElement":
        """``w * s_j`` with incremental length."""
        check_index(self.rank, j)
        a = self.cartan.entries
        jj = j - 1
        up = root_sign(self.image_of_simple_root(j)) > 0
        # weight action: only column j changes
        mat = []
        for row in self.matrix:
            wa = sum(row[k] * a[k][jj] for k in range(self.rank))
            new = list(row)
            new[jj] = row[jj] - wa
            mat.append(tuple(new))
        # root action: W[r][c] - W[r][j] * a[j][c]
        arow = a[jj]
        rmat = tuple(
            tuple(row[c] - row[jj] * arow[c] for c in range(self.rank)) for row in self.root_matrix
        )
        return WeylElement(self.cartan, tuple(mat), rmat, self.length + (1 if up else -1))

    def left_multiply_simple(self, j: int) -> "WeylElement":
        """``s_j * w``."""
        check_index(self.rank, j)
        a = self.cartan.entries
        jj = j - 1
        down = self.has_left_descent(j)
        wj = self.matrix[jj]
        mat = tuple(
            tuple(x - a[r][jj] * y for x, y in zip(row, wj)) for r, row in enumerate(self.matrix)
        )
        rm = [list(row) for row in self.root_matrix]
        new_j = [
            rm[jj][c] - sum(a[jj][i] * self.root_matrix[i][c] for i in range(self.rank))
            for c in range(self.rank)
        ]
        rm[jj] = new_j
        return WeylElement(self.cartan, mat, tuple(map(tuple, rm)), self.length + (-1 if down else 1))

    def star(self, j: int) -> "WeylElement":
        """Demazure product ``w * s_j``: the longer of ``w s_j`` and ``w``."""
        return self if self.has_right_descent(j) else self.multiply_simple(j)

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        word: list[int] = []
        w = self
        while w.length > 0:
            j = next(j for j in range(1, self.rank + 1) if w.has_right_descent(j))
            word.append(j)
            w = w.multiply_simple(j)
        return tuple(reversed(word))

    def inverse(self) -> "WeylElement":
        return from_word(self.cartan, reversed(self.reduced_word))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.cartan != self.cartan:
            raise RankMismatch("elements of different Weyl groups")
        w = self
        for j in other.reduced_word:
            w = w.multiply_simple(j)
        return w

    def to_json(self) -> dict:
        return {"matrix": [list(r) for r in self.matrix], "length": self.length, "reduced_word": list(self.reduced_word)}


def identity(rs: RootSystem | CartanMatrix) -> WeylElement:
    c = _cartan(rs)
    n = c.rank
    eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return WeylElement(c, eye, eye, 0)


def simple_reflection(rs: RootSystem | CartanMatrix, j: int) -> WeylElement:
    return identity(rs).multiply_simple(j)


def from_word(rs: RootSystem | CartanMatrix, word: Iterable[int]) -> WeylElement:
    """Ordinary product ``s_{word[0]} s_{word[1]} ...``."""
    w = identity(rs)
    for j in word:
        w = w.multiply_simple(j)
    return w


def apply(w: WeylElement, lam: Sequence) -> Weight:
    return w.apply(lam)


def multiply_simple(w: WeylElement, j: int) -> WeylElement:
    return w.multiply_simple(j)


def demazure_product(rs: RootSystem | CartanMatrix, word: Iterable[int]) -> WeylElement:
    w = identity(rs)
    for j in word:
        w = w.star(j)
    return w


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """Bruhat comparison ``v <= w`` by the left-descent recursion."""
    if v.cartan != w.cartan:
        raise RankMismatch("elements of different Weyl groups", left=v.rank, right=w.rank)
    while w.length > 0:
        if v.length > w.length:
            return False
        j = next(j for j in range(1, w.rank + 1) if w.has_left_descent(j))
        if v.has_left_descent(j):
            v = v.left_multiply_simple(j)
        w = w.left_multiply_simple(j)
    return v.length == 0


def inversion_set(w: WeylElement, datum: RootDatum) -> list[Weight]:
    """``R+ ∩ w(R-)`` as weights; its size is ``length(w)``."""
    datum.require_finite("inversion_set")
    winv = w.inverse()
    return [
        root_to_weight(datum.cartan, r)
        for r in datum.positive_roots
        if root_sign(winv.apply_root(r)) < 0
    ]


def longest_element(datum: RootDatum | RootSystem) -> WeylElement:
    """Greedy ascent to the unique element of maximal length."""
    if isinstance(datum, RootSystem):
        datum = datum.datum
    datum.require_finite("longest_element")
    w = identity(datum.cartan)
    n = datum.cartan.rank
    while True:
        j = next((j for j in range(1, n + 1) if not w.has_right_descent(j)), None)
        if j is None:
            return w
        w = w.multiply_simple(j)


def all_elements(rs: RootSystem | CartanMatrix) -> list[WeylElement]:
    """Every element of a finite Weyl group, by breadth-first search."""
    if isinstance(rs, RootSystem):
        rs.require_finite("all_elements")
    e = identity(rs)
    seen = {e}
    out = [e]
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for j in range(1, w.rank + 1):
                v = w.multiply_simple(j)
                if v not in seen:
                    seen.add(v)
                    out.append(v)
                    nxt.append(v)
        frontier = nxt
    return out
