"""Torus-fixed points, tangent weights and the dense B-orbit criterion."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from . import _linalg as la
from .bs_word import BSWord
from .errors import PreconditionError, RankMismatch
from .root_system import Weight
from .weyl_group import WeylElement, demazure_product, from_word, identity, longest_element


@dataclass(frozen=True)
class FixedPoint:
    """``choice[i]`` is True when the i-th factor is ``s_{a_i}`` rather than ``e``."""

    choice: tuple[bool, ...]

    @classmethod
    def from_indices(cls, d: int, selected: Sequence[int]) -> "FixedPoint":
        sel = set(selected)
        return cls(tuple(i in sel for i in range(1, d + 1)))

    def product(self, bsw: BSWord) -> WeylElement:
        """Ordinary product of the chosen reflections: the image in G/B."""
        _check_length(bsw, self)
        return from_word(bsw.rs, [a for a, c in zip(bsw.word, self.choice) if c])


def _check_length(bsw: BSWord, eps: FixedPoint) -> None:
    if len(eps.choice) != bsw.d:
        raise RankMismatch("fixed point length does not match word", length=len(eps.choice), d=bsw.d)


def fixed_points(bsw: BSWord) -> Iterator[FixedPoint]:
    for bits in product((False, True), repeat=bsw.d):
        yield FixedPoint(bits)


def tangent_weights(bsw: BSWord, eps: FixedPoint) -> list[Weight]:
    """The i-th weight is ``(e_1 ... e_i)(-alpha_{a_i})``."""
    _check_length(bsw, eps)
    u = identity(bsw.rs)
    out = []
    for a, c in zip(bsw.word, eps.choice):
        if c:
            u = u.multiply_simple(a)
        out.append(u.apply(-bsw.rs.simple_root(a)))
    return out


def greedy_reduced_subword(bsw: BSWord) -> tuple[int, ...]:
    """Leftmost positions whose letters strictly increase the running ordinary product."""
    u = identity(bsw.rs)
    keep = []
    for i, a in enumerate(bsw.word, start=1):
        if not u.has_right_descent(a):
            u = u.multiply_simple(a)
            keep.append(i)
    return tuple(keep)


@dataclass(frozen=True)
class DenseOrbitReport:
    subword: tuple[int, ...]
    characters: tuple[Weight, ...]
    rank: int

    @property
    def satisfied(self) -> bool:
        return self.rank == len(self.characters)

    @property
    def verdict(self) -> str:
        return "satisfied" if self.satisfied else "inconclusive"

    def to_json(self) -> dict:
        return {
            "satisfied": self.satisfied,
            "verdict": self.verdict,
            "subword": list(self.subword),
            "characters": [[int(x) for x in c] for c in self.characters],
            "rank": self.rank,
        }


def dense_orbit_criterion(bsw: BSWord, subword: Sequence[int] | None = None) -> DenseOrbitReport:
    """Sufficient test for a dense B-orbit.

    Each skipped letter contributes the character ``u(alpha_{a_k})``, where ``u``
    is the product of the selected letters before it.  Independence of these
    characters implies a dense orbit; dependence proves nothing.
    """
    if subword is None:
        sub = greedy_reduced_subword(bsw)
    else:
        sub = tuple(subword)
        if list(sub) != sorted(set(sub)) or any(not 1 <= i <= bsw.d for i in sub):
            raise PreconditionError("subword must be increasing positions within the word", subword=list(sub))
        letters = [bsw.word[i - 1] for i in sub]
        w = from_word(bsw.rs, letters)
        if w.length != len(sub) or w != bsw.w:
            raise PreconditionError("subword is not a reduced word for the Demazure product", subword=list(sub))
    chosen = set(sub)
    u = identity(bsw.rs)
    chars = []
    for i, a in enumerate(bsw.word, start=1):
        if i in chosen:
            u = u.multiply_simple(a)
        else:
            chars.append(u.apply(bsw.rs.simple_root(a)))
    rank = la.rank(chars) if chars else 0
    return DenseOrbitReport(sub, tuple(chars), rank)


def aut_stabilization(bsw: BSWord) -> list[bool]:
    """``flag[i-1]`` is True when the first ``i`` letters already generate all of G."""
    w0 = longest_element(bsw.rs)
    return [p == w0 for p in bsw.prefixes[1:]]
