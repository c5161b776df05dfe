"""Word-level data of a Bott-Samelson variety X(a_1, ..., a_d).

Positions are 1-based, matching the standard divisors X_1, ..., X_d.
Divisor classes are coefficient vectors over the basis [X_1], ..., [X_d].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, RankMismatch
from .root_system import RootSystem, Weight, fundamental_weight
from .weyl_group import WeylElement, demazure_product, from_word, identity


class DivisorClass(tuple):
    """Exact rational coefficients over [X_1], ..., [X_d]."""

    def __new__(cls, coeffs: Iterable = ()):
        return super().__new__(cls, (Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls, d: int) -> "DivisorClass":
        return cls([0] * d)

    @classmethod
    def unit(cls, d: int, i: int) -> "DivisorClass":
        _check_position(d, i, lo=1)
        return cls(int(k == i - 1) for k in range(d))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(self)

    def coefficient(self, i: int) -> Fraction:
        _check_position(len(self), i, lo=1)
        return self[i - 1]

    def _check(self, other):
        if len(other) != len(self):
            raise RankMismatch("divisor classes on different varieties", left=len(self), right=len(other))

    def __add__(self, other):
        self._check(other)
        return DivisorClass(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return DivisorClass(a - b for a, b in zip(self, other))

    def __neg__(self):
        return DivisorClass(-a for a in self)

    def __mul__(self, k):
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return DivisorClass(k * a for a in self)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return DivisorClass(a / k for a in self)

    def extend(self, d: int) -> "DivisorClass":
        """Pad with zeros: pullback along a truncation map."""
        if d < len(self):
            raise ValueError("cannot extend to a shorter word")
        return DivisorClass(list(self) + [0] * (d - len(self)))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"class {self.text()} is not integral")
        return tuple(int(c) for c in self)

    def text(self, symbol: str = "X") -> str:
        return format_combination(self, lambda i: f"{symbol}{i + 1}")

    def __repr__(self):
        return f"DivisorClass({self.text()})"


def format_combination(coeffs: Sequence, label) -> str:
    """Render a linear combination as ``"X1 - X2 + 2X4"``."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        body = label(i) if mag == 1 else f"{mag}{label(i)}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _check_position(d: int, i: int, lo: int = 0) -> None:
    if not isinstance(i, int) or not lo <= i <= d:
        raise IndexOutOfRange(f"position {i} outside {lo}..{d}", position=i, length=d)


@dataclass(frozen=True, eq=False)
class BSWord:
    rs: RootSystem
    word: tuple[int, ...]
    prefixes: tuple[WeylElement, ...]
    reduced_step: tuple[bool, ...]

    @property
    def d(self) -> int:
        return len(self.word)

    @property
    def cartan(self):
        return self.rs.cartan

    @property
    def w(self) -> WeylElement:
        return self.prefixes[-1]

    def letter(self, i: int) -> int:
        """Simple-root index of position ``i`` (1-based)."""
        _check_position(self.d, i, lo=1)
        return self.word[i - 1]

    @property
    def is_reduced(self) -> bool:
        return all(self.reduced_step)

    @property
    def sigma_positions(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, r in enumerate(self.reduced_step) if not r)

    @cached_property
    def ordinary_prefixes(self) -> tuple[WeylElement, ...]:
        """``u_i = s_{a_1} ... s_{a_i}`` (ordinary product), ``i = 0..d``."""
        out = [identity(self.rs)]
        for j in self.word:
            out.append(out[-1].multiply_simple(j))
        return tuple(out)

    @cached_property
    def o_rows(self) -> list[DivisorClass]:
        return o_basis_matrix(self)

    def truncate(self, i: int) -> "BSWord":
        _check_position(self.d, i)
        return BSWord(self.rs, self.word[:i], self.prefixes[: i + 1], self.reduced_step[:i])

    def delete(self, j: int) -> "BSWord":
        """The word with position ``j`` removed (the standard divisor X_j)."""
        _check_position(self.d, j, lo=1)
        return analyze(self.word[: j - 1] + self.word[j:], self.rs)

    def __eq__(self, other):
        return isinstance(other, BSWord) and self.rs == other.rs and self.word == other.word

    def __hash__(self):
        return hash((self.rs, self.word))

    def __repr__(self):
        return f"BSWord({self.rs.name}, {list(self.word)})"

    def to_json(self) -> dict:
        return {
            "type": self.rs.name,
            "word": list(self.word),
            "d": self.d,
            "reduced": self.is_reduced,
            "reduced_step": list(self.reduced_step),
            "sigma_positions": list(self.sigma_positions),
            "prefix_lengths": [w.length for w in self.prefixes],
            "demazure_product": self.w.to_json(),
        }


def analyze(word: Sequence[int], rs: RootSystem) -> BSWord:
    word = rs.check_word(tuple(word))
    prefixes = [identity(rs)]
    flags = []
    for j in word:
        nxt = prefixes[-1].star(j)
        flags.append(nxt.length > prefixes[-1].length)
        prefixes.append(nxt)
    return BSWord(rs, word, tuple(prefixes), tuple(flags))


def expand_line_bundle(bsw: BSWord, i: int, lam: Sequence) -> DivisorClass:
    """X-coordinates of O_i(lam).

    The coefficient of X_j (j <= i) is ``<s_j s_{j+1} ... s_i lam, alpha_{a_j}^vee>``;
    coefficients beyond ``i`` vanish.
    """
    _check_position(bsw.d, i)
    if len(lam) != bsw.rs.rank:
        raise RankMismatch("weight rank does not match root system", weight=len(lam), rank=bsw.rs.rank)
    coeffs = [Fraction(0)] * bsw.d
    mu = Weight(lam)
    for j in range(i, 0, -1):
        a = bsw.word[j - 1]
        mu = bsw.rs.reflect(a, mu)
        coeffs[j - 1] = Fraction(mu[a - 1])
    return DivisorClass(coeffs)


def o_basis_matrix(bsw: BSWord) -> list[DivisorClass]:
    """Row ``i`` is the X-expansion of O_i(1) = O_i(-varpi_{a_i}); lower uni-triangular."""
    return [
        expand_line_bundle(bsw, i, -fundamental_weight(bsw.rs.rank, bsw.word[i - 1]))
        for i in range(1, bsw.d + 1)
    ]


def x_to_o_coords(bsw: BSWord, cls: Sequence) -> tuple[Fraction, ...]:
    """Coordinates of a class in the basis O_1(1), ..., O_d(1)."""
    if len(cls) != bsw.d:
        raise RankMismatch("class length does not match word", length=len(cls), d=bsw.d)
    rows = _o_rows(bsw)
    n = [Fraction(0)] * bsw.d
    for j in range(bsw.d - 1, -1, -1):
        n[j] = Fraction(cls[j]) - sum(n[i] * rows[i][j] for i in range(j + 1, bsw.d))
    return tuple(n)


def o_to_x_coords(bsw: BSWord, n: Sequence) -> DivisorClass:
    if len(n) != bsw.d:
        raise RankMismatch("coordinate length does not match word", length=len(n), d=bsw.d)
    rows = _o_rows(bsw)
    return DivisorClass(sum(Fraction(n[i]) * rows[i][j] for i in range(bsw.d)) for j in range(bsw.d))


def _o_rows(bsw: BSWord) -> list[DivisorClass]:
    return bsw.o_rows


def canonical_class(bsw: BSWord) -> DivisorClass:
    """The anticanonical class -K = sum (r_i + 1) X_i with r_i = <rho, gamma_i^vee>."""
    return DivisorClass(r + 1 for r in anticanonical_r(bsw))


def anticanonical_r(bsw: BSWord) -> tuple[int, ...]:
    """``r_i = <s_{i+1} ... s_d rho, alpha_{a_i}^vee>`` for each position."""
    out = [0] * bsw.d
    mu = bsw.rs.rho
    for i in range(bsw.d, 0, -1):
        a = bsw.word[i - 1]
        out[i - 1] = mu[a - 1]
        mu = bsw.rs.reflect(a, mu)
    return tuple(out)
