"""Exact rational polyhedral cones.

Cones are given by generators.  Duality is computed with the double
description method, processing inequalities one at a time and keeping a
basis of the current lineality space separately from the rays.  Vectors are
kept as primitive integer tuples so the iteration stays in integer
arithmetic; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import _linalg as la
from .errors import RankMismatch

Vector = tuple[int, ...]


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _prim(v: Sequence) -> Vector | None:
    if not any(v):
        return None
    return la.primitive(v)


@dataclass(frozen=True, eq=False)
class RationalCone:
    """Conical hull of finitely many rays in ``Q^ambient_dim``."""

    ambient_dim: int
    rays: tuple[Vector, ...]

    def __init__(self, ambient_dim: int, rays: Iterable[Sequence] = ()):
        seen: dict[Vector, None] = {}
        for r in rays:
            if len(r) != ambient_dim:
                raise RankMismatch("ray of wrong dimension", expected=ambient_dim, got=len(r))
            p = _prim(r)
            if p is None:
                raise ValueError("zero vector is not a ray")
            seen.setdefault(p, None)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "rays", tuple(seen))

    def __eq__(self, other):
        return (
            isinstance(other, RationalCone)
            and self.ambient_dim == other.ambient_dim
            and set(self.rays) == set(other.rays)
        )

    def __hash__(self):
        return hash((self.ambient_dim, frozenset(self.rays)))

    def __len__(self):
        return len(self.rays)

    def __repr__(self):
        return f"RationalCone(dim={self.ambient_dim}, rays={list(self.rays)})"

    def sorted(self) -> "RationalCone":
        return RationalCone(self.ambient_dim, sorted(self.rays))

    @cached_property
    def inequalities(self) -> tuple[Vector, ...]:
        """Generators of the dual cone under the standard inner product."""
        return dual_cone(self).rays

    @cached_property
    def span_rank(self) -> int:
        return la.rank(self.rays) if self.rays else 0

    def is_full_dimensional(self) -> bool:
        return self.span_rank == self.ambient_dim

    def is_pointed(self) -> bool:
        if not self.rays:
            return True
        return bool(self.inequalities) and la.rank(self.inequalities) == self.ambient_dim

    def is_simplicial(self) -> bool:
        return self.span_rank == len(self.rays)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rays]


def double_description(inequalities: Sequence[Sequence], n: int) -> tuple[list[Vector], list[Vector]]:
    """Generators of ``{y : h.y >= 0 for all h}`` as (lineality basis, rays)."""
    lin: list[Vector] = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays: list[Vector] = []
    processed: list[Vector] = []
    for h0 in inequalities:
        if len(h0) != n:
            raise RankMismatch("inequality of wrong dimension", expected=n, got=len(h0))
        h = _prim(h0)
        if h is None:
            continue
        k = next((k for k, l in enumerate(lin) if _dot(h, l) != 0), None)
        if k is not None:
            l0 = lin.pop(k)
            s = _dot(h, l0)
            if s < 0:
                l0, s = tuple(-x for x in l0), -s
            lin = [p for p in (_prim([s * a - _dot(h, l) * b for a, b in zip(l, l0)]) for l in lin) if p]
            rays = [p for p in (_prim([s * a - _dot(h, r) * b for a, b in zip(r, l0)]) for r in rays) if p]
            rays.append(l0)
        else:
            vals = [(r, _dot(h, r)) for r in rays]
            pos = [(r, v) for r, v in vals if v > 0]
            neg = [(r, v) for r, v in vals if v < 0]
            new = [r for r, v in vals if v >= 0]
            for p, vp in pos:
                for q, vq in neg:
                    c = _prim([vp * b - vq * a for a, b in zip(p, q)])
                    if c:
                        new.append(c)
            rays = new
        processed.append(h)
        rays = _prune(rays, processed, n - len(lin))
    return lin, rays


def _prune(rays: list[Vector], ineqs: list[Vector], pointed_dim: int) -> list[Vector]:
    """Keep distinct rays whose tight constraints have rank ``pointed_dim - 1``."""
    out: dict[Vector, None] = {}
    for r in rays:
        if r in out:
            continue
        tight = [h for h in ineqs if _dot(h, r) == 0]
        if la.rank(tight) == pointed_dim - 1 if tight else pointed_dim == 1:
            out[r] = None
    return list(out)


def _reduce_mod(v: Vector, lin: list[Vector]) -> Vector | None:
    """Orthogonal projection of ``v`` away from span(lin), as a primitive vector."""
    if not lin:
        return v
    gram = [[_dot(a, b) for b in lin] for a in lin]
    coef = la.solve(gram, [_dot(a, v) for a in lin])
    proj = [Fraction(x) - sum(c * l[i] for c, l in zip(coef, lin)) for i, x in enumerate(v)]
    return _prim(proj)


def dual_cone(c: RationalCone, pairing: Sequence[Sequence] | None = None) -> RationalCone:
    """Generators of ``{y : r^T G y >= 0 for every ray r}``; ``G`` defaults to the identity.

    A lineality space in the answer is returned as pairs ``+l, -l``.
    """
    n = c.ambient_dim
    if pairing is None:
        ineqs = [list(r) for r in c.rays]
    else:
        if len(pairing) != n or any(len(row) != n for row in pairing):
            raise RankMismatch("pairing matrix must be square of the ambient dimension", dim=n)
        ineqs = [[sum(Fraction(r[i]) * Fraction(pairing[i][j]) for i in range(n)) for j in range(n)] for r in c.rays]
    lin, rays = double_description(ineqs, n)
    lin = [p for p in (_reduce_mod(l, []) for l in lin) if p]
    out: list[Vector] = []
    for l in lin:
        out.append(l)
        out.append(tuple(-x for x in l))
    for r in rays:
        p = _reduce_mod(r, lin)
        if p is not None:
            out.append(p)
    return RationalCone(n, sorted(set(out)))


def contains(c: RationalCone, v: Sequence) -> bool:
    """Exact membership of ``v`` in the conical hull of ``c``."""
    if len(v) != c.ambient_dim:
        raise RankMismatch("vector of wrong dimension", expected=c.ambient_dim, got=len(v))
    if not any(v):
        return True
    if not c.rays:
        return False
    return all(_dot(h, v) >= 0 for h in c.inequalities)


def extremal_rays(c: RationalCone) -> tuple[Vector, ...]:
    """Rays of ``c`` that are not nonnegative combinations of the remaining rays."""
    if c.rays and c.is_pointed():
        # a ray of a pointed cone is extremal iff its tight facets cut out a line
        n = c.ambient_dim
        out = []
        for r in c.rays:
            tight = [h for h in c.inequalities if _dot(h, r) == 0]
            if la.rank(tight) == n - 1 if tight else n == 1:
                out.append(r)
        return tuple(out)
    out = []
    for k, r in enumerate(c.rays):
        rest = RationalCone(c.ambient_dim, c.rays[:k] + c.rays[k + 1 :])
        if not contains(rest, r):
            out.append(r)
    return tuple(out)


def extremal_flags(c: RationalCone, generators: Sequence[Sequence]) -> list[bool]:
    """For each generator (possibly repeated or rescaled), whether it spans an extremal ray."""
    ext = set(extremal_rays(c))
    flags = []
    seen: set[Vector] = set()
    for g in generators:
        p = _prim(g)
        flags.append(p in ext and p not in seen)
        seen.add(p)
    return flags


def reduce_to_extremal(c: RationalCone) -> RationalCone:
    return RationalCone(c.ambient_dim, extremal_rays(c))
