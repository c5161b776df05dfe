"""Effective and nef cones of divisors and of codimension-two cycles.

Sigma classes
-------------
At a non-reduced position ``i`` (``w_i = w_{i-1} = w``, letter ``b``) the
divisor Sigma_i is the component of ``phi_i^{-1} X(w s_b)`` that maps
birationally onto the truncated variety.  Its class is computed as follows.

1. Enumerate the Bruhat covers ``w s_gamma`` of ``w`` by deleting single
   letters from a reduced word of ``w``; each gives a linear functional
   ``lambda -> <lambda, gamma^vee>``.
2. Solve for a rational weight ``lambda`` pairing to 1 with ``b^vee`` and to 0
   with every other cover coroot.  By Chevalley's formula a section of
   ``L_{-lambda}`` restricted to ``X(w)`` then vanishes exactly on
   ``X(w s_b)``.  When ``w`` is the longest element this is the fundamental
   weight of ``b``.
3. Expand ``O_i(-lambda)`` in the X-basis and subtract the other components
   of the preimage: each ``X_j`` with ``delta_j <= w s_b`` (``delta_j`` is the
   Demazure product of the truncated word without letter ``j``) and each
   earlier Sigma_k whose image lies in ``X(w s_b)``.

Multiplicities of those components are not derived.  When ``lambda`` is
integral they are taken to be 1; when it has denominator ``n`` the values
``1/n, ..., 1`` are searched.  A result is returned only if exactly one choice
passes every check in :data:`SIGMA_CHECKS`; otherwise
:class:`SigmaValidationError` is raised.

If no rational weight isolates ``X(w s_b)`` (it is not Q-Cartier), the
extremal section of the fundamental weight of ``b`` is pulled back instead.
Components over a cover ``X(w s_gamma)`` are subtracted with its Chevalley
order; those over smaller Schubert varieties are searched, and an ambiguous
outcome is reported as an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import lcm
from typing import Sequence

from . import _linalg as la
from .bs_word import (
    BSWord,
    DivisorClass,
    analyze,
    expand_line_bundle,
    o_to_x_coords,
    x_to_o_coords,
)
from .chow_ring import CycleClass, chow_ring, fiber_pairing, pairing_matrix
from .errors import PreconditionError, SigmaValidationError
from .polyhedra import RationalCone, contains, dual_cone, extremal_flags, reduce_to_extremal
from .root_system import RootSystem, Weight
from .weyl_group import WeylElement, bruhat_leq, demazure_product, from_word

SIGMA_CHECKS = (
    "coefficient_one",
    "fiber_pairing_one",
    "integral",
    "restriction_effective",
    "base_part_not_effective",
)


@dataclass(frozen=True)
class SigmaResult:
    position: int
    sigma: DivisorClass
    schubert_weight: Weight
    pullback: DivisorClass
    components: tuple[str, ...]
    multiplicities: tuple[Fraction, ...]
    checks: dict[str, bool] = field(hash=False)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "position": self.position,
            "sigma": _int_list(self.sigma),
            "schubert_weight": [_num(x) for x in self.schubert_weight],
            "pullback": _int_list(self.pullback),
            "components": list(self.components),
            "multiplicities": [_num(m) for m in self.multiplicities],
            "checks": dict(self.checks),
        }


def bruhat_covers(w: WeylElement) -> list[tuple[WeylElement, tuple]]:
    """Elements ``w s_gamma`` covered by ``w``, each with the row of ``lambda -> <lambda, gamma^vee>``."""
    rw = w.reduced_word
    out = []
    for t in range(len(rw)):
        v = from_word(w.cartan, rw[:t] + rw[t + 1 :])
        if v.length != w.length - 1:
            continue
        # w = x s_a y and v = x y, so gamma = y^{-1}(alpha_a) and <lambda, gamma^vee> = <y lambda, alpha_a^vee>
        y = from_word(w.cartan, rw[t + 1 :])
        out.append((v, y.matrix[rw[t] - 1]))
    return out


def schubert_divisor_weight(w: WeylElement, b: int) -> Weight | None:
    """A weight ``lambda`` with ``L_{-lambda}|X(w)`` cutting out exactly ``X(w s_b)``.

    Returns ``None`` when ``X(w s_b)`` is not Q-Cartier in ``X(w)``.
    """
    target = w.multiply_simple(b)
    covers = bruhat_covers(w)
    rows = [list(row) for _, row in covers]
    rhs = [int(v == target) for v, _ in covers]
    if sum(rhs) != 1:
        raise AssertionError("w s_b must be a Bruhat cover of w")
    sol = la.solve(rows, rhs)
    return None if sol is None else Weight(sol)


def _components(bsw: BSWord, target: WeylElement, base_sigmas) -> list[tuple[str, DivisorClass, WeylElement]]:
    """B-stable prime divisors of the truncated variety whose image lies in ``X(target)``.

    Each entry is ``(name, class, image)`` with ``X(image)`` the image in G/B.
    """
    rs, word, i = bsw.rs, bsw.word, bsw.d
    out = []
    for j in range(1, i):
        img = demazure_product(rs, word[: j - 1] + word[j:])
        if bruhat_leq(img, target):
            out.append((f"X{j}", DivisorClass.unit(i, j), img))
    for s in base_sigmas:
        k = s.position
        img = bsw.prefixes[k - 1].multiply_simple(word[k - 1])
        for a in word[k:i]:
            img = img.star(a)
        if bruhat_leq(img, target):
            out.append((f"Sigma{k}", s.sigma.extend(i), img))
    return out


def _sigma_checks(bsw: BSWord, sigma: DivisorClass, base_cone: RationalCone) -> dict[str, bool]:
    i = bsw.d
    ring = chow_ring(bsw)
    checks = {
        "coefficient_one": sigma[i - 1] == 1,
        "fiber_pairing_one": fiber_pairing(bsw, sigma) == 1,
        "integral": sigma.is_integral(),
    }
    restriction = [sigma[j - 1] - ring.beta_pairing(i, j) for j in range(1, i)]
    checks["restriction_effective"] = contains(base_cone, restriction)
    checks["base_part_not_effective"] = not contains(base_cone, sigma[: i - 1])
    return checks


@lru_cache(maxsize=None)
def _sigma_truncated(rs: RootSystem, word: tuple[int, ...]) -> SigmaResult:
    bsw = analyze(word, rs)
    i = bsw.d
    w, b = bsw.prefixes[i], word[-1]
    lam = schubert_divisor_weight(w, b)
    base = effective_cone_divisors(bsw.truncate(i - 1))
    if lam is not None:
        n = lcm(*(Fraction(x).denominator for x in lam))
        pullback = expand_line_bundle(bsw, i, -(n * lam)) / n
        comps = _components(bsw, w.multiply_simple(b), base.sigmas)
        # A Cartier Schubert divisor (n = 1) is assumed reduced along each
        # component; otherwise multiplicities in {1/n, ..., 1} are tried.
        grids = [[Fraction(t, n) for t in range(1, n + 1)]] * len(comps)
    else:
        # X(w s_b) is not Q-Cartier in X(w).  The extremal section of weight
        # varpi_b on X(w) vanishes to order c = <varpi_b, gamma^vee> on each
        # cover X(w s_gamma) (Chevalley), X(w s_b) once.  A component mapping
        # onto such a cover inherits c; anything smaller is searched.
        lam = rs.fundamental_weight(b)
        support = {v: row[b - 1] for v, row in bruhat_covers(w) if row[b - 1] > 0}
        pullback = expand_line_bundle(bsw, i, -lam)
        comps, seen = [], set()
        for v in support:
            for c in _components(bsw, v, base.sigmas):
                if c[0] not in seen:
                    seen.add(c[0])
                    comps.append(c)
        top = max(support.values())
        grids = [[Fraction(support[img])] if img in support else [Fraction(t) for t in range(1, top + 1)]
                 for _, _, img in comps]
    return _search(bsw, word, lam, pullback, comps, base, grids)


def _search(bsw, word, lam, pullback, comps, base, grids) -> SigmaResult:
    # Exactly one multiplicity choice may pass the checks.
    i = bsw.d
    passing, first = [], None
    for ms in product(*grids):
        sigma = pullback
        for m, (_, cls, _) in zip(ms, comps):
            sigma = sigma - cls * m
        checks = _sigma_checks(bsw, sigma, base.cone)
        result = SigmaResult(i, sigma, lam, pullback, tuple(c[0] for c in comps), ms, checks)
        first = first or result
        if result.ok:
            passing.append(result)
    if len(passing) == 1:
        return passing[0]
    reason = "no multiplicity choice passes validation" if not passing else "multiplicities are ambiguous"
    raise SigmaValidationError(
        f"Sigma_{i} of {list(word)}: {reason}",
        word=list(word), position=i, components=[c[0] for c in comps],
        pullback=[str(x) for x in pullback],
        checks=first.checks if not passing else None,
        candidates=[[str(x) for x in r.sigma] for r in passing],
    )


def sigma_report(bsw: BSWord, i: int) -> SigmaResult:
    """Sigma_i with its validation record; the class is extended by zeros to the full word."""
    if not 1 <= i <= bsw.d:
        raise PreconditionError(f"position {i} outside 1..{bsw.d}", position=i)
    if bsw.reduced_step[i - 1]:
        raise PreconditionError(f"position {i} is a reduced step; Sigma_{i} does not exist", position=i)
    bsw.rs.require_finite("sigma_class")
    res = _sigma_truncated(bsw.rs, bsw.word[:i])
    return SigmaResult(res.position, res.sigma.extend(bsw.d), res.schubert_weight,
                       res.pullback, res.components, res.multiplicities, res.checks)


def sigma_class(bsw: BSWord, i: int) -> DivisorClass:
    return sigma_report(bsw, i).sigma


@dataclass(frozen=True, eq=False)
class EffConeReport:
    bsw: BSWord
    generators: tuple[DivisorClass, ...]
    extremal: tuple[bool, ...]
    sigma_positions: tuple[int, ...]
    sigmas: tuple[SigmaResult, ...]
    cone: RationalCone

    @property
    def extremal_count(self) -> int:
        return sum(self.extremal)

    def to_json(self) -> dict:
        return {
            "type": self.bsw.rs.name,
            "word": list(self.bsw.word),
            "generators": [_int_list(g) for g in self.generators],
            "extremal": list(self.extremal),
            "sigma_positions": list(self.sigma_positions),
            "validation": {str(s.position): s.to_json() for s in self.sigmas},
        }


def effective_cone_divisors(bsw: BSWord) -> EffConeReport:
    return _eff_cached(bsw.rs, bsw.word)


@lru_cache(maxsize=None)
def _eff_cached(rs: RootSystem, word: tuple[int, ...]) -> EffConeReport:
    bsw = analyze(word, rs)
    d = bsw.d
    gens = [DivisorClass.unit(d, i) for i in range(1, d + 1)]
    sigmas = tuple(sigma_report(bsw, i) for i in bsw.sigma_positions)
    gens += [s.sigma for s in sigmas]
    ints = [g.as_ints() for g in gens]
    cone = RationalCone(d, ints)
    flags = extremal_flags(cone, ints) if d else []
    return EffConeReport(bsw, tuple(gens), tuple(flags), bsw.sigma_positions, sigmas, cone)


def _pair_index(d: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(combinations(range(1, d + 1), 2))}


def effective_cone_2cycles(bsw: BSWord) -> RationalCone:
    """Effective cone of codimension-two cycles of a reduced word, in the ``x_ij`` basis."""
    if not bsw.is_reduced:
        raise PreconditionError("effective_cone_2cycles needs a reduced word", word=list(bsw.word))
    if bsw.d < 2:
        raise PreconditionError("effective_cone_2cycles needs d >= 2", d=bsw.d)
    bsw.rs.require_finite("effective_cone_2cycles")
    index = _pair_index(bsw.d)
    rays = []
    for i in range(1, bsw.d + 1):
        sub = effective_cone_divisors(bsw.delete(i))
        for g in sub.generators:
            vec = [0] * len(index)
            for k, c in enumerate(g, start=1):
                if c:
                    pos = k if k < i else k + 1
                    vec[index[tuple(sorted((i, pos)))]] += int(c)
            rays.append(vec)
    return reduce_to_extremal(RationalCone(len(index), rays))


def nef_divisor_cone(bsw: BSWord) -> RationalCone:
    """Nef cone of divisors: spanned by the classes of O_1(1), ..., O_d(1)."""
    return RationalCone(bsw.d, [r.as_ints() for r in bsw.o_rows])


def is_ample(bsw: BSWord, cls: Sequence) -> bool:
    return all(n > 0 for n in x_to_o_coords(bsw, cls))


def is_globally_generated(bsw: BSWord, cls: Sequence) -> bool:
    return all(n >= 0 for n in x_to_o_coords(bsw, cls))


is_nef = is_globally_generated


def nef2_cone(bsw: BSWord) -> RationalCone:
    """Nef cone of codimension-two classes for a reduced word of length 4.

    The dual of the effective cone of 2-cycles under the intersection pairing,
    expressed in the ``x_ij`` basis.
    """
    if bsw.d != 4:
        raise PreconditionError("nef2_cone is only available for words of length 4", d=bsw.d)
    eff = effective_cone_2cycles(bsw)
    return dual_cone(eff, pairing_matrix(bsw, 2))


def cycle(d: int, vec: Sequence) -> CycleClass:
    return CycleClass.from_vector(d, 2, vec)


def ray_intersection_matrix(bsw: BSWord, rays: Sequence[Sequence]) -> list[list]:
    """Intersection numbers of codimension-two classes given as ``x_ij`` vectors."""
    ring = chow_ring(bsw)
    return ring.intersection_matrix([cycle(bsw.d, r) for r in rays])


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else {"num": x.numerator, "den": x.denominator}


def _int_list(v) -> list:
    return [_num(x) for x in v]
