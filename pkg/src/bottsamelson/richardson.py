"""Bott-Samelson data for the desingularization of a Richardson-type intersection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bs_word import BSWord, analyze
from .errors import PreconditionError
from .orbits import DenseOrbitReport, dense_orbit_criterion
from .root_system import RootSystem
from .weyl_group import WeylElement, from_word

NON_FINITE_WARNING = (
    "Cartan matrix is not of finite type: Richardson varieties in this setting "
    "need not be intersections of translated Schubert varieties."
)


@dataclass(frozen=True)
class RichardsonReport:
    word_u: tuple[int, ...]
    word_v: tuple[int, ...]
    concatenated: BSWord
    w: WeylElement
    fiber_dimension: int
    orbit: DenseOrbitReport
    warning: str | None

    def to_json(self) -> dict:
        return {
            "type": self.concatenated.rs.name,
            "word_u": list(self.word_u),
            "word_v": list(self.word_v),
            "concatenated": list(self.concatenated.word),
            "w": self.w.to_json(),
            "fiber_dimension": self.fiber_dimension,
            "torus_orbit_closure": self.orbit.satisfied,
            "dense_orbit": self.orbit.to_json(),
            "warning": self.warning,
        }


def _require_reduced(rs: RootSystem, word: tuple[int, ...], label: str) -> None:
    if from_word(rs, word).length != len(word):
        raise PreconditionError(f"word for {label} is not reduced", word=list(word))


def intersection_desing(rs: RootSystem, word_u: Sequence[int], word_v: Sequence[int]) -> RichardsonReport:
    """Concatenate ``word_u`` with the reverse of ``word_v`` (a reduced word for ``v^-1``).

    ``w`` is the Demazure product of the concatenation and the fiber over ``w``
    has dimension ``l(u) + l(v) - l(w)``.
    """
    wu, wv = rs.check_word(tuple(word_u)), rs.check_word(tuple(word_v))
    _require_reduced(rs, wu, "u")
    _require_reduced(rs, wv, "v")
    bsw = analyze(wu + tuple(reversed(wv)), rs)
    m = len(wu) + len(wv) - bsw.w.length
    warning = None if rs.finite else NON_FINITE_WARNING
    return RichardsonReport(wu, wv, bsw, bsw.w, m, dense_orbit_criterion(bsw), warning)
