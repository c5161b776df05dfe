"""An explicit boundary making a Bott-Samelson variety log Fano.

With an ample ``A = sum a_i X_i`` (all ``a_i >= 1``) and ``M > max a_i``, the
boundary ``Delta = sum (1 - a_i/M) X_i`` has coefficients strictly between 0
and 1, and ``-K - Delta = O_d(-rho) + A/M`` is ample.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bs_word import BSWord, DivisorClass, canonical_class, expand_line_bundle, o_to_x_coords, x_to_o_coords
from .errors import CertificateError, PreconditionError


def ample_recipe(bsw: BSWord) -> tuple[int, ...]:
    """Positive X-coefficients of an ample class, repaired from the top index down."""
    d = bsw.d
    n = [1] * d
    for k in range(d, 0, -1):
        a = o_to_x_coords(bsw, n)
        if a[k - 1] <= 0:
            n[k - 1] += int(-a[k - 1]) + 1
    a = o_to_x_coords(bsw, n)
    assert all(x >= 1 for x in a) and all(x >= 1 for x in n)
    return tuple(int(x) for x in a)


def _frac_json(x) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


@dataclass(frozen=True)
class LogFanoCertificate:
    a: tuple[int, ...]
    M: int
    epsilon: tuple[Fraction, ...]
    delta: DivisorClass
    anticanonical: DivisorClass
    rho_part: DivisorClass
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "M": self.M,
            "epsilon": [_frac_json(e) for e in self.epsilon],
            "delta": [_frac_json(e) for e in self.delta],
            "anticanonical": [int(c) for c in self.anticanonical],
            "rho_part": [int(c) for c in self.rho_part],
            "checks": dict(self.checks),
        }


def log_fano_certificate(bsw: BSWord, M: int | None = None) -> LogFanoCertificate:
    a = ample_recipe(bsw)
    top = max(a, default=0)
    if M is None:
        M = top + 1
    elif not isinstance(M, int) or M <= top:
        raise PreconditionError(f"M must be an integer greater than max(a) = {top}", M=M, a=list(a))
    eps = tuple(1 - Fraction(x, M) for x in a)
    delta = DivisorClass(eps)
    anti = canonical_class(bsw)
    rho_part = expand_line_bundle(bsw, bsw.d, -bsw.rs.rho)
    target = anti - delta
    checks = {
        "floor_zero": all(0 < e < 1 for e in eps),
        "ample": all(c > 0 for c in x_to_o_coords(bsw, target)),
        "decomposition": target == rho_part + DivisorClass(a) / M,
    }
    cert = LogFanoCertificate(a, M, eps, delta, anti, rho_part, checks)
    if not cert.ok:
        raise CertificateError("log Fano certificate failed", word=list(bsw.word), checks=checks)
    return cert
