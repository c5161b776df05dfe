"""Exception types.

Every domain error carries a JSON-friendly ``payload`` so the command line
front end can report it in machine-readable form.
"""

from __future__ import annotations

from typing import Any


class BottSamelsonError(Exception):
    """Base class for domain errors raised by this package."""

    kind = "domain_error"

    def __init__(self, message: str, **payload: Any):
        super().__init__(message)
        self.payload = payload

    def to_json(self) -> dict[str, Any]:
        return {"error": self.kind, "message": str(self), **self.payload}


class CartanError(BottSamelsonError, ValueError):
    kind = "invalid_cartan_matrix"


class IndexOutOfRange(BottSamelsonError, IndexError):
    kind = "index_out_of_range"


class RankMismatch(BottSamelsonError, ValueError):
    kind = "rank_mismatch"


class NonFiniteTypeError(BottSamelsonError):
    """An operation needing the positive roots or the longest element was
    called on a generalized Cartan matrix that is not of finite type."""

    kind = "non_finite_type"


class PreconditionError(BottSamelsonError, ValueError):
    kind = "precondition_failed"


class SigmaValidationError(BottSamelsonError):
    """A computed Sigma class failed one of its mandatory consistency checks."""

    kind = "sigma_validation_failed"


class CertificateError(BottSamelsonError):
    kind = "certificate_failed"
