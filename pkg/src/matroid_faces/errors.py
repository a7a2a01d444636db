"""Exceptions and the validation report shared by the axiom checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class InputError(ValueError):
    """Malformed input: bad element labels, bad ranges, unparsable documents."""


class AxiomError(ValueError):
    """Raised when an object is required to satisfy axioms it fails."""

    def __init__(self, report: "ValidationReport"):
        super().__init__(str(report))
        self.report = report


class NonGeometricLatticeError(AxiomError):
    pass


class BudgetExceeded(RuntimeError):
    """Explicit enumeration budget overrun; never a silent truncation."""


class NotPolynomialError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: str | None = None
    message: str = ""
    witness: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def passed(cls) -> "ValidationReport":
        return cls(True)

    @classmethod
    def failed(cls, axiom: str, message: str, **witness: Any) -> "ValidationReport":
        return cls(False, axiom, message, witness)

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        return f"{self.axiom}: {self.message}"

    def to_dict(self) -> dict[str, Any]:
        return {"ok": self.ok, "axiom": self.axiom, "message": self.message,
                "witness": {k: _plain(v) for k, v in self.witness.items()}}


def _plain(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value if isinstance(value, (int, str, bool)) or value is None else str(value)
