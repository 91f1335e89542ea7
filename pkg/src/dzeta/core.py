"""Shared value types and exceptions."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Any


class DzetaError(Exception):
    """Base class for all library errors."""


class PoleError(DzetaError):
    """Evaluation requested at (or too close to) a pole."""

    def __init__(self, message: str, residue: complex | None = None):
        super().__init__(message)
        self.residue = residue


class DomainError(DzetaError, ValueError):
    """An argument lies outside the documented domain."""


class RefusedError(DzetaError):
    """The evaluator declines: the requested point lies outside its region.

    ``reason`` names the violated inequality so callers can report it.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class ConvergenceError(DzetaError):
    """Refinement exhausted before the error estimate met the tolerance."""


@dataclass(frozen=True)
class EvalPoint:
    s1: complex
    s2: complex

    def __post_init__(self):
        object.__setattr__(self, "s1", complex(self.s1))
        object.__setattr__(self, "s2", complex(self.s2))

    @property
    def sigma1(self) -> float:
        return self.s1.real

    @property
    def sigma2(self) -> float:
        return self.s2.real

    @property
    def t1(self) -> float:
        return self.s1.imag

    @property
    def t2(self) -> float:
        return self.s2.imag

    @property
    def total(self) -> complex:
        return self.s1 + self.s2

    def reflected(self) -> "EvalPoint":
        """The dual point (1 - s2, 1 - s1)."""
        return EvalPoint(1 - self.s2, 1 - self.s1)

    def as_tuple(self) -> tuple[complex, complex]:
        return (self.s1, self.s2)


def as_point(s: Any) -> EvalPoint:
    if isinstance(s, EvalPoint):
        return s
    s1, s2 = s
    return EvalPoint(s1, s2)


OK = "ok"
TAIL_TOO_LARGE = "tail-too-large"


@dataclass
class SeriesValue:
    """A computed value together with its error bookkeeping."""

    value: complex
    error: float = 0.0
    terms: int = 0
    status: str = OK
    route: str = ""
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == OK

    def __complex__(self) -> complex:
        return complex(self.value)


def cpow(base: complex, exponent: complex) -> complex:
    """Principal-branch power ``base**exponent`` (arg base in (-pi, pi])."""
    if base == 0:
        if exponent.real > 0:
            return 0j
        raise PoleError("zero raised to a power with non-positive real part")
    return cmath.exp(exponent * cmath.log(base))


def polar_pow(modulus: float, arg: float, exponent: complex) -> complex:
    """``(modulus * e^{i arg})**exponent`` with the argument taken as given.

    Used where the branch is fixed by convention rather than by reducing
    the argument into (-pi, pi].
    """
    return cmath.exp(exponent * complex(cmath.log(modulus).real, arg))
