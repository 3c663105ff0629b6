"""Exact arithmetic primitives shared by every formula in the package.

Rationals are plain :class:`fractions.Fraction`; the periodic bracket
sequences ``[t_0, ..., t_{n-1}; n]_k`` are stored as affine entries so that
``f4``/``f6`` (which depend on ``k``) and the constant ``c``-sequences share a
single evaluator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

__all__ = [
    "Fraction",
    "IntegralityError",
    "PeriodicSequence",
    "SEQUENCES",
    "seq",
    "periodic_eval",
    "kronecker_delta",
    "is_prime",
    "require_prime",
    "symbol_minus_one",
    "symbol_minus_three",
    "exact_int",
]


class IntegralityError(ArithmeticError):
    """A formula that must produce a non-negative integer did not."""


@dataclass(frozen=True)
class PeriodicSequence:
    """``entries[i] = (alpha, beta)`` means the value ``alpha*k + beta`` when ``k % n == i``."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("periodic sequence needs at least one entry")

    @property
    def modulus(self) -> int:
        return len(self.entries)

    @classmethod
    def constant(cls, values) -> "PeriodicSequence":
        return cls(tuple((0, int(v)) for v in values))

    def __call__(self, k: int) -> int:
        return periodic_eval(self, k)


def periodic_eval(seq: PeriodicSequence, k: int) -> int:
    if k < 1:
        raise ValueError(f"bracket symbols are only evaluated at k >= 1, got {k}")
    alpha, beta = seq.entries[k % seq.modulus]
    return alpha * k + beta


# Transcribed entry by entry; tests re-derive a few of them independently.
SEQUENCES: dict[str, PeriodicSequence] = {
    "f4": PeriodicSequence(((1, -2), (-1, 1), (-1, 2), (1, -1))),
    "f6": PeriodicSequence(((1, -3), (-2, 2), (-2, 4), (1, 0), (1, -1), (1, -2))),
    "c3": PeriodicSequence.constant([1, -1, 0]),
    "c3hat": PeriodicSequence.constant([0, 1, -1]),
    "c4": PeriodicSequence.constant([1, 0, 0, -1]),
    "c4prime": PeriodicSequence.constant([1, -1, -1, 1]),
    "c5": PeriodicSequence.constant([1, 0, 0, -1, 0]),
    "c6": PeriodicSequence.constant([1, 0, 0, -1, 0, 0]),
    "c6prime": PeriodicSequence.constant([0, 1, 0, 0, -1, 0]),
    "c6hat": PeriodicSequence.constant([0, 1, 1, 0, -1, -1]),
    "c12": PeriodicSequence.constant([1, 0, 0, -1, -1, -1, -1, 0, 0, 1, 1, 1]),
}


def seq(name: str, k: int) -> int:
    """Evaluate the named catalog sequence at ``k``."""
    return periodic_eval(SEQUENCES[name], k)


def kronecker_delta(k: int, n: int) -> int:
    return 1 if k == n else 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def require_prime(p: int, minimum: int = 2) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise ValueError(f"expected a prime, got {p!r}")
    if p < minimum:
        raise ValueError(f"expected a prime >= {minimum}, got {p}")
    return p


def symbol_minus_one(p: int) -> int:
    """(-1/p) with the convention (-1/2) = 0."""
    require_prime(p)
    if p == 2:
        return 0
    return 1 if p % 4 == 1 else -1


def symbol_minus_three(p: int) -> int:
    """(-3/p) with the convention (-3/3) = 0."""
    require_prime(p)
    if p == 3:
        return 0
    return 1 if p % 3 == 1 else -1


def exact_int(value, formula: str, *, nonnegative: bool = True) -> int:
    """Convert an exact rational to ``int``, refusing to round.

    ``formula`` names the expression in the error so that a mistranscribed
    coefficient is located immediately.
    """
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"{formula}: non-integral value {value}")
    if nonnegative and value < 0:
        raise IntegralityError(f"{formula}: negative value {value}")
    return value.numerator
