"""Class numbers of Q(sqrt(-p)) and the companion parameter ``b``.

The product ``h*b`` is what the elliptic +/- new-space split consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import require_prime

__all__ = [
    "ImaginaryQuadraticData",
    "field_discriminant",
    "reduced_forms",
    "class_number",
    "b_param",
    "quadratic_data",
]


@dataclass(frozen=True)
class ImaginaryQuadraticData:
    p: int
    discriminant: int
    h: int
    b: int

    @property
    def hb(self) -> int:
        return self.h * self.b


def field_discriminant(p: int) -> int:
    """Discriminant of Q(sqrt(-p)): -p when p = 3 (mod 4), else -4p."""
    return -p if p % 4 == 3 else -4 * p


def reduced_forms(D: int) -> list[tuple[int, int, int]]:
    """All reduced primitive positive definite forms (a, b, c) with b^2 - 4ac = D."""
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"not a negative discriminant: {D}")
    forms = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                forms.append((a, b, c))
        a += 1
    return forms


@lru_cache(maxsize=None)
def class_number(p: int) -> int:
    require_prime(p, 5)
    return len(reduced_forms(field_discriminant(p)))


def b_param(p: int) -> int:
    require_prime(p, 5)
    if p % 4 == 1:
        return 1
    return 2 if p % 8 == 7 else 4


def quadratic_data(p: int) -> ImaginaryQuadraticData:
    return ImaginaryQuadraticData(p, field_discriminant(p), class_number(p), b_param(p))

