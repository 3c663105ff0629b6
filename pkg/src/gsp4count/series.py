"""Exact power series for rational generating functions with integer coefficients.

A :class:`RationalGeneratingFunction` is ``numerator / denominator`` with the
denominator's constant term equal to +-1, so every series coefficient is an
integer and can be produced by the linear recurrence read off the
denominator.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
import threading
from itertools import zip_longest
from typing import Iterable, Mapping, Union

__all__ = [
    "Polynomial",
    "RationalGeneratingFunction",
    "SeriesExpansion",
    "expand",
    "coefficient",
    "CoefficientStream",
    "poly",
    "t_pow",
]

Number = Union[int, Fraction]


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial in ``t``; ``coefficients[i]`` multiplies ``t**i``."""

    coefficients: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def from_terms(cls, terms: Mapping[int, Number]) -> "Polynomial":
        if not terms:
            return cls(())
        out = [0] * (max(terms) + 1)
        for exp, c in terms.items():
            if exp < 0:
                raise ValueError("negative exponent")
            out[exp] += c
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coefficients)

    def __getitem__(self, i: int):
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        other = _as_poly(other)
        return Polynomial(
            tuple(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0))
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Polynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial((1,))
        for _ in range(n):
            result = result * self
        return result

    def shift(self, n: int) -> "Polynomial":
        """Multiply by ``t**n``."""
        if self.is_zero:
            return self
        return Polynomial((0,) * n + self.coefficients)

    def to_integral(self) -> "Polynomial":
        if not self.is_integral:
            raise ValueError(f"polynomial has non-integral coefficients: {self.coefficients}")
        return Polynomial(tuple(int(Fraction(c)) for c in self.coefficients))

    def __call__(self, t):
        value = 0
        for c in reversed(self.coefficients):
            value = value * t + c
        return value

    def to_text(self) -> str:
        """Exponent:coefficient pairs, e.g. ``0:1 35:1``."""
        if self.is_zero:
            return "0"
        return " ".join(f"{i}:{c}" for i, c in enumerate(self.coefficients) if c != 0)


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial((x,))


def poly(*coeffs: Number) -> Polynomial:
    """``poly(1, 0, -1)`` is ``1 - t**2``."""
    return Polynomial(coeffs)


def t_pow(n: int, c: Number = 1) -> Polynomial:
    return Polynomial((0,) * n + (c,))


@dataclass(frozen=True)
class SeriesExpansion:
    coefficients: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]


@dataclass(frozen=True)
class RationalGeneratingFunction:
    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        num = _as_poly(self.numerator).to_integral()
        den = _as_poly(self.denominator).to_integral()
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if den[0] not in (1, -1):
            raise ValueError(f"denominator constant term must be +-1, got {den[0]}")
        if den[0] == -1:
            num, den = -num, -den
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def zero(cls) -> "RationalGeneratingFunction":
        return cls(Polynomial(()), Polynomial((1,)))

    def __add__(self, other: "RationalGeneratingFunction") -> "RationalGeneratingFunction":
        if self.denominator == other.denominator:
            return RationalGeneratingFunction(self.numerator + other.numerator, self.denominator)
        return RationalGeneratingFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self) -> "RationalGeneratingFunction":
        return RationalGeneratingFunction(-self.numerator, self.denominator)

    def __sub__(self, other: "RationalGeneratingFunction") -> "RationalGeneratingFunction":
        return self + (-other)

    def __mul__(self, other: "RationalGeneratingFunction") -> "RationalGeneratingFunction":
        return RationalGeneratingFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def expand(self, K: int) -> SeriesExpansion:
        return expand(self, K)

    def coefficient(self, k: int) -> int:
        return coefficient(self, k)

    def to_text(self) -> str:
        return f"({self.numerator.to_text()}) / ({self.denominator.to_text()})"


def expand(gf: RationalGeneratingFunction, K: int) -> SeriesExpansion:
    """Coefficients ``c_0..c_K`` from ``c_k = num_k - sum_{j>=1} den_j c_{k-j}``."""
    if K < 0:
        raise ValueError(f"truncation order must be >= 0, got {K}")
    num = gf.numerator.coefficients
    den = gf.denominator.coefficients  # den[0] == 1 after normalisation
    taps = [(j, d) for j, d in enumerate(den) if j and d]
    out: list[int] = []
    for k in range(K + 1):
        c = num[k] if k < len(num) else 0
        for j, d in taps:
            if j > k:
                break
            c -= d * out[k - j]
        out.append(c)
    return SeriesExpansion(tuple(out))


def coefficient(gf: RationalGeneratingFunction, k: int) -> int:
    if k < 0:
        return 0
    return expand(gf, k)[k]


class CoefficientStream:
    """Coefficients of one generating function, extended on demand.

    The same recurrence as :func:`expand`; the lock makes a shared stream
    safe to use from several threads.
    """

    def __init__(self, gf: RationalGeneratingFunction):
        self.gf = gf
        self._coeffs: list[int] = []
        self._lock = threading.Lock()
        self._taps = [(j, d) for j, d in enumerate(gf.denominator.coefficients) if j and d]

    def upto(self, K: int) -> tuple[int, ...]:
        with self._lock:
            out = self._coeffs
            num = self.gf.numerator.coefficients
            for k in range(len(out), K + 1):
                c = num[k] if k < len(num) else 0
                for j, d in self._taps:
                    if j > k:
                        break
                    c -= d * out[k - j]
                out.append(c)
            return tuple(out[: K + 1])

    def __getitem__(self, k: int) -> int:
        if k < 0:
            return 0
        with self._lock:
            if k < len(self._coeffs):
                return self._coeffs[k]
        return self.upto(k)[k]


# -- combination of summands over cyclotomic denominators ------------------

# index 1 stands for 1 - t (not t - 1), keeping every constant term +1.
CYCLOTOMIC: dict[int, Polynomial] = {
    1: poly(1, -1),
    2: poly(1, 1),
    3: poly(1, 1, 1),
    4: poly(1, 0, 1),
    5: poly(1, 1, 1, 1, 1),
    6: poly(1, -1, 1),
    10: poly(1, -1, 1, -1, 1),
    12: poly(1, 0, -1, 0, 1),
}


def one_minus_t_pow(n: int) -> Counter:
    """Factorisation of ``1 - t**n`` as a multiset of cyclotomic indices."""
    return Counter(d for d in range(1, n + 1) if n % d == 0)


def factors(*parts: Union[int, Counter, Iterable[int]]) -> Counter:
    """Merge cyclotomic indices and factor multisets into one multiset."""
    out: Counter = Counter()
    for part in parts:
        if isinstance(part, int):
            out[part] += 1
        else:
            out.update(part)
    return out


class GFBuilder:
    """Accumulates ``coeff * num / den`` terms and returns one integral gf.

    Denominators are multisets of cyclotomic indices, so the common
    denominator is a true least common multiple.
    """

    def __init__(self):
        self._terms: list[tuple[Polynomial, Counter]] = []

    def add(self, coeff: Number, num: Union[Polynomial, Number], den: Counter = Counter()):
        num = _as_poly(num) * Fraction(coeff)
        if not num.is_zero:
            for idx in den:
                if idx not in CYCLOTOMIC:
                    raise KeyError(f"no cyclotomic factor with index {idx}")
            self._terms.append((num, Counter(den)))
        return self

    def build(self) -> RationalGeneratingFunction:
        lcm: Counter = Counter()
        for _, den in self._terms:
            lcm |= den
        total = Polynomial(())
        for num, den in self._terms:
            cofactor = Polynomial((1,))
            for idx, mult in lcm.items():
                cofactor = cofactor * CYCLOTOMIC[idx] ** (mult - den[idx])
            total = total + num * cofactor
        den_poly = Polynomial((1,))
        for idx, mult in sorted(lcm.items()):
            den_poly = den_poly * CYCLOTOMIC[idx] ** mult
        if not total.is_integral:
            raise ValueError("combined numerator is not integral; a summand is mistyped")
        return RationalGeneratingFunction(total.to_integral(), den_poly)
