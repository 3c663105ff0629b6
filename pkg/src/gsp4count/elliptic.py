"""Dimensions of elliptic cusp form spaces at level 1 and prime level.

Every formula is evaluated in exact rationals and only converted to ``int``
through :func:`~gsp4count.arith.exact_int`, so a transcription slip shows up
as an :class:`~gsp4count.arith.IntegralityError` instead of a silent rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import exact_int, kronecker_delta, require_prime, seq
from .arith import symbol_minus_one, symbol_minus_three
from .classnum import quadratic_data

__all__ = [
    "EllipticDims",
    "dim_cusp_sl2",
    "dim_cusp_sl2_pm",
    "dim_cusp_gamma0",
    "dim_new_gamma0",
    "dim_new_pm",
    "elliptic_dims",
]


def _require_even_weight(k: int) -> None:
    if k < 2 or k % 2:
        raise ValueError(f"weight must be an even integer >= 2, got {k}")


def dim_cusp_sl2(k: int) -> int:
    """dim S_k(SL(2,Z)); zero for odd ``k``."""
    if k < 1:
        raise ValueError(f"weight must be >= 1, got {k}")
    if k % 2:
        return 0
    value = (
        Fraction(k - 1, 12)
        + Fraction((-1) ** (k // 2), 4)
        + Fraction(seq("c3", k) + seq("c3hat", k), 3)
        - Fraction(1, 2)
        + kronecker_delta(k, 2)
    )
    return exact_int(value, f"dim S_{k}(SL2(Z))")


def dim_cusp_sl2_pm(k: int, sign: int) -> int:
    """Level-one eigenforms of weight ``k`` have root number (-1)^(k/2)."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if k % 2 or (-1) ** (k // 2) != sign:
        return 0
    return dim_cusp_sl2(k)


def dim_cusp_gamma0(k: int, p: int) -> int:
    _require_even_weight(k)
    require_prime(p)
    value = (
        Fraction(k - 1, 12) * (p + 1)
        + Fraction((-1) ** (k // 2), 4) * (1 + symbol_minus_one(p))
        + Fraction(seq("c3", k) + seq("c3hat", k), 3) * (1 + symbol_minus_three(p))
        - 1
        + kronecker_delta(k, 2)
    )
    return exact_int(value, f"dim S_{k}(Gamma0({p}))")


def dim_new_gamma0(k: int, p: int) -> int:
    return exact_int(
        dim_cusp_gamma0(k, p) - 2 * dim_cusp_sl2(k), f"dim S_{k}^new(Gamma0({p}))"
    )


def dim_new_pm(k: int, p: int, sign: int) -> int:
    """Dimension of the newforms of weight ``k``, level ``p`` with root number ``sign``."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    _require_even_weight(k)
    require_prime(p)
    new = dim_new_gamma0(k, p)
    if p >= 5:
        split = Fraction(quadratic_data(p).hb, 2) - kronecker_delta(k, 2)
    elif k == 2:
        # S_2(Gamma0(2)) and S_2(Gamma0(3)) are both zero.
        return 0
    elif p == 2:
        split = 1 if k % 8 in (0, 2) else 0
    else:
        split = 1 if k % 12 in (0, 2, 6, 8) else 0
    return exact_int(
        Fraction(new, 2) + sign * Fraction(split, 2),
        f"dim S_{k}^{'+' if sign > 0 else '-'},new(Gamma0({p}))",
    )


@dataclass(frozen=True)
class EllipticDims:
    k: int
    p: int
    full: int
    new: int
    plus_new: int
    minus_new: int


def elliptic_dims(k: int, p: int) -> EllipticDims:
    if p == 1:
        full = dim_cusp_sl2(k)
        return EllipticDims(k, 1, full, full, dim_cusp_sl2_pm(k, 1), dim_cusp_sl2_pm(k, -1))
    return EllipticDims(
        k,
        p,
        dim_cusp_gamma0(k, p),
        dim_new_gamma0(k, p),
        dim_new_pm(k, p, 1),
        dim_new_pm(k, p, -1),
    )
