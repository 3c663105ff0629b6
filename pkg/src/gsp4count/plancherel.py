"""Local Plancherel masses of Iwahori-spherical tempered types and the limit law.

Masses and inverse volumes are polynomials in the residue field size ``q``.
Checking the volume/mass system at more points than the common degree bound
therefore proves it as a polynomial identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arith import exact_int, is_prime, require_prime
from .counts import count
from .reprtypes import GENERIC, ReprType, parse_type
from .series import Polynomial, poly

__all__ = [
    "MASS_POLYNOMIALS",
    "TEMPERED_FIXED_DIMS",
    "SIGNED_MEASURE",
    "AsymptoticCoefficients",
    "is_prime_power",
    "plancherel_mass",
    "parahoric_volume",
    "verify_mass_system",
    "dim_xi",
    "asymptotic_coefficients",
    "limit_ratio",
]

F = Fraction
q_ = poly(0, 1)
half = F(1, 2)

MASS_POLYNOMIALS: dict[str, Polynomial] = {
    "I": poly(1),
    "II": q_ * q_ - 1,
    "III": (q_ - 1) * (q_ * q_ + q_ + 2) * half,
    "IV": (q_ - 1) * (q_**3 - 1),
    "V": q_ * (q_ - 1) ** 2 * half,
    "VI": Polynomial(()),
}
MASS_POLYNOMIALS["III+VI"] = MASS_POLYNOMIALS["III"] + MASS_POLYNOMIALS["VI"]

# how counted types map onto mass keys
_MASS_KEY = {
    ReprType.I: "I",
    ReprType.IIa: "II",
    ReprType.IIIaVIab: "III+VI",
    ReprType.IVa: "IV",
    ReprType.Va: "V",
}

# fixed-vector dimensions on the tempered members of each family
TEMPERED_FIXED_DIMS: dict[str, dict[str, int]] = {
    "K": {"I": 1},
    "K(p)": {"I": 2, "II": 1},
    "Kl(p)": {"I": 4, "II": 2, "III": 1, "V": 1, "VI": 1},
    "Si(p)": {"I": 4, "II": 1, "III": 2, "VI": 2},
    "I": {"I": 8, "II": 4, "III": 4, "IV": 1, "V": 2, "VI": 4},
}

_INVERSE_VOLUME: dict[str, Polynomial] = {
    "K": poly(1),
    "K(p)": 1 + q_ * q_,
    "Kl(p)": (1 + q_) * (1 + q_ * q_),
    "Si(p)": (1 + q_) * (1 + q_ * q_),
    "I": (1 + q_) ** 2 * (1 + q_ * q_),
}

# Total mass of the signed measure on the unitary dual at level one.  Kept
# for reference; nothing here depends on it.
SIGNED_MEASURE = F(-1, 2**5 * 3**2 * 5)


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    for r in range(2, q + 1):
        if q % r == 0:
            while q % r == 0:
                q //= r
            return q == 1 and is_prime(r)
    return False


def _require_q(q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")


def _mass_key(omega) -> str:
    if isinstance(omega, str) and omega in MASS_POLYNOMIALS and not isinstance(omega, ReprType):
        return omega
    omega = parse_type(omega) if not isinstance(omega, ReprType) else omega
    if omega not in _MASS_KEY:
        raise ValueError(f"no Plancherel mass for {omega}")
    return _MASS_KEY[omega]


def plancherel_mass(q: int, omega: Union[str, ReprType]) -> Fraction:
    """m_omega at residue field size q; omega is I..VI, III+VI, or a generic type."""
    _require_q(q)
    return F(MASS_POLYNOMIALS[_mass_key(omega)](q))


def parahoric_volume(q: int, H: str) -> Fraction:
    _require_q(q)
    if H not in _INVERSE_VOLUME:
        raise ValueError(f"unknown parahoric subgroup {H!r}")
    return 1 / F(_INVERSE_VOLUME[H](q))


def verify_mass_system(q: int) -> bool:
    """1/vol(H) == sum d(H, type) * m_type for all five parahorics."""
    _require_q(q)
    for H, row in TEMPERED_FIXED_DIMS.items():
        total = sum(d * plancherel_mass(q, key) for key, d in row.items())
        if 1 / parahoric_volume(q, H) != total:
            return False
    return True


def dim_xi(k: int, j: int = 0) -> int:
    """Dimension of the Sp(4, C) representation with highest weight (k+j-3, k-3)."""
    if k < 3 or j < 0:
        raise ValueError(f"need k >= 3 and j >= 0, got k={k}, j={j}")
    return exact_int(F((j + 1) * (k - 2) * (k + j - 1) * (2 * k + j - 3), 6), "dim xi_{k,j}")


@dataclass(frozen=True)
class AsymptoticCoefficients:
    omega: ReprType
    a: Fraction
    b: Fraction


def asymptotic_coefficients(p: int, omega) -> AsymptoticCoefficients:
    """Coefficients of the cubic and of the alternating quadratic term of s_k."""
    require_prime(p)
    omega = parse_type(omega) if not isinstance(omega, ReprType) else omega
    if omega is ReprType.I:
        a, b = F(1), F(1)
    elif omega is ReprType.IIa:
        a, b = F(p * p - 1), F(0)
    elif omega is ReprType.IIIaVIab:
        a, b = F((p - 1) * (p * p + p + 2), 2), F((p - 1) * (p + 3), 2)
    elif omega is ReprType.IVa:
        a, b = F((p - 1) * (p**3 - 1)), F((p - 1) ** 2)
    elif omega is ReprType.Va:
        a, b = F(p * (p - 1) ** 2, 2), F(-((p - 1) ** 2), 2)
    else:
        raise ValueError(f"{omega} is not a generic type")
    return AsymptoticCoefficients(omega, a, b)


def limit_ratio(k: int, p: int, omega) -> Fraction:
    """2880 * s_k(p, omega) / dim xi_{k,0}; tends to m_omega as k grows."""
    omega = parse_type(omega) if not isinstance(omega, ReprType) else omega
    if omega not in GENERIC:
        raise ValueError(f"{omega} is not a generic type")
    value = count(k, p, omega).value
    if value is None:
        raise ValueError(f"s_{k}({p}, {omega}) is unknown")
    return F(2**6 * 3**2 * 5 * value, dim_xi(k, 0))
