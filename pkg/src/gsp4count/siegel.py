"""Dimensions of Siegel cusp form spaces of degree two at prime level, built from counts.

Each level-p subgroup H contributes ``d(H, type)`` copies of every
representation of a given type, so ``dim S_k(H)`` is a weighted sum of the
counts.  The generic IIIa / VIa / VIb parts only ever appear through the
combined count ``IIIa+VIa/b``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Mapping, Optional

from .arith import exact_int, require_prime
from .counts import count
from .reprtypes import ReprType

__all__ = [
    "SubgroupKind",
    "FIXED_VECTOR_DIMS",
    "dim_siegel_cusp",
    "dim_from_fixed_vectors",
    "dim_newforms",
    "dim_newforms_paramodular_G",
]


class SubgroupKind(str, enum.Enum):
    FULL = "full"  # Sp(4, Z)
    PARAMODULAR = "paramodular"  # K(p)
    SIEGEL = "siegel"  # Gamma0(p)
    KLINGEN = "klingen"  # Gamma0'(p)
    BOREL = "borel"  # B(p)

    def __str__(self) -> str:
        return self.value


# dimensions of H-fixed vectors per Iwahori-spherical type; missing labels are 0
FIXED_VECTOR_DIMS: dict[SubgroupKind, dict[str, int]] = {
    SubgroupKind.FULL: {"I": 1, "IIb": 1},
    SubgroupKind.PARAMODULAR: {"I": 2, "IIa": 1, "IIb": 1, "Vb": 1, "VIc": 1},
    SubgroupKind.SIEGEL: {"I": 4, "IIa": 1, "IIb": 3, "IIIa": 2, "Vb": 1, "VIa": 1, "VIb": 1},
    SubgroupKind.KLINGEN: {
        "I": 4, "IIa": 2, "IIb": 2, "IIIa": 1, "Va": 1, "Vb": 1, "VIa": 1, "VIc": 1,
    },
    SubgroupKind.BOREL: {
        "I": 8, "IIa": 4, "IIb": 4, "IIIa": 4, "IVa": 1, "Va": 2, "Vb": 2,
        "VIa": 3, "VIb": 1, "VIc": 1,
    },
}

# types whose d-entry is read directly
_DIRECT = {
    ReprType.I: "I",
    ReprType.IIa: "IIa",
    ReprType.IIb: "IIb",
    ReprType.IVa: "IVa",
    ReprType.Va: "Va",
    ReprType.Vb: "Vb",
    ReprType.VIc: "VIc",
}


def _as_kind(H) -> SubgroupKind:
    if isinstance(H, SubgroupKind):
        return H
    return SubgroupKind(str(H).lower())


def _counts(k: int, p: int, types) -> Optional[dict[ReprType, int]]:
    out = {}
    for omega in types:
        value = count(k, p, omega).value
        if value is None:
            return None
        out[omega] = value
    return out


_ALL = tuple(ReprType)


def dim_from_fixed_vectors(s: Mapping[ReprType, int], H) -> int:
    """``sum d(H, type) * s(type)`` straight from the fixed-vector table.

    The generic VIa and VIb parts have equal counts, and within every row
    d(IIIa) = d(VIa) + d(VIb), so those three columns collapse onto the
    combined count.  The lift parts of VIb are added with d(VIb).
    """
    d = FIXED_VECTOR_DIMS[_as_kind(H)]
    d3, d6a, d6b = d.get("IIIa", 0), d.get("VIa", 0), d.get("VIb", 0)
    if d3 != d6a + d6b:
        raise AssertionError(f"IIIa column of {H} does not split over VIa/VIb")
    total = sum(d.get(label, 0) * s[omega] for omega, label in _DIRECT.items())
    total += d3 * s[ReprType.IIIaVIab]
    total += d6b * (s[ReprType.VIbP] + s[ReprType.VIbY])
    return total


def _solved(s: Mapping[ReprType, int], H: SubgroupKind) -> int:
    I, IIa, IIb = s[ReprType.I], s[ReprType.IIa], s[ReprType.IIb]
    X, IVa, Va = s[ReprType.IIIaVIab], s[ReprType.IVa], s[ReprType.Va]
    Vb, P, Y, VIc = s[ReprType.Vb], s[ReprType.VIbP], s[ReprType.VIbY], s[ReprType.VIc]
    if H is SubgroupKind.FULL:
        return I + IIb
    para = 2 * I + IIa + IIb + Vb + VIc
    if H is SubgroupKind.PARAMODULAR:
        return para
    siegel = para + 2 * (I + IIb + X) + P + Y - VIc
    if H is SubgroupKind.SIEGEL:
        return siegel
    klingen = (
        Fraction(siegel, 2) + Fraction(3 * para, 2) + Va - I - IIb - Vb - Fraction(P + Y + VIc, 2)
    )
    if H is SubgroupKind.KLINGEN:
        return exact_int(klingen, "dim S_k(Klingen)")
    return exact_int(IVa - para + siegel + 2 * klingen - 2 * I - 2 * IIb, "dim S_k(Borel)")


def dim_siegel_cusp(k: int, p: int, H) -> Optional[int]:
    """dim S_k(H) for H of level p, or None where a needed count is unknown."""
    H = _as_kind(H)
    require_prime(p)
    if H is SubgroupKind.FULL:
        s = _counts(k, p, (ReprType.I, ReprType.IIb))
        return None if s is None else s[ReprType.I] + s[ReprType.IIb]
    s = _counts(k, p, _ALL)
    if s is None:
        return None
    return _solved(s, H)


_NEW = {
    SubgroupKind.PARAMODULAR: {ReprType.IIa: 1, ReprType.Vb: 1, ReprType.VIc: 1},
    SubgroupKind.BOREL: {ReprType.IVa: 1},
    SubgroupKind.SIEGEL: {
        ReprType.IIa: 1, ReprType.IIIaVIab: 2, ReprType.Vb: 1, ReprType.VIbP: 1, ReprType.VIbY: 1,
    },
    SubgroupKind.KLINGEN: {ReprType.IIIaVIab: 1, ReprType.Va: 1},
}


def dim_newforms(k: int, p: int, H) -> Optional[int]:
    H = _as_kind(H)
    if H is SubgroupKind.FULL:
        raise ValueError("newforms are only defined for the level-p subgroups")
    weights = _NEW[H]
    s = _counts(k, p, weights)
    if s is None:
        return None
    return sum(w * s[omega] for omega, w in weights.items())


def dim_newforms_paramodular_G(k: int, p: int) -> Optional[int]:
    """Paramodular newforms that are not lifts: exactly the IIa count."""
    return count(k, p, ReprType.IIa).value
