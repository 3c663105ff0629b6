"""Iwahori-spherical representation types that are counted, and those forced to zero."""

from __future__ import annotations

import enum

__all__ = ["ReprType", "ZeroType", "GENERIC", "LIFTS", "parse_type"]


class ReprType(str, enum.Enum):
    I = "I"
    IIa = "IIa"
    IIb = "IIb"
    IIIaVIab = "IIIa+VIa/b"
    IVa = "IVa"
    Va = "Va"
    Vb = "Vb"
    VIbP = "VIb(P)"
    VIbY = "VIb(Y)"
    VIc = "VIc"

    def __str__(self) -> str:
        return self.value


class ZeroType(str, enum.Enum):
    """Types whose count vanishes identically: non-unitary, one-dimensional,
    or only reachable through Arthur packets of type (B) or (Q)."""

    IIIb = "IIIb"
    IVb = "IVb"
    IVc = "IVc"
    IVd = "IVd"
    Vd = "Vd"
    VId = "VId"
    B = "(B)"
    Q = "(Q)"

    def __str__(self) -> str:
        return self.value


# the types whose counts carry the Plancherel leading term
GENERIC = (ReprType.I, ReprType.IIa, ReprType.IIIaVIab, ReprType.IVa, ReprType.Va)
# Saito-Kurokawa and Yoshida lifts with level p
LIFTS = (ReprType.Vb, ReprType.VIbP, ReprType.VIc, ReprType.VIbY)

_ALIASES = {
    "IIIa+VIa/b": ReprType.IIIaVIab,
    "IIIaVIab": ReprType.IIIaVIab,
    "VIb(P)": ReprType.VIbP,
    "VIbP": ReprType.VIbP,
    "VIb(Y)": ReprType.VIbY,
    "VIbY": ReprType.VIbY,
    # Vc is a twist of Vb and is counted there
    "Vc": ReprType.Vb,
}


def parse_type(label: str) -> ReprType | ZeroType:
    label = label.strip()
    if label in _ALIASES:
        return _ALIASES[label]
    for enum_cls in (ReprType, ZeroType):
        for member in enum_cls:
            if label in (member.value, member.name):
                return member
    raise ValueError(f"unknown representation type {label!r}")
