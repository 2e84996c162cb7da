"""The non-compact subsystem spanned by alpha_1, alpha_6 and its map into C2.

The tabulated map sends a1 -> nu1, a6 -> nu2, a1+a6 -> nu1+nu2 and
2a1+a6 -> 2nu1+nu2. Nothing here assumes the table is geometrically
sound; ``verify_embedding_claims`` measures every stated length and angle
against the actual bilinear forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import presets
from .records import ClaimRecord, fmt
from .rootcore import RootSystem, bilinear, build_root_system


class NotInDomainError(KeyError):
    def __str__(self):
        return f"{self.args[0]!r} is not in the embedding table"


@dataclass(frozen=True)
class SubsystemElement:
    name: str
    vector: tuple[int, ...]


def _e6(c1: int, c6: int) -> tuple[int, ...]:
    return (c1, 0, 0, 0, 0, c6)


ELEMENTS = {
    "a1": SubsystemElement("a1", _e6(1, 0)),
    "a6": SubsystemElement("a6", _e6(0, 1)),
    "a1+a6": SubsystemElement("a1+a6", _e6(1, 1)),
    "2a1+a6": SubsystemElement("2a1+a6", _e6(2, 1)),
}

NU1 = (1, 0)
NU2 = (0, 1)

EMBEDDING_TABLE = {
    "a1": NU1,
    "a6": NU2,
    "a1+a6": (1, 1),
    "2a1+a6": (2, 1),
}


def phi_map(e: SubsystemElement | str | Sequence[int]) -> tuple[int, ...]:
    """Image in C2 simple-root coordinates of a tabulated subsystem element."""
    if isinstance(e, SubsystemElement):
        key = e.name
    elif isinstance(e, str):
        key = e
    else:
        v = tuple(e)
        key = next((n for n, el in ELEMENTS.items() if el.vector == v), v)
    if key not in EMBEDDING_TABLE:
        raise NotInDomainError(key)
    return EMBEDDING_TABLE[key]


@dataclass(frozen=True)
class MembershipEntry:
    name: str
    vector: tuple[int, ...]
    is_root: bool
    length2: Fraction


@dataclass(frozen=True)
class MembershipReport:
    preset: str
    entries: tuple[MembershipEntry, ...]

    def __getitem__(self, name: str) -> MembershipEntry:
        return next(e for e in self.entries if e.name == name)


def subsystem_membership(rs: RootSystem) -> MembershipReport:
    """Root membership and exact squared length of each tabulated element."""
    if rs.rank != 6:
        raise ValueError(f"{rs.spec.name} is not rank 6")
    entries = tuple(
        MembershipEntry(el.name, el.vector, el.vector in rs, bilinear(el.vector, el.vector, rs))
        for el in ELEMENTS.values()
    )
    return MembershipReport(rs.spec.name, entries)


def angle_signature(x, y, rs: RootSystem) -> tuple[Fraction, int]:
    """(cos^2, sign of the inner product); exact stand-in for the angle."""
    ip = bilinear(x, y, rs)
    cos2 = ip * ip / (bilinear(x, x, rs) * bilinear(y, y, rs))
    return cos2, (ip > 0) - (ip < 0)


# angles between roots of rank-2 crystallographic systems
_DEGREES = {
    (Fraction(0), 0): 90,
    (Fraction(1, 4), 1): 60, (Fraction(1, 4), -1): 120,
    (Fraction(1, 2), 1): 45, (Fraction(1, 2), -1): 135,
    (Fraction(3, 4), 1): 30, (Fraction(3, 4), -1): 150,
    (Fraction(1), 1): 0, (Fraction(1), -1): 180,
}


def angle_text(cos2: Fraction, sign: int) -> str:
    return f"cos^2={fmt(cos2)}, sign={'+' if sign > 0 else '-' if sign < 0 else '0'}"


def degrees(cos2: Fraction, sign: int) -> int | None:
    return _DEGREES.get((cos2, sign))


def c2_root_system() -> RootSystem:
    return build_root_system(presets.get("C2"))


# Gram values asserted for the subsystem; used for the self-consistency check
CLAIMED_GRAM = {"a1.a1": Fraction(2), "a6.a6": Fraction(2), "a1.a6": Fraction(-1)}


def verify_embedding_claims(rs: RootSystem) -> list[ClaimRecord]:
    """One record per numeric assertion about the subsystem and its image."""
    a1, a6 = ELEMENTS["a1"].vector, ELEMENTS["a6"].vector
    c2 = c2_root_system()
    mem = subsystem_membership(rs)
    out = []

    ip = bilinear(a1, a6, rs)
    out.append(ClaimRecord.evaluate(
        "emb.ip_a1_a6", "inner product of the non-compact simple roots: <a1, a6> = -1",
        "-1", fmt(ip), notes=f"preset {rs.spec.name}",
    ))

    sig = angle_signature(a1, a6, rs)
    out.append(ClaimRecord.evaluate(
        "emb.angle_a1_a6", "angle(a1, a6) = 120 deg",
        angle_text(Fraction(1, 4), -1), angle_text(*sig),
        notes=f"computed angle {degrees(*sig)} deg",
    ))

    out.append(ClaimRecord.evaluate(
        "emb.len2_a1+a6", "a1 + a6 is a medium root of length sqrt(6)",
        "6", fmt(mem["a1+a6"].length2),
        notes=f"a1+a6 is {'' if mem['a1+a6'].is_root else 'not '}a root of {rs.spec.name}",
    ))

    out.append(ClaimRecord.evaluate(
        "emb.len2_2a1+a6", "2a1 + a6 is a long root of length 2 sqrt(2)",
        "8", fmt(mem["2a1+a6"].length2),
        notes=f"2a1+a6 is {'' if mem['2a1+a6'].is_root else 'not '}a root of {rs.spec.name}",
    ))

    csig = angle_signature(NU1, NU2, c2)
    out.append(ClaimRecord.evaluate(
        "emb.angle_nu1_nu2", "angle(nu1 short, nu2 long) in C2 = 120 deg",
        angle_text(Fraction(1, 4), -1), angle_text(*csig),
        notes=f"computed angle {degrees(*csig)} deg in standard C2 (|nu1|^2=2, |nu2|^2=4)",
    ))

    g = CLAIMED_GRAM
    implied = g["a1.a1"] + g["a6.a6"] + 2 * g["a1.a6"]
    out.append(ClaimRecord.evaluate(
        "emb.gram_consistency", "|a1+a6|^2 = 6 given <a1,a1> = <a6,a6> = 2 and <a1,a6> = -1",
        "6", fmt(implied),
        notes="2 + 2 + 2(-1), expanded from the asserted Gram values alone",
    ))
    return out
