"""Claim records: one asserted value against one computed value."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

PASS = "PASS"
FAIL = "FAIL"
NOT_APPLICABLE = "NOT-APPLICABLE"
VERDICTS = (PASS, FAIL, NOT_APPLICABLE)
NA_TEXT = "n/a"


def fmt(x) -> str:
    """Canonical text for rationals: "p" or "p/q" in lowest terms, q > 0."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def fmt_vec(xs) -> str:
    return "(" + ", ".join(fmt(x) for x in xs) + ")"


def judge(claimed: str, computed: str | None) -> str:
    """Exact comparator: canonical texts must coincide."""
    if computed is None or computed == NA_TEXT:
        return NOT_APPLICABLE
    return PASS if claimed == computed else FAIL


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    anchor: str
    claimed: str
    computed: str
    verdict: str
    notes: str = ""

    def __post_init__(self):
        if not self.anchor:
            raise ValueError(f"claim {self.id}: empty anchor")
        if self.verdict not in VERDICTS:
            raise ValueError(f"claim {self.id}: bad verdict {self.verdict!r}")

    @classmethod
    def evaluate(cls, id: str, anchor: str, claimed: str, computed: str | None, notes: str = "") -> "ClaimRecord":
        verdict = judge(claimed, computed)
        return cls(id, anchor, claimed, NA_TEXT if computed is None else computed, verdict, notes)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "ClaimRecord":
        return cls(**d)
