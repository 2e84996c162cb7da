"""JSON wire formats. Rationals travel as canonical "p/q" strings."""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .classify import (
    GROUP_LATTICE,
    Collision,
    InjectivityReport,
    InvalidDescriptorError,
    ParameterDescriptor,
    RestrictionResult,
    ScaleRecord,
)
from .weights import Weight

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


def rational_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(value, path: str = "$") -> Fraction:
    """Accept "p/q" / "p" strings and JSON integers; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidDescriptorError(f"expected an exact rational, got {value!r}", path)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value):
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            raise InvalidDescriptorError("zero denominator", path) from None
    raise InvalidDescriptorError(f"expected a rational such as \"3/2\", got {value!r}", path)


def _rational_list(value, path: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list):
        raise InvalidDescriptorError("expected an array of rationals", path)
    return tuple(parse_rational(x, f"{path}[{i}]") for i, x in enumerate(value))


def vec_doc(xs) -> list[str]:
    return [rational_str(x) for x in xs]


def descriptor_to_doc(d: ParameterDescriptor) -> dict:
    doc = {"group": d.group, "series": d.series, "weight": vec_doc(d.weight.coords)}
    if d.continuous is not None:
        doc["continuous"] = vec_doc(d.continuous)
    if d.t is not None:
        doc["t"] = rational_str(d.t)
    return doc


def descriptor_from_doc(doc, strict: bool = False) -> ParameterDescriptor:
    """Parse and validate; errors carry the JSON path of the offending field."""
    if not isinstance(doc, dict):
        raise InvalidDescriptorError("descriptor must be a JSON object")
    unknown = set(doc) - {"group", "series", "weight", "continuous", "t"}
    if unknown:
        raise InvalidDescriptorError(f"unknown keys {sorted(unknown)}")
    for key in ("group", "series", "weight"):
        if key not in doc:
            raise InvalidDescriptorError("missing required key", f"$.{key}")
    group = doc["group"]
    if group not in GROUP_LATTICE:
        raise InvalidDescriptorError(f"unknown group {group!r}; expected one of {sorted(GROUP_LATTICE)}", "$.group")
    coords = _rational_list(doc["weight"], "$.weight")
    try:
        weight = Weight(GROUP_LATTICE[group], coords)
    except ValueError as exc:
        raise InvalidDescriptorError(str(exc), "$.weight") from None
    continuous = _rational_list(doc["continuous"], "$.continuous") if doc.get("continuous") is not None else None
    t = parse_rational(doc["t"], "$.t") if doc.get("t") is not None else None
    return ParameterDescriptor(group, doc["series"], weight, continuous, t).validate(strict=strict)


def scale_to_doc(s: ScaleRecord | None):
    if s is None:
        return None
    return {
        "c_value": rational_str(s.c_value),
        "kappa_value": rational_str(s.kappa_value),
        "exponent": rational_str(s.exponent),
    }


def restriction_to_doc(r: RestrictionResult) -> dict:
    return {
        "descriptor": descriptor_to_doc(r.descriptor),
        "scale": scale_to_doc(r.scale),
        "provenance": {
            "theta_image": vec_doc(r.theta_image.coords),
            "discarded_compact_part": vec_doc(r.discarded.coords),
        },
    }


def restriction_from_doc(doc: dict) -> RestrictionResult:
    d = descriptor_from_doc(doc["descriptor"])
    s = doc["scale"]
    scale = None if s is None else ScaleRecord(*(parse_rational(s[k]) for k in ("c_value", "kappa_value", "exponent")))
    prov = doc["provenance"]
    image = Weight(d.weight.lattice, _rational_list(prov["theta_image"], "$.provenance.theta_image"))
    discarded = _rational_list(prov["discarded_compact_part"], "$.provenance.discarded_compact_part")
    source = next(lat for lat in GROUP_LATTICE.values() if lat != d.weight.lattice)
    return RestrictionResult(d, scale, image, Weight(source, discarded))


def _collision_doc(c: Collision) -> dict:
    return {
        "first": descriptor_to_doc(c.first),
        "second": descriptor_to_doc(c.second),
        "weight_difference": vec_doc(c.difference.coords),
    }


def injectivity_to_doc(r: InjectivityReport) -> dict:
    return {
        "collisions_kernel": [_collision_doc(c) for c in r.collisions_kernel],
        "collisions_unexplained": [_collision_doc(c) for c in r.collisions_unexplained],
        "family_size": r.family_size,
        "image_count": r.image_count,
    }


def injectivity_from_doc(doc: dict) -> InjectivityReport:
    def col(c):
        a, b = descriptor_from_doc(c["first"]), descriptor_from_doc(c["second"])
        return Collision(a, b, Weight(a.weight.lattice, _rational_list(c["weight_difference"], "$")))

    return InjectivityReport(
        tuple(col(c) for c in doc["collisions_kernel"]),
        tuple(col(c) for c in doc["collisions_unexplained"]),
        doc["family_size"],
        doc["image_count"],
    )


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
