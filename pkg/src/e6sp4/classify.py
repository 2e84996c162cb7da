"""Finite parameter descriptors and their restriction to the Sp(4) side.

A descriptor stands in for a Langlands parameter: a series tag, a dominant
weight, and either a continuous part (principal series) or a deformation
parameter t in (0, 1) (complementary series). Restriction pushes the weight
through theta, keeps the series tag, and for complementary series records
the scale factor exp(-C(lambda) * kappa(t)) by its exponent.
"""

from __future__ import annotations

import ast
import operator
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from . import linalg
from .linalg import Vector, frac
from .rootcore import NONCOMPACT
from .weights import (
    E6_LABELS,
    E6_LATTICE,
    SHIPPED_THETA,
    SP4_LATTICE,
    ThetaMap,
    Weight,
    compensation,
    decompose,
    in_kernel_lattice,
    theta_project,
)

E6_GROUP = "E6m14"
SP4_GROUP = "Sp4"

DISCRETE = "discrete"
PRINCIPAL = "principal"
COMPLEMENTARY = "complementary"
SERIES = (DISCRETE, PRINCIPAL, COMPLEMENTARY)

GROUP_LATTICE = {E6_GROUP: E6_LATTICE, SP4_GROUP: SP4_LATTICE}
GROUP_LABELS = {E6_GROUP: E6_LABELS, SP4_GROUP: (NONCOMPACT, NONCOMPACT)}


class InvalidDescriptorError(ValueError):
    """Descriptor violates its field invariants; ``path`` names the offending field."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class NonDominantImageError(ValueError):
    pass


def _noncompact(group: str) -> tuple[int, ...]:
    return tuple(i + 1 for i, lab in enumerate(GROUP_LABELS[group]) if lab == NONCOMPACT)


@dataclass(frozen=True)
class ParameterDescriptor:
    group: str
    series: str
    weight: Weight
    continuous: Vector | None = None
    t: Fraction | None = None

    def __post_init__(self):
        if self.continuous is not None:
            object.__setattr__(self, "continuous", linalg.vec(self.continuous))
        if self.t is not None:
            object.__setattr__(self, "t", frac(self.t))

    def validate(self, strict: bool = False) -> "ParameterDescriptor":
        """Check field invariants; returns self.

        ``strict`` adds the regularity stand-in for discrete series: strictly
        positive coordinates on every non-compact index.
        """
        if self.group not in GROUP_LATTICE:
            raise InvalidDescriptorError(f"unknown group {self.group!r}", "$.group")
        if self.series not in SERIES:
            raise InvalidDescriptorError(f"series must be one of {', '.join(SERIES)}", "$.series")
        if self.weight.lattice != GROUP_LATTICE[self.group]:
            raise InvalidDescriptorError(f"{self.group} weights live in {GROUP_LATTICE[self.group]}", "$.weight")
        if self.weight.rank != len(GROUP_LABELS[self.group]):
            raise InvalidDescriptorError(f"expected {len(GROUP_LABELS[self.group])} coordinates", "$.weight")
        for i, c in enumerate(self.weight.coords):
            if c < 0:
                raise InvalidDescriptorError("weight must be dominant (coordinates >= 0)", f"$.weight[{i}]")
        nc = _noncompact(self.group)
        if self.series == DISCRETE:
            for i, c in enumerate(self.weight.coords):
                if c.denominator != 1:
                    raise InvalidDescriptorError("discrete-series weights must be integral", f"$.weight[{i}]")
            if strict:
                for k in nc:
                    if self.weight.coords[k - 1] <= 0:
                        raise InvalidDescriptorError(
                            "regular discrete-series weights need positive non-compact coordinates",
                            f"$.weight[{k - 1}]",
                        )
        if (self.continuous is not None) != (self.series == PRINCIPAL):
            raise InvalidDescriptorError("continuous part is present exactly for principal series", "$.continuous")
        if self.continuous is not None and len(self.continuous) != len(nc):
            raise InvalidDescriptorError(f"expected {len(nc)} entries, one per non-compact index", "$.continuous")
        if (self.t is not None) != (self.series == COMPLEMENTARY):
            raise InvalidDescriptorError("t is present exactly for complementary series", "$.t")
        if self.t is not None and not 0 < self.t < 1:
            raise InvalidDescriptorError("t must satisfy 0 < t < 1, i.e. t in (0,1)", "$.t")
        return self

    def sort_key(self):
        return (
            self.group,
            SERIES.index(self.series),
            self.weight.coords,
            self.continuous or (),
            self.t if self.t is not None else Fraction(-1),
        )


def descriptor(series: str, weight: Sequence, continuous=None, t=None, group: str = E6_GROUP) -> ParameterDescriptor:
    """Convenience constructor; validates (non-strict)."""
    w = weight if isinstance(weight, Weight) else Weight(GROUP_LATTICE[group], tuple(weight))
    return ParameterDescriptor(group, series, w, continuous, t).validate()


# -- kappa rules --------------------------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


def _eval_expr(node: ast.AST, t: Fraction) -> Fraction:
    if isinstance(node, ast.Expression):
        return _eval_expr(node.body, t)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Fraction(node.value)
    if isinstance(node, ast.Name) and node.id == "t":
        return t
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_expr(node.operand, t)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = _eval_expr(node.right, t)
            if exp.denominator != 1:
                raise ValueError("only integer exponents keep kappa rational")
            return _eval_expr(node.left, t) ** int(exp)
        op = _BINOPS.get(type(node.op))
        if op is not None:
            return op(_eval_expr(node.left, t), _eval_expr(node.right, t))
    raise ValueError(f"unsupported syntax in kappa expression: {ast.dump(node)}")


@dataclass(frozen=True)
class KappaRule:
    """Scalar rule t -> kappa(t).

    ``one`` is kappa = 1, ``inverse-gap`` is 1/(1-t), and ``custom`` evaluates a
    rational expression in t built from integers, + - * / and integer powers.
    """

    name: str = "one"
    expr: str | None = None
    _fn: Callable = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.name == "one":
            fn = lambda t: Fraction(1)  # noqa: E731
        elif self.name == "inverse-gap":
            fn = lambda t: 1 / (1 - t)  # noqa: E731
        elif self.name == "custom":
            if not self.expr:
                raise ValueError("custom kappa rule needs an expression in t")
            tree = ast.parse(self.expr, mode="eval")
            _eval_expr(tree, Fraction(1, 2))  # reject bad syntax up front
            fn = lambda t: _eval_expr(tree, t)  # noqa: E731
        else:
            raise ValueError(f"unknown kappa rule {self.name!r}")
        object.__setattr__(self, "_fn", fn)

    def __call__(self, t) -> Fraction:
        return self._fn(frac(t))


KAPPA_ONE = KappaRule("one")


# -- restriction ----------------------------------------------------------------

@dataclass(frozen=True)
class ScaleRecord:
    c_value: Fraction
    kappa_value: Fraction
    exponent: Fraction


def scale_record(lam: Weight, t, kappa: KappaRule = KAPPA_ONE, labels=E6_LABELS) -> ScaleRecord:
    c = compensation(lam, labels)
    k = kappa(t)
    return ScaleRecord(c, k, -(c * k))


@dataclass(frozen=True)
class RestrictionResult:
    descriptor: ParameterDescriptor
    scale: ScaleRecord | None
    theta_image: Weight
    discarded: Weight  # compact part of the input weight, killed by theta


def _target_group(tmap: ThetaMap) -> str:
    return next(g for g, lat in GROUP_LATTICE.items() if lat == tmap.target)


def restrict_descriptor(
    d: ParameterDescriptor,
    tmap: ThetaMap = SHIPPED_THETA,
    kappa: KappaRule = KAPPA_ONE,
) -> RestrictionResult:
    d.validate()
    if d.group != E6_GROUP:
        raise InvalidDescriptorError(f"restriction expects an {E6_GROUP} descriptor", "$.group")
    labels = GROUP_LABELS[d.group]
    image = theta_project(d.weight, tmap)
    if d.series == DISCRETE and not image.is_dominant():
        raise NonDominantImageError(f"theta image {image.coords} is not dominant")
    continuous = None
    if d.continuous is not None:
        # theta restricted to the non-compact fundamental weights
        acc = Weight.zero(tmap.target, tmap.target_rank)
        for c, k in zip(d.continuous, _noncompact(d.group)):
            acc = acc + c * Weight(tmap.target, tmap.basis_images[k - 1])
        continuous = acc.coords
    out = ParameterDescriptor(_target_group(tmap), series_type_map(d.series), image, continuous, d.t)
    scale = scale_record(d.weight, d.t, kappa, labels) if d.series == COMPLEMENTARY else None
    return RestrictionResult(out, scale, image, decompose(d.weight, labels).compact_part)


def series_type_map(series: str) -> str:
    """Series on the Sp(4) side: identical tag (discrete, principal, complementary)."""
    if series not in SERIES:
        raise ValueError(f"unknown series {series!r}")
    return series


def is_elliptic_surrogate(d: ParameterDescriptor) -> bool:
    return d.validate().series == DISCRETE


def ellipticity_commutes(d: ParameterDescriptor, tmap: ThetaMap = SHIPPED_THETA) -> bool:
    """is_elliptic(d) == is_elliptic(restriction of d)."""
    return is_elliptic_surrogate(d) == is_elliptic_surrogate(restrict_descriptor(d, tmap).descriptor)


# -- injectivity scan -----------------------------------------------------------

def image_key(r: RestrictionResult):
    """What 'equal images' means: the restricted descriptor (the scale is a scalar twist)."""
    return r.descriptor.sort_key()


@dataclass(frozen=True)
class Collision:
    first: ParameterDescriptor
    second: ParameterDescriptor
    difference: Weight


@dataclass(frozen=True)
class InjectivityReport:
    collisions_kernel: tuple[Collision, ...]
    collisions_unexplained: tuple[Collision, ...]
    family_size: int
    image_count: int

    @property
    def injective_mod_kernel(self) -> bool:
        return not self.collisions_unexplained


def kernel_explained(a: ParameterDescriptor, b: ParameterDescriptor, tmap: ThetaMap = SHIPPED_THETA) -> bool:
    """Same non-weight fields and a weight difference in the integer kernel lattice."""
    return (
        a.series == b.series
        and a.continuous == b.continuous
        and a.t == b.t
        and in_kernel_lattice(b.weight - a.weight, tmap)
    )


def injectivity_scan(
    family: Iterable[ParameterDescriptor],
    tmap: ThetaMap = SHIPPED_THETA,
    kappa: KappaRule = KAPPA_ONE,
) -> InjectivityReport:
    """Group the family by restricted image and sort every collision into a class."""
    members = sorted(set(family), key=ParameterDescriptor.sort_key)
    buckets: dict = defaultdict(list)
    for d in members:
        if d.group != E6_GROUP:
            raise InvalidDescriptorError(f"scan expects {E6_GROUP} descriptors", "$.group")
        buckets[image_key(restrict_descriptor(d, tmap, kappa))].append(d)
    kern, other = [], []
    for key in sorted(buckets):
        for a, b in combinations(buckets[key], 2):
            c = Collision(a, b, b.weight - a.weight)
            (kern if kernel_explained(a, b, tmap) else other).append(c)
    return InjectivityReport(tuple(kern), tuple(other), len(members), len(buckets))


def descriptor_grid(
    bound: int,
    support: Sequence[int] = (1, 6),
    series: Sequence[str] = SERIES,
    continuous: Sequence = (0, 0),
    t=Fraction(1, 2),
) -> list[ParameterDescriptor]:
    """Descriptors whose weight coordinates range over 0..bound on ``support`` (1-based), zero elsewhere."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    rank = len(E6_LABELS)
    for k in support:
        if not 1 <= k <= rank:
            raise IndexError(f"support index {k} out of range 1..{rank}")
    support = sorted(set(support))
    out = []
    for s in series:
        for values in product(range(bound + 1), repeat=len(support)):
            coords = [0] * rank
            for k, v in zip(support, values):
                coords[k - 1] = v
            out.append(descriptor(
                s, coords,
                continuous=continuous if s == PRINCIPAL else None,
                t=t if s == COMPLEMENTARY else None,
            ))
    return out


def grid_size(bound: int, support: Sequence[int], series: Sequence[str] = SERIES) -> int:
    return (bound + 1) ** len(set(support)) * len(series)
