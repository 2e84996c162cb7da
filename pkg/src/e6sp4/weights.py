"""Weights in fundamental-weight coordinates, the theta projection, W_c averaging.

Pairings use the dual-basis convention <omega_i, alpha_j^vee> = delta_ij, so
pairing a weight with a simple coroot reads off one coordinate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .linalg import Vector, frac
from .rootcore import COMPACT, NONCOMPACT, RootSystem, WeylGroup, reflect

E6_LATTICE = "P(E6)"
SP4_LATTICE = "P(Sp4)"

LATTICE_RANKS = {E6_LATTICE: 6, SP4_LATTICE: 2}

# compact nodes 2..5, noncompact 1 and 6
E6_LABELS = (NONCOMPACT, COMPACT, COMPACT, COMPACT, COMPACT, NONCOMPACT)


class LatticeMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    lattice: str
    coords: Vector

    def __post_init__(self):
        object.__setattr__(self, "coords", linalg.vec(self.coords))
        want = LATTICE_RANKS.get(self.lattice)
        if want is not None and len(self.coords) != want:
            raise ValueError(f"{self.lattice} weights have {want} coordinates, got {len(self.coords)}")

    @classmethod
    def zero(cls, lattice: str, rank: int | None = None) -> "Weight":
        return cls(lattice, (0,) * (rank or LATTICE_RANKS[lattice]))

    @classmethod
    def fundamental(cls, lattice: str, k: int, rank: int | None = None) -> "Weight":
        """omega_k (1-based)."""
        n = rank or LATTICE_RANKS[lattice]
        return cls(lattice, tuple(int(i == k - 1) for i in range(n)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _same(self, other: "Weight") -> None:
        if other.lattice != self.lattice or other.rank != self.rank:
            raise LatticeMismatchError(f"{self.lattice} vs {other.lattice}")

    def __add__(self, other: "Weight") -> "Weight":
        self._same(other)
        return Weight(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._same(other)
        return Weight(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(self.lattice, tuple(-a for a in self.coords))

    def __mul__(self, c) -> "Weight":
        c = frac(c)
        return Weight(self.lattice, tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)


def omega(k: int) -> Weight:
    """E6 fundamental weight omega_k."""
    return Weight.fundamental(E6_LATTICE, k)


def omega_prime(k: int) -> Weight:
    """Sp(4) fundamental weight omega'_k."""
    return Weight.fundamental(SP4_LATTICE, k)


def pair_coroot(lam: Weight, k: int):
    if not 1 <= k <= lam.rank:
        raise IndexError(f"simple index {k} out of range 1..{lam.rank}")
    return lam.coords[k - 1]


@dataclass(frozen=True)
class ThetaMap:
    source: str
    target: str
    basis_images: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis_images", tuple(linalg.vec(v) for v in self.basis_images))

    @property
    def source_rank(self) -> int:
        return len(self.basis_images)

    @property
    def target_rank(self) -> int:
        return len(self.basis_images[0]) if self.basis_images else LATTICE_RANKS[self.target]

    def matrix(self) -> tuple[Vector, ...]:
        """target_rank x source_rank matrix; column k is the image of omega_k."""
        return linalg.transpose(self.basis_images)


# omega_1 -> omega'_1, omega_6 -> omega'_2, compact fundamental weights -> 0
SHIPPED_THETA = ThetaMap(
    E6_LATTICE,
    SP4_LATTICE,
    ((1, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 1)),
)

SP4_IDENTITY = ThetaMap(SP4_LATTICE, SP4_LATTICE, ((1, 0), (0, 1)))


def theta_project(lam: Weight, tmap: ThetaMap = SHIPPED_THETA) -> Weight:
    if lam.lattice != tmap.source or lam.rank != tmap.source_rank:
        raise LatticeMismatchError(f"weight lives in {lam.lattice}, map expects {tmap.source}")
    out = [Fraction(0)] * tmap.target_rank
    for c, img in zip(lam.coords, tmap.basis_images):
        if c:
            out = [o + c * x for o, x in zip(out, img)]
    return Weight(tmap.target, tuple(out))


@dataclass(frozen=True)
class KernelCertificate:
    basis: tuple[Weight, ...]
    source_rank: int
    image_rank: int
    target_rank: int
    invariant_factors: tuple[int, ...]

    @property
    def quotient_rank(self) -> int:
        return self.source_rank - len(self.basis)

    @property
    def rank_ok(self) -> bool:
        """source rank - kernel rank = target rank."""
        return self.quotient_rank == self.target_rank == self.image_rank

    @property
    def quotient_isomorphic(self) -> bool:
        """Source/kernel maps onto the target lattice (all invariant factors 1)."""
        return self.rank_ok and all(d == 1 for d in self.invariant_factors)


def kernel_certificate(tmap: ThetaMap = SHIPPED_THETA) -> KernelCertificate:
    m = tmap.matrix()
    basis = linalg.integer_kernel(m, tmap.source_rank)
    integral = all(x.denominator == 1 for row in m for x in row)
    factors = tuple(linalg.smith_diagonal([[int(x) for x in row] for row in m])) if integral else ()
    return KernelCertificate(
        basis=tuple(Weight(tmap.source, b) for b in basis),
        source_rank=tmap.source_rank,
        image_rank=linalg.rank(m),
        target_rank=tmap.target_rank,
        invariant_factors=factors,
    )


def kernel_basis(tmap: ThetaMap = SHIPPED_THETA) -> list[Weight]:
    """Integral basis of ker(theta), in Hermite normal form."""
    return list(kernel_certificate(tmap).basis)


def in_kernel_lattice(v: Weight, tmap: ThetaMap = SHIPPED_THETA) -> bool:
    """Whether v is an integer combination of kernel_basis(tmap)."""
    basis = [tuple(int(x) for x in b.coords) for b in kernel_basis(tmap)]
    return linalg.in_integer_span(basis, v.coords)


@dataclass(frozen=True)
class WeightDecomposition:
    noncompact_part: Weight
    compact_part: Weight


def decompose(lam: Weight, labels: Sequence[str] = E6_LABELS) -> WeightDecomposition:
    if len(labels) != lam.rank:
        raise ValueError(f"{len(labels)} labels for a rank-{lam.rank} weight")
    z = Fraction(0)
    nc = tuple(c if lab == NONCOMPACT else z for c, lab in zip(lam.coords, labels))
    cp = tuple(c if lab == COMPACT else z for c, lab in zip(lam.coords, labels))
    return WeightDecomposition(Weight(lam.lattice, nc), Weight(lam.lattice, cp))


def compensation(lam: Weight, labels: Sequence[str] = E6_LABELS) -> Fraction:
    """Sum of squared pairings with the compact simple coroots."""
    return sum(
        (pair_coroot(lam, k) ** 2 for k in range(1, lam.rank + 1) if labels[k - 1] == COMPACT),
        Fraction(0),
    )


# -- compact Weyl averaging ----------------------------------------------------

@lru_cache(maxsize=None)
def averaging_matrix(wc: WeylGroup) -> tuple[Vector, ...]:
    """(1/|W|) sum_w w, in simple-root coordinates."""
    n = wc.rs.rank
    acc = [[Fraction(0)] * n for _ in range(n)]
    for p in wc:
        m = wc.matrix(p)
        for i in range(n):
            row = acc[i]
            for j, x in enumerate(m[i]):
                if x:
                    row[j] += x
    order = wc.order
    return tuple(tuple(x / order for x in row) for row in acc)


def compact_average(lam: Weight | Sequence, wc: WeylGroup, rs: RootSystem | None = None) -> Vector:
    """Exact orbit average of lam over wc, in fundamental-weight coordinates.

    A bare sequence is read as fundamental-weight coordinates too.
    """
    rs = rs or wc.rs
    coords = lam.coords if isinstance(lam, Weight) else linalg.vec(lam)
    r = rs.weight_to_root_coords(coords)
    return rs.root_to_weight_coords(linalg.mat_vec(averaging_matrix(wc), r))


def orbit(v: Sequence, rs: RootSystem, generators: Sequence[int]) -> set[Vector]:
    """Orbit of a simple-root-coordinate vector under the given simple reflections."""
    start = linalg.vec(v)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for k in generators:
            y = reflect(x, k, rs)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def orbit_average(lam: Weight | Sequence, rs: RootSystem, generators: Sequence[int]) -> Vector:
    """Same quantity as compact_average, computed from the explicit orbit.

    Averaging over the group and over the orbit agree because every orbit
    point is hit |stabilizer| times.
    """
    coords = lam.coords if isinstance(lam, Weight) else linalg.vec(lam)
    pts = orbit(rs.weight_to_root_coords(coords), rs, generators)
    total = [sum((p[i] for p in pts), Fraction(0)) / len(pts) for i in range(rs.rank)]
    return rs.root_to_weight_coords(total)
