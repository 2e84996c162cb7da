"""Root systems from Cartan matrices, Weyl groups as permutation groups.

Conventions
-----------
``matrix[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``,
so with ``D = diag(lengths) / 2`` the product ``D @ matrix`` is the Gram
matrix of the simple roots. Roots are integer vectors in the simple-root
basis; node indices in the public API are 1-based, as in Dynkin labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from . import linalg
from .linalg import Vector, frac

COMPACT = "compact"
NONCOMPACT = "noncompact"

DEFAULT_ROOT_BOUND = 10_000


class InvalidCartanError(ValueError):
    pass


class NonFiniteTypeError(ValueError):
    pass


@dataclass(frozen=True)
class CartanSpec:
    name: str
    matrix: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    lengths: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in row) for row in self.matrix))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "lengths", tuple(frac(x) for x in self.lengths))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def compact_indices(self) -> tuple[int, ...]:
        """1-based indices of compact nodes."""
        return tuple(i + 1 for i, lab in enumerate(self.labels) if lab == COMPACT)

    @property
    def noncompact_indices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, lab in enumerate(self.labels) if lab == NONCOMPACT)

    def gram(self) -> tuple[Vector, ...]:
        """Symmetrized form D * matrix."""
        return tuple(
            tuple(self.lengths[i] / 2 * self.matrix[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def validate(self) -> None:
        n = self.rank
        if n == 0:
            raise InvalidCartanError(f"{self.name}: rank must be positive")
        if any(len(row) != n for row in self.matrix):
            raise InvalidCartanError(f"{self.name}: matrix is not square")
        if len(self.labels) != n or len(self.lengths) != n:
            raise InvalidCartanError(f"{self.name}: need one label and one length per node")
        bad = set(self.labels) - {COMPACT, NONCOMPACT}
        if bad:
            raise InvalidCartanError(f"{self.name}: unknown labels {sorted(bad)}")
        if any(x <= 0 for x in self.lengths):
            raise InvalidCartanError(f"{self.name}: root lengths must be positive")
        a = self.matrix
        for i in range(n):
            if a[i][i] != 2:
                raise InvalidCartanError(f"{self.name}: diagonal entry ({i + 1},{i + 1}) is {a[i][i]}, not 2")
            for j in range(n):
                if i == j:
                    continue
                if a[i][j] > 0:
                    raise InvalidCartanError(f"{self.name}: off-diagonal entry ({i + 1},{j + 1}) is positive")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise InvalidCartanError(f"{self.name}: zero pattern not symmetric at ({i + 1},{j + 1})")
        g = self.gram()
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise InvalidCartanError(f"{self.name}: lengths do not symmetrize the matrix")
        if not linalg.is_positive_definite(g):
            raise InvalidCartanError(f"{self.name}: symmetrized form is not positive definite")


@dataclass(frozen=True)
class RootSystem:
    spec: CartanSpec
    roots: tuple[tuple[int, ...], ...]
    form: tuple[Vector, ...]
    _index: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {r: i for i, r in enumerate(self.roots)})

    @property
    def rank(self) -> int:
        return self.spec.rank

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._index

    def index(self, v) -> int:
        return self._index[tuple(v)]

    def simple_root(self, k: int) -> tuple[int, ...]:
        _check_index(k, self.rank)
        return tuple(int(i == k - 1) for i in range(self.rank))

    def positive_roots(self) -> list[tuple[int, ...]]:
        return [r for r in self.roots if any(x > 0 for x in r)]

    def is_compact(self, root: Sequence[int]) -> bool:
        """Z/2 grading: even total coefficient on noncompact simple roots."""
        return sum(root[k - 1] for k in self.spec.noncompact_indices) % 2 == 0

    def cartan_inverse(self) -> tuple[Vector, ...]:
        return _cartan_inverse(self.spec)

    def weight_to_root_coords(self, coords: Sequence) -> Vector:
        """Fundamental-weight coordinates to simple-root coordinates."""
        return linalg.mat_vec(self.cartan_inverse(), coords)

    def root_to_weight_coords(self, coords: Sequence) -> Vector:
        return linalg.mat_vec(self.spec.matrix, coords)


def _check_index(k: int, rank: int) -> None:
    if not 1 <= k <= rank:
        raise IndexError(f"simple-root index {k} out of range 1..{rank}")


@lru_cache(maxsize=None)
def _cartan_inverse(spec: CartanSpec):
    return linalg.inverse(spec.matrix)


def bilinear(x: Sequence, y: Sequence, rs: RootSystem) -> Fraction:
    """x^T form y, for vectors in simple-root coordinates."""
    if len(x) != rs.rank or len(y) != rs.rank:
        raise ValueError(f"dimension mismatch: expected vectors of length {rs.rank}")
    return linalg.dot(x, linalg.mat_vec(rs.form, y))


def coroot_pairing(v: Sequence, k: int, spec: CartanSpec):
    """<v, alpha_k^vee> for v in simple-root coordinates."""
    return sum(spec.matrix[k - 1][j] * v[j] for j in range(spec.rank))


def reflect(v: Sequence, k: int, rs: RootSystem | CartanSpec) -> Vector:
    """Simple reflection s_k(v) = v - <v, alpha_k^vee> alpha_k."""
    spec = rs.spec if isinstance(rs, RootSystem) else rs
    _check_index(k, spec.rank)
    v = linalg.vec(v)
    p = coroot_pairing(v, k, spec)
    return tuple(x - p if i == k - 1 else x for i, x in enumerate(v))


def _reflect_int(v: tuple[int, ...], k: int, spec: CartanSpec) -> tuple[int, ...]:
    p = coroot_pairing(v, k, spec)
    return v[: k - 1] + (v[k - 1] - p,) + v[k:]


@lru_cache(maxsize=None)
def build_root_system(spec: CartanSpec, bound: int = DEFAULT_ROOT_BOUND, check: bool = True) -> RootSystem:
    """Reflection closure of the simple roots, sorted lexicographically.

    ``check=False`` skips spec validation; the ``bound`` guard then catches
    forms that are not of finite type.
    """
    if check:
        spec.validate()
    n = spec.rank
    simple = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for k in range(1, n + 1):
            w = _reflect_int(v, k, spec)
            if w not in seen:
                seen.add(w)
                if len(seen) > bound:
                    raise NonFiniteTypeError(f"{spec.name}: more than {bound} roots; form is not of finite type")
                queue.append(w)
    return RootSystem(spec=spec, roots=tuple(sorted(seen)), form=spec.gram())


# -- Weyl group ---------------------------------------------------------------

Perm = tuple[int, ...]


@dataclass(frozen=True)
class WeylGroup:
    rs: RootSystem
    generators: tuple[int, ...]
    # determined by (rs, generators); kept out of eq/hash so hashing stays cheap
    generator_perms: tuple[Perm, ...] = field(compare=False)
    permutations: tuple[Perm, ...] = field(compare=False, repr=False)
    _set: frozenset = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_set", frozenset(self.permutations))

    @property
    def order(self) -> int:
        return len(self.permutations)

    def __len__(self) -> int:
        return len(self.permutations)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._set

    def __iter__(self):
        return iter(self.permutations)

    def matrix(self, p: Perm) -> tuple[Vector, ...]:
        """Linear action of p in simple-root coordinates (columns are images of simple roots)."""
        return _perm_matrix(self.rs, p)

    def act(self, p: Perm, v: Sequence) -> Vector:
        """Apply p to a vector given in simple-root coordinates."""
        return linalg.mat_vec(self.matrix(p), v)


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)[i] = p[q[i]]."""
    return tuple(p[i] for i in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def reflection_permutation(rs: RootSystem, k: int) -> Perm:
    return tuple(rs.index(_reflect_int(r, k, rs.spec)) for r in rs.roots)


@lru_cache(maxsize=None)
def _perm_matrix(rs: RootSystem, p: Perm):
    cols = [rs.roots[p[rs.index(rs.simple_root(k))]] for k in range(1, rs.rank + 1)]
    return tuple(tuple(Fraction(c[i]) for c in cols) for i in range(rs.rank))


@lru_cache(maxsize=None)
def _weyl_group(rs: RootSystem, gens: tuple[int, ...]) -> WeylGroup:
    gperms = tuple(reflection_permutation(rs, k) for k in gens)
    e = tuple(range(len(rs)))
    seen = {e}
    order = [e]
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gperms:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                order.append(h)
                queue.append(h)
    return WeylGroup(rs=rs, generators=gens, generator_perms=gperms, permutations=tuple(order))


def weyl_group(rs: RootSystem, generator_subset: Iterable[int] | None = None) -> WeylGroup:
    """BFS closure of simple-reflection permutations on the root index set.

    ``generator_subset`` (1-based) selects a parabolic subgroup, e.g. the
    compact Weyl group W_c.
    """
    if generator_subset is None:
        gens = tuple(range(1, rs.rank + 1))
    else:
        gens = tuple(sorted(set(generator_subset)))
        for k in gens:
            _check_index(k, rs.rank)
    return _weyl_group(rs, gens)


def compact_weyl_group(rs: RootSystem) -> WeylGroup:
    return weyl_group(rs, rs.spec.compact_indices)


# -- Dynkin diagrams ----------------------------------------------------------

@dataclass(frozen=True)
class DynkinTypeReport:
    type: str
    components: tuple[str, ...]
    isomorphic_to_e6: bool
    trivalent_legs: tuple[int, ...] | None = None


def dynkin_graph(spec: CartanSpec) -> nx.Graph:
    """Nodes 1..n; edge weight = number of bonds a_ij * a_ji."""
    g = nx.Graph()
    g.add_nodes_from(range(1, spec.rank + 1))
    for i, j in combinations(range(spec.rank), 2):
        bonds = spec.matrix[i][j] * spec.matrix[j][i]
        if bonds:
            g.add_edge(i + 1, j + 1, bonds=bonds)
    return g


def canonical_spec(kind: str, n: int) -> CartanSpec:
    """Bourbaki-numbered Cartan matrix for types A-G (all nodes compact)."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    lengths = [Fraction(2)] * n

    def link(i, j, aij=-1, aji=-1):
        a[i - 1][j - 1], a[j - 1][i - 1] = aij, aji

    if kind == "A":
        for i in range(1, n):
            link(i, i + 1)
    elif kind in ("B", "C"):
        for i in range(1, n - 1):
            link(i, i + 1)
        if kind == "B":  # alpha_n short
            lengths = [Fraction(4)] * (n - 1) + [Fraction(2)]
            link(n - 1, n, -1, -2)
        else:  # alpha_n long
            lengths = [Fraction(2)] * (n - 1) + [Fraction(4)]
            link(n - 1, n, -2, -1)
    elif kind == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif kind == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif kind == "F":
        lengths = [Fraction(4), Fraction(4), Fraction(2), Fraction(2)]
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif kind == "G":
        lengths = [Fraction(2), Fraction(6)]
        link(1, 2, -3, -1)
    else:
        raise ValueError(f"unknown type {kind}")
    return CartanSpec(f"{kind}{n}", tuple(map(tuple, a)), (COMPACT,) * n, tuple(lengths))


def _legs(g: nx.Graph, center) -> tuple[int, ...]:
    legs = []
    for nb in g.neighbors(center):
        length, prev, cur = 1, center, nb
        while True:
            nxt = [x for x in g.neighbors(cur) if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    return tuple(sorted(legs))


def _component_type(spec: CartanSpec, g: nx.Graph) -> tuple[str, tuple[int, ...] | None]:
    n = g.number_of_nodes()
    if not nx.is_tree(g) or max((d for _, d in g.degree), default=0) > 3:
        return "not a finite type", None
    bonds = [d["bonds"] for _, _, d in g.edges(data=True)]
    branch = [v for v, d in g.degree if d == 3]
    if len(branch) > 1 or (branch and any(b > 1 for b in bonds)):
        return "not a finite type", None
    if branch:
        legs = _legs(g, branch[0])
        if legs[0] == legs[1] == 1:
            return f"D{n}", legs
        if legs[:2] == (1, 2) and legs[2] in (2, 3, 4):
            return f"E{n}", legs
        return "not a finite type", legs
    multi = [b for b in bonds if b > 1]
    if not multi:
        return f"A{n}", None
    if len(multi) > 1:
        return "not a finite type", None
    if multi[0] == 3:
        return ("G2", None) if n == 2 else ("not a finite type", None)
    if multi[0] != 2:
        return "not a finite type", None
    # one double bond on a path: B/C if it sits at an end, F4 if in the middle
    u, v = next((u, v) for u, v, d in g.edges(data=True) if d["bonds"] == 2)
    if n == 4 and g.degree[u] == 2 and g.degree[v] == 2:
        return "F4", None
    end, inner = (u, v) if g.degree[u] == 1 else (v, u)
    if g.degree[end] != 1:
        return "not a finite type", None
    end_long = spec.lengths[end - 1] > spec.lengths[inner - 1]
    if n == 2:
        # rank 2: name by which node is long; node order decides B2 vs C2
        first, second = sorted((u, v))
        return ("C2" if spec.lengths[second - 1] > spec.lengths[first - 1] else "B2"), None
    return (f"C{n}" if end_long else f"B{n}"), None


def check_diagram_type(spec: CartanSpec) -> DynkinTypeReport:
    """Isomorphism type of the Dynkin diagram, and whether it is E6-shaped."""
    spec.validate()
    g = dynkin_graph(spec)
    comps = []
    legs = None
    for nodes in sorted(nx.connected_components(g), key=min):
        sub = g.subgraph(nodes)
        kind, lg = _component_type(spec, sub)
        comps.append(kind)
        if lg is not None:
            legs = lg
    if any(c == "not a finite type" for c in comps):
        overall = "not a finite type"
    else:
        overall = " x ".join(comps)
    e6 = dynkin_graph(canonical_spec("E", 6))
    iso = nx.is_isomorphic(g, e6, edge_match=lambda a, b: a["bonds"] == b["bonds"])
    return DynkinTypeReport(type=overall, components=tuple(comps), isomorphic_to_e6=iso, trivalent_legs=legs)
