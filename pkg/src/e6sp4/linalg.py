"""Small exact linear algebra over Q and Z.

Matrices are tuples of row tuples. Everything is Fraction or int; nothing
here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def frac(x) -> Fraction:
    """Coerce int, Fraction or a "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def vec(xs) -> Vector:
    return tuple(frac(x) for x in xs)


def mat(rows) -> Matrix:
    return tuple(vec(r) for r in rows)


def dot(x: Sequence, y: Sequence) -> Fraction:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(dot(row, c) for c in cols) for row in a)


def transpose(m: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(frac(x) for x in col) for col in zip(*m))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def rref(m: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [[frac(x) for x in row] for row in m]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(vec(row)) + list(e) for row, e in zip(m, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def leading_minors(m: Sequence[Sequence]) -> list[Fraction]:
    """Leading principal minors, by fraction-exact elimination without pivoting."""
    a = [[frac(x) for x in row] for row in m]
    n = len(a)
    minors: list[Fraction] = []
    det = Fraction(1)
    for k in range(n):
        if a[k][k] == 0:
            # remaining minors are computed directly; elimination cannot continue
            minors.extend(_det([row[: j + 1] for row in m[: j + 1]]) for j in range(k, n))
            return minors
        det *= a[k][k]
        minors.append(det)
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return minors


def _det(m: Sequence[Sequence]) -> Fraction:
    a = [[frac(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def is_positive_definite(m: Sequence[Sequence]) -> bool:
    """Sylvester's criterion on a symmetric rational matrix."""
    return all(x > 0 for x in leading_minors(m))


def solve(m: Sequence[Sequence], b: Sequence) -> Vector | None:
    """One solution of m x = b, or None when inconsistent.

    Free variables are set to zero.
    """
    ncols = len(m[0]) if m else 0
    aug = [list(vec(row)) + [frac(bi)] for row, bi in zip(m, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    return tuple(x)


# -- integer lattices -------------------------------------------------------

def _clear_denominators(m: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in m:
        fr = [frac(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in fr])
    return out


def integer_kernel(m: Sequence[Sequence], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Z-basis of {x in Z^n : m x = 0}, in Hermite normal form.

    Column operations reduce m to echelon form while tracking a unimodular
    transform U; columns of U over the zero columns span the integer kernel.
    Rational rows are scaled to integers first, which leaves the kernel alone.
    """
    a = _clear_denominators(m)
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    u = [[int(i == j) for j in range(n)] for i in range(n)]  # columns of u
    cols = [[a[i][j] for i in range(len(a))] for j in range(n)]

    def colop(dst: int, src: int, q: int) -> None:
        # col[dst] -= q * col[src]
        cols[dst] = [x - q * y for x, y in zip(cols[dst], cols[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def swap(i: int, j: int) -> None:
        cols[i], cols[j] = cols[j], cols[i]
        u[i], u[j] = u[j], u[i]

    lead = 0
    for row in range(len(a)):
        if lead >= n:
            break
        while True:
            nz = [j for j in range(lead, n) if cols[j][row] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda j: abs(cols[j][row]))
            swap(lead, piv)
            done = True
            for j in range(lead + 1, n):
                if cols[j][row]:
                    colop(j, lead, cols[j][row] // cols[lead][row])
                    if cols[j][row]:
                        done = False
            if done:
                lead += 1
                break
    kernel = [tuple(u[j]) for j in range(lead, n)]
    return hermite_rows(kernel)


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form of an integer basis (canonical form)."""
    a = [list(r) for r in rows]
    if not a:
        return []
    n = len(a[0])
    r = 0
    for c in range(n):
        if r == len(a):
            break
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            clean = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if any(a[i][c] for i in range(r, len(a))):
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
    return [tuple(row) for row in a if any(row)]


def smith_diagonal(m: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix."""
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    out: list[int] = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            changed = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        changed = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        changed = True
            if changed:
                continue
            # divisibility condition d_t | every remaining entry
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            i, _ = bad
            a[t] = [x + y for x, y in zip(a[t], a[i])]
        out.append(abs(a[t][t]))
        t += 1
    return out


def in_integer_span(basis: Sequence[Sequence[int]], v: Sequence) -> bool:
    """Whether v is a Z-combination of the (linearly independent) basis rows."""
    if not basis:
        return all(frac(x) == 0 for x in v)
    x = solve(transpose(basis), v)
    return x is not None and all(c.denominator == 1 for c in x)
