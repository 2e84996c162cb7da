from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from e6sp4 import linalg

int_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_frac_rejects_floats():
    with pytest.raises(TypeError):
        linalg.frac(0.5)
    assert linalg.frac("3/6") == Fraction(1, 2)


def test_inverse_of_e6_cartan_matches_sympy(e6):
    ours = linalg.inverse(e6.spec.matrix)
    ref = sympy.Matrix(e6.spec.matrix).inv()
    assert [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in ours] == ref.tolist()


def test_singular_inverse_raises():
    with pytest.raises(ValueError):
        linalg.inverse([[1, 2], [2, 4]])


@settings(max_examples=60, deadline=None)
@given(int_matrices)
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == sympy.Matrix(m).rank()


@settings(max_examples=60, deadline=None)
@given(int_matrices)
def test_integer_kernel(m):
    basis = linalg.integer_kernel(m, len(m[0]))
    n = len(m[0])
    assert len(basis) == n - sympy.Matrix(m).rank()
    for b in basis:
        assert all(x == 0 for x in linalg.mat_vec(m, b))
    # saturated: the kernel lattice of an integer matrix is a direct summand,
    # so its basis has trivial invariant factors
    if basis:
        assert all(d == 1 for d in linalg.smith_diagonal(basis))


@settings(max_examples=60, deadline=None)
@given(int_matrices)
def test_smith_diagonal_matches_sympy(m):
    from sympy.matrices.normalforms import invariant_factors

    ref = [abs(int(x)) for x in invariant_factors(sympy.Matrix(m), domain=sympy.ZZ) if x != 0]
    assert linalg.smith_diagonal(m) == ref


def test_hermite_rows_canonical():
    assert linalg.hermite_rows([(0, 0, 1), (0, 1, 1)]) == [(0, 1, 0), (0, 0, 1)]


def test_in_integer_span():
    basis = [(0, 2, 0), (0, 0, 1)]
    assert linalg.in_integer_span(basis, (0, 4, -3))
    assert not linalg.in_integer_span(basis, (0, 1, 0))
    assert not linalg.in_integer_span(basis, (1, 0, 0))
    assert linalg.in_integer_span([], (0, 0))


def test_positive_definite():
    assert linalg.is_positive_definite([[2, -1], [-1, 2]])
    assert not linalg.is_positive_definite([[2, -2], [-2, 2]])
    assert not linalg.is_positive_definite([[0, 1], [1, 0]])


def test_solve():
    assert linalg.solve([[1, 1], [1, -1]], [3, 1]) == (2, 1)
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None
