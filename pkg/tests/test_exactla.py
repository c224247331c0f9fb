from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from homheis.errors import FieldError, ShapeError
from homheis.exactla import (
    I_UNIT,
    ONE,
    ZERO,
    Matrix,
    Scalar,
    as_scalar,
    char_poly,
    eigenvalues,
    gaussian_sqrt,
    generalized_eigenspaces,
    kernel_basis,
    poly_eval,
    rank,
    solve,
    span_basis,
)

from _oracles import frac_rank

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
gauss = st.builds(Scalar, small, small)


@st.composite
def matrices(draw, n_min=1, n_max=4, square=True, entries=small):
    n = draw(st.integers(n_min, n_max))
    m = n if square else draw(st.integers(n_min, n_max))
    return Matrix([[draw(entries) for _ in range(m)] for _ in range(n)])


# -- Scalars -----------------------------------------------------------------
@pytest.mark.parametrize(
    "text, re, im",
    [("3", 3, 0), ("-1/2", Fraction(-1, 2), 0), ("0+-1*i", 0, -1), ("1/2+3/4*i", Fraction(1, 2), Fraction(3, 4))],
)
def test_scalar_parse(text, re, im):
    s = Scalar.parse(text)
    assert (s.re, s.im) == (re, im)
    assert str(s) == text


def test_scalar_rejects_float():
    with pytest.raises(TypeError):
        Scalar(0.5)


@given(gauss)
def test_scalar_text_round_trip(x):
    assert Scalar.parse(str(x)) == x


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == ONE


def test_i_squared():
    assert I_UNIT * I_UNIT == -ONE


@given(gauss)
def test_gaussian_sqrt_of_square(x):
    r = gaussian_sqrt(x * x)
    assert r is not None and r * r == x * x


def test_gaussian_sqrt_missing():
    assert gaussian_sqrt(2) is None
    assert gaussian_sqrt(-4) == 2 * I_UNIT or gaussian_sqrt(-4) == -2 * I_UNIT


# -- Kernels -----------------------------------------------------------------
def test_kernel_rank_one():
    K = kernel_basis(Matrix([[1, 1], [1, 1]]))
    assert K.dim == 1
    assert span_basis([(1, -1)], 2).same_span(K)


def test_kernel_identity_empty():
    assert kernel_basis(Matrix.identity(3)).dim == 0


def test_kernel_zero_rectangular():
    K = kernel_basis(Matrix.zeros(2, 3))
    assert K.dim == 3
    assert span_basis([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3).same_span(K)


@settings(max_examples=60)
@given(matrices(square=False))
def test_rank_nullity(M):
    K = kernel_basis(M)
    assert rank(M) + K.dim == M.cols
    assert rank(M) == frac_rank(M.to_lists())
    for v in K.vectors:
        assert not any(M.apply(v))


@settings(max_examples=60)
@given(matrices())
def test_inverse_and_det(M):
    if M.det():
        assert M @ M.inverse() == Matrix.identity(M.rows)
        assert M.is_invertible()
    else:
        assert not M.is_invertible()


@settings(max_examples=40)
@given(matrices(), matrices())
def test_det_multiplicative(A, B):
    if A.rows == B.rows:
        assert (A @ B).det() == A.det() * B.det()


@given(matrices(square=False))
def test_solve_consistent(M):
    b = M.apply([ONE] * M.cols)
    x = solve(M, b)
    assert x is not None and M.apply(x) == b


def test_solve_inconsistent():
    assert solve(Matrix([[1, 0], [0, 0]]), (0, 1)) is None


def test_shape_errors():
    with pytest.raises(ShapeError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ShapeError):
        Matrix.identity(2) @ Matrix.identity(3)


# -- Characteristic polynomial and eigenvalues ------------------------------
@pytest.mark.parametrize(
    "M, coeffs",
    [
        (Matrix.diag(2, 3), [1, -5, 6]),
        (Matrix([[0, 1], [0, 0]]), [1, 0, 0]),
        (Matrix([[2, 1], [0, 2]]), [1, -4, 4]),
    ],
)
def test_char_poly_examples(M, coeffs):
    assert char_poly(M) == [as_scalar(c) for c in coeffs]


@settings(max_examples=50)
@given(matrices())
def test_cayley_hamilton(M):
    coeffs = char_poly(M)
    n = M.rows
    acc = Matrix.zeros(n, n)
    for c in coeffs:
        acc = acc @ M + Matrix.identity(n) * c
    assert acc.is_zero()
    assert coeffs[-1] == (-1) ** n * M.det()


def test_eigenvalues_gaussian():
    rot = Matrix([[0, -1], [1, 0]])
    assert sorted(str(v) for v, _ in eigenvalues(rot)) == sorted(["0+1*i", "0+-1*i"])


def test_eigenvalues_outside_field():
    with pytest.raises(FieldError):
        eigenvalues(Matrix([[2, 1], [1, 5]]))


def test_generalized_eigenspaces_examples():
    W = generalized_eigenspaces(Matrix.diag(2, 3), [(2, 1), (3, 1)])
    assert W[as_scalar(2)].same_span(span_basis([(1, 0)], 2))
    assert W[as_scalar(3)].same_span(span_basis([(0, 1)], 2))
    assert generalized_eigenspaces(Matrix([[1, 1], [0, 1]]), [(1, 2)])[ONE].dim == 2
    W = generalized_eigenspaces(Matrix.diag(2, 2, 3), [(2, 2), (3, 1)])
    assert (W[as_scalar(2)].dim, W[as_scalar(3)].dim) == (2, 1)


@settings(max_examples=40)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4), st.data())
def test_eigenvalues_of_conjugated_triangular(diag, data):
    n = len(diag)
    U = Matrix([[diag[i] if i == j else (data.draw(small) if j > i else 0) for j in range(n)] for i in range(n)])
    P = Matrix([[1 if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)])
    M = P @ U @ P.inverse()
    got = {v: mult for v, mult in eigenvalues(M)}
    want = {}
    for d in diag:
        want[as_scalar(d)] = want.get(as_scalar(d), 0) + 1
    assert got == want
    for v in got:
        assert not poly_eval(char_poly(M), v)
    total = sum(W.dim for W in generalized_eigenspaces(M).values())
    assert total == n


def test_matrix_json_round_trip():
    M = Matrix([[1, "1/2"], ["0+1*i", -3]])
    assert Matrix.from_json(M.to_json()) == M
    assert ZERO == as_scalar("0")
