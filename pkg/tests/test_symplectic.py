import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from homheis.errors import ValidationError
from homheis.exactla import Matrix, as_scalar
from homheis.symplectic import (
    SkewForm,
    darboux_basis,
    is_lambda_symplectic,
    sp_k_factor,
    sp_k_membership,
    standard_form,
    symplectic_multiplier,
)

from _oracles import frac_rank, rand_frac, rand_lambda_symplectic


def random_skew(rng, n):
    while True:
        g = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                g[i][j] = rand_frac(rng)
                g[j][i] = -g[i][j]
        if frac_rank(g) == n:
            return Matrix(g)


@pytest.mark.parametrize("S, lam, ok", [(Matrix.identity(2), 1, True), (Matrix.diag(2, 3), 6, True), (Matrix.diag(2, 3), 5, False)])
def test_lambda_symplectic_examples(S, lam, ok):
    rep = is_lambda_symplectic(S, lam)
    assert bool(rep) is ok
    assert rep.blocks_consistent


def test_multiplier():
    assert symplectic_multiplier(Matrix.diag(2, 3)) == as_scalar(6)
    assert symplectic_multiplier(Matrix.diag(1, 1, 2, 3)) is None


def test_darboux_examples():
    B = standard_form(1)
    assert darboux_basis(B) == Matrix.identity(2)
    assert darboux_basis(Matrix([[0, 2], [-2, 0]])) == Matrix([[1, 0], [0, "1/2"]])


def test_darboux_rejects_degenerate():
    with pytest.raises(ValidationError):
        darboux_basis(Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]))
    with pytest.raises(ValidationError):
        darboux_basis(Matrix.zeros(2, 2))
    with pytest.raises(ValidationError):
        SkewForm(Matrix([[0, 1], [1, 0]]))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_darboux_identity(seed, m):
    g = random_skew(random.Random(seed), 2 * m)
    P = darboux_basis(g)
    assert P.T @ g @ P == standard_form(m)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_multiplier_is_multiplicative(seed, m):
    rng = random.Random(seed)
    l1, l2 = rand_frac(rng, nonzero=True), rand_frac(rng, nonzero=True)
    S1 = Matrix(rand_lambda_symplectic(rng, m, l1))
    S2 = Matrix(rand_lambda_symplectic(rng, m, l2))
    assert is_lambda_symplectic(S1, l1) and is_lambda_symplectic(S2, l2)
    prod = is_lambda_symplectic(S1 @ S2, l1 * l2)
    assert prod and prod.blocks_consistent
    assert is_lambda_symplectic(S1.inverse(), 1 / l1)


def test_sp_k_examples():
    S = Matrix.diag(2, 3)
    zero = sp_k_factor(Matrix.zeros(2, 2), S, 1)
    assert zero.structured and zero.M.is_zero()
    f = sp_k_factor(Matrix.diag(2, -3), S, 1)
    assert f.structured and f.M == Matrix.diag(1, -1) and f.U == Matrix([[1]])
    assert sp_k_membership(Matrix.diag(2, -3), S, 1)
    assert not sp_k_membership(Matrix.identity(2), S, 1)
    assert not sp_k_factor(Matrix.identity(2), S, 1).structured


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 2))
def test_sp_k_factor_matches_membership(seed, k):
    rng = random.Random(seed)
    X = Matrix.diag(*[rand_frac(rng, nonzero=True) for _ in range(2)])
    lam = rand_frac(rng, nonzero=True)
    S = Matrix.block([[X, Matrix.zeros(2, 2)], [Matrix.zeros(2, 2), X.T.inverse() * lam]])
    A = Matrix([[rand_frac(rng) for _ in range(4)] for _ in range(4)])
    fac = sp_k_factor(A, S, k)
    assert fac.reassemble(S, k) == A
    assert fac.structured == sp_k_membership(A, S, k)
    U = Matrix([[rand_frac(rng) for _ in range(2)] for _ in range(2)])
    V = Matrix([[1, 2], [2, -1]]) * rand_frac(rng)
    W = Matrix([[0, 1], [1, 3]]) * rand_frac(rng)
    member = (S**k) @ Matrix.block([[U, W], [V, -U.T]])
    assert sp_k_membership(member, S, k) and sp_k_factor(member, S, k).structured
