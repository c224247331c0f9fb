import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from homheis.errors import ShapeError, ValidationError
from homheis.exactla import Matrix
from homheis.heisenberg import block_diagonal_heisenberg, build_heisenberg
from homheis.homlie import adjoint_rep
from homheis.representations import (
    Representation,
    check_representation,
    is_faithful,
    minimal_faithful,
    trivial_rep,
)

from _oracles import frac_rank, mat, mul, rand_invertible, rand_frac


def rho_of(R, v):
    d = R.module_dim
    out = [[Fraction(0)] * d for _ in range(d)]
    for c, A in zip(v, R.action):
        out = [[x + c * y for x, y in zip(r1, r2)] for r1, r2 in zip(out, mat(A))]
    return out


def brute_force_rep(L, R):
    """Both module identities on all basis pairs, with Fraction matrices."""
    n = L.dim
    A, B = mat(L.alpha), mat(R.beta)
    col = lambda j: [A[i][j] for i in range(n)]
    one = all(mul(rho_of(R, col(i)), B) == mul(B, mat(R.action[i])) for i in range(n))
    two = True
    for i in range(n):
        for j in range(n):
            lhs = mul(rho_of(R, [x.re for x in L.bracket[i][j]]), B)
            a = mul(rho_of(R, col(i)), mat(R.action[j]))
            b = mul(rho_of(R, col(j)), mat(R.action[i]))
            two &= lhs == [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]
    return one, two


@pytest.fixture
def h231():
    return build_heisenberg(1, 6, Matrix.diag(2, 3, 6))


def test_adjoint_and_trivial(h231):
    assert check_representation(h231.algebra, adjoint_rep(h231.algebra)).ok
    assert check_representation(h231.algebra, trivial_rep(h231.algebra, 2)).ok
    with pytest.raises(ShapeError):
        trivial_rep(h231.algebra, 0)


def test_minimal_faithful_example(h231):
    R = minimal_faithful(h231)
    assert R.action[0] == Matrix.unit(3, 3, 1, 0)
    assert R.action[1] == Matrix.unit(3, 3, 0, 2, 3)
    assert R.action[2] == Matrix.unit(3, 3, 1, 2, 6)
    assert R.beta == Matrix.diag(3, 6, 1)
    assert check_representation(h231.algebra, R).ok


def test_corrupted_beta_breaks_first_identity(h231):
    R = minimal_faithful(h231)
    bad = Representation(3, 3, Matrix.diag(3, 5, 1), R.action)
    rep = check_representation(h231.algebra, bad)
    assert not rep.rep1_ok
    assert rep.witnesses and rep.witnesses[0]["kind"] == "rep1"
    assert brute_force_rep(h231.algebra, bad)[0] is False


def test_faithfulness(h231):
    L = h231.algebra
    assert not is_faithful(trivial_rep(L, 3))
    assert not is_faithful(adjoint_rep(L))
    assert is_faithful(minimal_faithful(h231))


def test_minimal_faithful_needs_block_diagonal():
    H = build_heisenberg(1, 6, Matrix([[2, 0, 0], [0, 3, 0], [1, 0, 6]]))
    with pytest.raises(ValidationError):
        minimal_faithful(H)


def test_json_round_trip(h231):
    R = minimal_faithful(h231)
    back = Representation.from_json(R.to_json(), 3)
    assert back.beta == R.beta and back.action == R.action


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_minimal_faithful_random(seed, m):
    rng = random.Random(seed)
    H = block_diagonal_heisenberg(Matrix(rand_invertible(rng, m)), rand_frac(rng, nonzero=True))
    R = minimal_faithful(H)
    assert R.module_dim == m + 2
    assert check_representation(H.algebra, R).ok
    assert brute_force_rep(H.algebra, R) == (True, True)
    assert is_faithful(R)
    stacked = [[x for row in mat(A) for x in row] for A in R.action]
    assert frac_rank(stacked) == 2 * m + 1


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_checker_agrees_with_brute_force(seed):
    rng = random.Random(seed)
    H = block_diagonal_heisenberg(Matrix(rand_invertible(rng, 1)), rand_frac(rng, nonzero=True))
    R = minimal_faithful(H)
    action = list(R.action)
    i = rng.randrange(3)
    p, q = rng.randrange(3), rng.randrange(3)
    action[i] = action[i] + Matrix.unit(3, 3, p, q, rand_frac(rng))
    M = Representation(3, 3, R.beta, tuple(action))
    rep = check_representation(H.algebra, M)
    assert (rep.rep1_ok, rep.rep2_ok) == brute_force_rep(H.algebra, M)
