import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings, strategies as st

from homheis.errors import ValidationError
from homheis.exactla import Matrix, as_scalar
from homheis.heisenberg import block_diagonal_heisenberg, build_heisenberg
from homheis.derivations import (
    algebra_with_derivation,
    bilinear_form_properties,
    check_HD_iso_witness,
    der_block_check,
    der_dim_compare,
    der_space,
    derivation_rows,
    derivation_blocks,
    derivation_table,
    is_derivation,
    meta_heisenberg,
)
from homheis.homlie import abelian, change_basis, lower_central_series, validate_hom_lie

from _oracles import alpha_pow, basis, bracket, frac_rank, mat, matvec, rand_frac, rand_invertible


def leibniz_holds(L, D, k):
    """Both defining identities on all basis pairs, evaluated with Fractions."""
    n = L.dim
    A, Dm, Ak = mat(L.alpha), mat(D), alpha_pow(L, k)
    col = lambda M, j: [M[i][j] for i in range(n)]
    if [[sum(A[i][t] * Dm[t][j] for t in range(n)) for j in range(n)] for i in range(n)] != [
        [sum(Dm[i][t] * A[t][j] for t in range(n)) for j in range(n)] for i in range(n)
    ]:
        return False
    for i, j in product(range(n), repeat=2):
        lhs = matvec(Dm, bracket(L, basis(n, i), basis(n, j)))
        r1 = bracket(L, col(Dm, i), col(Ak, j))
        r2 = bracket(L, col(Ak, i), col(Dm, j))
        if lhs != [a + b for a, b in zip(r1, r2)]:
            return False
    return True


def h(alpha, lam=None):
    alpha = Matrix(alpha) if not isinstance(alpha, Matrix) else alpha
    return build_heisenberg((alpha.rows - 1) // 2, alpha[alpha.rows - 1, alpha.rows - 1] if lam is None else lam, alpha)


@pytest.mark.parametrize(
    "alpha, dim",
    [(Matrix.diag(2, 3, 6), 2), (Matrix.diag(2, 2, 4), 4), (Matrix([[2, 1, 0], [0, 2, 0], [0, 0, 4]]), 2)],
)
def test_table_dimensions(alpha, dim):
    H = h(alpha)
    space = der_space(H.algebra, 1)
    assert space.dim == dim
    for D in space.generators:
        assert leibniz_holds(H.algebra, D, 1)


def test_unipotent_row_needs_commutation():
    H = h([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert der_space(H.algebra, 1).dim == 3
    # dropping the commutation rows recovers the tabulated six
    rows = derivation_rows(H.algebra, 1)[9:]
    assert 9 - frac_rank(rows) == 6


def test_table_flags():
    rows = {r.name: r for r in derivation_table(1)}
    assert rows["identity"].computed_dim == 6 and not rows["identity"].dim_ok
    assert not rows["Jordan block a with a^2 = lambda"].mu_ok
    assert rows["diagonal a, lambda/a"].dim_ok and rows["diagonal a, lambda/a"].mu_ok
    assert {r.name: r for r in derivation_table(4)}["Jordan block a with a^2 = lambda"].mu_ok


def test_block_check_examples():
    H = h(Matrix.diag(2, 3, 6))
    for k in (0, 1, 2):
        D = Matrix.diag(1, 0, Fraction(3, 1) ** k)
        rep = der_block_check(H, D, k)
        assert rep.ok and is_derivation(H.algebra, D, k)
        assert derivation_blocks(H, D).mu == as_scalar(0 * 2**k + 1 * 3**k)
    D2 = Matrix.unit(3, 3, 1, 0)
    rep = der_block_check(H, D2, 1)
    assert "tX*D2*X=lambda*D2" in rep.failed()
    assert der_block_check(H, Matrix.zeros(3, 3), 1).ok
    with pytest.raises(ValidationError):
        der_block_check(h([[2, 1, 0], [0, 2, 0], [0, 0, 4]]), Matrix.zeros(3, 3), 1)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 2), st.integers(0, 2))
def test_block_check_equivalence(seed, m, k):
    rng = random.Random(seed)
    X = Matrix(rand_invertible(rng, m))
    H = block_diagonal_heisenberg(X, rand_frac(rng, nonzero=True))
    space = der_space(H.algebra, k)
    n = H.dim
    for D in space.generators:
        assert der_block_check(H, D, k).ok
        assert leibniz_holds(H.algebra, D, k)
    for _ in range(5):
        D = Matrix([[rand_frac(rng) for _ in range(n)] for _ in range(n)])
        assert der_block_check(H, D, k).ok == space.contains(D) == leibniz_holds(H.algebra, D, k)


@pytest.mark.parametrize(
    "X, lam, predicted, computed",
    [([[2]], 6, 2, 2), ([[2]], 4, 3, 4), ([[1]], 6, 3, 3)],
)
def test_dimension_formula_examples(X, lam, predicted, computed):
    cmp = der_dim_compare(block_diagonal_heisenberg(Matrix(X), lam), 1)
    assert (cmp.predicted, cmp.computed) == (predicted, computed)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6), st.integers(-1, 2))
def test_dim_invariant_under_basis_change(seed, k):
    rng = random.Random(seed)
    H = block_diagonal_heisenberg(Matrix(rand_invertible(rng, 1)), rand_frac(rng, nonzero=True))
    Q = Matrix(rand_invertible(rng, 3))
    assert der_space(change_basis(H.algebra, Q), k).dim == der_space(H.algebra, k).dim


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 2))
def test_generic_eigenvalues_kill_off_diagonal_blocks(seed, k):
    rng = random.Random(seed)
    vals = [rand_frac(rng, -5, 5, nonzero=True) for _ in range(2)]
    lam = rand_frac(rng, -7, 7, nonzero=True)
    assume(all(a * b != lam for a in vals for b in vals))
    assume(all(v not in (1, lam) for v in vals))
    H = block_diagonal_heisenberg(Matrix.diag(*vals), lam)
    for D in der_space(H.algebra, k).generators:
        b = derivation_blocks(H, D)
        assert b.D2.is_zero() and b.D3.is_zero() and b.U.is_zero() and b.V.is_zero()


def test_k_minus_one_needs_invertible_alpha():
    L = abelian(2, Matrix([[1, 0], [0, 0]]))
    with pytest.raises(ValidationError):
        der_space(L, -1)


def test_algebra_with_derivation_nilpotency():
    H = h([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    nil = Matrix.unit(3, 3, 2, 1)
    assert is_derivation(H.algebra, nil, 1)
    HD = algebra_with_derivation(H.algebra, nil)
    assert validate_hom_lie(HD).ok and lower_central_series(HD).nilpotent
    grow = Matrix.diag(1, 1, 2)
    HD = algebra_with_derivation(H.algebra, grow)
    assert validate_hom_lie(HD).ok and not lower_central_series(HD).nilpotent
    zero = algebra_with_derivation(H.algebra, Matrix.zeros(3, 3))
    assert lower_central_series(zero).nilpotent
    with pytest.raises(ValidationError):
        algebra_with_derivation(H.algebra, Matrix.identity(3))


def test_iso_witness():
    H = h(Matrix.diag(2, 3, 6))
    L = H.algebra
    D = der_space(L, 1).generators[0]
    I = Matrix.identity(3)
    assert check_HD_iso_witness(L, D, D, 1, I, (0, 0, 0))
    assert check_HD_iso_witness(L, D, D * 2, Fraction(1, 2), I, (0, 0, 0))
    assert check_HD_iso_witness(L, D, D + L.ad(0), 1, I, (-1, 0, 0))
    with pytest.raises(ValidationError):
        check_HD_iso_witness(L, D, D, 0, I, (0, 0, 0))
    with pytest.raises(ValidationError):
        check_HD_iso_witness(L, D, D, 1, Matrix.diag(1, 1, 2), (0, 0, 0))


def invariance_rank(L):
    """Rank of the invariance system for b, assembled independently."""
    n = L.dim
    rows = []
    for i, j, l in product(range(n), repeat=3):
        row = [Fraction(0)] * (n * n)
        left = bracket(L, basis(n, i), basis(n, j))
        right = bracket(L, basis(n, j), basis(n, l))
        for p in range(n):
            row[p * n + l] += left[p]
            row[i * n + p] -= right[p]
        rows.append(row)
    return n * n - frac_rank(rows)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_meta_heisenberg(k):
    H = block_diagonal_heisenberg(Matrix([[2]]), 6)
    meta = meta_heisenberg(H, k)
    assert meta.algebra.dim == 5
    assert meta.I_k_is_derivation and meta.I_k_star_is_derivation
    assert validate_hom_lie(meta.algebra).ok
    assert meta.invariant_forms.dim == invariance_rank(meta.algebra) == 4


def test_meta_heisenberg_m2():
    H = block_diagonal_heisenberg(Matrix.diag(2, 5), 10)
    for k in (1, 2):
        meta = meta_heisenberg(H, k)
        assert der_space(H.algebra, k).contains(meta.I_k)
        assert der_space(H.algebra, k).contains(meta.I_k_star)


def test_bilinear_form_properties():
    H = h(Matrix.diag(2, 3, 6)).algebra
    zero = bilinear_form_properties(H, Matrix.zeros(3, 3), Matrix.identity(3))
    assert zero.symmetric and zero.invariant and zero.gamma_invariant and not zero.nondegenerate
    ab = bilinear_form_properties(abelian(2), Matrix.identity(2), Matrix.identity(2))
    assert ab.symmetric and ab.invariant and ab.gamma_symmetric and ab.nondegenerate
    assert not bilinear_form_properties(H, Matrix.identity(3), Matrix.identity(3)).invariant
