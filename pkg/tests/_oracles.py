"""Independent reference computations used by the tests.

Nothing here calls the library's linear algebra: ranks are computed with
plain Fraction elimination and coboundaries by evaluating the defining sum
on explicit vectors.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations, product

from homheis.exactla import Matrix, Scalar


def fr(x) -> Fraction:
    """Real Scalar (or int) to Fraction."""
    if isinstance(x, Scalar):
        assert x.im == 0, "oracle handles rational data only"
        return x.re
    return Fraction(x)


def frac_rank(rows) -> int:
    a = [[fr(x) for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def frac_kernel(rows, ncols) -> list:
    """Nullspace basis by reduced row echelon form over Fraction."""
    a = [[fr(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    out = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -a[i][free]
        out.append(v)
    return out


def mat(M: Matrix) -> list:
    return [[fr(x) for x in M.row(i)] for i in range(M.rows)]


def mul(A, B):
    return [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def matvec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def transpose(A):
    return [list(r) for r in zip(*A)]


def perm_sign(p) -> int:
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


# ---------------------------------------------------------------------------
# Random data
# ---------------------------------------------------------------------------
def rand_frac(rng: random.Random, lo=-3, hi=3, nonzero=False) -> Fraction:
    while True:
        x = Fraction(rng.randint(lo, hi), rng.choice([1, 1, 1, 2, 3]))
        if x or not nonzero:
            return x


def rand_invertible(rng: random.Random, n: int) -> list:
    while True:
        A = [[rand_frac(rng) for _ in range(n)] for _ in range(n)]
        if frac_rank(A) == n:
            return A


def rand_symmetric(rng: random.Random, n: int) -> list:
    A = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            A[i][j] = A[j][i] = rand_frac(rng)
    return A


def _blocks(X, Z, T, Y):
    m = len(X)
    return [X[i] + Z[i] for i in range(m)] + [T[i] + Y[i] for i in range(m)]


def rand_lambda_symplectic(rng: random.Random, m: int, lam: Fraction) -> list:
    """diag(I, lam I) times a random word in symplectic generators."""
    I = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    O = [[Fraction(0)] * m for _ in range(m)]
    S = _blocks(I, O, O, [[lam * x for x in r] for r in I])
    for _ in range(rng.randint(1, 4)):
        kind = rng.randrange(3)
        if kind == 0:
            G = _blocks(I, rand_symmetric(rng, m), O, I)
        elif kind == 1:
            G = _blocks(I, O, rand_symmetric(rng, m), I)
        else:
            A = rand_invertible(rng, m)
            G = _blocks(A, O, O, transpose(_inverse(A)))
        S = mul(S, G)
    return S


def _inverse(A):
    n = len(A)
    aug = [list(A[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [r[n:] for r in aug]


def rand_heisenberg_P(rng: random.Random, m: int, lam=None, block_diagonal=False) -> tuple:
    """(lam, P) with P = [[S, 0], [l, lam]] and S lam-symplectic."""
    if lam is None:
        lam = rand_frac(rng, -4, 4, nonzero=True)
    if block_diagonal:
        X = rand_invertible(rng, m)
        Y = [[lam * x for x in r] for r in transpose(_inverse(X))]
        O = [[Fraction(0)] * m for _ in range(m)]
        S = _blocks(X, O, O, Y)
        bottom = [Fraction(0)] * (2 * m)
    else:
        S = rand_lambda_symplectic(rng, m, lam)
        bottom = [rand_frac(rng) for _ in range(2 * m)]
    P = [row + [Fraction(0)] for row in S] + [bottom + [lam]]
    return lam, P


# ---------------------------------------------------------------------------
# Direct evaluation
# ---------------------------------------------------------------------------
def bracket(L, u, v):
    n = L.dim
    out = [Fraction(0)] * n
    for i, j in product(range(n), repeat=2):
        if u[i] and v[j]:
            c = L.bracket[i][j]
            for k in range(n):
                out[k] += u[i] * v[j] * fr(c[k])
    return out


def basis(n, i):
    return [Fraction(int(j == i)) for j in range(n)]


class DenseCochain:
    """Alternating multilinear map given by its values on increasing tuples."""

    def __init__(self, n, d, k, values):
        self.n, self.d, self.k = n, d, k
        self.values = values  # {increasing tuple: list of Fractions}

    def __call__(self, vecs):
        out = [Fraction(0)] * self.d
        if self.k == 0:
            return list(self.values.get((), out))
        for J, val in self.values.items():
            coeff = Fraction(0)
            for p in permutations(range(self.k)):
                term = Fraction(perm_sign(p))
                for slot, idx in enumerate(p):
                    term *= vecs[slot][J[idx]]
                    if not term:
                        break
                coeff += term
            if coeff:
                out = [o + coeff * v for o, v in zip(out, val)]
        return out


def alpha_pow(L, e):
    A = mat(L.alpha)
    n = len(A)
    if e < 0:
        A, e = _inverse(A), -e
    out = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(e):
        out = mul(A, out)
    return out


def eval_coboundary(L, R, f: DenseCochain, r: int, xs):
    """The defining sum of delta^k_r f at the vectors xs (length k+1)."""
    k = f.k
    A = mat(L.alpha)
    tw = alpha_pow(L, k + r - 1)
    out = [Fraction(0)] * f.d
    for s in range(k + 1):
        for t in range(s + 1, k + 1):
            args = []
            for u in range(k + 1):
                if u == t:
                    continue
                args.append(bracket(L, xs[s], xs[t]) if u == s else matvec(A, xs[u]))
            val = f(args)
            sign = -1 if t % 2 else 1
            out = [o + sign * v for o, v in zip(out, val)]
    for s in range(k + 1):
        rho = [[Fraction(0)] * f.d for _ in range(f.d)]
        w = matvec(tw, xs[s])
        for i, c in enumerate(w):
            if c:
                Ai = mat(R.action[i])
                rho = [[x + c * y for x, y in zip(r1, r2)] for r1, r2 in zip(rho, Ai)]
        val = matvec(rho, f(xs[:s] + xs[s + 1 :]))
        sign = -1 if s % 2 else 1
        out = [o + sign * v for o, v in zip(out, val)]
    return out


def coboundary_table(L, R, f: DenseCochain, r: int) -> dict:
    """delta f on every increasing (k+1)-tuple of basis vectors."""
    n = L.dim
    return {J: eval_coboundary(L, R, f, r, [basis(n, j) for j in J]) for J in combinations(range(n), f.k + 1)}
