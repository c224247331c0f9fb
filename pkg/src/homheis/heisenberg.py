"""Heisenberg Hom-Lie algebras H^m_lambda: construction, normal forms, decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import FieldError, ShapeError, ValidationError
from .exactla import (
    ONE,
    ZERO,
    Matrix,
    Scalar,
    SubspaceBasis,
    as_scalar,
    eigenvalues,
    gaussian_sqrt,
    generalized_eigenspaces,
    kernel_basis,
    kernel_from_rows,
    solve,
    span_basis,
    unit_vector,
)
from .homlie import (
    HomLieAlgebra,
    center,
    derived_ideal,
    restrict,
    validate_hom_lie,
)
from .symplectic import darboux_basis, is_lambda_symplectic


def heisenberg_labels(m: int) -> tuple:
    return tuple(f"x{i + 1}" for i in range(m)) + tuple(f"y{i + 1}" for i in range(m)) + ("z",)


def heisenberg_bracket(m: int, alpha: Matrix) -> HomLieAlgebra:
    """[x_k, y_k] = z in the basis (x_1..x_m, y_1..y_m, z)."""
    n = 2 * m + 1
    brackets = {(k, m + k): {n - 1: ONE} for k in range(m)}
    return HomLieAlgebra.from_brackets(n, brackets, alpha, heisenberg_labels(m))


@dataclass(frozen=True, eq=False)
class HeisenbergAlgebra:
    """H^m_lambda with alpha = P = [[X, T, 0], [Z, Y, 0], [L, M, lambda]]."""

    m: int
    lam: Scalar
    P: Matrix
    algebra: HomLieAlgebra

    def _block(self, rows, cols) -> Matrix:
        return self.P.submatrix(rows, cols)

    @property
    def _xs(self):
        return range(self.m)

    @property
    def _ys(self):
        return range(self.m, 2 * self.m)

    @property
    def X(self) -> Matrix:
        return self._block(self._xs, self._xs)

    @property
    def T(self) -> Matrix:
        return self._block(self._xs, self._ys)

    @property
    def Z(self) -> Matrix:
        return self._block(self._ys, self._xs)

    @property
    def Y(self) -> Matrix:
        return self._block(self._ys, self._ys)

    @property
    def L(self) -> Matrix:
        return self._block([2 * self.m], self._xs)

    @property
    def M(self) -> Matrix:
        return self._block([2 * self.m], self._ys)

    @property
    def symplectic_block(self) -> Matrix:
        r = range(2 * self.m)
        return self._block(r, r)

    @property
    def dim(self) -> int:
        return 2 * self.m + 1

    def is_block_diagonal(self) -> bool:
        return all(b.is_zero() for b in (self.T, self.Z, self.L, self.M))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "lambda": str(self.lam),
            "P": self.P.to_json(),
        }


def build_heisenberg(m: int, lam, P: Matrix) -> HeisenbergAlgebra:
    """Validate P as the twisting map of H^m_lambda and build the algebra."""
    lam = as_scalar(lam)
    n = 2 * m + 1
    if m < 1:
        raise ShapeError("m must be at least 1")
    if P.shape != (n, n):
        raise ShapeError(f"P must be {n}x{n} for m={m}, got {P.rows}x{P.cols}")
    last = P.col(n - 1)
    if any(last[:-1]) or last[-1] != lam:
        raise ValidationError(f"last column of P must be (0, ..., 0, {lam})")
    L = heisenberg_bracket(m, P)
    report = validate_hom_lie(L)
    block = P.submatrix(range(2 * m), range(2 * m))
    if not is_lambda_symplectic(block, lam):
        raise ValidationError(
            f"symplectic block of P is not {lam}-symplectic (multiplicativity fails)",
            report.witnesses,
        )
    if not report.ok:
        raise ValidationError("Heisenberg data fails the Hom-Lie axioms", report.witnesses)
    return HeisenbergAlgebra(m, lam, P, L)


def block_diagonal_heisenberg(X: Matrix, lam) -> HeisenbergAlgebra:
    """alpha = diag(X, lam tX^{-1}, lam)."""
    lam = as_scalar(lam)
    m = X.rows
    Y = X.T.inverse() * lam
    P = Matrix.block(
        [
            [X, Matrix.zeros(m, m), Matrix.zeros(m, 1)],
            [Matrix.zeros(m, m), Y, Matrix.zeros(m, 1)],
            [Matrix.zeros(1, m), Matrix.zeros(1, m), Matrix([[lam]])],
        ]
    )
    return build_heisenberg(m, lam, P)


@dataclass
class ExtensionAlgebra:
    heisenberg: HeisenbergAlgebra
    eta: Matrix


def from_extension_data(gamma: Matrix, beta: Matrix, mu: Matrix, eta: Matrix, lam) -> ExtensionAlgebra:
    """E + E* + C with alpha(x + f + t) = gamma x + beta f + mu f + eta f + lambda t.

    Valid exactly when beta tgamma = lambda I and tmu beta = tbeta mu. eta
    enters alpha but no validity condition; it is stored as given.
    """
    lam = as_scalar(lam)
    m = gamma.rows
    for name, A, shape in (("gamma", gamma, (m, m)), ("beta", beta, (m, m)), ("mu", mu, (m, m)), ("eta", eta, (1, m))):
        if A.shape != shape:
            raise ShapeError(f"{name} must be {shape[0]}x{shape[1]}")
    if not gamma.is_invertible():
        raise ValidationError("gamma must be invertible")
    if beta @ gamma.T != Matrix.identity(m) * lam:
        raise ValidationError("beta tgamma != lambda I")
    if mu.T @ beta != beta.T @ mu:
        raise ValidationError("tmu beta != tbeta mu")
    P = Matrix.block(
        [
            [gamma, mu, Matrix.zeros(m, 1)],
            [Matrix.zeros(m, m), beta, Matrix.zeros(m, 1)],
            [Matrix.zeros(1, m), eta, Matrix([[lam]])],
        ]
    )
    return ExtensionAlgebra(build_heisenberg(m, lam, P), eta)


# ---------------------------------------------------------------------------
# Three-dimensional normal forms
# ---------------------------------------------------------------------------
@dataclass
class NormalForm:
    tag: str
    canonical: Matrix
    transition: Matrix
    lam: Scalar
    mu: Scalar | None = None
    a: Scalar | None = None

    def to_json(self) -> dict:
        return {
            "form": self.tag,
            "lambda": str(self.lam),
            "mu": None if self.mu is None else str(self.mu),
            "a": None if self.a is None else str(self.a),
            "canonical": self.canonical.to_json(),
            "transition": self.transition.to_json(),
        }


def _w(u, v) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def _dot(r, u) -> Scalar:
    return r[0] * u[0] + r[1] * u[1]


def _lift(u, c) -> tuple:
    return (u[0], u[1], c)


def _first_outside(K: SubspaceBasis) -> tuple:
    for i in range(2):
        e = unit_vector(2, i)
        if not K.contains(e):
            return e
    raise AssertionError("kernel is the whole plane")


def normal_form_dim3(alpha: Matrix) -> NormalForm:
    """Bring the twisting map of H^1_lambda to one of the four canonical forms.

    Returns the canonical matrix and a transition basis P0 (columns X', Y', Z')
    with P0^{-1} alpha P0 equal to the canonical matrix.
    """
    if alpha.shape != (3, 3):
        raise ShapeError("normal_form_dim3 needs a 3x3 matrix")
    H = build_heisenberg(1, alpha[2, 2], alpha)
    lam = H.lam
    S = H.symplectic_block
    r = (alpha[2, 0], alpha[2, 1])
    tr, det = S.trace(), S.det()
    root = gaussian_sqrt(tr * tr - det * 4)
    if root is None:
        raise FieldError("eigenvalues of the 2x2 block are not in Q(i)")
    eigs = sorted({(tr + root) / 2, (tr - root) / 2}, key=Scalar.sort_key)
    I2 = Matrix.identity(2)

    def finish(tag, X, Y, mu=None, a=None, canonical=None):
        zc = _w(X, Y)
        P0 = Matrix.from_columns([X, Y, (ZERO, ZERO, zc)])
        got = P0.inverse() @ alpha @ P0
        if canonical is not None and got != canonical:
            raise AssertionError("normal form transition check failed")
        return NormalForm(tag, got, P0, lam, mu, a)

    if len(eigs) == 2:
        if ONE in eigs and lam != ONE:
            u1 = kernel_basis(S - I2).vectors[0]
            u2 = kernel_basis(S - I2 * lam).vectors[0]
            c1 = _dot(r, u1) / (ONE - lam)
            a = _dot(r, u2) / _w(u1, u2)
            canon = Matrix([[1, 0, 0], [0, lam, 0], [0, a, lam]])
            return finish("ii", _lift(u1, c1), _lift(u2, ZERO), ONE, a, canon)
        mu, nu = eigs
        u = kernel_basis(S - I2 * mu).vectors[0]
        v = kernel_basis(S - I2 * nu).vectors[0]
        cu = _dot(r, u) / (mu - lam)
        cv = _dot(r, v) / (nu - lam)
        canon = Matrix.diag(mu, nu, lam)
        return finish("iv", _lift(u, cu), _lift(v, cv), mu, None, canon)

    mu = eigs[0]
    K = kernel_basis(S - I2 * mu)
    if K.dim == 2:
        if mu == ONE:
            ker_r = kernel_from_rows([list(r)], 2)
            u1 = ker_r.vectors[0] if ker_r.dim else unit_vector(2, 0)
            u2 = _first_outside(SubspaceBasis(2, (u1,)))
            a = _dot(r, u2) / _w(u1, u2)
            canon = Matrix([[1, 0, 0], [0, 1, 0], [0, a, 1]])
            return finish("ii", _lift(u1, ZERO), _lift(u2, ZERO), ONE, a, canon)
        u = unit_vector(2, 0)
        v = unit_vector(2, 1)
        cu = _dot(r, u) / (mu - lam)
        cv = _dot(r, v) / (mu - lam)
        return finish("iv", _lift(u, cu), _lift(v, cv), mu, None, Matrix.diag(mu, mu, lam))

    N = S - I2 * mu
    if mu == ONE:
        u1 = _first_outside(K)
        u2 = N.apply(u1)
        c2 = _dot(r, u1)
        a = _dot(r, u2) / _w(u1, u2)
        canon = Matrix([[1, 0, 0], [1, 1, 0], [0, a, 1]])
        return finish("i", _lift(u1, ZERO), _lift(u2, c2), ONE, a, canon)
    u2 = _first_outside(K)
    u1 = N.apply(u2)
    c1 = _dot(r, u1) / (mu - lam)
    c2 = (c1 - _dot(r, u2)) / (lam - mu)
    canon = Matrix([[mu, 1, 0], [0, mu, 0], [0, 0, lam]])
    return finish("iii", _lift(u1, c1), _lift(u2, c2), mu, None, canon)


# ---------------------------------------------------------------------------
# Eigenspace decomposition
# ---------------------------------------------------------------------------
# blocks of the restricted matrix that each case prints as zero
_CASE_ZERO_BLOCKS = {
    "i": ("T", "Z", "L", "M"),
    "ii": ("Z", "L", "M"),
    "iii": ("T", "Z", "L"),
    "iv": ("Z", "M"),
    "v": ("Z", "L", "M"),
}


@dataclass
class DecompositionPiece:
    case: str
    eigenvalues: tuple
    basis: Matrix
    restricted: HomLieAlgebra
    heisenberg: HeisenbergAlgebra | None
    shape_conforms: bool
    nonconforming_blocks: tuple
    null_piece: bool = False

    @property
    def m(self) -> int:
        return (self.basis.cols - 1) // 2

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "eigenvalues": [str(v) for v in self.eigenvalues],
            "basis": self.basis.to_json(),
            "restricted_alpha": self.restricted.alpha.to_json(),
            "shape_conforms": self.shape_conforms,
            "nonconforming_blocks": list(self.nonconforming_blocks),
            "null_piece": self.null_piece,
        }


@dataclass
class Decomposition:
    pieces: list
    cross_brackets_vanish: bool
    spans_whole: bool

    def to_json(self) -> dict:
        return {
            "pieces": [p.to_json() for p in self.pieces],
            "cross_brackets_vanish": self.cross_brackets_vanish,
            "spans_whole": self.spans_whole,
        }


def _form(H: HeisenbergAlgebra, u, v) -> Scalar:
    """B(u, v) with [u, v] = B(u, v) z."""
    return H.algebra.bracket_vec(u, v)[-1]


def _gram(H, us, vs) -> Matrix:
    return Matrix([[_form(H, u, v) for v in vs] for u in us], cols=len(vs))


def _first_pivot(S: SubspaceBasis) -> int:
    return min(next(i for i, x in enumerate(v) if x) for v in S.vectors)


def _drop_z(H: HeisenbergAlgebra, vectors) -> list:
    """Vectors of the span independent of z, chosen greedily in order."""
    z = unit_vector(H.dim, H.dim - 1)
    kept = [z]
    out = []
    for v in vectors:
        if span_basis(kept + [v], H.dim).dim > len(kept):
            kept.append(v)
            out.append(v)
    return out


def _filtration_order(P: Matrix, value, W: SubspaceBasis) -> list:
    """Basis of W ordered along ker(P - v) in ker(P - v)^2 in ..."""
    n = P.rows
    N = P - Matrix.identity(n) * value
    vecs: list = []
    power = N
    while len(vecs) < W.dim:
        layer = kernel_basis(power)
        for v in layer.vectors:
            if span_basis(vecs + [v], n).dim > len(vecs):
                vecs.append(v)
        power = power @ N
    return vecs


def _dual_pair(H, xs, ys) -> list:
    G = _gram(H, xs, ys)
    Ginv = G.inverse()
    n = H.dim
    return [
        tuple(sum((ys[k][c] * Ginv[k, j] for k in range(len(ys))), ZERO) for c in range(n))
        for j in range(len(xs))
    ]


def _darboux_vectors(H, vecs) -> tuple:
    G = _gram(H, vecs, vecs)
    D = darboux_basis(G)
    n = H.dim
    comb = [
        tuple(sum((vecs[k][c] * D[k, j] for k in range(len(vecs))), ZERO) for c in range(n))
        for j in range(D.cols)
    ]
    half = len(comb) // 2
    return comb[:half], comb[half:]


def _make_piece(H, case, eig_values, xs, ys) -> DecompositionPiece:
    n = H.dim
    z = unit_vector(n, n - 1)
    basis_vecs = list(xs) + list(ys) + [z]
    k = len(xs)
    sub = restrict(H.algebra, basis_vecs, labels=heisenberg_labels(k) if k else ("z",))
    basis = Matrix.from_columns(basis_vecs)
    if k == 0:
        return DecompositionPiece(case, eig_values, basis, sub, None, True, (), null_piece=True)
    P = sub.alpha
    tmp = HeisenbergAlgebra(k, H.lam, P, sub)
    bad = tuple(name for name in _CASE_ZERO_BLOCKS[case] if not getattr(tmp, name).is_zero())
    heis = build_heisenberg(k, H.lam, P)
    return DecompositionPiece(case, eig_values, basis, sub, heis, not bad, bad)


def decompose(H: HeisenbergAlgebra, eigs=None) -> Decomposition:
    """Split H into Heisenberg pieces along generalized eigenspaces of alpha.

    Eigenvalues pair as lambda_i lambda_j = lambda. Cases: (i) a pair
    W(mu) + W(lambda/mu) + Cz; (ii) W(mu) + Cz with mu^2 = lambda != 1;
    (iii) W(1) + W(lambda) for lambda != 1; (iv) W(1) when lambda = 1;
    (v) W(-1) + Cz when lambda = 1.
    """
    P = H.P
    lam = H.lam
    spaces = generalized_eigenspaces(P, eigs if eigs is not None else eigenvalues(P))
    used = set()
    pieces = []
    for mu in sorted(spaces, key=lambda v: (_first_pivot(spaces[v]), v.sort_key())):
        if mu in used:
            continue
        W = spaces[mu]
        if lam == ONE:
            if mu == ONE:
                vecs = _drop_z(H, _filtration_order(P, mu, W))
                used.add(mu)
                if not vecs:
                    continue
                xs, ys = _darboux_vectors(H, vecs)
                pieces.append(_make_piece(H, "iv", (mu,), xs, ys))
                used.add(mu)
                continue
            if mu == -ONE:
                xs, ys = _darboux_vectors(H, _filtration_order(P, mu, W))
                pieces.append(_make_piece(H, "v", (mu,), xs, ys))
                used.add(mu)
                continue
        else:
            if mu == lam:
                # W(lambda) pairs with W(1) when 1 is an eigenvalue, else it is Cz
                used.add(mu)
                continue
            if mu == ONE:
                xs = list(W.vectors)
                ys = _dual_pair(H, xs, _drop_z(H, spaces[lam].vectors))
                pieces.append(_make_piece(H, "iii", (mu, lam), xs, ys))
                used.update({mu, lam})
                continue
            if mu * mu == lam:
                xs, ys = _darboux_vectors(H, _filtration_order(P, mu, W))
                pieces.append(_make_piece(H, "ii", (mu,), xs, ys))
                used.add(mu)
                continue
        partner = lam / mu
        if partner not in spaces:
            raise ValidationError(f"eigenvalue {mu} has no partner {partner}")
        xs = list(W.vectors)
        ys = _dual_pair(H, xs, list(spaces[partner].vectors))
        pieces.append(_make_piece(H, "i", (mu, partner), xs, ys))
        used.update({mu, partner})

    ok = True
    for a in range(len(pieces)):
        for b in range(a + 1, len(pieces)):
            A, B = pieces[a].basis, pieces[b].basis
            for i in range(A.cols - 1):
                for j in range(B.cols - 1):
                    if any(H.algebra.bracket_vec(A.col(i), B.col(j))):
                        ok = False
    all_vecs = [p.basis.col(j) for p in pieces for j in range(p.basis.cols)]
    spans = span_basis(all_vecs, H.dim).dim == H.dim
    return Decomposition(pieces, ok, spans)


# ---------------------------------------------------------------------------
# Heisenberg plus abelian splitting
# ---------------------------------------------------------------------------
@dataclass
class Splitting:
    heisenberg: HeisenbergAlgebra
    abelian: SubspaceBasis
    heisenberg_basis: Matrix
    abelian_alpha: Matrix
    reconstructs: bool = field(default=False)

    def to_json(self) -> dict:
        return {
            "heisenberg": self.heisenberg.to_json(),
            "heisenberg_basis": self.heisenberg_basis.to_json(),
            "abelian_dim": self.abelian.dim,
            "abelian_basis": [[str(x) for x in v] for v in self.abelian.vectors],
            "abelian_alpha": self.abelian_alpha.to_json(),
            "reconstructs": self.reconstructs,
        }


def _coords(basis_vectors, v) -> tuple:
    sol = solve(Matrix.from_columns(basis_vectors), v)
    if sol is None:
        raise ValidationError("vector outside the expected span")
    return sol


def split_heisenberg_abelian(L: HomLieAlgebra) -> Splitting:
    """Write L = H + a with H Heisenberg and a abelian, both alpha-invariant.

    The center is the radical of the form B with [u, v] = B(u, v) z. The
    abelian part is an alpha-invariant complement of z inside the center and
    H an alpha-invariant complement of it containing z; both are found by
    solving linear (Sylvester-type) equations.
    """
    n = L.dim
    report = validate_hom_lie(L)
    if not report.ok:
        raise ValidationError("algebra fails the Hom-Lie axioms", report.witnesses)
    der = derived_ideal(L)
    if der.dim != 1:
        raise ValidationError(f"derived ideal has dimension {der.dim}, expected 1")
    C = center(L)
    if not C.contains_subspace(der):
        raise ValidationError("derived ideal is not central")
    z = der.vectors[0]
    alpha = L.alpha
    az = alpha.apply(z)
    if not der.contains(az):
        raise ValidationError("alpha does not preserve the derived ideal")
    lam = _coords([z], az)[0]

    c0 = _drop_from(C.vectors, [z], n)
    q = len(c0)
    cz = c0 + [z]
    kvec = []
    a_cols = []
    for v in c0:
        w = alpha.apply(v)
        if not C.contains(w):
            raise ValidationError("center is not alpha-invariant")
        co = _coords(cz, w)
        a_cols.append(co[:q])
        kvec.append(co[q])
    A = Matrix.from_columns(a_cols, rows=q) if q else Matrix.zeros(0, 0)
    # (tA - lam) t = k makes alpha(c_j + t_j z) stay in the span
    t = ()
    if q:
        t = solve(A.T - Matrix.identity(q) * lam, kvec)
        if t is None:
            raise ValidationError("no alpha-invariant complement of z in the center")
    abel = [tuple(vi + tj * zi for vi, zi in zip(v, z)) for v, tj in zip(c0, t)]

    v0 = _drop_from([unit_vector(n, i) for i in range(n)], list(C.vectors), n)
    p = len(v0)
    frame = v0 + [z] + abel
    Pm, K = [], []
    for v in v0:
        co = _coords(frame, alpha.apply(v))
        Pm.append(co[:p])
        K.append(co[p + 1 :])
    # find S (q x p) with K + A_a S - S P = 0, A_a = alpha on abel
    Aa = Matrix.from_columns([_coords(abel, alpha.apply(a)) for a in abel], rows=q) if q else Matrix.zeros(0, 0)
    shifts = [[ZERO] * q for _ in range(p)]
    if q:
        Pmat = Matrix.from_columns(Pm, rows=p)
        Kmat = Matrix.from_columns(K, rows=q)
        rows, rhs = [], []
        for a in range(q):
            for j in range(p):
                row = [ZERO] * (q * p)
                for b in range(q):
                    row[b * p + j] = row[b * p + j] + Aa[a, b]
                for i in range(p):
                    row[a * p + i] = row[a * p + i] - Pmat[i, j]
                rows.append(row)
                rhs.append(-Kmat[a, j])
        sol = solve(Matrix(rows, cols=q * p), rhs)
        if sol is None:
            raise ValidationError("no alpha-invariant complement of the abelian part")
        for j in range(p):
            for a in range(q):
                shifts[j][a] = sol[a * p + j]
    hvecs = []
    for j, v in enumerate(v0):
        w = list(v)
        for a in range(q):
            s = shifts[j][a]
            if s:
                w = [wi + s * ai for wi, ai in zip(w, abel[a])]
        hvecs.append(tuple(w))

    def form(u, v):
        return _coords([z], L.bracket_vec(u, v))[0]

    G = Matrix([[form(u, v) for v in hvecs] for u in hvecs], cols=p)
    D = darboux_basis(G)
    comb = [
        tuple(sum((hvecs[k][c] * D[k, j] for k in range(p)), ZERO) for c in range(n)) for j in range(p)
    ]
    hb = comb + [z]
    m = p // 2
    sub = restrict(L, hb, labels=heisenberg_labels(m))
    H = build_heisenberg(m, lam, sub.alpha)
    full = Matrix.from_columns(hb + abel)
    return Splitting(
        H,
        SubspaceBasis(n, tuple(abel)),
        Matrix.from_columns(hb),
        Aa,
        full.is_invertible(),
    )


def _drop_from(candidates, base, n) -> list:
    kept = list(base)
    out = []
    for v in candidates:
        if span_basis(kept + [v], n).dim > len(kept):
            kept.append(v)
            out.append(v)
    return out


__all__ = [
    "HeisenbergAlgebra",
    "build_heisenberg",
    "block_diagonal_heisenberg",
    "heisenberg_bracket",
    "heisenberg_labels",
    "from_extension_data",
    "ExtensionAlgebra",
    "NormalForm",
    "normal_form_dim3",
    "DecompositionPiece",
    "Decomposition",
    "decompose",
    "Splitting",
    "split_heisenberg_abelian",
]
