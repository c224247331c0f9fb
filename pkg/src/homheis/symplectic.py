"""lambda-symplectic matrices, Darboux bases and the twisted algebra sp_k."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError, ValidationError
from .exactla import ONE, ZERO, Matrix, Scalar, as_scalar


def standard_form(m: int) -> Matrix:
    """B = [[0, I], [-I, 0]] of size 2m."""
    I = Matrix.identity(m)
    O = Matrix.zeros(m, m)
    return Matrix.block([[O, I], [-I, O]])


def split_blocks(S: Matrix) -> tuple:
    """(X, Z, T, Y) with S = [[X, Z], [T, Y]]: X acts on x's, Y on y's."""
    if not S.is_square or S.rows % 2:
        raise ShapeError(f"expected a square matrix of even size, got {S.rows}x{S.cols}")
    m = S.rows // 2
    a, b = range(m), range(m, 2 * m)
    return S.submatrix(a, a), S.submatrix(a, b), S.submatrix(b, a), S.submatrix(b, b)


@dataclass
class SymplecticReport:
    symplectic: bool
    xt_symmetric: bool
    zy_symmetric: bool
    xy_minus_tz: bool

    def __bool__(self):
        return self.symplectic

    @property
    def blocks_consistent(self) -> bool:
        blocks = self.xt_symmetric and self.zy_symmetric and self.xy_minus_tz
        return blocks == self.symplectic

    def to_json(self) -> dict:
        return {
            "symplectic": self.symplectic,
            "xt_symmetric": self.xt_symmetric,
            "zy_symmetric": self.zy_symmetric,
            "xy_minus_tz": self.xy_minus_tz,
        }


def is_lambda_symplectic(S: Matrix, lam) -> SymplecticReport:
    """tS B S = lam B, together with the three equivalent block identities.

    Writing S = [[X, Z], [T, Y]] the identity splits into tX T = tT X,
    tZ Y = tY Z and tX Y - tT Z = lam I.
    """
    lam = as_scalar(lam)
    X, Z, T, Y = split_blocks(S)
    m = X.rows
    B = standard_form(m)
    return SymplecticReport(
        symplectic=S.T @ B @ S == B * lam,
        xt_symmetric=X.T @ T == T.T @ X,
        zy_symmetric=Z.T @ Y == Y.T @ Z,
        xy_minus_tz=X.T @ Y - T.T @ Z == Matrix.identity(m) * lam,
    )


def symplectic_multiplier(S: Matrix) -> Scalar | None:
    """The lam with tS B S = lam B, or None if there is none."""
    split_blocks(S)
    m = S.rows // 2
    if m == 0:
        return ONE
    B = standard_form(m)
    G = S.T @ B @ S
    lam = G[0, m]
    return lam if G == B * lam else None


@dataclass(frozen=True)
class SkewForm:
    gram: Matrix

    def __post_init__(self):
        g = self.gram
        if not g.is_square:
            raise ShapeError("Gram matrix must be square")
        if g.T != -g:
            raise ValidationError("Gram matrix is not skew-symmetric")

    @property
    def dim(self) -> int:
        return self.gram.rows

    def __call__(self, u, v) -> Scalar:
        return _pair(self.gram, u, v)


def _pair(g: Matrix, u, v) -> Scalar:
    gv = g.apply(v)
    acc = ZERO
    for a, b in zip(u, gv):
        if a and b:
            acc = acc + a * b
    return acc


def darboux_basis(w: SkewForm | Matrix) -> Matrix:
    """Change of basis P with tP gram P = B, by skew Gram-Schmidt.

    Repeatedly takes the first remaining vector u and the first remaining v
    with w(u, v) != 0, scales v so w(u, v) = 1 and projects the rest onto the
    w-orthogonal of span{u, v}. The columns of P are (u_1..u_m, v_1..v_m).
    """
    g = w.gram if isinstance(w, SkewForm) else SkewForm(w).gram
    n = g.rows
    if n % 2:
        raise ValidationError("odd-dimensional skew form is degenerate")
    pool = [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]
    us, vs = [], []
    while pool:
        u = pool[0]
        pick = None
        for idx in range(1, len(pool)):
            if _pair(g, u, pool[idx]):
                pick = idx
                break
        if pick is None:
            raise ValidationError("skew form is degenerate")
        v = pool[pick]
        s = _pair(g, u, v).inverse()
        v = tuple(x * s for x in v)
        rest = [r for idx, r in enumerate(pool) if idx not in (0, pick)]
        projected = []
        for r in rest:
            a = _pair(g, r, v)
            b = _pair(g, r, u)
            projected.append(tuple(ri - a * ui + b * vi for ri, ui, vi in zip(r, u, v)))
        pool = [r for r in projected if any(r)]
        if len(pool) != len(projected):
            raise ValidationError("skew form is degenerate")
        us.append(u)
        vs.append(v)
    return Matrix.from_columns(us + vs, rows=n)


def _require_symplectic(S: Matrix) -> Scalar:
    lam = symplectic_multiplier(S)
    if lam is None:
        raise ValidationError("S is not lambda-symplectic for any lambda")
    return lam


def sp_k_membership(f: Matrix, S: Matrix, k: int) -> bool:
    """w(f x, S^k y) + w(S^k x, f y) = 0 for all x, y."""
    _require_symplectic(S)
    if f.shape != S.shape:
        raise ShapeError("f and S must have the same shape")
    B = standard_form(S.rows // 2)
    Sk = S**k
    return (f.T @ B @ Sk + Sk.T @ B @ f).is_zero()


@dataclass
class SpFactor:
    U: Matrix
    V: Matrix
    W: Matrix
    M: Matrix
    structured: bool

    def reassemble(self, S: Matrix, k: int) -> Matrix:
        return (S**k) @ self.M


def sp_k_factor(A: Matrix, S: Matrix, k: int) -> SpFactor:
    """Write A = S^k M with M = [[U, W], [V, -tU]], V and W symmetric.

    ``structured`` records whether M really has that shape; it does exactly
    when A lies in sp_k(S).
    """
    _require_symplectic(S)
    X, Z, T, Y = split_blocks(S)
    if not (Z.is_zero() and T.is_zero()):
        raise ValidationError("factorization needs block-diagonal S")
    M = (S**k).inverse() @ A
    U, W, V, Ubar = split_blocks(M)
    structured = Ubar == -U.T and V == V.T and W == W.T
    return SpFactor(U, V, W, M, structured)


def commutes_with(f: Matrix, s: Matrix) -> bool:
    """Membership predicate for the centralizer of s."""
    return f @ s == s @ f


__all__ = [
    "standard_form",
    "split_blocks",
    "SymplecticReport",
    "is_lambda_symplectic",
    "symplectic_multiplier",
    "SkewForm",
    "darboux_basis",
    "sp_k_membership",
    "sp_k_factor",
    "SpFactor",
    "commutes_with",
]
