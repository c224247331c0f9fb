"""alpha^k-derivations, their block form and dimension count, and derived algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import FieldError, ShapeError, ValidationError
from .exactla import (
    ONE,
    ZERO,
    Matrix,
    Scalar,
    SubspaceBasis,
    as_scalar,
    char_poly,
    eigenspace,
    eigenvalues,
    kernel_from_rows,
    poly_eval,
    unit_vector,
)
from .homlie import HomLieAlgebra, validate_hom_lie


def alpha_power(L: HomLieAlgebra, k: int) -> Matrix:
    if k < 0 and not L.alpha.is_invertible():
        raise ValidationError(f"alpha^{k} needs an invertible alpha")
    return L.alpha**k


def _matrix_from_vec(v, n: int) -> Matrix:
    return Matrix([v[a * n : (a + 1) * n] for a in range(n)], cols=n)


def _vec_from_matrix(D: Matrix) -> tuple:
    return tuple(D.entries())


def derivation_rows(L: HomLieAlgebra, k: int) -> list:
    """Linear conditions on the n^2 entries of D (unknown a*n + b is D[a, b])."""
    n = L.dim
    N = n * n
    alpha = L.alpha
    Ak = alpha_power(L, k)
    cols = [Ak.col(j) for j in range(n)]
    rows = []
    # alpha D - D alpha = 0
    for p in range(n):
        for q in range(n):
            row = [ZERO] * N
            for a in range(n):
                c = alpha[p, a]
                if c:
                    row[a * n + q] = row[a * n + q] + c
            for b in range(n):
                c = alpha[b, q]
                if c:
                    row[p * n + b] = row[p * n + b] - c
            rows.append(row)
    # D[e_i, e_j] = [D e_i, alpha^k e_j] + [alpha^k e_i, D e_j]
    left = [[L.bracket_vec(unit_vector(n, a), cols[j]) for j in range(n)] for a in range(n)]
    right = [[L.bracket_vec(cols[i], unit_vector(n, a)) for a in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            cij = L.bracket[i][j]
            for c in range(n):
                row = [ZERO] * N
                for b in range(n):
                    if cij[b]:
                        row[c * n + b] = row[c * n + b] + cij[b]
                for a in range(n):
                    t = left[a][j][c]
                    if t:
                        row[a * n + i] = row[a * n + i] - t
                    t = right[i][a][c]
                    if t:
                        row[a * n + j] = row[a * n + j] - t
                if any(row):
                    rows.append(row)
    return rows


@dataclass
class DerivationSpace:
    k: int
    basis: SubspaceBasis
    generators: list

    @property
    def dim(self) -> int:
        return self.basis.dim

    def contains(self, D: Matrix) -> bool:
        return self.basis.contains(_vec_from_matrix(D))

    def to_json(self) -> dict:
        return {"k": self.k, "dim": self.dim, "generators": [g.to_json() for g in self.generators]}


def der_space(L: HomLieAlgebra, k: int) -> DerivationSpace:
    """Basis of Der_{alpha^k}(L) as the kernel of one linear system in n^2 unknowns."""
    if k < -1:
        raise ValueError("k must be at least -1")
    n = L.dim
    basis = kernel_from_rows(derivation_rows(L, k), n * n)
    return DerivationSpace(k, basis, [_matrix_from_vec(v, n) for v in basis.vectors])


def is_derivation(L: HomLieAlgebra, D: Matrix, k: int) -> bool:
    """Direct check of both defining identities on all basis pairs."""
    n = L.dim
    if D.shape != (n, n):
        raise ShapeError(f"D must be {n}x{n}")
    if L.alpha @ D != D @ L.alpha:
        return False
    Ak = alpha_power(L, k)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = D.apply(L.bracket[i][j])
            rhs1 = L.bracket_vec(D.col(i), Ak.col(j))
            rhs2 = L.bracket_vec(Ak.col(i), D.col(j))
            if lhs != tuple(a + b for a, b in zip(rhs1, rhs2)):
                return False
    return True


# ---------------------------------------------------------------------------
# Heisenberg block form
# ---------------------------------------------------------------------------
@dataclass
class DerivationBlocks:
    D1: Matrix
    D3: Matrix
    D2: Matrix
    D4: Matrix
    U: Matrix
    V: Matrix
    mu: Scalar

    def to_json(self) -> dict:
        return {
            "D1": self.D1.to_json(),
            "D2": self.D2.to_json(),
            "D3": self.D3.to_json(),
            "D4": self.D4.to_json(),
            "U": self.U.to_json(),
            "V": self.V.to_json(),
            "mu": str(self.mu),
        }


def derivation_blocks(H, D: Matrix) -> DerivationBlocks:
    """Split D = [[D1, D3, *], [D2, D4, *], [U, V, mu]]."""
    m = H.m
    xs, ys, zz = range(m), range(m, 2 * m), [2 * m]
    return DerivationBlocks(
        D.submatrix(xs, xs),
        D.submatrix(xs, ys),
        D.submatrix(ys, xs),
        D.submatrix(ys, ys),
        D.submatrix(zz, xs),
        D.submatrix(zz, ys),
        D[2 * m, 2 * m],
    )


@dataclass
class BlockCheck:
    conditions: dict
    blocks: DerivationBlocks

    @property
    def ok(self) -> bool:
        return all(self.conditions.values())

    def __bool__(self):
        return self.ok

    def failed(self) -> list:
        return [name for name, good in self.conditions.items() if not good]

    def to_json(self) -> dict:
        return {"pass": self.ok, "conditions": dict(self.conditions), "blocks": self.blocks.to_json()}


def der_block_check(H, D: Matrix, k: int) -> BlockCheck:
    """Evaluate each block identity characterizing alpha^k-derivations of H."""
    if not H.is_block_diagonal():
        raise ValidationError("block check needs alpha = diag(X, Y, lambda)")
    m, lam = H.m, H.lam
    n = 2 * m + 1
    if D.shape != (n, n):
        raise ShapeError(f"D must be {n}x{n}")
    X = H.X
    Xt = X.T
    Xk = X**k
    Xkt = Xk.T
    b = derivation_blocks(H, D)
    last_col = D.col(n - 1)
    lamk = lam**k
    conditions = {
        "last_column": not any(last_col[:-1]),
        "D1X=XD1": b.D1 @ X == X @ b.D1,
        "D4=mu*tX^-k-lambda^k*t(D1X^-2k)": b.D4
        == (Xt ** (-k)) * b.mu - (b.D1 @ X ** (-2 * k)).T * lamk,
        "tX*D2*X=lambda*D2": Xt @ b.D2 @ X == b.D2 * lam,
        "tX^k*D2=tD2*X^k": Xkt @ b.D2 == b.D2.T @ Xk,
        "X*D3*tX=lambda*D3": X @ b.D3 @ Xt == b.D3 * lam,
        "X^k*tD3=D3*tX^k": Xk @ b.D3.T == b.D3 @ Xkt,
        "tX*tU=lambda*tU": Xt @ b.U.T == b.U.T * lam,
        "X*tV=tV": X @ b.V.T == b.V.T,
    }
    return BlockCheck(conditions, b)


# ---------------------------------------------------------------------------
# Dimension formula
# ---------------------------------------------------------------------------
@dataclass
class DerDimPrediction:
    case_tag: str
    card_I: int
    eigen_sum: int
    dim_E1: int
    dim_Elambda: int
    predicted_dim: int

    def to_json(self) -> dict:
        return {
            "case": self.case_tag,
            "card_I": self.card_I,
            "eigen_sum": self.eigen_sum,
            "dim_E1": self.dim_E1,
            "dim_Elambda": self.dim_Elambda,
            "predicted": self.predicted_dim,
        }


def der_dim_predict(H, k: int, eigs=None) -> DerDimPrediction:
    """card(I) + sum m_i dim E_{lambda_i} + 1, plus dim E_1 when chi(1) = 0 and
    dim E_lambda when chi(lambda) = 0, where chi is the characteristic
    polynomial of X and I = {lambda_i : chi(lambda / lambda_i) = 0}."""
    if not H.is_block_diagonal():
        raise ValidationError("dimension formula needs alpha = diag(X, Y, lambda)")
    X, lam = H.X, H.lam
    chi = char_poly(X)
    eigs = eigenvalues(X) if eigs is None else [(as_scalar(v), int(mult)) for v, mult in eigs]
    for v, mult in eigs:
        if poly_eval(chi, v):
            raise FieldError(f"{v} is not an eigenvalue of X")
    if sum(mult for _, mult in eigs) != X.rows:
        raise FieldError("eigenvalues of X do not account for its full dimension")
    card_I = sum(1 for v, _ in eigs if not poly_eval(chi, lam / v))
    eigen_sum = sum(mult * eigenspace(X, v).dim for v, mult in eigs)
    chi1 = not poly_eval(chi, ONE)
    chil = not poly_eval(chi, lam)
    dim_E1 = eigenspace(X, ONE).dim if chi1 else 0
    dim_El = eigenspace(X, lam).dim if chil else 0
    tag = f"chi(1){'=' if chi1 else '!='}0,chi(lambda){'=' if chil else '!='}0"
    return DerDimPrediction(tag, card_I, eigen_sum, dim_E1, dim_El, card_I + eigen_sum + dim_E1 + dim_El + 1)


@dataclass
class DimComparison:
    predicted: int
    computed: int
    prediction: DerDimPrediction

    @property
    def match(self) -> bool:
        return self.predicted == self.computed

    def to_json(self) -> dict:
        return {
            "predicted": self.predicted,
            "computed": self.computed,
            "match": self.match,
            "prediction": self.prediction.to_json(),
        }


def der_dim_compare(H, k: int, eigs=None) -> DimComparison:
    pred = der_dim_predict(H, k, eigs)
    return DimComparison(pred.predicted_dim, der_space(H.algebra, k).dim, pred)


# ---------------------------------------------------------------------------
# Extensions by derivations
# ---------------------------------------------------------------------------
def extend_by_derivations(L: HomLieAlgebra, derivations, labels) -> HomLieAlgebra:
    """L + span(D_1..D_s) with [D, x] = D(x), [D, D'] = 0 and alpha extended by 1."""
    n, s = L.dim, len(derivations)
    N = n + s
    brackets = {}
    for (i, j), coeffs in L.nonzero_brackets().items():
        brackets[(i, j)] = dict(coeffs)
    for t, D in enumerate(derivations):
        for j in range(n):
            col = D.col(j)
            coeffs = {c: -x for c, x in enumerate(col) if x}
            if coeffs:
                brackets[(j, n + t)] = coeffs
    alpha = Matrix.block([[L.alpha, Matrix.zeros(n, s)], [Matrix.zeros(s, n), Matrix.identity(s)]])
    return HomLieAlgebra.from_brackets(N, brackets, alpha, tuple(L.labels) + tuple(labels))


def algebra_with_derivation(L: HomLieAlgebra, D: Matrix) -> HomLieAlgebra:
    """L + CD with [x + aD, y + bD] = [x, y] + a D(y) - b D(x), alpha extended by 1."""
    if not is_derivation(L, D, 1):
        raise ValidationError("D is not an alpha-derivation")
    return extend_by_derivations(L, [D], ["D"])


def is_automorphism(L: HomLieAlgebra, phi: Matrix) -> bool:
    n = L.dim
    if phi.shape != (n, n) or not phi.is_invertible():
        return False
    if phi @ L.alpha != L.alpha @ phi:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if phi.apply(L.bracket[i][j]) != L.bracket_vec(phi.col(i), phi.col(j)):
                return False
    return True


def check_HD_iso_witness(L: HomLieAlgebra, D: Matrix, D2: Matrix, a, phi: Matrix, v) -> bool:
    """D2 == (1/a)(phi D phi^{-1} - ad_v)."""
    a = as_scalar(a)
    if not a:
        raise ValidationError("a must be nonzero")
    if not is_automorphism(L, phi):
        raise ValidationError("phi is not an automorphism")
    rhs = (phi @ D @ phi.inverse() - L.ad_vec(v)) * a.inverse()
    return D2 == rhs


@dataclass
class MetaHeisenberg:
    algebra: HomLieAlgebra
    I_k: Matrix
    I_k_star: Matrix
    action: tuple
    I_k_is_derivation: bool
    I_k_star_is_derivation: bool
    invariant_forms: SubspaceBasis

    def to_json(self) -> dict:
        return {
            "dim": self.algebra.dim,
            "I_k": self.I_k.to_json(),
            "I_k_star": self.I_k_star.to_json(),
            "I_k_is_derivation": self.I_k_is_derivation,
            "I_k_star_is_derivation": self.I_k_star_is_derivation,
            "invariant_form_dim": self.invariant_forms.dim,
        }


def meta_heisenberg(H, k: int) -> MetaHeisenberg:
    """H + C I_k + C I_k* where I_k = alpha^k on E, lambda^k on z, 0 on E*.

    The extension bracket needs alpha-derivations, so x -> I_k alpha^{1-k} x
    is used as the action (equal to I_k when k = 1).
    """
    if not H.is_block_diagonal():
        raise ValidationError("meta-Heisenberg construction needs alpha = diag(X, Y, lambda)")
    m = H.m
    n = 2 * m + 1
    Pk = H.P**k
    lamk = H.lam**k
    E = range(m)
    Es = range(m, 2 * m)

    def proj(keep):
        rows = [[Pk[i, j] if (i in keep and j in keep) else ZERO for j in range(n)] for i in range(n)]
        rows[n - 1][n - 1] = lamk
        return Matrix(rows, cols=n)

    Ik, Iks = proj(E), proj(Es)
    shift = H.P ** (1 - k)
    action = (Ik @ shift, Iks @ shift)
    ext = extend_by_derivations(H.algebra, list(action), ["I", "I*"])
    return MetaHeisenberg(
        ext,
        Ik,
        Iks,
        action,
        is_derivation(H.algebra, Ik, k),
        is_derivation(H.algebra, Iks, k),
        invariant_forms(ext),
    )


def invariant_forms(L: HomLieAlgebra) -> SubspaceBasis:
    """All b with b([x, y], z) = b(x, [y, z]); unknown p*n + q is b(e_p, e_q)."""
    n = L.dim
    rows = []
    for i in range(n):
        for j in range(n):
            cij = L.bracket[i][j]
            for l in range(n):
                cjl = L.bracket[j][l]
                row = [ZERO] * (n * n)
                for p in range(n):
                    if cij[p]:
                        row[p * n + l] = row[p * n + l] + cij[p]
                    if cjl[p]:
                        row[i * n + p] = row[i * n + p] - cjl[p]
                if any(row):
                    rows.append(row)
    return kernel_from_rows(rows, n * n)


@dataclass
class FormProperties:
    symmetric: bool
    gamma_symmetric: bool
    gamma_skew_symmetric: bool
    invariant: bool
    gamma_invariant: bool
    nondegenerate: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def bilinear_form_properties(L: HomLieAlgebra, b: Matrix, gamma: Matrix) -> FormProperties:
    """b(u, v) = tu b v; every predicate is checked on basis tuples."""
    n = L.dim
    if b.shape != (n, n) or gamma.shape != (n, n):
        raise ShapeError(f"b and gamma must be {n}x{n}")
    gb = gamma.T @ b
    bg = b @ gamma
    invariant = True
    gamma_invariant = True
    for i in range(n):
        for j in range(n):
            left = b.T.apply(L.bracket[i][j])
            for l in range(n):
                # b([e_i, e_j], e_l) and b(e_i, [e_j, e_l])
                lhs = left[l]
                rhs = b.apply(L.bracket[j][l])[i]
                if lhs != rhs:
                    invariant = False
                glhs = sum((x * y for x, y in zip(left, gamma.col(l))), ZERO)
                grhs = sum((x * y for x, y in zip(gamma.col(i), b.apply(L.bracket[j][l]))), ZERO)
                if glhs != grhs:
                    gamma_invariant = False
    return FormProperties(
        symmetric=b == b.T,
        gamma_symmetric=gb == bg,
        gamma_skew_symmetric=gb == -bg,
        invariant=invariant,
        gamma_invariant=gamma_invariant,
        nondegenerate=b.is_invertible(),
    )


# ---------------------------------------------------------------------------
# The dimension-3 derivation table
# ---------------------------------------------------------------------------
@dataclass
class TableRowCheck:
    """One reference row: claimed dimension and claimed D(z) coefficient versus the kernel."""

    name: str
    alpha: Matrix
    k: int
    claimed_dim: int
    computed_dim: int
    mu_formula: str
    mu_mismatches: list

    @property
    def dim_ok(self) -> bool:
        return self.claimed_dim == self.computed_dim

    @property
    def mu_ok(self) -> bool:
        return not self.mu_mismatches

    @property
    def flags(self) -> list:
        out = []
        if not self.dim_ok:
            out.append(f"dimension: claimed {self.claimed_dim}, computed {self.computed_dim}")
        if not self.mu_ok:
            out.append(f"D(z) coefficient differs from {self.mu_formula}")
        return out

    def to_json(self) -> dict:
        return {
            "row": self.name,
            "alpha": self.alpha.to_json(),
            "k": self.k,
            "claimed_dim": self.claimed_dim,
            "computed_dim": self.computed_dim,
            "mu_formula": self.mu_formula,
            "mu_mismatches": self.mu_mismatches,
            "flags": self.flags,
        }


def _table_rows(a, lam_diag, lam_jordan):
    a = as_scalar(a)
    ld, lj = as_scalar(lam_diag), as_scalar(lam_jordan)
    d1 = lambda D: D[0, 0]
    d2 = lambda D: D[1, 0]
    d4 = lambda D: D[1, 1]
    return [
        ("diagonal a, lambda/a", Matrix.diag(a, ld / a, ld), 2,
         "d4 a^k + d1 (lambda/a)^k", lambda D, k: d4(D) * a**k + d1(D) * (ld / a) ** k),
        ("diagonal a, a with a^2 = lambda", Matrix.diag(a, a, a * a), 4,
         "a^k (d1 + d4)", lambda D, k: a**k * (d1(D) + d4(D))),
        ("identity", Matrix.identity(3), 2, "2 d1", lambda D, k: d1(D) * 2),
        ("Jordan block a with a^2 = lambda", Matrix([[a, 1, 0], [0, a, 0], [0, 0, lj]]), 2,
         "2 a^4 d1", lambda D, k: a**4 * d1(D) * 2),
        ("unipotent", Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]), 6,
         "d1 + d4 - k d2", lambda D, k: d1(D) + d4(D) - d2(D) * k),
    ]


def derivation_table(k: int = 1, a=2, lam=6) -> list:
    """Recompute every row of the reference table of 3-dimensional cases.

    ``a`` and ``lam`` instantiate the first row; the rows needing a^2 = lambda
    use lambda = a^2.
    """
    from .heisenberg import build_heisenberg

    a = as_scalar(a)
    out = []
    for name, alpha, claimed, formula, mu in _table_rows(a, lam, a * a):
        H = build_heisenberg(1, alpha[2, 2], alpha)
        space = der_space(H.algebra, k)
        bad = []
        for idx, D in enumerate(space.generators):
            want = mu(D, k)
            if D[2, 2] != want:
                bad.append({"generator": idx, "computed": str(D[2, 2]), "formula": str(want)})
        out.append(TableRowCheck(name, alpha, k, claimed, space.dim, formula, bad))
    return out


__all__ = [
    "DerivationSpace",
    "der_space",
    "derivation_rows",
    "is_derivation",
    "DerivationBlocks",
    "derivation_blocks",
    "BlockCheck",
    "der_block_check",
    "DerDimPrediction",
    "der_dim_predict",
    "DimComparison",
    "der_dim_compare",
    "algebra_with_derivation",
    "extend_by_derivations",
    "is_automorphism",
    "check_HD_iso_witness",
    "MetaHeisenberg",
    "meta_heisenberg",
    "invariant_forms",
    "FormProperties",
    "bilinear_form_properties",
    "TableRowCheck",
    "derivation_table",
]
