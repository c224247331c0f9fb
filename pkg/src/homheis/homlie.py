"""Hom-Lie algebras given by structure constants and a twisting map."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from typing import Mapping, Sequence

from .errors import ShapeError, ValidationError
from .exactla import (
    ONE,
    ZERO,
    Matrix,
    Scalar,
    SubspaceBasis,
    as_scalar,
    kernel_from_rows,
    solve,
    span_basis,
    unit_vector,
)

MAX_WITNESSES = 10


@dataclass(frozen=True, eq=False)
class HomLieAlgebra:
    """Bracket ``[e_i, e_j] = sum_k bracket[i][j][k] e_k`` and twisting map ``alpha``.

    ``alpha`` acts on column coordinate vectors: ``alpha(e_j)`` is column j.
    Nothing is validated on construction; use :func:`validate_hom_lie`.
    """

    dim: int
    labels: tuple
    bracket: tuple
    alpha: Matrix

    def __post_init__(self):
        n = self.dim
        if len(self.labels) != n:
            raise ShapeError(f"expected {n} labels, got {len(self.labels)}")
        if self.alpha.shape != (n, n):
            raise ShapeError(f"alpha must be {n}x{n}, got {self.alpha.rows}x{self.alpha.cols}")
        c = tuple(
            tuple(tuple(as_scalar(x) for x in self.bracket[i][j]) for j in range(n)) for i in range(n)
        )
        if len(self.bracket) != n or any(
            len(self.bracket[i]) != n or any(len(self.bracket[i][j]) != n for j in range(n))
            for i in range(n)
        ):
            raise ShapeError("structure constants must form an n x n x n tensor")
        object.__setattr__(self, "bracket", c)
        object.__setattr__(self, "labels", tuple(self.labels))

    # -- construction -------------------------------------------------------
    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple, Mapping[int, object]],
        alpha: Matrix,
        labels: Sequence[str] | None = None,
    ) -> "HomLieAlgebra":
        """Build from ``{(i, j): {k: c}}`` listing pairs i<j; skew completion implied."""
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise ShapeError(f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < {dim}")
            for k, v in coeffs.items():
                if not 0 <= k < dim:
                    raise ShapeError(f"bracket target index {k} out of range")
                v = as_scalar(v)
                c[i][j][k] = v
                c[j][i][k] = -v
        labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        return cls(dim, labels, tuple(tuple(tuple(r) for r in m) for m in c), alpha)

    def with_alpha(self, alpha: Matrix) -> "HomLieAlgebra":
        return HomLieAlgebra(self.dim, self.labels, self.bracket, alpha)

    def __eq__(self, other):
        if not isinstance(other, HomLieAlgebra):
            return NotImplemented
        return (self.dim, self.labels, self.bracket) == (other.dim, other.labels, other.bracket) and (
            self.alpha == other.alpha
        )

    __hash__ = None

    def to_json(self) -> dict:
        """Canonical form: pairs i<j in order, nonzero coefficients only."""
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "brackets": [
                {"i": i, "j": j, "coeffs": [{"k": k, "c": str(c)} for k, c in sorted(coeffs.items())]}
                for (i, j), coeffs in sorted(self.nonzero_brackets().items())
            ],
            "alpha": self.alpha.to_json(),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "HomLieAlgebra":
        try:
            n = data["dim"]
            if not isinstance(n, int) or n < 0:
                raise ShapeError("field 'dim' must be a non-negative integer")
            brackets = {}
            for pos, entry in enumerate(data.get("brackets", [])):
                key = (entry["i"], entry["j"])
                if key in brackets:
                    raise ShapeError(f"brackets[{pos}]: pair {key} listed twice")
                brackets[key] = {c["k"]: c["c"] for c in entry["coeffs"]}
            alpha = Matrix.from_json(data["alpha"])
        except KeyError as exc:
            raise ShapeError(f"missing field {exc.args[0]!r}") from None
        except (TypeError, AttributeError):
            raise ShapeError("algebra JSON does not follow the schema") from None
        return cls.from_brackets(n, brackets, alpha, data.get("labels"))

    # -- evaluation ---------------------------------------------------------
    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.bracket[i][j]

    def bracket_vec(self, u: Sequence, v: Sequence) -> tuple:
        n = self.dim
        acc = [ZERO] * n
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.bracket[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        acc[k] = acc[k] + ab * c
        return tuple(acc)

    def alpha_vec(self, v: Sequence) -> tuple:
        return self.alpha.apply(v)

    def ad(self, i: int) -> Matrix:
        """Matrix of ``v -> [e_i, v]``."""
        return Matrix.from_columns([self.bracket[i][j] for j in range(self.dim)])

    def ad_vec(self, v: Sequence) -> Matrix:
        n = self.dim
        return Matrix.from_columns([self.bracket_vec(v, unit_vector(n, j)) for j in range(n)])

    def is_abelian(self) -> bool:
        return not any(c for m in self.bracket for r in m for c in r)

    def nonzero_brackets(self) -> dict:
        """``{(i, j): {k: c}}`` for i<j with nonzero structure constants."""
        out = {}
        for i, j in combinations(range(self.dim), 2):
            coeffs = {k: c for k, c in enumerate(self.bracket[i][j]) if c}
            if coeffs:
                out[(i, j)] = coeffs
        return out


def abelian(dim: int, alpha: Matrix | None = None, labels=None) -> HomLieAlgebra:
    alpha = Matrix.identity(dim) if alpha is None else alpha
    return HomLieAlgebra.from_brackets(dim, {}, alpha, labels)


def direct_sum(a: HomLieAlgebra, b: HomLieAlgebra) -> HomLieAlgebra:
    """Direct sum with ``[a, b] = 0`` and block-diagonal twisting map."""
    n = a.dim + b.dim
    brackets = {}
    for (i, j), coeffs in a.nonzero_brackets().items():
        brackets[(i, j)] = dict(coeffs)
    for (i, j), coeffs in b.nonzero_brackets().items():
        brackets[(i + a.dim, j + a.dim)] = {k + a.dim: c for k, c in coeffs.items()}
    alpha = Matrix.block(
        [[a.alpha, Matrix.zeros(a.dim, b.dim)], [Matrix.zeros(b.dim, a.dim), b.alpha]]
    )
    return HomLieAlgebra.from_brackets(n, brackets, alpha, a.labels + b.labels)


def change_basis(L: HomLieAlgebra, P: Matrix, labels=None) -> HomLieAlgebra:
    """Re-express ``L`` in the basis given by the columns of invertible ``P``."""
    return restrict(L, [P.col(j) for j in range(P.cols)], labels=labels)


def restrict(L: HomLieAlgebra, vectors: Sequence[Sequence], labels=None) -> HomLieAlgebra:
    """The subalgebra spanned by ``vectors``, expressed in that basis.

    Raises ValidationError when the span is not closed under the bracket or
    not invariant under alpha.
    """
    vectors = [tuple(as_scalar(x) for x in v) for v in vectors]
    d = len(vectors)
    B = Matrix.from_columns(vectors) if vectors else Matrix.zeros(L.dim, 0)
    if d and B.rank() != d:
        raise ValidationError("restriction basis is linearly dependent")

    def coords(w, what):
        sol = solve(B, w) if d else (None if any(w) else ())
        if sol is None:
            raise ValidationError(f"subspace is not closed under {what}")
        return sol

    c = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for i, j in combinations(range(d), 2):
        w = coords(L.bracket_vec(vectors[i], vectors[j]), "the bracket")
        c[i][j] = list(w)
        c[j][i] = [-x for x in w]
    alpha_cols = [coords(L.alpha_vec(v), "alpha") for v in vectors]
    alpha = Matrix.from_columns(alpha_cols) if d else Matrix.zeros(0, 0)
    labels = tuple(labels) if labels is not None else tuple(f"u{i + 1}" for i in range(d))
    return HomLieAlgebra(d, labels, tuple(tuple(tuple(r) for r in m) for m in c), alpha)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------
@dataclass
class ValidationReport:
    skew_ok: bool
    jacobi_ok: bool
    multiplicative_ok: bool
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.skew_ok and self.jacobi_ok and self.multiplicative_ok

    def to_json(self) -> dict:
        return {
            "skew_ok": self.skew_ok,
            "jacobi_ok": self.jacobi_ok,
            "multiplicative_ok": self.multiplicative_ok,
            "witnesses": self.witnesses,
        }


def _vec_json(v) -> list:
    return [str(x) for x in v]


def validate_hom_lie(L: HomLieAlgebra) -> ValidationReport:
    """Check skew-symmetry, the Hom-Jacobi identity and multiplicativity.

    Every basis pair/triple is examined; at most ``MAX_WITNESSES`` violations
    are kept per class.
    """
    n = L.dim
    lab = L.labels
    witnesses = []

    skew_fail = []
    for i, j in combinations_with_replacement(range(n), 2):
        total = tuple(a + b for a, b in zip(L.bracket[i][j], L.bracket[j][i]))
        if any(total):
            skew_fail.append(
                {
                    "kind": "skew",
                    "indices": [i, j],
                    "basis": [lab[i], lab[j]],
                    "value": _vec_json(total),
                }
            )
    witnesses += skew_fail[:MAX_WITNESSES]

    alpha_cols = [L.alpha.col(i) for i in range(n)]
    triples = combinations(range(n), 3) if not skew_fail else product(range(n), repeat=3)
    jac_fail = []
    for i, j, k in triples:
        total = [ZERO] * n
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = L.bracket[b][c]
            if not any(inner):
                continue
            term = L.bracket_vec(alpha_cols[a], inner)
            total = [s + t for s, t in zip(total, term)]
        if any(total):
            jac_fail.append(
                {
                    "kind": "jacobi",
                    "indices": [i, j, k],
                    "basis": [lab[i], lab[j], lab[k]],
                    "value": _vec_json(total),
                }
            )
            if len(jac_fail) >= MAX_WITNESSES:
                break
    witnesses += jac_fail

    mult_fail = []
    for i, j in combinations_with_replacement(range(n), 2):
        lhs = L.alpha_vec(L.bracket[i][j])
        rhs = L.bracket_vec(alpha_cols[i], alpha_cols[j])
        if lhs != rhs:
            mult_fail.append(
                {
                    "kind": "multiplicative",
                    "indices": [i, j],
                    "basis": [lab[i], lab[j]],
                    "lhs": _vec_json(lhs),
                    "rhs": _vec_json(rhs),
                }
            )
            if len(mult_fail) >= MAX_WITNESSES:
                break
    witnesses += mult_fail

    return ValidationReport(not skew_fail, not jac_fail, not mult_fail, witnesses)


# ---------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------
def center(L: HomLieAlgebra) -> SubspaceBasis:
    """{v : [v, e_j] = 0 for all j}, as the kernel of the stacked adjoint maps."""
    n = L.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([L.bracket[i][j][k] for i in range(n)])
    return kernel_from_rows(rows, n)


def derived_ideal(L: HomLieAlgebra) -> SubspaceBasis:
    n = L.dim
    return span_basis([L.bracket[i][j] for i, j in combinations(range(n), 2)], n)


def bracket_span(L: HomLieAlgebra, left: SubspaceBasis, right: SubspaceBasis) -> SubspaceBasis:
    vecs = [L.bracket_vec(u, v) for u in left.vectors for v in right.vectors]
    return span_basis(vecs, L.dim)


def whole_space(n: int) -> SubspaceBasis:
    return SubspaceBasis(n, tuple(unit_vector(n, i) for i in range(n)))


@dataclass
class LowerCentralSeries:
    terms: list
    nilpotent: bool

    @property
    def dims(self) -> list:
        return [t.dim for t in self.terms]


def lower_central_series(L: HomLieAlgebra) -> LowerCentralSeries:
    """G_0 = L, G_{k+1} = [L, G_k], stopping at zero or at the first repeat."""
    full = whole_space(L.dim)
    terms = [full]
    while terms[-1].dim:
        nxt = bracket_span(L, full, terms[-1])
        terms.append(nxt)
        if nxt.dim == terms[-2].dim:
            break
    return LowerCentralSeries(terms, terms[-1].dim == 0)


@dataclass
class HeisenbergTypeReport:
    is_heisenberg: bool
    nilpotent: bool
    derived: SubspaceBasis
    derived_in_center: bool
    derived_equals_center: bool

    def to_json(self) -> dict:
        return {
            "is_heisenberg_type": self.is_heisenberg,
            "nilpotent": self.nilpotent,
            "derived_dim": self.derived.dim,
            "derived_basis": [_vec_json(v) for v in self.derived.vectors],
            "derived_in_center": self.derived_in_center,
            "derived_equals_center": self.derived_equals_center,
        }


def is_heisenberg_type(L: HomLieAlgebra) -> HeisenbergTypeReport:
    """Nilpotent with one-dimensional derived ideal; also compares with the center."""
    series = lower_central_series(L)
    der = derived_ideal(L)
    cen = center(L)
    inside = cen.contains_subspace(der)
    return HeisenbergTypeReport(
        is_heisenberg=series.nilpotent and der.dim == 1,
        nilpotent=series.nilpotent,
        derived=der,
        derived_in_center=inside,
        derived_equals_center=inside and der.dim == cen.dim,
    )


def adjoint_rep(L: HomLieAlgebra):
    """V = L, beta = alpha, rho(e_i) = ad(e_i). Requires a multiplicative algebra."""
    from .representations import Representation

    report = validate_hom_lie(L)
    if not report.multiplicative_ok:
        raise ValidationError("adjoint representation needs a multiplicative algebra", report.witnesses)
    return Representation(L.dim, L.dim, L.alpha, tuple(L.ad(i) for i in range(L.dim)))


def is_identity(M: Matrix) -> bool:
    return M == Matrix.identity(M.rows)


__all__ = [
    "HomLieAlgebra",
    "ValidationReport",
    "LowerCentralSeries",
    "HeisenbergTypeReport",
    "validate_hom_lie",
    "center",
    "derived_ideal",
    "lower_central_series",
    "is_heisenberg_type",
    "adjoint_rep",
    "restrict",
    "change_basis",
    "direct_sum",
    "abelian",
    "ONE",
    "Scalar",
]
