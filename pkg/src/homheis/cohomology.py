"""Cochains, the twisted coboundary delta^k_r and Z/B/H computations."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .errors import ShapeError, ValidationError
from .exactla import (
    ONE,
    ZERO,
    Matrix,
    Scalar,
    SubspaceBasis,
    as_scalar,
    eigenspace,
    eigenvalues,
    kernel_from_rows,
    span_basis,
)
from .homlie import HomLieAlgebra
from .representations import Representation


# ---------------------------------------------------------------------------
# Cochain coordinates
# ---------------------------------------------------------------------------
class CochainSpace:
    """Alternating k-linear maps L^k -> V, coordinates (tuple index, module index).

    Coordinate ``t * d + c`` is the c-th module component of f(e_J) where J
    is the t-th increasing k-tuple in lexicographic order.
    """

    def __init__(self, n: int, d: int, k: int):
        self.n, self.d, self.k = n, d, k
        self.tuples = list(combinations(range(n), k))
        self.index = {J: t for t, J in enumerate(self.tuples)}

    @property
    def dim(self) -> int:
        return len(self.tuples) * self.d

    def coord(self, J: tuple, c: int) -> int:
        return self.index[J] * self.d + c


@dataclass
class Cochain:
    """An alternating k-cochain given on increasing basis tuples."""

    degree: int
    module_dim: int
    values: dict

    @classmethod
    def from_vector(cls, space: CochainSpace, vec: Sequence) -> "Cochain":
        d = space.d
        vals = {}
        for t, J in enumerate(space.tuples):
            v = tuple(as_scalar(x) for x in vec[t * d : (t + 1) * d])
            if any(v):
                vals[J] = v
        return cls(space.k, d, vals)

    @classmethod
    def from_entries(cls, n: int, d: int, k: int, entries: Mapping) -> "Cochain":
        """Build from ``{(i_1, .., i_k): vector}`` in any index order; skew-completed.

        Repeated indices must carry a zero value.
        """
        vals: dict = {}
        for idx, v in entries.items():
            v = tuple(as_scalar(x) for x in v)
            if len(v) != d:
                raise ShapeError(f"cochain values must have length {d}")
            if len(set(idx)) != len(idx):
                if any(v):
                    raise ValidationError(f"nonzero value on repeated indices {idx}")
                continue
            order = sorted(range(len(idx)), key=lambda p: idx[p])
            J = tuple(idx[p] for p in order)
            sign = _perm_sign(order)
            prev = vals.get(J, (ZERO,) * d)
            vals[J] = tuple(a + (b if sign > 0 else -b) for a, b in zip(prev, v))
        vals = {J: v for J, v in vals.items() if any(v)}
        return cls(k, d, vals)

    def to_vector(self, space: CochainSpace) -> tuple:
        out = [ZERO] * space.dim
        for J, v in self.values.items():
            base = space.coord(J, 0)
            out[base : base + space.d] = v
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "values": [{"args": list(J), "value": [str(x) for x in v]} for J, v in sorted(self.values.items())],
        }


def _perm_sign(order: Sequence[int]) -> int:
    sign = 1
    seen = list(order)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                sign = -sign
    return sign


def _minor(W: list, rows: tuple) -> Scalar:
    """det of the square submatrix of the column list W on ``rows``."""
    k = len(rows)
    if k == 0:
        return ONE
    if k == 1:
        return W[0][rows[0]]
    if k == 2:
        return W[0][rows[0]] * W[1][rows[1]] - W[1][rows[0]] * W[0][rows[1]]
    return Matrix([[W[c][r] for c in range(k)] for r in rows], cols=k).det()


def _evaluate_rows(W: list, n: int) -> dict:
    """Coefficients {T: det W[T]} expressing f(w_1..w_k) through f(e_T)."""
    k = len(W)
    support = sorted({i for w in W for i, x in enumerate(w) if x})
    out = {}
    for T in combinations(support, k):
        m = _minor(W, T)
        if m:
            out[T] = m
    return out


def _alpha_power(L: HomLieAlgebra, e: int) -> Matrix:
    if e < 0 and not L.alpha.is_invertible():
        raise ValidationError(f"coboundary needs alpha^{e} but alpha is singular")
    return L.alpha**e


def coboundary_matrix(L: HomLieAlgebra, R: Representation, k: int, r: int) -> Matrix:
    """Matrix of delta^k_r : C^k -> C^{k+1} in cochain coordinates.

    delta f(x_0..x_k) = sum_{s<t} (-1)^t f(a x_0, .., [x_s, x_t], .., ^x_t, .., a x_k)
                      + sum_s (-1)^s rho(a^{k+r-1} x_s) f(x_0, .., ^x_s, .., x_k)
    with the bracket in slot s. For k = 0 this is v -> rho(a^{r-1} x) v.
    """
    n, d = L.dim, R.module_dim
    if R.algebra_dim != n:
        raise ShapeError("representation does not match the algebra")
    src = CochainSpace(n, d, k)
    dst = CochainSpace(n, d, k + 1)
    alpha_cols = [L.alpha.col(j) for j in range(n)]
    twist = _alpha_power(L, k + r - 1)
    rho_tw = [R.rho(twist.col(j)) for j in range(n)]
    rows = []
    for J in dst.tuples:
        block = [[ZERO] * src.dim for _ in range(d)]
        for s in range(k + 1):
            for t in range(s + 1, k + 1):
                br = L.bracket[J[s]][J[t]]
                if not any(br):
                    continue
                W = []
                for u in range(k + 1):
                    if u == t:
                        continue
                    W.append(br if u == s else alpha_cols[J[u]])
                sign = -ONE if t % 2 else ONE
                for T, coeff in _evaluate_rows(W, n).items():
                    coeff = coeff * sign
                    base = src.coord(T, 0)
                    for c in range(d):
                        block[c][base + c] = block[c][base + c] + coeff
        for s in range(k + 1):
            A = rho_tw[J[s]]
            if A.is_zero():
                continue
            rest = J[:s] + J[s + 1 :]
            base = src.coord(rest, 0)
            sign = -ONE if s % 2 else ONE
            for c in range(d):
                for c2 in range(d):
                    a = A[c, c2]
                    if a:
                        block[c][base + c2] = block[c][base + c2] + a * sign
        rows.extend(block)
    return Matrix(rows, cols=src.dim)


def coboundary(L: HomLieAlgebra, R: Representation, f: Cochain, r: int) -> Cochain:
    """delta^k_r applied to one cochain."""
    space = CochainSpace(L.dim, R.module_dim, f.degree)
    out = coboundary_matrix(L, R, f.degree, r).apply(f.to_vector(space))
    return Cochain.from_vector(CochainSpace(L.dim, R.module_dim, f.degree + 1), out)


def hom_cochain_space(L: HomLieAlgebra, R: Representation, k: int) -> SubspaceBasis:
    """Cochains with f(a x_1, .., a x_k) = beta f(x_1, .., x_k), as a kernel."""
    n, d = L.dim, R.module_dim
    space = CochainSpace(n, d, k)
    alpha_cols = [L.alpha.col(j) for j in range(n)]
    beta = R.beta
    rows = []
    for J in space.tuples:
        block = [[ZERO] * space.dim for _ in range(d)]
        for T, coeff in _evaluate_rows([alpha_cols[j] for j in J], n).items():
            base = space.coord(T, 0)
            for c in range(d):
                block[c][base + c] = block[c][base + c] + coeff
        base = space.coord(J, 0)
        for c in range(d):
            for c2 in range(d):
                b = beta[c, c2]
                if b:
                    block[c][base + c2] = block[c][base + c2] - b
        rows.extend(block)
    return kernel_from_rows(rows, space.dim)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------
@dataclass
class FormulaComparison:
    formula: str
    predicted: int
    computed: int

    @property
    def match(self) -> bool:
        return self.predicted == self.computed

    def to_json(self) -> dict:
        return {"formula": self.formula, "predicted": self.predicted, "computed": self.computed, "match": self.match}


@dataclass
class CohomologyReport:
    degree: int
    r: int
    hom_restricted: bool
    dim_C: int
    Z: SubspaceBasis
    B: SubspaceBasis
    b_in_z: bool
    comparisons: list = field(default_factory=list)

    @property
    def dims(self) -> dict:
        return {"C": self.dim_C, "Z": self.Z.dim, "B": self.B.dim, "H": self.dim_H}

    @property
    def dim_H(self) -> int:
        if self.b_in_z:
            return self.Z.dim - self.B.dim
        both = span_basis(list(self.Z.vectors) + list(self.B.vectors), self.Z.ambient_dim).dim
        return both - self.B.dim

    def to_json(self, generators: bool = False) -> dict:
        out = {
            "degree": self.degree,
            "r": self.r,
            "hom_restricted": self.hom_restricted,
            "dims": self.dims,
            "b_in_z": self.b_in_z,
            "comparisons": [c.to_json() for c in self.comparisons],
        }
        if generators:
            out["generators"] = {
                "Z": [[str(x) for x in v] for v in self.Z.vectors],
                "B": [[str(x) for x in v] for v in self.B.vectors],
            }
        return out


def _cochain_basis(L, R, k, hom_restricted) -> list:
    if hom_restricted:
        return list(hom_cochain_space(L, R, k).vectors)
    space = CochainSpace(L.dim, R.module_dim, k)
    return [tuple(ONE if i == j else ZERO for i in range(space.dim)) for j in range(space.dim)]


def cohomology_report(L: HomLieAlgebra, R: Representation, k: int, r: int = 1, hom_restricted: bool = False) -> CohomologyReport:
    """Z^k = ker delta^k_r and B^k = im delta^{k-1}_r on full or Hom cochains."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    n, d = L.dim, R.module_dim
    ambient = CochainSpace(n, d, k).dim
    basis = _cochain_basis(L, R, k, hom_restricted)
    delta = coboundary_matrix(L, R, k, r)
    images = [delta.apply(v) for v in basis]
    if basis:
        coeffs = kernel_from_rows(
            [[images[j][i] for j in range(len(basis))] for i in range(delta.rows)], len(basis)
        )
        zvecs = [
            tuple(sum((c * basis[j][i] for j, c in enumerate(w) if c), ZERO) for i in range(ambient))
            for w in coeffs.vectors
        ]
    else:
        zvecs = []
    Z = span_basis(zvecs, ambient)
    if k == 0:
        B = SubspaceBasis(ambient, ())
    else:
        prev = coboundary_matrix(L, R, k - 1, r)
        B = span_basis([prev.apply(v) for v in _cochain_basis(L, R, k - 1, hom_restricted)], ambient)
    return CohomologyReport(k, r, hom_restricted, len(basis), Z, B, Z.contains_subspace(B))


def composition_is_zero(L: HomLieAlgebra, R: Representation, k: int, r: int) -> bool:
    """delta^k_r o delta^{k-1}_r = 0 on the full cochain space."""
    return (coboundary_matrix(L, R, k, r) @ coboundary_matrix(L, R, k - 1, r)).is_zero()


# ---------------------------------------------------------------------------
# Trivial module
# ---------------------------------------------------------------------------
def trivial_h2_predictions(m: int, dimT: int) -> list:
    return [
        ("dim Z2 = (2m^2-m) dim T", (2 * m * m - m) * dimT),
        ("dim B2 = dim T", dimT),
        ("dim H2 = (2m^2-m-1) dim T", (2 * m * m - m - 1) * dimT),
    ]


def trivial_report(H, R: Representation, r: int = 1) -> CohomologyReport:
    rep = cohomology_report(H.algebra, R, 2, r, False)
    got = [rep.Z.dim, rep.B.dim, rep.dim_H]
    rep.comparisons = [
        FormulaComparison(name, pred, val)
        for (name, pred), val in zip(trivial_h2_predictions(H.m, R.module_dim), got)
    ]
    return rep


@dataclass
class Z2Classification:
    is_cocycle: bool
    is_cocycle_by_delta: bool
    is_coboundary: bool
    is_coboundary_by_image: bool
    reasons: list

    def to_json(self) -> dict:
        return dict(self.__dict__)


def trivial_z2_classifier(H, f: Cochain, r: int = 1) -> Z2Classification:
    """Cocycle via f(z, .) = 0, coboundary via span{f_k}, and the nontriviality reasons.

    Reasons (i)-(iii) are the three standard ones; a fourth, an off-diagonal
    value f(x_i, y_j) with i != j, is reported separately because such
    cocycles are nontrivial yet meet none of the three listed conditions.
    """
    from .representations import trivial_rep

    m = H.m
    n, d = H.dim, f.module_dim
    R = trivial_rep(H.algebra, d)
    space = CochainSpace(n, d, 2)
    vec = f.to_vector(space)
    zi = n - 1
    zero = (ZERO,) * d
    val = lambda i, j: f.values.get((i, j), zero) if i < j else tuple(-x for x in f.values.get((j, i), zero))
    by_z = all(not any(val(u, zi)) for u in range(n) if u != zi)
    by_delta = not any(coboundary_matrix(H.algebra, R, 2, r).apply(vec))
    fks = []
    for c in range(d):
        entries = {(i, m + i): tuple(ONE if q == c else ZERO for q in range(d)) for i in range(m)}
        fks.append(Cochain.from_entries(n, d, 2, entries).to_vector(space))
    listed = span_basis(fks, space.dim).contains(vec)
    prev = coboundary_matrix(H.algebra, R, 1, r)
    image = span_basis([prev.col(j) for j in range(prev.cols)], space.dim).contains(vec)
    reasons = []
    if by_z and not listed:
        diag = [val(i, m + i) for i in range(m)]
        if any(diag[i] != diag[j] for i in range(m) for j in range(i + 1, m)):
            reasons.append("i")
        if any(any(val(i, j)) for i in range(m) for j in range(i + 1, m)):
            reasons.append("ii")
        if any(any(val(m + i, m + j)) for i in range(m) for j in range(i + 1, m)):
            reasons.append("iii")
        if any(any(val(i, m + j)) for i in range(m) for j in range(m) if i != j):
            reasons.append("off-diagonal x_i,y_j")
    return Z2Classification(by_z, by_delta, listed, image, reasons)


# ---------------------------------------------------------------------------
# Faithful module
# ---------------------------------------------------------------------------
def faithful_h1_prediction(m: int) -> int:
    return m * (m + 3) // 2


def faithful_h1_hom_report(H, r: int = 1, eigs=None) -> CohomologyReport:
    """Hom-restricted Z1/B1/H1 for the minimal faithful module, with the
    predictions dim B1 = dim E(1) + 1 and
    dim H1 = dim E(1) + sum over pairs {l, lambda/l} of dim E(l) dim E(lambda/l)."""
    from .representations import minimal_faithful

    R = minimal_faithful(H)
    rep = cohomology_report(H.algebra, R, 1, r, True)
    X, lam = H.X, H.lam
    eigs = eigenvalues(X) if eigs is None else [(as_scalar(v), int(mm)) for v, mm in eigs]
    values = [v for v, _ in eigs]
    dim_e1 = eigenspace(X, ONE).dim if ONE in values else 0
    pair_sum = 0
    seen = set()
    for v in values:
        w = lam / v
        if w != v and w in values and frozenset((v, w)) not in seen:
            seen.add(frozenset((v, w)))
            pair_sum += eigenspace(X, v).dim * eigenspace(X, w).dim
    rep.comparisons = [
        FormulaComparison("dim B1 = dim E(1) + 1", dim_e1 + 1, rep.B.dim),
        FormulaComparison("dim H1 = dim E(1) + sum dim E(l) dim E(lambda/l)", dim_e1 + pair_sum, rep.dim_H),
    ]
    return rep


def faithful_h1_report(H, r: int = 1) -> CohomologyReport:
    from .representations import minimal_faithful

    rep = cohomology_report(H.algebra, minimal_faithful(H), 1, r, False)
    rep.comparisons = [FormulaComparison("dim H1 = m(m+3)/2", faithful_h1_prediction(H.m), rep.dim_H)]
    return rep


# ---------------------------------------------------------------------------
# Adjoint module: closed-form B2 and Z2 generator lists
# ---------------------------------------------------------------------------
@dataclass
class ListedGenerator:
    name: str
    cochain: Cochain
    conflicts: list
    verified: bool = False

    def to_json(self) -> dict:
        return {"name": self.name, "verified": self.verified, "conflicts": self.conflicts}


@dataclass
class AdjointReport:
    r: int
    b2: list
    z2: list
    dim_B2: int
    dim_Z2: int
    rank_b2_list: int
    rank_z2_list: int
    b2_span_equal: bool
    z2_span_equal: bool

    @property
    def b2_failures(self) -> list:
        return [g.name for g in self.b2 if not g.verified]

    @property
    def z2_failures(self) -> list:
        return [g.name for g in self.z2 if not g.verified]

    @property
    def conflicts(self) -> list:
        return [(g.name, c) for g in self.b2 + self.z2 for c in g.conflicts]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "dim_B2": self.dim_B2,
            "dim_Z2": self.dim_Z2,
            "rank_b2_list": self.rank_b2_list,
            "rank_z2_list": self.rank_z2_list,
            "b2_span_equal": self.b2_span_equal,
            "z2_span_equal": self.z2_span_equal,
            "b2_failures": self.b2_failures,
            "z2_failures": self.z2_failures,
            "conflicts": [{"generator": a, "issue": b} for a, b in self.conflicts],
        }


class _Builder:
    """Accumulates (pair -> value) entries, dropping values on repeated indices."""

    def __init__(self, n: int, name: str):
        self.n = n
        self.name = name
        self.entries: dict = {}
        self.conflicts: list = []

    def put(self, i: int, j: int, value):
        if i == j:
            if any(value):
                self.conflicts.append(f"nonzero value on repeated argument {i}")
            return
        key = (i, j) if i < j else (j, i)
        v = tuple(value) if i < j else tuple(-x for x in value)
        if key in self.entries and self.entries[key] != v:
            self.conflicts.append(f"two different values assigned to pair {key}")
        self.entries[key] = v

    def build(self) -> ListedGenerator:
        return ListedGenerator(self.name, Cochain.from_entries(self.n, self.n, 2, self.entries), self.conflicts)


def _adjoint_b2_list(H, r: int) -> list:
    m, n = H.m, H.dim
    P = H.P
    Pr = P**r
    xi = lambda i: i
    yi = lambda i: m + i
    zi = n - 1
    ar = lambda j: Pr.col(j)
    neg = lambda v: tuple(-x for x in v)
    z = tuple(ONE if c == zi else ZERO for c in range(n))
    out = []
    for i in range(m):
        for j in range(m):
            b = _Builder(n, f"f_{i + 1},{j + 1}")
            b.put(xi(j), yi(i), ar(zi))
            out.append(b.build())
            b = _Builder(n, f"g_{i + 1},{j + 1}")
            b.put(xi(i), xi(j), ar(zi))
            out.append(b.build())
            b = _Builder(n, f"h_{i + 1},{j + 1}")
            b.put(yi(i), yi(j), ar(zi))
            out.append(b.build())
            b = _Builder(n, f"k_{i + 1},{j + 1}")
            b.put(xi(i), yi(j), ar(zi))
            out.append(b.build())
    for i in range(m):
        b = _Builder(n, f"l_{i + 1}")
        for p in range(m):
            b.put(xi(p), yi(p), neg(ar(xi(i))))
        b.put(yi(i), zi, neg(ar(zi)))
        out.append(b.build())
        b = _Builder(n, f"t_{i + 1}")
        for p in range(m):
            b.put(xi(p), yi(p), neg(ar(yi(i))))
        b.put(xi(i), zi, ar(zi))
        out.append(b.build())
    b = _Builder(n, "m")
    for p in range(m):
        b.put(xi(p), yi(p), neg(z))
    out.append(b.build())
    return out


def _adjoint_z2_list(H, r: int) -> list:
    m, n = H.m, H.dim
    P = H.P
    A1 = P ** (r + 1)
    Ar = P**r
    X, Y = H.X, H.Y
    xi = lambda i: i
    yi = lambda i: m + i
    zi = n - 1
    a1 = lambda j: A1.col(j)
    arz = Ar.col(zi)
    scale = lambda c, v: tuple(c * x for x in v)
    z = tuple(ONE if c == zi else ZERO for c in range(n))
    out = []

    for i in range(m):
        for j in range(m):
            for l in range(m):
                if len({i, j, l}) < 3:
                    continue
                tag = f"{i + 1},{j + 1},{l + 1}"
                specs = [
                    ("f_j,(i,l)", [((xi(i), xi(j)), a1(yi(l))), ((xi(i), xi(l)), a1(yi(j)))]),
                    ("g_i,(l,j)", [((xi(i), xi(j)), a1(yi(l))), ((xi(l), xi(j)), a1(yi(i)))]),
                    ("h_j,(i,l)", [((xi(i), xi(j)), a1(xi(l))), ((xi(j), yi(l)), a1(yi(i)))]),
                    ("k_i,(j,l)", [((xi(i), yi(l)), a1(yi(j))), ((xi(j), yi(l)), a1(yi(i)))]),
                    ("u_i,(j,l)", [((yi(j), yi(l)), a1(yi(i))), ((xi(i), yi(j)), a1(xi(l)))]),
                    ("a_l,(i,j)", [((yi(i), yi(l)), a1(xi(j))), ((yi(i), yi(j)), a1(xi(l)))]),
                    ("b_i,(j,l)", [((yi(j), yi(l)), a1(xi(i))), ((yi(i), yi(l)), a1(xi(j)))]),
                    ("c_j,(i,l)", [((xi(i), yi(l)), a1(xi(j))), ((xi(i), yi(j)), a1(xi(l)))]),
                ]
                for name, items in specs:
                    b = _Builder(n, f"{name}[i,j,l={tag}]")
                    for (p, q), v in items:
                        b.put(p, q, v)
                    out.append(b.build())

    for j in range(m):
        fam = {}
        for name in ("f", "g", "h", "k", "w", "a", "b", "c"):
            fam[name] = _Builder(n, f"{name}_{j + 1}")
        for p in range(m):
            ypj, xpj = Y[p, j], X[p, j]
            fam["f"].put(xi(j), yi(p), a1(yi(p)))
            fam["f"].put(xi(p), zi, scale(ypj, arz))
            fam["g"].put(xi(p), yi(p), a1(yi(j)))
            fam["g"].put(xi(p), zi, scale(ypj, arz))
            fam["h"].put(xi(p), xi(j), a1(xi(p)))
            fam["h"].put(xi(p), zi, scale(ypj, arz))
            fam["k"].put(xi(p), yi(j), a1(xi(p)))
            fam["k"].put(zi, yi(p), scale(xpj, arz))
            fam["w"].put(xi(p), yi(p), a1(xi(j)))
            fam["w"].put(zi, yi(p), scale(xpj, arz))
            fam["a"].put(yi(j), yi(p), a1(yi(p)))
            fam["a"].put(yi(p), zi, scale(xpj, arz))
            fam["b"].put(xi(p), yi(p), a1(xi(j)))
            fam["b"].put(zi, yi(p), scale(xpj, arz))
            fam["c"].put(yi(j), yi(p), a1(yi(p)))
            fam["c"].put(yi(p), zi, scale(xpj, arz))
        out.extend(b.build() for b in fam.values())

    for i in range(m):
        for j in range(m):
            for name, (p, q) in (("d", (xi(i), xi(j))), ("e", (xi(i), yi(j))), ("f", (yi(i), yi(j)))):
                b = _Builder(n, f"{name}_{i + 1},{j + 1}")
                b.put(p, q, z)
                out.append(b.build())
    return out


def adjoint_b2_verify(H, r: int = 1) -> AdjointReport:
    """Instantiate the closed-form B2 and Z2 generator lists for the adjoint module
    and test each entry: B2 entries for membership in im delta^1_r, Z2 entries
    for delta^2_r = 0. x_{p,j} and y_{p,j} are read as entries of X and Y."""
    from .homlie import adjoint_rep

    L = H.algebra
    R = adjoint_rep(L)
    n = L.dim
    space = CochainSpace(n, n, 2)
    d1 = coboundary_matrix(L, R, 1, r)
    d2 = coboundary_matrix(L, R, 2, r)
    B2 = span_basis([d1.col(j) for j in range(d1.cols)], space.dim)
    Z2 = kernel_from_rows([d2.row(i) for i in range(d2.rows)], space.dim)
    b2 = _adjoint_b2_list(H, r)
    z2 = _adjoint_z2_list(H, r)
    for g in b2:
        g.verified = B2.contains(g.cochain.to_vector(space))
    for g in z2:
        g.verified = not any(d2.apply(g.cochain.to_vector(space)))
    b2_span = span_basis([g.cochain.to_vector(space) for g in b2], space.dim)
    z2_span = span_basis([g.cochain.to_vector(space) for g in z2], space.dim)
    return AdjointReport(
        r,
        b2,
        z2,
        B2.dim,
        Z2.dim,
        b2_span.dim,
        z2_span.dim,
        b2_span.same_span(B2),
        z2_span.same_span(Z2),
    )


__all__ = [
    "CochainSpace",
    "Cochain",
    "coboundary_matrix",
    "coboundary",
    "hom_cochain_space",
    "FormulaComparison",
    "CohomologyReport",
    "cohomology_report",
    "composition_is_zero",
    "trivial_h2_predictions",
    "trivial_report",
    "Z2Classification",
    "trivial_z2_classifier",
    "faithful_h1_prediction",
    "faithful_h1_report",
    "faithful_h1_hom_report",
    "ListedGenerator",
    "AdjointReport",
    "adjoint_b2_verify",
]
