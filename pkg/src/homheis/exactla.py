"""Exact arithmetic over Q(i) and the dense linear algebra built on it.

Everything downstream (derivation spaces, cocycles, Darboux bases) reduces
to kernels, ranks and solves of small dense matrices, so this module keeps
the surface deliberately plain: an immutable :class:`Scalar`, an immutable
:class:`Matrix`, a :class:`SubspaceBasis`, and a handful of functions.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import FieldError, ShapeError

__all__ = [
    "Scalar",
    "Matrix",
    "SubspaceBasis",
    "as_scalar",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "span_basis",
    "char_poly",
    "poly_eval",
    "root_multiplicity",
    "rational_roots",
    "gaussian_sqrt",
    "eigenvalues",
    "generalized_eigenspaces",
    "eigenspace",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


class Scalar:
    """An element ``re + im*i`` of Q(i), stored as two reduced fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("cannot combine a Scalar real part with an imaginary part")
            self.re, self.im = re.re, re.im
            return
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floats are not exact; pass int, Fraction or str")
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "Scalar":
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    _PATTERN = re.compile(r"^\s*(-?\d+)(?:/(\d+))?(?:\+(-?\d+)(?:/(\d+))?\*i)?\s*$")

    @classmethod
    def parse(cls, text) -> "Scalar":
        """Read the canonical text form ``p/q`` or ``p/q+r/s*i``."""
        if isinstance(text, Scalar):
            return text
        if isinstance(text, int) and not isinstance(text, bool):
            return cls._make(Fraction(text), _F0)
        if not isinstance(text, str):
            raise ValueError(f"scalar must be a string, got {text!r}")
        m = cls._PATTERN.match(text)
        if m is None:
            raise ValueError(f"malformed scalar {text!r}")
        p, q, r, s = m.groups()
        if q is not None and int(q) == 0 or s is not None and int(s) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        re_part = Fraction(int(p), int(q or 1))
        im_part = Fraction(int(r), int(s or 1)) if r is not None else _F0
        return cls._make(re_part, im_part)

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not self.im and not o.im:
            return Scalar._make(self.re + o.re, _F0)
        return Scalar._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not self.im and not o.im:
            return Scalar._make(self.re - o.re, _F0)
        return Scalar._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not self.im and not o.im:
            return Scalar._make(self.re * o.re, _F0)
        a, b, c, d = self.re, self.im, o.re, o.im
        return Scalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not o:
            raise ZeroDivisionError("division by zero Scalar")
        if not self.im and not o.im:
            return Scalar._make(self.re / o.re, _F0)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are exact")
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        if not self.im:
            return Scalar._make(1 / self.re, _F0)
        norm = self.re * self.re + self.im * self.im
        return Scalar._make(self.re / norm, -self.im / norm)

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.re, -self.im)

    # -- comparison and hashing -------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self):
        return (self.re, self.im)

    # -- text -------------------------------------------------------------
    def __str__(self):
        if not self.im:
            return str(self.re)
        return f"{self.re}+{self.im}*i"

    def __repr__(self):
        return f"Scalar('{self}')"


def _coerce(x):
    if type(x) is Scalar:
        return x
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Scalar._make(Fraction(x), _F0)
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions and canonical strings to :class:`Scalar`."""
    if isinstance(x, str):
        return Scalar.parse(x)
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot convert {x!r} to an exact scalar")
    return s


ZERO = Scalar._make(_F0, _F0)
ONE = Scalar._make(_F1, _F0)
I_UNIT = Scalar._make(_F0, _F1)


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------
class Matrix:
    """Immutable dense matrix of :class:`Scalar` entries."""

    __slots__ = ("rows", "cols", "_r")

    def __init__(self, data: Iterable[Iterable] = (), cols: int | None = None):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeError("ragged rows")
            if cols is not None and cols != width:
                raise ShapeError("declared column count disagrees with data")
        else:
            width = cols or 0
        self.rows = len(rows)
        self.cols = width
        self._r = rows

    @classmethod
    def _wrap(cls, rows: tuple, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m._r = rows
        m.rows = len(rows)
        m.cols = cols
        return m

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._wrap(tuple((ZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._wrap(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def diag(cls, *values) -> "Matrix":
        vals = [as_scalar(v) for v in values]
        n = len(vals)
        return cls._wrap(
            tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls.zeros(rows or 0, 0)
        n = len(columns[0])
        cols = [[as_scalar(x) for x in c] for c in columns]
        return cls._wrap(tuple(tuple(c[i] for c in cols) for i in range(n)), len(cols))

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int, value=1) -> "Matrix":
        v = as_scalar(value)
        return cls._wrap(
            tuple(
                tuple(v if (a == i and b == j) else ZERO for b in range(cols))
                for a in range(rows)
            ),
            cols,
        )

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble from a grid of blocks with compatible shapes."""
        out = []
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ShapeError("block row heights differ")
            for i in range(height):
                out.append(tuple(x for b in brow for x in b._r[i]))
        width = sum(b.cols for b in blocks[0]) if blocks else 0
        if any(len(r) != width for r in out):
            raise ShapeError("block column widths differ")
        return cls._wrap(tuple(out), width)

    # -- access -------------------------------------------------------------
    def __getitem__(self, idx):
        i, j = idx
        return self._r[i][j]

    def row(self, i: int) -> tuple:
        return self._r[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._r)

    def to_lists(self) -> list:
        return [list(r) for r in self._r]

    def entries(self) -> list:
        """Row-major flat entry list."""
        return [x for r in self._r for x in r]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._wrap(tuple(tuple(self._r[i][j] for j in cols) for i in rows), len(cols))

    def is_zero(self) -> bool:
        return not any(x for r in self._r for x in r)

    # -- algebra ------------------------------------------------------------
    @property
    def T(self) -> "Matrix":
        if self.rows == 0:
            return Matrix._wrap(tuple(() for _ in range(self.cols)), 0)
        return Matrix._wrap(tuple(zip(*self._r)), self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._r, other._r)), self.cols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._r, other._r)), self.cols
        )

    def __neg__(self) -> "Matrix":
        return Matrix._wrap(tuple(tuple(-a for a in r) for r in self._r), self.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.__matmul__(other)
        c = as_scalar(other)
        return Matrix._wrap(tuple(tuple(a * c for a in r) for r in self._r), self.cols)

    def __rmul__(self, other):
        c = as_scalar(other)
        return Matrix._wrap(tuple(tuple(c * a for a in r) for r in self._r), self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.cols
        orows = other._r
        out = []
        for r in self._r:
            acc = [ZERO] * ocols
            for k, a in enumerate(r):
                if not a:
                    continue
                for j, b in enumerate(orows[k]):
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return Matrix._wrap(tuple(out), ocols)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product on a plain coordinate sequence."""
        if len(v) != self.cols:
            raise ShapeError("vector length does not match column count")
        out = []
        for r in self._r:
            acc = ZERO
            for a, b in zip(r, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square:
            raise ShapeError("power of a non-square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self) -> Scalar:
        if not self.is_square:
            raise ShapeError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self._r[i][i]
        return acc

    def det(self) -> Scalar:
        if not self.is_square:
            raise ShapeError("determinant of a non-square matrix")
        a = [list(r) for r in self._r]
        n = self.rows
        d = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c]), None)
            if p is None:
                return ZERO
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            piv = a[c][c]
            d = d * piv
            inv = piv.inverse()
            for i in range(c + 1, n):
                f = a[i][c]
                if not f:
                    continue
                f = f * inv
                ri, rc = a[i], a[c]
                for j in range(c + 1, n):
                    if rc[j]:
                        ri[j] = ri[j] - f * rc[j]
        return d

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self._r)]
        red, pivots = _rref_rows(aug, 2 * n, stop_col=n)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix._wrap(tuple(tuple(red[i][n:]) for i in range(n)), n)

    def rank(self) -> int:
        return rank(self)

    def is_invertible(self) -> bool:
        return self.is_square and rank(self) == self.rows

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._r == other._r

    def __hash__(self):
        return hash((self.rows, self.cols, self._r))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._r)
        return f"Matrix([{body}])"

    def to_json(self) -> list:
        return [[str(x) for x in r] for r in self._r]

    @classmethod
    def from_json(cls, data) -> "Matrix":
        if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
            raise ShapeError("matrix must be a list of rows")
        return cls(data)


# ---------------------------------------------------------------------------
# Subspaces
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class SubspaceBasis:
    """A linearly independent list of coordinate vectors in K^ambient_dim."""

    ambient_dim: int
    vectors: tuple = ()

    def __post_init__(self):
        vecs = tuple(tuple(as_scalar(x) for x in v) for v in self.vectors)
        if any(len(v) != self.ambient_dim for v in vecs):
            raise ShapeError("basis vector has the wrong length")
        object.__setattr__(self, "vectors", vecs)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def as_matrix(self) -> Matrix:
        """Vectors as the columns of an ambient_dim x dim matrix."""
        if not self.vectors:
            return Matrix.zeros(self.ambient_dim, 0)
        return Matrix.from_columns(self.vectors)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise ShapeError("vector has the wrong length")
        if not any(v):
            return True
        return _rank_rows([list(u) for u in self.vectors] + [list(v)], self.ambient_dim) == self.dim

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        return all(self.contains(v) for v in other.vectors)

    def same_span(self, other: "SubspaceBasis") -> bool:
        return self.dim == other.dim and self.contains_subspace(other)

    def coordinates(self, v: Sequence) -> tuple | None:
        """Coefficients expressing ``v`` in this basis, or None if outside the span."""
        sol = solve(self.as_matrix(), v)
        return sol


# ---------------------------------------------------------------------------
# Elimination core
# ---------------------------------------------------------------------------
def _rref_rows(a: list, ncols: int, stop_col: int | None = None):
    """In-place reduced row echelon form on a list of mutable rows.

    Pivot choice: first nonzero entry scanning columns left to right.
    Returns (rows, pivot_columns); rows beyond the rank are zero.
    """
    stop = ncols if stop_col is None else stop_col
    pivots = []
    r = 0
    nrows = len(a)
    for c in range(stop):
        if r == nrows:
            break
        p = None
        for i in range(r, nrows):
            if a[i][c]:
                p = i
                break
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        prow = a[r]
        inv = prow[c].inverse()
        if inv != ONE:
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] * inv
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if not f:
                continue
            for j in nz:
                row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return a, pivots


def _rank_rows(rows: list, ncols: int) -> int:
    _, piv = _rref_rows([list(r) for r in rows], ncols)
    return len(piv)


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows, piv = _rref_rows([list(r) for r in M._r], M.cols)
    return Matrix._wrap(tuple(tuple(r) for r in rows), M.cols), piv


def rank(M: Matrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return _rank_rows(M._r, M.cols)


def _kernel_from_rows(rows: list, ncols: int) -> list:
    red, piv = _rref_rows(rows, ncols)
    pivset = set(piv)
    free = [c for c in range(ncols) if c not in pivset]
    out = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(piv):
            x = red[r][f]
            if x:
                v[p] = -x
        out.append(tuple(v))
    return out


def kernel_basis(M: Matrix) -> SubspaceBasis:
    """Basis of {v : M v = 0}, one vector per free column in ascending order.

    Each vector has a 1 in its free column and zeros in the other free
    columns (reduced row echelon parametric form).
    """
    if M.rows == 0:
        return SubspaceBasis(
            M.cols, tuple(tuple(ONE if i == j else ZERO for i in range(M.cols)) for j in range(M.cols))
        )
    return SubspaceBasis(M.cols, tuple(_kernel_from_rows([list(r) for r in M._r], M.cols)))


def kernel_from_rows(rows: Sequence[Sequence], ncols: int) -> SubspaceBasis:
    """Kernel of the linear system whose equations are ``rows`` (sparse-friendly)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return SubspaceBasis(ncols, tuple(tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)))
    return SubspaceBasis(ncols, tuple(_kernel_from_rows(rows, ncols)))


def solve(M: Matrix, b: Sequence) -> tuple | None:
    """One solution x of M x = b (free variables set to zero), or None."""
    if len(b) != M.rows:
        raise ShapeError("right-hand side length does not match row count")
    n = M.cols
    aug = [list(r) + [as_scalar(x)] for r, x in zip(M._r, b)]
    red, piv = _rref_rows(aug, n + 1, stop_col=n)
    for r in range(len(piv), len(red)):
        if red[r][n]:
            return None
    x = [ZERO] * n
    for r, p in enumerate(piv):
        x[p] = red[r][n]
    return tuple(x)


def span_basis(vectors: Sequence[Sequence], ambient_dim: int) -> SubspaceBasis:
    """Reduced basis (RREF rows) of the span of ``vectors``."""
    rows = [[as_scalar(x) for x in v] for v in vectors if any(v)]
    if not rows:
        return SubspaceBasis(ambient_dim, ())
    red, piv = _rref_rows(rows, ambient_dim)
    return SubspaceBasis(ambient_dim, tuple(tuple(red[i]) for i in range(len(piv))))


# ---------------------------------------------------------------------------
# Polynomials and eigenvalues
# ---------------------------------------------------------------------------
def char_poly(M: Matrix) -> list[Scalar]:
    """Coefficients of det(xI - M), highest degree first (monic).

    Faddeev-LeVerrier recursion; exact because Q(i) has characteristic 0.
    """
    if not M.is_square:
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = M.rows
    coeffs = [ONE]
    Mk = Matrix.zeros(n)
    ident = Matrix.identity(n)
    c = ONE
    for k in range(1, n + 1):
        Mk = M @ (Mk + c * ident) if k > 1 else M
        c = -(Mk.trace()) / k
        coeffs.append(c)
    return coeffs


def poly_eval(coeffs: Sequence, x) -> Scalar:
    x = as_scalar(x)
    acc = ZERO
    for c in coeffs:
        acc = acc * x + c
    return acc


def _synthetic_div(coeffs: list, root: Scalar) -> tuple[list, Scalar]:
    out = []
    acc = ZERO
    for c in coeffs:
        acc = acc * root + c
        out.append(acc)
    return out[:-1], out[-1]


def root_multiplicity(coeffs: Sequence, root) -> int:
    """Multiplicity of ``root`` as a zero of the polynomial (0 if not a root)."""
    root = as_scalar(root)
    poly = list(coeffs)
    mult = 0
    while len(poly) > 1:
        q, rem = _synthetic_div(poly, root)
        if rem:
            break
        mult += 1
        poly = q
    return mult


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(coeffs: Sequence) -> list[tuple[Scalar, int]]:
    """Rational roots with multiplicities, ascending, for a polynomial over Q."""
    poly = [as_scalar(c) for c in coeffs]
    if any(not c.is_real for c in poly):
        raise FieldError("rational-root search needs rational coefficients")
    while len(poly) > 1 and not poly[0]:
        poly = poly[1:]
    found = []
    zero_mult = 0
    while len(poly) > 1 and not poly[-1]:
        poly = poly[:-1]
        zero_mult += 1
    if zero_mult:
        found.append((ZERO, zero_mult))
    if len(poly) <= 1:
        return found
    den = 1
    for c in poly:
        den = den * c.re.denominator // math.gcd(den, c.re.denominator)
    ints = [int(c.re * den) for c in poly]
    lead, const = ints[0], ints[-1]
    candidates = set()
    for p in _divisors(const):
        for q in _divisors(lead):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for cand in sorted(candidates):
        root = Scalar._make(cand, _F0)
        mult = root_multiplicity(poly, root)
        if mult:
            found.append((root, mult))
    found.sort(key=lambda t: t[0].sort_key())
    return found


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def gaussian_sqrt(x) -> Scalar | None:
    """A square root of ``x`` inside Q(i), or None if there is none."""
    x = as_scalar(x)
    a, b = x.re, x.im
    if not b:
        r = _rational_sqrt(a)
        if r is not None:
            return Scalar._make(r, _F0)
        r = _rational_sqrt(-a)
        if r is not None:
            return Scalar._make(_F0, r)
        return None
    modulus = _rational_sqrt(a * a + b * b)
    if modulus is None:
        return None
    re_sq = (a + modulus) / 2
    u = _rational_sqrt(re_sq)
    if u is None or not u:
        return None
    v = b / (2 * u)
    root = Scalar._make(u, v)
    return root if root * root == x else None


def eigenvalues(M: Matrix) -> list[tuple[Scalar, int]]:
    """All eigenvalues with algebraic multiplicity, sorted by (re, im).

    Rational roots are discovered automatically. A leftover quadratic factor
    is solved with an exact square root in Q(i); anything else must be
    supplied by the caller.
    """
    chi = char_poly(M)
    if any(not c.is_real for c in chi):
        raise FieldError("characteristic polynomial has non-rational coefficients; supply eigenvalues")
    found = rational_roots(chi)
    total = sum(m for _, m in found)
    if total == M.rows:
        return found
    rest = chi
    for root, mult in found:
        for _ in range(mult):
            rest, _ = _synthetic_div(rest, root)
    if len(rest) == 3:
        a, b, c = rest
        disc = gaussian_sqrt(b * b - 4 * a * c)
        if disc is not None:
            r1 = (-b + disc) / (2 * a)
            r2 = (-b - disc) / (2 * a)
            found += [(r1, 1), (r2, 1)] if r1 != r2 else [(r1, 2)]
            found.sort(key=lambda t: t[0].sort_key())
            return found
    raise FieldError(
        f"only {total} of {M.rows} eigenvalues lie in Q(i) by rational-root search; supply the rest"
    )


def _check_eigs(M: Matrix, eigs) -> list[tuple[Scalar, int]]:
    chi = char_poly(M)
    checked = []
    for value, mult in eigs:
        value = as_scalar(value)
        actual = root_multiplicity(chi, value)
        if actual == 0:
            raise FieldError(f"{value} is not an eigenvalue")
        if actual != mult:
            raise FieldError(f"eigenvalue {value} has algebraic multiplicity {actual}, not {mult}")
        checked.append((value, mult))
    if sum(m for _, m in checked) > M.rows:
        raise FieldError("multiplicities exceed the matrix size")
    return checked


def generalized_eigenspaces(M: Matrix, eigs=None) -> dict:
    """Map eigenvalue -> basis of ker (M - value*I)^multiplicity."""
    if not M.is_square:
        raise ShapeError("generalized eigenspaces of a non-square matrix")
    pairs = eigenvalues(M) if eigs is None else _check_eigs(M, eigs)
    ident = Matrix.identity(M.rows)
    out = {}
    for value, mult in pairs:
        space = kernel_basis((M - value * ident) ** mult)
        if space.dim != mult:
            raise FieldError(f"generalized eigenspace of {value} has dimension {space.dim}, expected {mult}")
        out[value] = space
    return out


def eigenspace(M: Matrix, value) -> SubspaceBasis:
    return kernel_basis(M - as_scalar(value) * Matrix.identity(M.rows))


def vec_combine(pairs: Iterable[tuple[Scalar, Sequence]], n: int) -> tuple:
    """Linear combination sum(c * v) of coordinate vectors."""
    acc = [ZERO] * n
    for c, v in pairs:
        if not c:
            continue
        for i, x in enumerate(v):
            if x:
                acc[i] = acc[i] + c * x
    return tuple(acc)


def unit_vector(n: int, i: int) -> tuple:
    return tuple(ONE if j == i else ZERO for j in range(n))
