"""Representations (Hom-modules) of Hom-Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ShapeError, ValidationError
from .exactla import ZERO, Matrix, as_scalar, rank

MAX_WITNESSES = 10


@dataclass(frozen=True, eq=False)
class Representation:
    """Module of dimension ``module_dim`` with twist ``beta`` and ``action[i] = rho(e_i)``."""

    algebra_dim: int
    module_dim: int
    beta: Matrix
    action: tuple

    def __post_init__(self):
        d = self.module_dim
        if self.beta.shape != (d, d):
            raise ShapeError(f"beta must be {d}x{d}")
        if len(self.action) != self.algebra_dim:
            raise ShapeError(f"expected {self.algebra_dim} action matrices, got {len(self.action)}")
        for A in self.action:
            if A.shape != (d, d):
                raise ShapeError(f"action matrices must be {d}x{d}")
        object.__setattr__(self, "action", tuple(self.action))

    def rho(self, v: Sequence) -> Matrix:
        """Action of the element with coordinates ``v``."""
        d = self.module_dim
        acc = Matrix.zeros(d, d)
        for c, A in zip(v, self.action):
            c = as_scalar(c)
            if c:
                acc = acc + A * c
        return acc

    def to_json(self) -> dict:
        return {
            "module_dim": self.module_dim,
            "beta": self.beta.to_json(),
            "action": [A.to_json() for A in self.action],
        }

    @classmethod
    def from_json(cls, data: dict, algebra_dim: int) -> "Representation":
        return cls(
            algebra_dim,
            int(data["module_dim"]),
            Matrix.from_json(data["beta"]),
            tuple(Matrix.from_json(a) for a in data["action"]),
        )


@dataclass
class RepresentationReport:
    rep1_ok: bool
    rep2_ok: bool
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.rep1_ok and self.rep2_ok

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"rep1_ok": self.rep1_ok, "rep2_ok": self.rep2_ok, "witnesses": self.witnesses}


def check_representation(L, R: Representation) -> RepresentationReport:
    """Check rho(alpha x) beta = beta rho(x) and
    rho([x, y]) beta = rho(alpha x) rho(y) - rho(alpha y) rho(x) on basis elements."""
    n = L.dim
    if R.algebra_dim != n:
        raise ShapeError(f"representation is for a {R.algebra_dim}-dim algebra, algebra has dim {n}")
    lab = L.labels
    beta = R.beta
    rho_alpha = [R.rho(L.alpha.col(i)) for i in range(n)]

    fails1 = []
    for i in range(n):
        if rho_alpha[i] @ beta != beta @ R.action[i]:
            fails1.append({"kind": "rep1", "indices": [i], "basis": [lab[i]]})
            if len(fails1) >= MAX_WITNESSES:
                break

    fails2 = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = R.rho(L.bracket[i][j]) @ beta
            rhs = rho_alpha[i] @ R.action[j] - rho_alpha[j] @ R.action[i]
            if lhs != rhs:
                fails2.append({"kind": "rep2", "indices": [i, j], "basis": [lab[i], lab[j]]})
                if len(fails2) >= MAX_WITNESSES:
                    break
        if len(fails2) >= MAX_WITNESSES:
            break

    return RepresentationReport(not fails1, not fails2, fails1 + fails2)


def is_faithful(R: Representation) -> bool:
    """beta invertible and x -> rho(x) injective."""
    if not R.beta.is_invertible():
        return False
    stacked = Matrix([A.entries() for A in R.action], cols=R.module_dim**2) if R.action else None
    return stacked is None or rank(stacked) == R.algebra_dim


def trivial_rep(L, d: int) -> Representation:
    """Zero action on a d-dimensional module with beta = identity."""
    if d < 1:
        raise ShapeError("trivial module dimension must be at least 1")
    zero = Matrix.zeros(d, d)
    return Representation(L.dim, d, Matrix.identity(d), tuple(zero for _ in range(L.dim)))


def minimal_faithful(H) -> Representation:
    """The (m+2)-dimensional faithful module of a block-diagonal Heisenberg algebra.

    With module basis v_1..v_{m+2}: x_i sends v_i to v_{m+1}, y_i sends
    v_{m+2} to beta(v_i), z sends v_{m+2} to lambda v_{m+1}, and
    beta = diag(Y, lambda, 1).
    """
    if not H.is_block_diagonal():
        raise ValidationError("minimal faithful module needs alpha with T = Z = L = M = 0")
    m, lam = H.m, H.lam
    d = m + 2
    Y = H.Y
    action = []
    for i in range(m):
        action.append(Matrix.unit(d, d, m, i))
    for i in range(m):
        cols = [[ZERO] * d for _ in range(d)]
        for p in range(m):
            cols[m + 1][p] = Y[p, i]
        action.append(Matrix.from_columns(cols))
    action.append(Matrix.unit(d, d, m, m + 1, lam))
    beta = Matrix.block(
        [
            [Y, Matrix.zeros(m, 2)],
            [Matrix.zeros(2, m), Matrix.diag(lam, 1)],
        ]
    )
    return Representation(2 * m + 1, d, beta, tuple(action))


__all__ = [
    "Representation",
    "RepresentationReport",
    "check_representation",
    "is_faithful",
    "trivial_rep",
    "minimal_faithful",
]
