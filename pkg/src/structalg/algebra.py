"""Finite-dimensional unital algebras with involution.

An algebra is a dense structure-constant tensor ``c[i][j]`` (the coordinate
vector of ``e_i e_j``) plus the matrix ``sigma`` of the involution.  All
linear maps use the column convention of :mod:`structalg.linalg`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg as la
from .field import ZERO

__all__ = [
    "AlgebraWithInvolution",
    "HSSplit",
    "DimensionMismatch",
    "InvolutionNotDiagonalizable",
]

DimensionMismatch = la.DimensionMismatch


class InvolutionNotDiagonalizable(ValueError):
    pass


@dataclass(frozen=True)
class HSSplit:
    h_basis: tuple
    s_basis: tuple

    @property
    def type(self) -> tuple[int, int]:
        return (len(self.h_basis), len(self.s_basis))


@dataclass(frozen=True, eq=False)
class AlgebraWithInvolution:
    dim: int
    table: tuple  # table[i][j] = coordinates of e_i e_j
    sigma: tuple  # column convention
    unit_index: int = 0
    label: str | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_table(cls, table, sigma, unit_index: int = 0, label: str | None = None):
        n = len(table)
        t = tuple(tuple(la.vec(table[i][j]) for j in range(n)) for i in range(n))
        for row in t:
            if len(row) != n or any(len(v) != n for v in row):
                raise DimensionMismatch("structure constants must form an n x n x n tensor")
        s = la.mat(sigma)
        if len(s) != n or any(len(r) != n for r in s):
            raise DimensionMismatch("involution matrix must be n x n")
        return cls(n, t, s, unit_index, label)

    @classmethod
    def from_products(cls, dim: int, products: dict, sigma_diag: Sequence, label=None):
        """Build a unital algebra from its non-unit products.

        ``products`` maps ``(i, j)`` (0-based) to a coordinate vector; every
        product not listed, and not involving ``e_1``, is zero.
        """
        zero = [0] * dim
        table = [[list(zero) for _ in range(dim)] for _ in range(dim)]
        for i in range(dim):
            table[0][i][i] = 1
            table[i][0][i] = 1
        for (i, j), v in products.items():
            table[i][j] = list(v)
        return cls.from_table(table, la.diag(sigma_diag), 0, label)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraWithInvolution)
            and self.dim == other.dim
            and self.table == other.table
            and self.sigma == other.sigma
            and self.unit_index == other.unit_index
        )

    def __hash__(self):
        return hash((self.dim, self.table, self.sigma))

    def with_involution(self, sigma, label=None) -> AlgebraWithInvolution:
        return AlgebraWithInvolution(self.dim, self.table, la.mat(sigma), self.unit_index, label)

    # -- elements --------------------------------------------------------
    def basis(self, i: int) -> tuple:
        return la.unit_vec(self.dim, i)

    def element(self, coords) -> tuple:
        v = la.vec(coords)
        self._check(v)
        return v

    @property
    def unit(self) -> tuple:
        return self.basis(self.unit_index)

    def _check(self, *xs):
        for x in xs:
            if len(x) != self.dim:
                raise DimensionMismatch(f"element of length {len(x)} in a {self.dim}-dim algebra")

    # -- products --------------------------------------------------------
    def multiply(self, x, y) -> tuple:
        self._check(x, y)
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            xi = x[i]
            if not xi:
                continue
            row = self.table[i]
            for j in range(n):
                yj = y[j]
                if not yj:
                    continue
                c = xi * yj
                for k, ck in enumerate(row[j]):
                    if ck:
                        out[k] = out[k] + c * ck
        return tuple(out)

    def involve(self, x) -> tuple:
        self._check(x)
        return la.matvec(self.sigma, x)

    def _map(self, f) -> tuple:
        return la.from_columns([f(self.basis(j)) for j in range(self.dim)])

    def left(self, x) -> tuple:
        return self._map(lambda z: self.multiply(x, z))

    def right(self, x) -> tuple:
        return self._map(lambda z: self.multiply(z, x))

    def t_apply(self, x, z) -> tuple:
        xb = self.involve(x)
        return la.vsub(la.vadd(self.multiply(x, z), self.multiply(z, x)), self.multiply(z, xb))

    def v_apply(self, x, y, z) -> tuple:
        xb, yb = self.involve(x), self.involve(y)
        m = self.multiply
        return la.vsub(la.vadd(m(m(x, yb), z), m(m(z, yb), x)), m(m(z, xb), y))

    def operator(self, kind: str, x) -> tuple:
        """Matrix of ``L_x``, ``R_x`` or ``T_x``."""
        x = la.vec(x)
        self._check(x)
        if kind == "L":
            return self.left(x)
        if kind == "R":
            return self.right(x)
        if kind == "T":
            return self._map(lambda z: self.t_apply(x, z))
        raise ValueError(f"unknown operator kind {kind!r}")

    def t_operator(self, x) -> tuple:
        return self.operator("T", x)

    def v_operator(self, x, y) -> tuple:
        x, y = la.vec(x), la.vec(y)
        self._check(x, y)
        return self._map(lambda z: self.v_apply(x, y, z))

    # -- the structurable identity ----------------------------------------
    def id_defect(self, x, y, z, t) -> tuple:
        """Value of the expanded 36-term identity ``ID(x, y, z, t)``."""
        self._check(x, y, z, t)
        m, b = self.multiply, self.involve
        xb, yb, zb = b(x), b(y), b(z)
        first = [
            (+1, m(z, m(m(x, yb), t))),
            (+1, m(z, m(m(t, yb), x))),
            (-1, m(z, m(m(t, xb), y))),
            (+1, m(m(m(x, yb), t), z)),
            (+1, m(m(m(t, yb), x), z)),
            (-1, m(m(m(t, xb), y), z)),
            (-1, m(m(m(x, yb), t), zb)),
            (-1, m(m(m(t, yb), x), zb)),
            (+1, m(m(m(t, xb), y), zb)),
            (-1, m(m(x, yb), m(z, t))),
            (-1, m(m(x, yb), m(t, z))),
            (+1, m(m(x, yb), m(t, zb))),
            (-1, m(m(m(z, t), yb), x)),
            (-1, m(m(m(t, z), yb), x)),
            (+1, m(m(m(t, zb), yb), x)),
            (+1, m(m(m(z, t), xb), y)),
            (+1, m(m(m(t, z), xb), y)),
            (-1, m(m(m(t, zb), xb), y)),
        ]
        second = [
            (+1, m(m(m(z, x), yb), t)),
            (+1, m(m(m(x, z), yb), t)),
            (-1, m(m(m(x, zb), yb), t)),
            (+1, m(m(t, yb), m(z, x))),
            (+1, m(m(t, yb), m(x, z))),
            (-1, m(m(t, yb), m(x, zb))),
            (-1, m(m(t, m(xb, zb)), y)),
            (-1, m(m(t, m(zb, xb)), y)),
            (+1, m(m(t, m(z, xb)), y)),
            (-1, m(m(x, m(yb, z)), t)),
            (-1, m(m(x, m(z, yb)), t)),
            (+1, m(m(x, m(zb, yb)), t)),
            (-1, m(m(t, m(yb, z)), x)),
            (-1, m(m(t, m(z, yb)), x)),
            (+1, m(m(t, m(zb, yb)), x)),
            (+1, m(m(t, xb), m(zb, y))),
            (+1, m(m(t, xb), m(y, zb))),
            (-1, m(m(t, xb), m(y, z))),
        ]
        out = la.zero_vec(self.dim)
        for sign, v in first:
            out = la.vadd(out, v) if sign > 0 else la.vsub(out, v)
        for sign, v in second:
            out = la.vsub(out, v) if sign > 0 else la.vadd(out, v)
        return out

    def id_operator_form(self, x, y, z, t) -> tuple:
        """``[T_z, V_{x,y}](t) - V_{T_z x, y}(t) + V_{x, T_{zbar} y}(t)``, the unexpanded identity."""
        T, V = self.t_apply, self.v_apply
        zb = self.involve(z)
        lhs = la.vsub(T(z, V(x, y, t)), V(x, y, T(z, t)))
        rhs = la.vsub(V(T(z, x), y, t), V(x, T(zb, y), t))
        return la.vsub(lhs, rhs)

    def structurable_failures(self, limit: int | None = None) -> list:
        """Basis quadruples ``(i, j, k, l)`` on which ``ID`` does not vanish."""
        e = [self.basis(i) for i in range(self.dim)]
        bad = []
        for q in itertools.product(range(self.dim), repeat=4):
            d = self.id_defect(*(e[i] for i in q))
            if any(d):
                bad.append((q, d))
                if limit is not None and len(bad) >= limit:
                    break
        return bad

    def is_structurable(self) -> bool:
        """Unit law and involution axioms hold, and ``ID`` vanishes on basis quadruples.

        The expanded identity is derived using that the involution reverses
        products, so it is only meaningful when the axioms hold.
        """
        key = "structurable"
        if key not in self._cache:
            self._cache[key] = self.is_well_formed() and not self.structurable_failures(limit=1)
        return self._cache[key]

    # -- well-formedness -------------------------------------------------
    def problems(self) -> list[str]:
        """Violations of the unit law and the involution axioms."""
        out = []
        e = [self.basis(i) for i in range(self.dim)]
        u = self.unit
        for i in range(self.dim):
            if self.multiply(u, e[i]) != e[i] or self.multiply(e[i], u) != e[i]:
                out.append(f"unit law fails at e{i + 1}")
        if la.matmul(self.sigma, self.sigma) != la.identity(self.dim):
            out.append("involution does not square to the identity")
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = self.involve(self.multiply(e[i], e[j]))
                rhs = self.multiply(self.involve(e[j]), self.involve(e[i]))
                if lhs != rhs:
                    out.append(f"involution is not an anti-automorphism on (e{i + 1}, e{j + 1})")
        return out

    def is_well_formed(self) -> bool:
        return not self.problems()

    def hs_split(self) -> HSSplit:
        n = self.dim
        if la.matmul(self.sigma, self.sigma) != la.identity(n):
            raise InvolutionNotDiagonalizable("sigma^2 != identity")
        h = la.nullspace(la.msub(self.sigma, la.identity(n)))
        s = la.nullspace(la.madd(self.sigma, la.identity(n)))
        hs = la.Subspace(n, h).basis
        ss = la.Subspace(n, s).basis
        if len(hs) + len(ss) != n:
            raise InvolutionNotDiagonalizable("eigenspaces of sigma do not span")
        return HSSplit(hs, ss)

    @property
    def type(self) -> tuple[int, int]:
        return self.hs_split().type

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

