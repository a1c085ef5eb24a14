"""Allison-Hein conservative algebras and the Allison-Kantor Lie algebra F(A).

The AK basis is ordered F1, F2, F0, F-1, F-2:

    (e_i, 0) for every basis vector of A,
    (0, s)   for the RREF basis of the skew part S,
    the grade-0 operators (T_{e_i} first, then a complement inside Instr(A)),
    hat(e_i, 0), hat(0, s).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg as la
from .algebra import AlgebraWithInvolution, DimensionMismatch
from .analysis import derivation_algebra
from .field import ZERO
from .lie import LieAlgebra

__all__ = [
    "ConservativeAlgebra",
    "allison_hein",
    "OperatorTransforms",
    "operator_transforms",
    "instr",
    "F0NotClosed",
    "ClosureDiverged",
    "GradedLieAlgebra",
    "ak_construct",
]


class F0NotClosed(ValueError):
    pass


class ClosureDiverged(RuntimeError):
    pass


@dataclass(frozen=True)
class ConservativeAlgebra:
    dim: int
    table: tuple  # table[i][j] = coordinates of e_i * e_j

    def multiply(self, x, y) -> tuple:
        out = la.zero_vec(self.dim)
        for i, j in itertools.product(range(self.dim), repeat=2):
            if x[i] and y[j]:
                out = la.vadd(out, la.vscale(x[i] * y[j], self.table[i][j]))
        return out

    def as_algebra(self) -> AlgebraWithInvolution:
        """The same product with the identity map as a (formal) involution."""
        return AlgebraWithInvolution.from_table(self.table, la.identity(self.dim))


def allison_hein(a: AlgebraWithInvolution) -> ConservativeAlgebra:
    """``x * y = T_x(y)``."""
    n = a.dim
    table = tuple(
        tuple(a.t_apply(a.basis(i), a.basis(j)) for j in range(n)) for i in range(n)
    )
    return ConservativeAlgebra(n, table)


@dataclass(frozen=True)
class OperatorTransforms:
    delta: tuple
    eps: tuple
    eps_delta: tuple
    bar: tuple


def _delta(a: AlgebraWithInvolution, e) -> tuple:
    return la.madd(e, a.right(a.involve(la.column(e, a.unit_index))))


def _eps(a: AlgebraWithInvolution, e) -> tuple:
    u = la.column(e, a.unit_index)
    return la.msub(e, a.t_operator(la.vadd(u, a.involve(u))))


def operator_transforms(a: AlgebraWithInvolution, e) -> OperatorTransforms:
    e = la.mat(e)
    if len(e) != a.dim:
        raise DimensionMismatch("operator has the wrong size")
    eps = _eps(a, e)
    bar = la.matmul(a.sigma, la.matmul(e, a.sigma))
    return OperatorTransforms(_delta(a, e), eps, _delta(a, eps), bar)


def _matrix_span(mats, n) -> la.Subspace:
    return la.Subspace(n * n, [la.flatten(m) for m in mats])


def instr(a: AlgebraWithInvolution) -> list:
    """Basis of Instr(A): commutator closure of all ``V_{x,y}`` and ``L_s L_r``.

    The basis starts with ``T_{e_1}, ..., T_{e_n}``; when these do not span,
    it continues with the RREF basis of ``Instr(A) ∩ barDer(A)`` and finally
    with RREF vectors of whatever is still missing.
    """
    n = a.dim
    e = [a.basis(i) for i in range(n)]
    skew = a.hs_split().s_basis
    gens = [a.v_operator(x, y) for x in e for y in e]
    gens += [la.matmul(a.left(s), a.left(r)) for s in skew for r in skew]
    span = _matrix_span(gens, n)
    for _ in range(n * n + 1):
        mats = [la.unflatten(v, n) for v in span.basis]
        brackets = [la.commutator(x, y) for x, y in itertools.combinations(mats, 2)]
        bigger = span.sum(_matrix_span(brackets, n))
        if bigger.dim == span.dim:
            break
        span = bigger
    else:
        raise ClosureDiverged("Instr(A) closure did not stabilise")

    basis = [a.t_operator(x) for x in e]
    cur = _matrix_span(basis, n)
    if cur.dim != len(basis):
        raise F0NotClosed("T_{e_i} are linearly dependent")
    if cur.dim < span.dim:
        inner = span.intersection(derivation_algebra(a, True))
        for v in inner.basis:
            if not cur.contains(v):
                basis.append(la.unflatten(v, n))
                cur = _matrix_span(basis, n)
        for v in span.basis:
            if not cur.contains(v):
                basis.append(la.unflatten(v, n))
                cur = _matrix_span(basis, n)
    if not span.contains_subspace(cur) or cur.dim != span.dim:
        raise F0NotClosed("grade-0 basis does not match Instr(A)")
    return basis


@dataclass(eq=False)
class GradedLieAlgebra(LieAlgebra):
    grades: tuple = ()
    provenance: tuple = ()
    meta: dict = field(default_factory=dict)

    def grading_violations(self) -> list:
        """Basis pairs whose bracket leaves the expected grade component."""
        bad = []
        for i, j in itertools.combinations(range(self.dim), 2):
            target = self.grades[i] + self.grades[j]
            v = self.bracket_basis(i, j)
            for k, c in enumerate(v):
                if c and self.grades[k] != target:
                    bad.append((i, j))
                    break
        return bad


def _fmt(v) -> str:
    terms = [f"{c}*e{k + 1}" for k, c in enumerate(v) if c]
    return "+".join(terms) if terms else "0"


def ak_construct(a: AlgebraWithInvolution) -> GradedLieAlgebra:
    """The 5-graded Lie algebra ``F(A)`` with the basis order described above."""
    n = a.dim
    e = [a.basis(i) for i in range(n)]
    split = a.hs_split()
    skew = list(split.s_basis)
    skew_space = la.Subspace(n, skew)
    m = len(skew)
    f0 = instr(a)
    f = len(f0)
    f0_cols = la.transpose(tuple(la.flatten(x) for x in f0))

    for x in f0:
        for t in (_delta(a, x), _delta(a, _eps(a, x))):
            for s in skew:
                if not skew_space.contains(la.matvec(t, s)):
                    raise F0NotClosed("grade-0 operator does not stabilise S")

    o1, o2, o0, om1, om2 = 0, n, n + m, n + m + f, 2 * n + m + f
    dim = 2 * n + 2 * m + f

    # an element is (x1, s2, E, x_1, s_2): A-vectors except E, a matrix
    def parts_of(i):
        z = la.zero_vec(n)
        zm = la.zeros(n)
        if i < o2:
            return (e[i], z, zm, z, z)
        if i < o0:
            return (z, skew[i - o2], zm, z, z)
        if i < om1:
            return (z, z, f0[i - o0], z, z)
        if i < om2:
            return (z, z, zm, e[i - om1], z)
        return (z, z, zm, z, skew[i - om2])

    def coords(p) -> tuple:
        x1, s2, mat, xm1, sm2 = p
        out = [ZERO] * dim
        out[o1:o2] = x1
        c2 = skew_space.coordinates(s2)
        cm2 = skew_space.coordinates(sm2)
        if c2 is None or cm2 is None:
            raise F0NotClosed("grade +-2 component left S")
        out[o2:o0] = c2
        if any(la.flatten(mat)):
            c0 = la.solve(f0_cols, la.flatten(mat))
            if c0 is None:
                raise F0NotClosed("bracket left Instr(A)")
            out[o0:om1] = c0
        out[om1:om2] = xm1
        out[om2:] = cm2
        return tuple(out)

    mul, bar = a.multiply, a.involve
    z, zm = la.zero_vec(n), la.zeros(n)

    def skew_pair(x, y):
        return la.vsub(mul(x, bar(y)), mul(y, bar(x)))

    def bracket(i, j):
        gi = grades[i]
        gj = grades[j]
        if (gj == 0 and gi != 0) or (gi < 0 < gj):
            return tuple(-c for c in bracket(j, i))
        p, q = parts_of(i), parts_of(j)
        if gi == 0 and gj == 0:
            return coords((z, z, la.commutator(p[2], q[2]), z, z))
        if gi == 0:
            mat = p[2]
            if gj > 0:
                return coords((la.matvec(mat, q[0]), la.matvec(_delta(a, mat), q[1]), zm, z, z))
            ep = _eps(a, mat)
            return coords((z, z, zm, la.matvec(ep, q[3]), la.matvec(_delta(a, ep), q[4])))
        if gi > 0 and gj > 0:
            return coords((z, skew_pair(p[0], q[0]), zm, z, z))
        if gi > 0 and gj < 0:
            x, s, y, r = p[0], p[1], q[3], q[4]
            mat = la.madd(a.v_operator(x, y), la.matmul(a.left(s), a.left(r)))
            return coords((mul(s, y), z, mat, la.vscale(-1, mul(r, x)), z))
        # both negative
        return coords((z, z, zm, z, skew_pair(p[3], q[3])))

    grades = tuple([1] * n + [2] * m + [0] * f + [-1] * n + [-2] * m)
    table = {}
    for i, j in itertools.combinations(range(dim), 2):
        v = bracket(i, j)
        if any(v):
            table[(i, j)] = v
    prov = (
        [f"({_fmt(x)}, 0)" for x in e]
        + [f"(0, {_fmt(s)})" for s in skew]
        + [f"T_e{k + 1}" for k in range(n)]
        + [f"D[{_fmt(la.flatten(x))}]" for x in f0[n:]]
        + [f"hat({_fmt(x)}, 0)" for x in e]
        + [f"hat(0, {_fmt(s)})" for s in skew]
    )
    return GradedLieAlgebra(dim, table, grades=grades, provenance=tuple(prov),
                            meta={"f0": f0, "label": a.label})
