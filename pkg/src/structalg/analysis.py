"""Linear analysis of an algebra with involution.

Derivations, functional identities of degree 2 and subalgebra predicates
are all nullspace or rank computations over Q(i).  Automorphism families
are certified on sampled parameters.  ``enumerate_subalgebras`` walks a
finite grid of RREF candidates; numpy screens the grid in floating point
and every surviving candidate is confirmed exactly.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from . import linalg as la
from .algebra import AlgebraWithInvolution, DimensionMismatch
from .field import GR, ONE, ZERO, as_gr
from .linalg import Subspace
from .registry import verify_isomorphism

__all__ = [
    "SingularSample",
    "linear_solution_space",
    "derivation_algebra",
    "derivation_matrices",
    "MatrixTemplate",
    "verify_automorphism_family",
    "family_samples",
    "WORDS",
    "IDENTITIES",
    "identity_value",
    "functional_identity_space",
    "SubspaceReport",
    "subspace_checks",
    "grid_values",
    "enumerate_subalgebras",
    "FamilySpec",
    "family_membership",
]


class SingularSample(ValueError):
    pass


def linear_solution_space(f: Callable[[tuple], Sequence], nvars: int) -> Subspace:
    """Kernel of a linear map given as a Python function on coordinate tuples."""
    cols = [tuple(f(la.unit_vec(nvars, i))) for i in range(nvars)]
    m = la.transpose(tuple(cols))
    return Subspace(nvars, la.nullspace(m, nvars))


# -- derivations ------------------------------------------------------------


def derivation_algebra(a: AlgebraWithInvolution, bar_constrained: bool = False) -> Subspace:
    """``Der(A)`` (or ``barDer(A)``) as a subspace of row-major flattened matrices."""
    key = ("der", bar_constrained)
    if key in a._cache:
        return a._cache[key]
    n = a.dim
    e = [a.basis(i) for i in range(n)]

    def residual(flat):
        d = la.unflatten(flat, n)
        out = []
        for i in range(n):
            di = la.column(d, i)
            for j in range(n):
                dj = la.column(d, j)
                lhs = la.matvec(d, a.table[i][j])
                rhs = la.vadd(a.multiply(di, e[j]), a.multiply(e[i], dj))
                out.extend(la.vsub(lhs, rhs))
        if bar_constrained:
            out.extend(la.flatten(la.commutator(d, a.sigma)))
        return out

    space = linear_solution_space(residual, n * n)
    mats = [la.unflatten(v, n) for v in space.basis]
    for d in mats:
        assert not any(la.column(d, a.unit_index)), "a derivation must kill the unit"
    for x, y in itertools.combinations(mats, 2):
        assert space.contains(la.flatten(la.commutator(x, y))), "Der(A) not closed under [,]"
    a._cache[key] = space
    return space


def derivation_matrices(a: AlgebraWithInvolution, bar_constrained: bool = False) -> list:
    return [la.unflatten(v, a.dim) for v in derivation_algebra(a, bar_constrained).basis]


# -- automorphism families ----------------------------------------------------

_TERM = re.compile(r"^(?P<sign>[+-]?)(?P<name>[a-z]+)(?:\^(?P<pow>\d+))?$")


@dataclass(frozen=True)
class MatrixTemplate:
    """Matrix whose entries are constants or monomials ``[-]name[^k]`` in parameters."""

    entries: tuple  # rows of strings

    @classmethod
    def parse(cls, rows: Iterable[Iterable[str]]) -> MatrixTemplate:
        return cls(tuple(tuple(str(x) for x in r) for r in rows))

    @property
    def params(self) -> tuple[str, ...]:
        names = []
        for row in self.entries:
            for x in row:
                m = _TERM.match(x.replace(" ", ""))
                if m and m.group("name") != "i" and m.group("name") not in names:
                    names.append(m.group("name"))
        return tuple(names)

    def evaluate(self, values: dict) -> tuple:
        out = []
        for row in self.entries:
            new = []
            for x in row:
                s = x.replace(" ", "")
                m = _TERM.match(s)
                if m and m.group("name") != "i":
                    v = as_gr(values[m.group("name")]) ** int(m.group("pow") or 1)
                    new.append(-v if m.group("sign") == "-" else v)
                else:
                    new.append(as_gr(s))
            out.append(tuple(new))
        return tuple(out)


def verify_automorphism_family(
    a: AlgebraWithInvolution,
    family: MatrixTemplate,
    samples: Iterable[dict],
    bar: bool = False,
) -> bool:
    """True iff every sampled member is an automorphism (commuting with the involution if ``bar``)."""
    for values in samples:
        phi = family.evaluate(values)
        if not la.is_invertible(phi):
            raise SingularSample(f"sample {values} gives a singular matrix")
        if not verify_isomorphism(a, a, phi, check_involution=bar):
            return False
    return True


def family_samples(family: MatrixTemplate, values: Sequence = (1, 2, 3, "i", "-1/2", "1+i"),
                   signs: Sequence = (1, -1)) -> list[dict]:
    """Deterministic invertible parameter samples; a parameter named ``s`` is a sign."""
    names = family.params
    pools = [signs if n == "s" else values for n in names]
    out = []
    for combo in itertools.product(*pools):
        d = dict(zip(names, combo))
        if la.is_invertible(family.evaluate(d)):
            out.append(d)
    return out


# -- functional identities ----------------------------------------------------

WORDS = ("xy", "yx", "xbar y", "x ybar", "ybar x", "y xbar", "bar(xy)", "bar(yx)")

IDENTITIES = {
    "f1": (1, -1, 0, 0, 0, 0, -1, 1),
    "f2": (0, 0, 1, 1, -1, -1, 0, 0),
    "g1": (1, -1, 1, 0, 0, -1, 0, 0),
    "g2": (1, -1, 0, 1, -1, 0, 0, 0),
    "g3": (1, -1, 0, 0, 0, 0, 1, -1),
    "F": (1, 0, -1, -1, 0, 0, 1, 0),
}


def _words(a: AlgebraWithInvolution, x, y) -> list:
    m, b = a.multiply, a.involve
    xb, yb = b(x), b(y)
    return [m(x, y), m(y, x), m(xb, y), m(x, yb), m(yb, x), m(y, xb), b(m(x, y)), b(m(y, x))]


def identity_value(a: AlgebraWithInvolution, coeffs: Sequence, x, y) -> tuple:
    return la.lincomb(la.vec(coeffs), _words(a, x, y))


def functional_identity_space(a: AlgebraWithInvolution) -> Subspace:
    """Coefficient vectors (in ``WORDS`` order) of degree-2 identities of ``a``."""
    if "fid" in a._cache:
        return a._cache["fid"]
    e = [a.basis(i) for i in range(a.dim)]
    words = {(i, j): _words(a, e[i], e[j]) for i in range(a.dim) for j in range(a.dim)}

    def residual(c):
        out = []
        for ws in words.values():
            out.extend(la.lincomb(c, ws))
        return out

    space = linear_solution_space(residual, len(WORDS))
    a._cache["fid"] = space
    return space


# -- subspaces ------------------------------------------------------------------


@dataclass(frozen=True)
class SubspaceReport:
    is_subalgebra: bool
    is_left_ideal: bool
    is_right_ideal: bool
    is_ideal: bool
    is_bar_closed: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def subspace_checks(a: AlgebraWithInvolution, s: Subspace) -> SubspaceReport:
    if s.ambient_dim != a.dim:
        raise DimensionMismatch("subspace lives in a different space")
    e = [a.basis(i) for i in range(a.dim)]
    sub = all(s.contains(a.multiply(u, v)) for u in s.basis for v in s.basis)
    left = all(s.contains(a.multiply(x, v)) for x in e for v in s.basis)
    right = all(s.contains(a.multiply(v, x)) for x in e for v in s.basis)
    bar = all(s.contains(a.involve(v)) for v in s.basis)
    return SubspaceReport(sub, left, right, left and right, bar)


def grid_values(bound: int) -> list[GR]:
    """``p/q + (r/s) i`` with ``|p|, |r| <= bound`` and ``1 <= q, s <= bound``."""
    reals = sorted({Fraction(p, q) for p in range(-bound, bound + 1) for q in range(1, bound + 1)})
    return [GR(r, s) for r in reals for s in reals]


def _rref_shapes(n: int, k: int):
    for pivots in itertools.combinations(range(n), k):
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        yield pivots, free


def enumerate_subalgebras(a: AlgebraWithInvolution, k: int, grid_bound: int) -> list[Subspace]:
    """All ``k``-dim subalgebras whose RREF entries lie on the grid of ``grid_bound``."""
    if grid_bound < 1:
        raise ValueError("grid_bound must be >= 1")
    n = a.dim
    grid = grid_values(grid_bound)
    gnum = np.array([complex(float(g.re), float(g.im)) for g in grid])
    c = np.array([[[complex(float(x.re), float(x.im)) for x in a.table[i][j]] for j in range(n)]
                  for i in range(n)])
    found = []
    for pivots, free in _rref_shapes(n, k):
        nf = len(free)
        idx = np.indices((len(grid),) * nf).reshape(nf, -1).T if nf else np.zeros((1, 0), int)
        b = np.zeros((len(idx), k, n), dtype=complex)
        for r, p in enumerate(pivots):
            b[:, r, p] = 1
        for f, (r, col) in enumerate(free):
            b[:, r, col] = gnum[idx[:, f]]
        ok = np.ones(len(idx), dtype=bool)
        piv = list(pivots)
        for r1 in range(k):
            for r2 in range(k):
                w = np.einsum("ni,nj,ijk->nk", b[:, r1], b[:, r2], c)
                resid = w - np.einsum("nr,nrk->nk", w[:, piv], b)
                ok &= np.abs(resid).max(axis=1) < 1e-9
        for row in np.nonzero(ok)[0]:
            rows = [[ZERO] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = ONE
            for f, (r, col) in enumerate(free):
                rows[r][col] = grid[idx[row, f]]
            s = Subspace(n, rows)
            if subspace_checks(a, s).is_subalgebra:
                found.append(s)
    return sorted(set(found), key=_subspace_key)


def _subspace_key(s: Subspace):
    return (s.pivots, tuple(x.sort_key() for v in s.basis for x in v))


# -- parametric families of subspaces -------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Span of vectors ``const + sum(param * direction)``, at most two parameters."""

    vectors: tuple  # each: (const tuple, {param: direction tuple})
    label: str = ""

    def __post_init__(self):
        if len(self.params) > 2:
            raise ValueError("a family carries at most two parameters")

    @property
    def params(self) -> tuple[str, ...]:
        names = []
        for _, dirs in self.vectors:
            for p in dirs:
                if p not in names:
                    names.append(p)
        return tuple(names)

    @property
    def ambient_dim(self) -> int:
        return len(self.vectors[0][0])

    def at(self, values: dict) -> Subspace:
        vs = []
        for const, dirs in self.vectors:
            v = la.vec(const)
            for p, d in dirs.items():
                v = la.vadd(v, la.vscale(values[p], la.vec(d)))
            vs.append(v)
        return Subspace(self.ambient_dim, vs)

    @classmethod
    def fixed(cls, *vectors, label: str = "") -> FamilySpec:
        return cls(tuple((la.vec(v), {}) for v in vectors), label)


def family_membership(s: Subspace, family: FamilySpec) -> bool:
    """True iff some parameter values in Q(i) make the family's span equal ``s``."""
    if s.ambient_dim != family.ambient_dim or s.dim != len(family.vectors):
        return False
    names = family.params
    n, m, k = s.ambient_dim, s.dim, len(family.vectors)
    # unknowns: params, then lambda[v][j] with family vector v = sum_j lambda[v][j] s_j
    nv = len(names) + k * m
    rows, rhs = [], []
    for v, (const, dirs) in enumerate(family.vectors):
        for coord in range(n):
            row = [ZERO] * nv
            for pi, p in enumerate(names):
                if p in dirs:
                    row[pi] = as_gr(dirs[p][coord])
            for j in range(m):
                row[len(names) + v * m + j] = -s.basis[j][coord]
            rows.append(row)
            rhs.append(-as_gr(const[coord]))
    sol = la.solve(rows, rhs)
    if sol is None:
        return False
    kernel = la.nullspace(rows, nv)
    base = dict(zip(names, sol[: len(names)]))
    if family.at(base) == s:
        return True
    # degenerate particular solution: nudge along the parameter kernel
    for shift in itertools.product(range(-2, 3), repeat=min(len(kernel), 3)):
        vals = list(sol)
        for t, kv in zip(shift, kernel):
            vals = [x + t * y for x, y in zip(vals, kv)]
        if family.at(dict(zip(names, vals[: len(names)]))) == s:
            return True
    return False
