"""Finite-dimensional Lie algebras by structure constants, and their structure theory.

Brackets are stored for basis pairs ``i < j``; the rest follows from
antisymmetry.  Everything is exact over Q(i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg as la
from .field import ZERO

__all__ = [
    "LieAlgebra",
    "DegenerateKilling",
    "NotASubalgebra",
    "LeviReport",
    "SimpleFactor",
    "SemisimpleProfile",
    "RANK_SWEEP",
    "analysis_report",
]

RANK_SWEEP = (1, 2, 3, 5, 7)


class DegenerateKilling(ValueError):
    pass


class NotASubalgebra(ValueError):
    pass


@dataclass(eq=False)
class LieAlgebra:
    dim: int
    table: dict  # (i, j) with i < j -> coordinate vector of [b_i, b_j]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_brackets(cls, dim: int, brackets) -> LieAlgebra:
        """``brackets`` is an iterable of ``(i, j, k, coeff)``, 0-based, meaning
        ``[b_i, b_j]`` has ``coeff`` on ``b_k``.  Entries with ``i > j`` are
        folded in by antisymmetry."""
        acc: dict = {}
        for i, j, k, c in brackets:
            if i == j:
                raise ValueError(f"bracket [b{i + 1}, b{i + 1}] must be zero")
            if not all(0 <= t < dim for t in (i, j, k)):
                raise la.DimensionMismatch(f"index out of range in ({i}, {j}, {k})")
            c = la.vec([c])[0]
            if i > j:
                i, j, c = j, i, -c
            v = acc.setdefault((i, j), [ZERO] * dim)
            v[k] = v[k] + c
        return cls(dim, {key: tuple(v) for key, v in acc.items() if any(v)})

    def triples(self):
        for (i, j), v in sorted(self.table.items()):
            for k, c in enumerate(v):
                if c:
                    yield i, j, k, c

    # -- brackets ----------------------------------------------------------
    def bracket_basis(self, i: int, j: int) -> tuple:
        if i == j:
            return la.zero_vec(self.dim)
        if i < j:
            return self.table.get((i, j), la.zero_vec(self.dim))
        v = self.table.get((j, i))
        return la.zero_vec(self.dim) if v is None else tuple(-c for c in v)

    def ad_basis(self, i: int) -> tuple:
        key = ("ad", i)
        if key not in self._cache:
            self._cache[key] = la.from_columns([self.bracket_basis(i, j) for j in range(self.dim)])
        return self._cache[key]

    def ad(self, x) -> tuple:
        out = la.zeros(self.dim)
        for i, c in enumerate(x):
            if c:
                out = la.madd(out, la.mscale(c, self.ad_basis(i)))
        return out

    def bracket(self, x, y) -> tuple:
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b or i == j:
                    continue
                v = self.bracket_basis(i, j)
                c = a * b
                for k, vk in enumerate(v):
                    if vk:
                        out[k] = out[k] + c * vk
        return tuple(out)

    def basis(self, i: int) -> tuple:
        return la.unit_vec(self.dim, i)

    def brackets_of(self, xs, ys) -> list:
        return [self.bracket(x, y) for x in xs for y in ys]

    # -- axioms ------------------------------------------------------------
    def jacobi_defect(self, x, y, z) -> tuple:
        b = self.bracket
        return la.vadd(la.vadd(b(b(x, y), z), b(b(y, z), x)), b(b(z, x), y))

    def check_jacobi(self, full: bool = False) -> list:
        """Basis triples with a nonzero Jacobi sum, as ``((i, j, k), defect)``.

        The Jacobi sum is alternating, so ``i < j < k`` covers every triple;
        ``full=True`` walks all ``dim**3`` of them anyway.
        """
        e = [self.basis(i) for i in range(self.dim)]
        if full:
            idx = itertools.product(range(self.dim), repeat=3)
        else:
            idx = itertools.combinations(range(self.dim), 3)
        bad = []
        for i, j, k in idx:
            d = self.jacobi_defect(e[i], e[j], e[k])
            if any(d):
                bad.append(((i, j, k), d))
        return bad

    def is_lie(self) -> bool:
        return not self.check_jacobi()

    # -- spans and series ------------------------------------------------------
    def span(self, vectors) -> la.Subspace:
        return la.Subspace(self.dim, list(vectors))

    def product_space(self, u: la.Subspace, v: la.Subspace) -> la.Subspace:
        return self.span(self.brackets_of(u.basis, v.basis))

    def whole(self) -> la.Subspace:
        return self.span(self.basis(i) for i in range(self.dim))

    def derived_algebra(self) -> la.Subspace:
        return self.span(self.table.values())

    def is_perfect(self) -> bool:
        return self.derived_algebra().dim == self.dim

    def derived_series(self, start: la.Subspace | None = None) -> list:
        cur = self.whole() if start is None else start
        out = [cur]
        while cur.dim:
            nxt = self.product_space(cur, cur)
            if nxt.dim == cur.dim:
                break
            out.append(nxt)
            cur = nxt
        return out

    def lower_central_series(self, start: la.Subspace | None = None) -> list:
        """``I^1 = I``, ``I^(k+1) = [I, I^k]``; stops at zero or when it stabilises."""
        top = self.whole() if start is None else start
        cur = top
        out = [cur]
        while cur.dim:
            nxt = self.product_space(top, cur)
            if nxt.dim == cur.dim:
                break
            out.append(nxt)
            cur = nxt
        return out

    def nilindex(self, ideal: la.Subspace | None = None) -> int | None:
        """Least ``k`` with ``I^k = 0``, or ``None`` if ``I`` is not nilpotent."""
        series = self.lower_central_series(ideal)
        if series[-1].dim:
            return None
        return len(series)

    def is_ideal(self, sub: la.Subspace) -> bool:
        return all(sub.contains(v) for v in self.brackets_of(
            [self.basis(i) for i in range(self.dim)], sub.basis))

    def is_subalgebra(self, sub: la.Subspace) -> bool:
        return all(sub.contains(v) for v in self.brackets_of(sub.basis, sub.basis))

    def ideal_generated(self, vectors) -> la.Subspace:
        cur = self.span(vectors)
        e = [self.basis(i) for i in range(self.dim)]
        while True:
            nxt = cur.sum(self.span(self.brackets_of(e, cur.basis)))
            if nxt.dim == cur.dim:
                return cur
            cur = nxt

    def centralizer_dim(self, x) -> int:
        return self.dim - la.rank(self.ad(x))

    # -- Killing form, radical ------------------------------------------------
    def killing_form(self) -> tuple:
        if "killing" not in self._cache:
            n = self.dim
            ads = [self.ad_basis(i) for i in range(n)]
            k = [[ZERO] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    s = la.trace(la.matmul(ads[i], ads[j]))
                    k[i][j] = k[j][i] = s
            self._cache["killing"] = tuple(tuple(r) for r in k)
        return self._cache["killing"]

    def killing_on(self, vectors) -> tuple:
        """Gram matrix of the Killing form on the given vectors."""
        k = self.killing_form()
        kv = [la.matvec(k, v) for v in vectors]
        return tuple(tuple(sum((a * b for a, b in zip(u, w)), ZERO) for w in kv) for u in vectors)

    def orthogonal(self, sub: la.Subspace) -> la.Subspace:
        """Killing-orthogonal complement of ``sub``."""
        k = self.killing_form()
        rows = [la.matvec(k, v) for v in sub.basis]
        if not rows:
            return self.whole()
        return self.span(la.nullspace(rows, self.dim))

    def radical(self) -> la.Subspace:
        """Solvable radical, computed as ``[L, L]`` perp under the Killing form."""
        if "radical" not in self._cache:
            self._cache["radical"] = self.orthogonal(self.derived_algebra())
        return self._cache["radical"]

    def is_semisimple(self) -> bool:
        return la.rank(self.killing_form()) == self.dim

    def is_solvable(self, sub: la.Subspace | None = None) -> bool:
        return self.derived_series(sub)[-1].dim == 0

    # -- new algebras from old -------------------------------------------------
    def restrict(self, sub: la.Subspace | list) -> LieAlgebra:
        """The subalgebra spanned by ``sub``, in the given basis (RREF if a Subspace)."""
        vectors = list(sub.basis) if isinstance(sub, la.Subspace) else [la.vec(v) for v in sub]
        space = self.span(vectors)
        if space.dim != len(vectors):
            raise NotASubalgebra("spanning vectors are dependent")
        cols = la.transpose(tuple(vectors))
        table = {}
        for i, j in itertools.combinations(range(len(vectors)), 2):
            v = self.bracket(vectors[i], vectors[j])
            if not any(v):
                continue
            c = la.solve(cols, v)
            if c is None:
                raise NotASubalgebra(f"bracket of vectors {i + 1}, {j + 1} leaves the span")
            table[(i, j)] = c
        return LieAlgebra(len(vectors), table)

    def quotient(self, ideal: la.Subspace) -> LieAlgebra:
        """``L / I`` on the coset basis of standard vectors off the pivots of ``I``."""
        if not self.is_ideal(ideal):
            raise NotASubalgebra("quotient by a non-ideal")
        keep = ideal.complement_coordinates()
        cols = la.transpose(tuple(list(ideal.basis) + [self.basis(k) for k in keep]))
        m = ideal.dim
        table = {}
        for a, b in itertools.combinations(range(len(keep)), 2):
            v = self.bracket_basis(keep[a], keep[b])
            if not any(v):
                continue
            c = la.solve(cols, v)[m:]
            if any(c):
                table[(a, b)] = c
        return LieAlgebra(len(keep), table)

    def transport(self, columns) -> LieAlgebra:
        """The same algebra in the basis whose coordinate vectors are ``columns``."""
        return self.restrict([la.vec(c) for c in columns])

    # -- Levi decomposition ------------------------------------------------
    def levi_verify(self, s_vectors, r_vectors) -> LeviReport:
        s = self.span(s_vectors)
        r = self.span(r_vectors)
        rad = self.radical()
        direct = s.dim + r.dim == self.dim and s.sum(r).dim == self.dim
        s_sub = self.is_subalgebra(s)
        report = LeviReport(
            dim=self.dim,
            s_dim=s.dim,
            r_dim=r.dim,
            direct_sum=direct,
            s_subalgebra=s_sub,
            r_ideal=self.is_ideal(r),
            r_is_radical=r == rad,
            r_solvable=self.is_solvable(r),
            r_nilindex=self.nilindex(r),
            s_semisimple=bool(s_sub and s.dim and self.restrict(s).is_semisimple()),
        )
        return report

    def semisimple_profile(self) -> SemisimpleProfile:
        """Split a semisimple algebra into simple ideals and name them.

        Splitting: the ideal generated by a vector is a sum of simple ideals,
        and an ideal's Killing complement is again an ideal, so any proper
        ideal found splits the piece in two.  Naming uses the rank from a
        regular-element sweep: ``sl2`` for (3, 1), ``sl3`` for (8, 2).
        """
        if not self.is_semisimple():
            raise DegenerateKilling("Killing form is degenerate")
        pieces = self._split(self.whole())
        factors = []
        for p in sorted(pieces, key=lambda s: (s.dim, s.pivots)):
            sub = self.restrict(p)
            rk = sub.rank()
            factors.append(SimpleFactor(p.dim, rk, _name(p.dim, rk), p))
        return SemisimpleProfile(self.dim, tuple(factors))

    def _split(self, piece: la.Subspace) -> list:
        probes = list(piece.basis)
        probes += [la.vadd(u, v) for u, v in itertools.combinations(piece.basis, 2)]
        for v in probes:
            j = self.ideal_generated([v])
            if 0 < j.dim < piece.dim:
                comp = self.orthogonal(j).intersection(piece)
                return self._split(j) + self._split(comp)
        return [piece]

    def rank(self, sweep=RANK_SWEEP) -> int:
        """``min dim C(x)`` over ``x = sum k^i b_i`` for ``k`` in the sweep.

        For a semisimple algebra a regular element attains the rank.
        """
        best = self.dim
        for k in sweep:
            x = la.vec([k ** i for i in range(self.dim)])
            best = min(best, self.centralizer_dim(x))
        return best


def _name(dim: int, rank: int) -> str:
    if (dim, rank) == (3, 1):
        return "sl2"
    if (dim, rank) == (8, 2):
        return "sl3"
    return "unknown"


@dataclass(frozen=True)
class LeviReport:
    dim: int
    s_dim: int
    r_dim: int
    direct_sum: bool
    s_subalgebra: bool
    r_ideal: bool
    r_is_radical: bool
    r_solvable: bool
    r_nilindex: int | None
    s_semisimple: bool

    @property
    def ok(self) -> bool:
        return all((self.direct_sum, self.s_subalgebra, self.r_ideal, self.r_is_radical,
                    self.r_solvable, self.s_semisimple))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "s_dim": self.s_dim,
            "r_dim": self.r_dim,
            "direct_sum": self.direct_sum,
            "s_subalgebra": self.s_subalgebra,
            "r_ideal": self.r_ideal,
            "r_is_radical": self.r_is_radical,
            "r_solvable": self.r_solvable,
            "r_nilindex": self.r_nilindex,
            "s_semisimple": self.s_semisimple,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class SimpleFactor:
    dim: int
    rank: int
    name: str
    space: la.Subspace


@dataclass(frozen=True)
class SemisimpleProfile:
    dim: int
    factors: tuple

    @property
    def names(self) -> tuple:
        return tuple(f.name for f in self.factors)

    def __str__(self):
        return " + ".join(self.names) if self.factors else "0"

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "factors": [{"dim": f.dim, "rank": f.rank, "name": f.name} for f in self.factors],
            "label": str(self),
        }


def analysis_report(lie: LieAlgebra) -> dict:
    """Jacobi status, perfectness, radical and the semisimple profile of ``L / rad L``.

    Structure theory is skipped when Jacobi fails, since none of it is
    meaningful for a non-Lie table.
    """
    bad = lie.check_jacobi()
    out: dict = {"dim": lie.dim, "jacobi": "fail" if bad else "pass"}
    if bad:
        (i, j, k), _ = bad[0]
        out["jacobi_failures"] = len(bad)
        out["first_failure"] = [i, j, k]
        return out
    rad = lie.radical()
    out["perfect"] = lie.is_perfect()
    out["radical_dim"] = rad.dim
    out["radical_nilindex"] = lie.nilindex(rad) if rad.dim else 0
    levi = lie.quotient(rad) if rad.dim else lie
    out["levi"] = str(levi.semisimple_profile()) if levi.dim else "0"
    return out
