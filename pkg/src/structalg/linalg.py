"""Exact dense linear algebra over Q(i).

Vectors are tuples of ``GaussianRational``.  Matrices are tuples of row
tuples; a matrix acting on an algebra follows the column convention, so
column ``j`` holds the coordinates of the image of ``e_j``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import GR, ONE, ZERO, as_gr

Vector = tuple
Matrix = tuple


class DimensionMismatch(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


def vec(values: Iterable) -> Vector:
    return tuple(as_gr(v) for v in values)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(as_gr(v) for v in row) for row in rows)


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple((ZERO,) * m for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit_vec(n, i) for i in range(n))


def diag(values: Sequence) -> Matrix:
    n = len(values)
    return tuple(tuple(as_gr(values[i]) if i == j else ZERO for j in range(n)) for i in range(n))


def from_columns(cols: Sequence[Sequence]) -> Matrix:
    n = len(cols[0]) if cols else 0
    return tuple(tuple(as_gr(cols[j][i]) for j in range(len(cols))) for i in range(n))


def column(m: Matrix, j: int) -> Vector:
    return tuple(row[j] for row in m)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def vadd(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"adding vectors of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"subtracting vectors of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vector) -> Vector:
    c = as_gr(c)
    return tuple(c * a for a in v)


def is_zero_vec(v: Vector) -> bool:
    return not any(v)


def lincomb(coeffs: Sequence, vectors: Sequence[Vector]) -> Vector:
    """``sum(c * v)``; ``vectors`` must be non-empty or ``coeffs`` empty with known length."""
    n = len(vectors[0])
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k in range(n):
                if v[k]:
                    out[k] = out[k] + c * v[k]
    return tuple(out)


def matvec(m: Matrix, v: Vector) -> Vector:
    if m and len(m[0]) != len(v):
        raise DimensionMismatch(f"matrix has {len(m[0])} columns, vector has length {len(v)}")
    out = []
    for row in m:
        s = ZERO
        for a, b in zip(row, v):
            if a and b:
                s = s + a * b
        out.append(s)
    return tuple(out)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch("inner dimensions differ")
    bt = transpose(b)
    out = []
    for row in a:
        new = []
        for col in bt:
            s = ZERO
            for x, y in zip(row, col):
                if x and y:
                    s = s + x * y
            new.append(s)
        out.append(tuple(new))
    return tuple(out)


def madd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vadd(r, s) for r, s in zip(a, b))


def msub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vsub(r, s) for r, s in zip(a, b))


def mscale(c, a: Matrix) -> Matrix:
    return tuple(vscale(c, r) for r in a)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return msub(matmul(a, b), matmul(b, a))


def trace(a: Matrix):
    s = ZERO
    for i, row in enumerate(a):
        s = s + row[i]
    return s


def flatten(m: Matrix) -> Vector:
    """Row-major flattening, used to treat ``End(A)`` as a coordinate space."""
    return tuple(x for row in m for x in row)


def unflatten(v: Sequence, n: int) -> Matrix:
    return tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n))


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form.  Returns ``(nonzero rows, pivot columns)``."""
    a = [[as_gr(x) for x in r] for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = ONE / a[r][c]
        if inv != ONE:
            a[r] = [x * inv for x in a[r]]
        pr = a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of ``{x : m x = 0}``; rows of the returned basis are in RREF order."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    rows, pivots = rref(m)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(rows, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(m: Sequence[Sequence], b: Sequence) -> Vector | None:
    """One solution of ``m x = b``, or ``None`` when inconsistent."""
    ncols = len(m[0]) if m else 0
    aug = [list(r) + [as_gr(bi)] for r, bi in zip(m, b)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for row, p in zip(rows, pivots):
        x[p] = row[ncols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(r) + list(unit_vec(n, i)) for i, r in enumerate(m)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise SingularMatrix("matrix is not invertible")
    return tuple(tuple(r[n:]) for r in rows)


def is_invertible(m: Matrix) -> bool:
    return rank(m) == len(m)


class Subspace:
    """A subspace of ``F^n`` held in RREF, so ``==`` is subspace equality."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        rows = [tuple(as_gr(x) for x in v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(r)} in F^{ambient_dim}")
        red, piv = rref(rows)
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in red)
        self.pivots = tuple(piv)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        body = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis)
        return f"Subspace(F^{self.ambient_dim}: [{body}])"

    def coordinates(self, v: Sequence) -> Vector | None:
        """Coordinates of ``v`` in ``self.basis``, or ``None`` if ``v`` is outside."""
        v = tuple(as_gr(x) for x in v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in F^{self.ambient_dim}")
        coeffs = tuple(v[p] for p in self.pivots)
        if self.basis:
            w = lincomb(coeffs, self.basis)
        else:
            w = zero_vec(self.ambient_dim)
        return coeffs if tuple(w) == v else None

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: Subspace) -> Subspace:
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: Subspace) -> Subspace:
        if not self.basis or not other.basis:
            return Subspace(self.ambient_dim)
        # a.x = b.y  ->  nullspace of [A^T | -B^T]
        k = self.dim
        cols = list(self.basis) + [vscale(-1, v) for v in other.basis]
        m = transpose(tuple(cols))
        sols = nullspace(m, len(cols))
        return Subspace(self.ambient_dim, [lincomb(s[:k], self.basis) for s in sols])

    def complement_coordinates(self) -> list[int]:
        return [c for c in range(self.ambient_dim) if c not in set(self.pivots)]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in v] for v in self.basis]
