"""Canonical 3-dimensional structurable algebras and their normal-form maps.

The labels ``A1``..``A5`` (type (2,1)), ``S1``, ``S2`` (type (1,2)) and the
Jordan algebras ``J1``..``J6`` (identity involution) are built from their
non-unit products.  ``classify_21`` and ``classify_12`` take a point of the
corresponding parametric family and return the label together with the
explicit change of basis that carries the input onto the canonical table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, fields

from . import linalg as la
from .algebra import AlgebraWithInvolution, DimensionMismatch
from .field import GR, ONE, ZERO, as_gr, sqrt_in_field

__all__ = [
    "UnknownLabel",
    "NotStructurable",
    "FieldExtensionRequired",
    "LABELS",
    "JORDAN",
    "NONTRIVIAL",
    "canonical_algebra",
    "universal_algebra",
    "Params21",
    "Params12",
    "ClassificationResult",
    "family_21",
    "family_12",
    "constraints_21",
    "constraints_12",
    "classify_21",
    "classify_12",
    "transport",
    "verify_isomorphism",
    "isomorphism_failures",
    "invariant_fingerprint",
]


class UnknownLabel(KeyError):
    pass


class NotStructurable(ValueError):
    def __init__(self, violated: list[str]):
        self.violated = list(violated)
        super().__init__("not structurable: " + "; ".join(self.violated))


class FieldExtensionRequired(ArithmeticError):
    pass


_P = {
    "J1": ({}, (1, 1, 1)),
    "J2": ({(1, 1): (0, 1, 0), (2, 2): (0, 0, 1)}, (1, 1, 1)),
    "J3": ({(1, 1): (0, 1, 0), (1, 2): (0, 0, 1), (2, 1): (0, 0, 1)}, (1, 1, 1)),
    "J4": ({(1, 1): (0, 0, 1)}, (1, 1, 1)),
    "J5": ({(1, 1): (0, 1, 0)}, (1, 1, 1)),
    "J6": ({(1, 1): (1, 0, 0), (2, 2): (1, 0, 0)}, (1, 1, 1)),
    "A1": ({}, (1, 1, -1)),
    "A2": ({(2, 2): (0, 1, 0)}, (1, 1, -1)),
    "A3": ({(1, 1): (0, 1, 0)}, (1, 1, -1)),
    "A4": ({(1, 1): (0, 1, 0), (2, 2): (-1, 1, 0)}, (1, 1, -1)),
    "A5": ({(1, 2): (0, 1, 0), (2, 1): (0, -1, 0), (2, 2): (1, 0, 0)}, (1, 1, -1)),
    "S1": ({}, (1, -1, -1)),
    "S2": ({(1, 2): (0, 1, 0), (2, 1): (0, -1, 0), (2, 2): (1, 0, 0)}, (1, -1, -1)),
}

JORDAN = ("J1", "J2", "J3", "J4", "J5", "J6")
NONTRIVIAL = ("A1", "A2", "A3", "A4", "A5", "S1", "S2")
LABELS = JORDAN + NONTRIVIAL

_UNIVERSAL_RE = re.compile(r"Universal\((\d+),\s*(\d+)\)")


def universal_algebra(k: int, m: int) -> AlgebraWithInvolution:
    """Zero products between non-unit basis vectors; ``k`` Hermitian, ``m`` skew."""
    if k < 1 or m < 0:
        raise UnknownLabel(f"Universal({k},{m}) needs k >= 1 and m >= 0")
    return AlgebraWithInvolution.from_products(k + m, {}, (1,) * k + (-1,) * m, f"Universal({k},{m})")


def canonical_algebra(label: str, dim: int | None = None) -> AlgebraWithInvolution:
    m = _UNIVERSAL_RE.fullmatch(label.replace(" ", ""))
    if m:
        k, mm = int(m.group(1)), int(m.group(2))
        if dim is not None and k + mm != dim:
            raise UnknownLabel(f"{label} has dimension {k + mm}, not {dim}")
        return universal_algebra(k, mm)
    if label not in _P:
        raise UnknownLabel(label)
    if dim not in (None, 3):
        raise UnknownLabel(f"{label} is only defined in dimension 3")
    products, sig = _P[label]
    return AlgebraWithInvolution.from_products(3, products, sig, label)


# -- parametric families ----------------------------------------------------


@dataclass(frozen=True)
class Params21:
    alpha1: GR = ZERO
    alpha2: GR = ZERO
    alpha3: GR = ZERO
    beta1: GR = ZERO
    beta2: GR = ZERO
    beta3: GR = ZERO
    gamma: GR = ZERO

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, as_gr(getattr(self, f.name)))

    def to_json(self) -> dict:
        return {f.name: str(getattr(self, f.name)) for f in fields(self)}


@dataclass(frozen=True)
class Params12:
    alpha1: GR = ZERO
    alpha2: GR = ZERO
    alpha3: GR = ZERO
    beta: GR = ZERO
    gamma: GR = ZERO

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, as_gr(getattr(self, f.name)))

    def to_json(self) -> dict:
        return {f.name: str(getattr(self, f.name)) for f in fields(self)}


def family_21(p: Params21) -> AlgebraWithInvolution:
    products = {
        (1, 1): (p.alpha1, p.beta1, 0),
        (1, 2): (p.alpha2, p.beta2, p.gamma),
        (2, 2): (p.alpha3, p.beta3, 0),
        (2, 1): (-p.alpha2, -p.beta2, p.gamma),
    }
    return AlgebraWithInvolution.from_products(3, products, (1, 1, -1), "family(2,1)")


def family_12(p: Params12) -> AlgebraWithInvolution:
    products = {
        (1, 1): (p.alpha1, 0, 0),
        (2, 2): (p.alpha3, 0, 0),
        (1, 2): (p.alpha2, p.beta, p.gamma),
        (2, 1): (p.alpha2, -p.beta, -p.gamma),
    }
    return AlgebraWithInvolution.from_products(3, products, (1, -1, -1), "family(1,2)")


def _params21_of(a: AlgebraWithInvolution) -> Params21:
    t = a.table
    return Params21(
        alpha1=t[1][1][0], beta1=t[1][1][1],
        alpha2=t[1][2][0], beta2=t[1][2][1], gamma=t[1][2][2],
        alpha3=t[2][2][0], beta3=t[2][2][1],
    )


def _params12_of(a: AlgebraWithInvolution) -> Params12:
    t = a.table
    return Params12(
        alpha1=t[1][1][0], alpha3=t[2][2][0],
        alpha2=t[1][2][0], beta=t[1][2][1], gamma=t[1][2][2],
    )


def _gamma_shift(gamma) -> tuple:
    # columns: e1, e2 - gamma e1, e3
    return la.from_columns([(1, 0, 0), (-as_gr(gamma), 1, 0), (0, 0, 1)])


def constraints_21(p: Params21) -> list[str]:
    """Structurability conditions violated by ``p``, checked after removing ``gamma``."""
    q = _params21_of(transport(family_21(p), _gamma_shift(p.gamma)))
    bad = []
    if q.alpha1:
        bad.append("alpha1 = 0")
    if q.alpha2:
        bad.append("alpha2 = 0")
    if q.alpha3 != q.beta2 * q.beta2 - q.beta1 * q.beta3:
        bad.append("alpha3 = beta2^2 - beta1*beta3")
    if q.beta1 * q.beta2:
        bad.append("beta1*beta2 = 0")
    if q.beta2 * q.beta3:
        bad.append("beta2*beta3 = 0")
    return bad


def constraints_12(p: Params12) -> list[str]:
    bad = []
    if p.alpha1 != p.gamma * p.gamma:
        bad.append("alpha1 = gamma^2")
    if p.alpha2 != -p.beta * p.gamma:
        bad.append("alpha2 = -beta*gamma")
    if p.alpha3 != p.beta * p.beta:
        bad.append("alpha3 = beta^2")
    return bad


# -- transport and isomorphisms ---------------------------------------------


def transport(a: AlgebraWithInvolution, p, label: str | None = None) -> AlgebraWithInvolution:
    """Rewrite ``a`` in the basis given by the columns of ``p``."""
    p = la.mat(p)
    if len(p) != a.dim:
        raise DimensionMismatch("basis change has the wrong size")
    pinv = la.inverse(p)
    cols = [la.column(p, j) for j in range(a.dim)]
    table = [
        [la.matvec(pinv, a.multiply(cols[i], cols[j])) for j in range(a.dim)]
        for i in range(a.dim)
    ]
    sigma = la.matmul(pinv, la.matmul(a.sigma, p))
    return AlgebraWithInvolution.from_table(table, sigma, a.unit_index, label)


def isomorphism_failures(a, b, phi, check_involution: bool = True) -> list[str]:
    """Reasons why ``phi: a -> b`` is not an isomorphism (empty when it is)."""
    phi = la.mat(phi)
    if a.dim != b.dim or len(phi) != a.dim or any(len(r) != a.dim for r in phi):
        raise DimensionMismatch("isomorphism check needs square maps between equal dimensions")
    if not la.is_invertible(phi):
        return ["map is singular"]
    out = []
    cols = [la.column(phi, j) for j in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = la.matvec(phi, a.table[i][j])
            rhs = b.multiply(cols[i], cols[j])
            if lhs != rhs:
                out.append(f"phi(e{i + 1} e{j + 1}) != phi(e{i + 1}) phi(e{j + 1})")
    if check_involution and la.matmul(phi, a.sigma) != la.matmul(b.sigma, phi):
        out.append("phi does not commute with the involutions")
    return out


def verify_isomorphism(a, b, phi, check_involution: bool = True) -> bool:
    """True iff ``phi`` is an algebra isomorphism ``a -> b``.

    With ``check_involution`` (the default) ``phi`` must also intertwine the
    involutions; set it to False to certify plain algebra automorphisms.
    """
    ok = not isomorphism_failures(a, b, phi, check_involution)
    if ok:
        # a multiplicative bijection between unital algebras fixes the unit
        assert la.matvec(la.mat(phi), a.unit) == b.unit
    return ok


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class ClassificationResult:
    label: str
    basis_change: tuple

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "basis_change": [[str(x) for x in row] for row in self.basis_change],
        }


def classify_21(p: Params21) -> ClassificationResult:
    bad = constraints_21(p)
    if bad:
        raise NotStructurable(bad)
    shift = _gamma_shift(p.gamma)
    q = _params21_of(transport(family_21(p), shift))
    b1, b2, b3 = q.beta1, q.beta2, q.beta3
    if not b1 and not b2 and not b3:
        label, a_, c_ = "A1", ONE, ONE
    elif not b1 and not b2:
        label, a_, c_ = "A2", b3, ONE
    elif b1 and not b2 and not b3:
        label, a_, c_ = "A3", ONE / b1, ONE
    elif b1 and not b2:
        root = sqrt_in_field(b1 * b3)
        if root is None:
            raise FieldExtensionRequired(f"sqrt({b1 * b3}) is not in Q(i)")
        label, a_, c_ = "A4", ONE / b1, ONE / root
    else:
        label, a_, c_ = "A5", ONE, ONE / b2
    change = la.matmul(shift, la.diag((1, a_, c_)))
    return ClassificationResult(label, change)


def _branch_12(p: Params12) -> tuple:
    # beta != 0: e2' = e2 + (gamma/beta) e3, e3' = e3 / beta
    return la.from_columns([(1, 0, 0), (0, 1, p.gamma / p.beta), (0, 0, ONE / p.beta)])


def classify_12(p: Params12) -> ClassificationResult:
    bad = constraints_12(p)
    if bad:
        raise NotStructurable(bad)
    if not p.beta and not p.gamma:
        return ClassificationResult("S1", la.identity(3))
    if p.beta:
        return ClassificationResult("S2", _branch_12(p))
    # beta = 0: exchanging e2 and e3 lands in the family with beta' = -gamma, gamma' = 0
    swap = la.from_columns([(1, 0, 0), (0, 0, 1), (0, 1, 0)])
    q = _params12_of(transport(family_12(p), swap))
    return ClassificationResult("S2", la.matmul(swap, _branch_12(q)))


def classified_algebra(result: ClassificationResult) -> AlgebraWithInvolution:
    return canonical_algebra(result.label)


# -- invariants ---------------------------------------------------------------


def invariant_fingerprint(a: AlgebraWithInvolution) -> dict:
    """Isomorphism invariants; equal fingerprints are necessary, not sufficient."""
    from .analysis import derivation_algebra, functional_identity_space

    lefts = [la.flatten(a.left(a.basis(i))) for i in range(a.dim)]
    span = la.Subspace(a.dim * a.dim, lefts)
    # associative closure of the left multiplications
    gens = [la.unflatten(v, a.dim) for v in span.basis]
    closure = span
    while True:
        prods = [la.flatten(la.matmul(x, y)) for x in [la.unflatten(v, a.dim) for v in closure.basis] for y in gens]
        bigger = closure.sum(la.Subspace(a.dim * a.dim, prods))
        if bigger.dim == closure.dim:
            break
        closure = bigger
    return {
        "dim": a.dim,
        "type": list(a.type),
        "der": derivation_algebra(a, False).dim,
        "bar_der": derivation_algebra(a, True).dim,
        "identities": functional_identity_space(a).dim,
        "left_span": span.dim,
        "left_closure": closure.dim,
        "commutative": a.is_commutative(),
    }
