import pytest

from structalg import linalg as la
from structalg.analysis import (
    IDENTITIES,
    WORDS,
    FamilySpec,
    MatrixTemplate,
    SingularSample,
    derivation_algebra,
    derivation_matrices,
    enumerate_subalgebras,
    family_membership,
    family_samples,
    functional_identity_space,
    grid_values,
    identity_value,
    linear_solution_space,
    subspace_checks,
    verify_automorphism_family,
)
from structalg.field import GR
from structalg.registry import canonical_algebra


@pytest.mark.parametrize("label, d, bd", [
    ("A1", 4, 2), ("A2", 2, 1), ("A3", 1, 1), ("A4", 0, 0), ("A5", 2, 1), ("S1", 4, 4), ("S2", 2, 2),
])
def test_derivation_dims(label, d, bd):
    a = canonical_algebra(label)
    assert derivation_algebra(a).dim == d
    assert derivation_algebra(a, bar_constrained=True).dim == bd


def test_derivations_are_derivations():
    a = canonical_algebra("A2")
    x, y = la.vec([1, 2, "i"]), la.vec([0, -1, 3])
    for d in derivation_matrices(a):
        lhs = la.matvec(d, a.multiply(x, y))
        rhs = la.vadd(a.multiply(la.matvec(d, x), y), a.multiply(x, la.matvec(d, y)))
        assert lhs == rhs


def test_linear_solution_space():
    s = linear_solution_space(lambda c: [c[0] + c[1], c[2]], 3)
    assert s == la.Subspace(3, [[1, -1, 0]])


def test_template():
    t = MatrixTemplate.parse([["1", "0", "0"], ["0", "alpha^2", "beta"], ["0", "0", "-alpha"]])
    assert t.params == ("alpha", "beta")
    assert t.evaluate({"alpha": 2, "beta": "i"}) == la.mat([[1, 0, 0], [0, 4, "i"], [0, 0, -2]])


def test_a2_family():
    a = canonical_algebra("A2")
    t = MatrixTemplate.parse([["1", "0", "0"], ["0", "alpha^2", "beta"], ["0", "0", "alpha"]])
    samples = [{"alpha": al, "beta": b} for al in (1, 2, 3, "i") for b in (0, 1)]
    assert verify_automorphism_family(a, t, samples)


def test_a4_sign_family():
    t = MatrixTemplate.parse([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "s"]])
    samples = family_samples(t)
    assert len(samples) == 2
    assert verify_automorphism_family(canonical_algebra("A4"), t, samples, bar=True)


def test_off_pattern_fails():
    t = MatrixTemplate.parse([["1", "0", "0"], ["0", "2", "1"], ["0", "0", "3"]])
    assert not verify_automorphism_family(canonical_algebra("A3"), t, [{}])


def test_singular_sample():
    t = MatrixTemplate.parse([["1", "0", "0"], ["0", "alpha", "0"], ["0", "0", "1"]])
    with pytest.raises(SingularSample):
        verify_automorphism_family(canonical_algebra("A1"), t, [{"alpha": 0}])


def test_identity_spaces():
    f1, f2 = (la.vec(IDENTITIES[k]) for k in ("f1", "f2"))
    a5 = functional_identity_space(canonical_algebra("A5"))
    assert a5 == la.Subspace(8, [f1, f2])
    s2 = functional_identity_space(canonical_algebra("S2"))
    assert s2 == la.Subspace(8, [IDENTITIES[g] for g in ("g1", "g2", "g3")])
    assert len(WORDS) == 8


def test_f1_fails_in_s2():
    a = canonical_algebra("S2")
    e2, e3 = la.unit_vec(3, 1), la.unit_vec(3, 2)
    assert identity_value(a, IDENTITIES["f1"], e2, e3) == la.vec([0, 4, 0])
    assert identity_value(a, IDENTITIES["f2"], e2, e3) == la.vec([0, -4, 0])


def test_subspace_predicates():
    a1 = canonical_algebra("A1")
    r = subspace_checks(a1, la.Subspace(3, [[0, 1, 0], [0, 0, 1]]))
    assert r.is_subalgebra and r.is_ideal and r.is_bar_closed
    a4 = canonical_algebra("A4")
    r = subspace_checks(a4, la.Subspace(3, [[1, 0, "i"], [0, 1, 0]]))
    assert r.is_ideal and not r.is_bar_closed
    r = subspace_checks(a4, la.Subspace(3, [[1, 0, 0]]))
    assert r.is_subalgebra and not r.is_ideal


def test_grid_values():
    g = grid_values(1)
    assert len(g) == 9 and GR("-1-i") in g


def test_enumeration_a2():
    hits = enumerate_subalgebras(canonical_algebra("A2"), 1, 3)
    assert set(hits) <= {la.Subspace(3, [[1, 0, 0]]), la.Subspace(3, [[0, 1, 0]])}


def test_enumeration_a5():
    fams = [FamilySpec.fixed([1, 0, 0]), FamilySpec.fixed([0, 1, 0])]
    for sign in (1, -1):
        fams.append(FamilySpec((((1, 0, sign), {"alpha": (0, 1, 0)}),)))
    for s in enumerate_subalgebras(canonical_algebra("A5"), 1, 2):
        assert any(family_membership(s, f) for f in fams)


def test_enumeration_a4_complex_hit():
    hits = enumerate_subalgebras(canonical_algebra("A4"), 1, 2)
    assert la.Subspace(3, [[1, 1, "i"]]) in hits


def test_family_membership():
    fam = FamilySpec((((0, 0, 1), {"alpha": (0, 1, 0)}),))
    assert family_membership(la.Subspace(3, [[0, 3, 1]]), fam)
    assert not family_membership(la.Subspace(3, [[0, 1, 0]]), fam)
    assert fam.at({"alpha": 3}) == la.Subspace(3, [[0, 3, 1]])
    with pytest.raises(ValueError):
        FamilySpec((((0, 0, 1), {"a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1)}),))


def test_enumeration_rejects_bad_bound():
    with pytest.raises(ValueError):
        enumerate_subalgebras(canonical_algebra("A1"), 1, 0)
