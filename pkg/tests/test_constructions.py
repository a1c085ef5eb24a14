import pytest

from structalg import linalg as la
from structalg.constructions import (
    F0NotClosed,
    ak_construct,
    allison_hein,
    instr,
    operator_transforms,
)
from structalg.registry import NONTRIVIAL, Params21, canonical_algebra, family_21


def e(i):
    return la.unit_vec(3, i - 1)


def unit_matrix(row, col, c=1):
    m = [[0] * 3 for _ in range(3)]
    m[row - 1][col - 1] = c
    return la.mat(m)


def test_t_matrices():
    a1 = canonical_algebra("A1")
    assert a1.t_operator(e(3)) == unit_matrix(3, 1, 3)
    assert a1.t_operator(e(1)) == la.identity(3)
    s2 = canonical_algebra("S2")
    assert s2.t_apply(e(2), e(1)) == la.vec([0, 3, 0])


def test_v_operators():
    a1 = canonical_algebra("A1")
    assert a1.v_operator(e(1), e(3)) == la.mscale(-1, a1.t_operator(e(3)))
    assert a1.v_operator(e(1), e(1)) == a1.t_operator(e(1))
    s2 = canonical_algebra("S2")
    want = la.msub(la.mscale("1/3", s2.t_operator(e(2))), la.mscale("8/3", unit_matrix(2, 3)))
    assert s2.v_operator(e(2), e(3)) == want


def test_conservative_tables():
    assert allison_hein(canonical_algebra("A1")).multiply(e(3), e(1)) == la.vec([0, 0, 3])
    c = allison_hein(canonical_algebra("S2"))
    assert c.multiply(e(2), e(3)) == la.vec([0, -1, 0])
    x = la.vec([1, "i", 2])
    for lab in NONTRIVIAL:
        assert allison_hein(canonical_algebra(lab)).multiply(e(1), x) == x


def test_operator_transforms():
    a1 = canonical_algebra("A1")
    t = operator_transforms(a1, a1.t_operator(e(1)))
    assert t.delta == la.mscale(2, la.identity(3)) and t.eps == la.mscale(-1, la.identity(3))
    t = operator_transforms(a1, a1.t_operator(e(3)))
    assert t.delta == la.zeros(3) and t.eps == a1.t_operator(e(3))
    s2 = canonical_algebra("S2")
    assert operator_transforms(s2, s2.t_operator(e(2))).delta == unit_matrix(2, 3, 2)


def test_instr():
    a1 = canonical_algebra("A1")
    assert instr(a1) == [a1.t_operator(x) for x in (e(1), e(2), e(3))]
    s2 = canonical_algebra("S2")
    basis = instr(s2)
    assert len(basis) == 4 and basis[3] == unit_matrix(2, 3)
    a4 = canonical_algebra("A4")
    assert len(instr(a4)) == 3
    l3 = la.matmul(a4.left(e(3)), a4.left(e(3)))
    assert l3 == la.msub(a4.t_operator(e(2)), a4.t_operator(e(1)))


@pytest.mark.parametrize("label, dim", list(zip(NONTRIVIAL, (11, 11, 11, 11, 11, 13, 14))))
def test_ak_dims(label, dim):
    lie = ak_construct(canonical_algebra(label))
    assert lie.dim == dim
    assert lie.is_lie()
    assert lie.grading_violations() == []


def test_ak_brackets():
    f = ak_construct(canonical_algebra("A1"))
    assert f.bracket_basis(0, 2) == la.vscale(-2, la.unit_vec(11, 3))
    s2 = ak_construct(canonical_algebra("S2"))
    want = la.vsub(la.vscale("1/3", la.unit_vec(14, 6)), la.vscale("8/3", la.unit_vec(14, 8)))
    assert s2.bracket_basis(1, 11) == want
    s1 = ak_construct(canonical_algebra("S1"))
    assert s1.bracket_basis(3, 8) == la.unit_vec(13, 1)


@pytest.mark.parametrize("params", [{"alpha1": 1}, {"beta1": 1, "beta2": 1, "alpha3": 1}])
def test_ak_of_non_structurable_is_not_lie(params):
    lie = ak_construct(family_21(Params21(**params)))
    assert lie.check_jacobi()


def test_ak_detects_unstable_grade_zero():
    with pytest.raises(F0NotClosed):
        ak_construct(family_21(Params21(alpha2=1)))
