from fractions import Fraction

import pytest

from structalg.field import GR, I, ONE, ZERO, as_gr, sqrt_in_field


@pytest.mark.parametrize("text, re, im", [
    ("0", 0, 0),
    ("3", 3, 0),
    ("-1/2", Fraction(-1, 2), 0),
    ("i", 0, 1),
    ("-i", 0, -1),
    ("2/3*i", 0, Fraction(2, 3)),
    ("1/2+3/4*i", Fraction(1, 2), Fraction(3, 4)),
    ("1-i", 1, -1),
    ("-1/2i", 0, Fraction(-1, 2)),
    (" 4 - 2*i ", 4, -2),
])
def test_parse(text, re, im):
    z = GR.parse(text)
    assert (z.re, z.im) == (Fraction(re), Fraction(im))


@pytest.mark.parametrize("bad", ["", "x", "1//2", "i2", "1+", "*i", "1/0"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        GR.parse(bad)


@pytest.mark.parametrize("z", ["0", "5", "-7/3", "i", "-i", "1/2+3/4*i", "-2-5/6*i", "3*i"])
def test_text_round_trip(z):
    assert str(GR.parse(z)) == z


def test_normal_form_is_value_equality():
    assert GR(Fraction(2, 4), Fraction(4, 8)) == GR("1/2+1/2*i")
    assert hash(GR(3)) == hash(3) and GR(3) == 3
    assert GR(Fraction(1, 2)) == Fraction(1, 2)


def test_arithmetic():
    a, b = GR("1+2*i"), GR("3-i")
    assert a * b == GR("5+5*i")
    assert a / b == GR("1/10+7/10*i")
    assert I * I == -ONE
    assert a.conj() == GR("1-2*i")
    assert a.norm() == 5
    assert a ** -1 == ONE / a
    assert a ** 0 == ONE
    assert 1 - a == GR("-2*i")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO ** -1


def test_no_floats():
    with pytest.raises(TypeError):
        as_gr(0.5)
    with pytest.raises(TypeError):
        as_gr(1j)


@pytest.mark.parametrize("a, root", [
    ("4", "2"), ("-4", "2*i"), ("2*i", "1+i"), ("-2*i", "1-i"), ("9/4", "3/2"),
    ("3+4*i", "2+i"), ("0", "0"),
])
def test_sqrt(a, root):
    r = sqrt_in_field(a)
    assert r == GR(root) and r * r == GR(a)


@pytest.mark.parametrize("a", ["2", "-3", "i", "1+i", "1/2"])
def test_sqrt_missing(a):
    assert sqrt_in_field(a) is None
