"""Exact arithmetic in the Gaussian rationals Q(i).

A value is stored as ``(a + b*i) / d`` with integers ``a, b`` and ``d > 0``
sharing no common factor, so ``re = a/d`` and ``im = b/d`` are always in
lowest terms and structural equality is value equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

__all__ = ["GaussianRational", "GR", "I", "ZERO", "ONE", "sqrt_in_field", "as_gr"]


class GaussianRational:
    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, re=0, im=0):
        if isinstance(re, str):
            if im != 0:
                raise TypeError("string form already carries the imaginary part")
            other = GaussianRational.parse(re)
            self._a, self._b, self._d = other._a, other._b, other._d
            self._hash = None
            return
        if isinstance(re, GaussianRational):
            z = re + as_gr(im) * I
            self._a, self._b, self._d = z._a, z._b, z._d
            self._hash = None
            return
        r = Fraction(re)
        s = Fraction(im)
        d = r.denominator * s.denominator // gcd(r.denominator, s.denominator)
        self._set(r.numerator * (d // r.denominator), s.numerator * (d // s.denominator), d)

    def _set(self, a, b, d):
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a, self._b, self._d = a, b, d
        self._hash = None

    @classmethod
    def _raw(cls, a, b, d):
        z = object.__new__(cls)
        if d < 0:
            a, b, d = -a, -b, -d
        z._set(a, b, d)
        return z

    # -- accessors -------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def conj(self) -> GaussianRational:
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm ``re**2 + im**2``."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if o._d == self._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if o._d == self._d:
            return GaussianRational._raw(self._a - o._a, self._b - o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d - o._a * self._d, self._b * o._d - o._b * self._d, self._d * o._d
        )

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, e = self._a, self._b, o._a, o._b
        if b == 0 and e == 0:
            return GaussianRational._raw(a * c, 0, self._d * o._d)
        return GaussianRational._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if o._a == 0 and o._b == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        # 1/o = d (c - e i) / (c^2 + e^2)
        c, e, n = o._a, o._b, o._a * o._a + o._b * o._b
        a, b = self._a, self._b
        return GaussianRational._raw(
            (a * c + b * e) * o._d, (b * c - a * e) * o._d, self._d * n
        )

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ONE / (self ** (-n))
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._hash is None:
            if self._b == 0:
                self._hash = hash(Fraction(self._a, self._d))
            else:
                self._hash = hash((self._a, self._b, self._d))
        return self._hash

    def sort_key(self):
        return (self.re, self.im)

    # -- text form -------------------------------------------------------
    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return _frac_str(re_)
        if im_ == 1:
            im_s = "i"
        elif im_ == -1:
            im_s = "-i"
        else:
            im_s = _frac_str(im_) + "*i"
        if re_ == 0:
            return im_s
        if im_s.startswith("-"):
            return _frac_str(re_) + im_s
        return _frac_str(re_) + "+" + im_s

    def __repr__(self):
        return f"GR({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parse ``"a/b+c/d*i"`` style text; zero parts may be omitted."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty Gaussian rational")
        m = _PARSE_RE.fullmatch(s)
        if m is None:
            raise ValueError(f"cannot parse Gaussian rational: {text!r}")
        real_txt, imag_txt = m.group("re"), m.group("im")
        if real_txt is None and imag_txt is None:
            raise ValueError(f"cannot parse Gaussian rational: {text!r}")
        real = Fraction(real_txt) if real_txt else Fraction(0)
        if imag_txt is None:
            imag = Fraction(0)
        else:
            coef = imag_txt[:-1].rstrip("*")
            if coef in ("", "+"):
                imag = Fraction(1)
            elif coef == "-":
                imag = Fraction(-1)
            else:
                imag = Fraction(coef)
        return cls(real, imag)


_NUM = r"[0-9]+(?:/[0-9]+)?"
_PARSE_RE = re.compile(
    rf"(?P<re>[+-]?{_NUM}(?![0-9/]*\*?i))?(?P<im>[+-]?(?:{_NUM}\*?)?i)?"
)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return GaussianRational._raw(x, 0, 1)
    if isinstance(x, Rational):
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    return NotImplemented


def as_gr(x) -> GaussianRational:
    """Convert ints, Fractions, strings and complex-free numbers to ``GaussianRational``."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return GaussianRational.parse(x)
    z = _coerce(x)
    if z is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")
    return z


GR = GaussianRational
ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt_in_field(a) -> GaussianRational | None:
    """Square root of ``a`` inside Q(i), or ``None`` when there is none.

    Of the two roots the one with positive real part (or zero real part and
    positive imaginary part) is returned.
    """
    a = as_gr(a)
    p, q = a.re, a.im
    if q == 0:
        if p >= 0:
            r = _rational_sqrt(p)
            return None if r is None else GaussianRational(r)
        r = _rational_sqrt(-p)
        return None if r is None else GaussianRational(0, r)
    n = _rational_sqrt(p * p + q * q)
    if n is None:
        return None
    u = _rational_sqrt((p + n) / 2)
    v = _rational_sqrt((n - p) / 2)
    if u is None or v is None:
        return None
    if q < 0:
        v = -v
    return GaussianRational(u, v)
