"""Elements of F_q(T) as reduced fractions num/den with monic denominator."""

from ..errors import DivisionByZero, ZeroDenominator
from .field import FqElem
from .poly import Poly


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Poly.const(num.field, 1)
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        if num.is_zero():
            den = Poly.const(num.field, 1)
        else:
            g = num.gcd(den)
            if not g.is_const():
                num, den = num // g, den // g
            lc = den.lc
            if lc != 1:
                inv = num.field.inv(lc)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def coerce(cls, x, field=None):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return cls(x)
        if isinstance(x, tuple):
            return cls(*x)
        if isinstance(x, (int, FqElem)):
            return cls(Poly.const(field, x))
        raise TypeError(f"cannot interpret {x!r} as a rational function")

    def is_poly(self):
        return self.den.is_const()

    def is_zero(self):
        return self.num.is_zero()

    def _c(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (Poly, int, FqElem)):
            return RatFunc.coerce(other, self.field)
        return None

    def __add__(self, other):
        other = self._c(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._c(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._c(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._c(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._c(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._c(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def __eq__(self, other):
        other = self._c(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"
