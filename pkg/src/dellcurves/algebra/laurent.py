"""Truncated Laurent series in the uniformizer u = 1/T at the infinite place.

A series is ``sum_{k = val}^{prec - 1} c_k u^k + O(u^prec)``.  Every operation
returns a series whose ``prec`` is the absolute precision it can guarantee.
"""

from ..errors import EvenCharacteristic, NotMonic, OddDegree
from .field import FqElem
from .poly import Poly


def _ps_mul(F, a, b, n):
    """Product of two power-series coefficient lists, truncated to n terms."""
    out = [0] * n
    if F.n == 1:
        p = F.p
        for i, x in enumerate(a[:n]):
            if x:
                for j in range(min(len(b), n - i)):
                    out[i + j] += x * b[j]
        return [c % p for c in out]
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(min(len(b), n - i)):
                if b[j]:
                    out[i + j] = F.add(out[i + j], F.mul(x, b[j]))
    return out


def _ps_inv(F, a, n):
    """Inverse of a power series with a[0] != 0, to n terms."""
    inv0 = F.inv(a[0])
    out = [inv0]
    for k in range(1, n):
        acc = 0
        for i in range(1, min(k, len(a) - 1) + 1):
            acc = F.add(acc, F.mul(a[i], out[k - i]))
        out.append(F.neg(F.mul(inv0, acc)))
    return out


class LaurentSeries:
    __slots__ = ("field", "val", "coeffs", "prec")

    def __init__(self, field, val, coeffs, prec):
        cs = list(coeffs)[: max(prec - val, 0)]
        while cs and cs[0] == 0:
            cs.pop(0)
            val += 1
        if not cs:
            val = prec
        else:
            cs += [0] * (prec - val - len(cs))
        self.field = field
        self.val = val
        self.coeffs = tuple(cs)
        self.prec = prec

    # -- constructors ----------------------------------------------------------------
    @classmethod
    def zero(cls, field, prec):
        return cls(field, prec, (), prec)

    @classmethod
    def from_poly(cls, f, prec):
        F = f.field
        if f.is_zero():
            return cls.zero(F, prec)
        d = f.deg
        return cls(F, -d, [f[d - i] for i in range(d + 1)], prec)

    @classmethod
    def from_ratfunc(cls, x, prec):
        """Expand num/den; ``prec`` is the absolute precision of the result."""
        num, den = x.num, x.den
        if num.is_zero():
            return cls.zero(num.field, prec)
        # relative precision needed of each factor is prec - val(result)
        rel = prec - (den.deg - num.deg)
        a = cls.from_poly(num, -num.deg + rel)
        b = cls.from_poly(den, -den.deg + rel)
        return a * b.inverse()

    @classmethod
    def const(cls, field, c, prec):
        code = c.code if isinstance(c, FqElem) else field.from_int(c)
        return cls(field, 0, (code,), prec)

    # -- accessors -----------------------------------------------------------------------
    def is_zero(self):
        """Zero to the available precision."""
        return not self.coeffs

    @property
    def valuation(self):
        return None if self.is_zero() else self.val

    def coefficient(self, k):
        if k >= self.prec:
            raise ValueError(f"coefficient of u^{k} is beyond precision {self.prec}")
        if k < self.val:
            return FqElem(self.field, 0)
        return FqElem(self.field, self.coeffs[k - self.val])

    def lead(self):
        return FqElem(self.field, self.coeffs[0]) if self.coeffs else FqElem(self.field, 0)

    def polynomial_part(self):
        """The terms u^k with k <= 0, read back as a polynomial in T."""
        if self.prec < 1:
            raise ValueError("the constant term is beyond the available precision")
        if self.is_zero() or self.val > 0:
            return Poly(self.field)
        return Poly(self.field, [self.coeffs[-j - self.val] for j in range(-self.val + 1)])

    def with_prec(self, prec):
        return LaurentSeries(self.field, self.val, self.coeffs, min(prec, self.prec))

    # -- arithmetic ---------------------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, Poly):
            return LaurentSeries.from_poly(other, self.prec)
        if isinstance(other, (int, FqElem)):
            return LaurentSeries.const(self.field, other, self.prec)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        F = self.field
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        out = [0] * max(prec - lo, 0)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                k = s.val + i - lo
                if k < len(out):
                    out[k] = F.add(out[k], c)
        return LaurentSeries(F, lo, out, prec)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return LaurentSeries(F, self.val, [F.neg(c) for c in self.coeffs], self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        F = self.field
        prec = min(self.val + other.prec, other.val + self.prec)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(F, prec)
        val = self.val + other.val
        n = max(prec - val, 0)
        return LaurentSeries(F, val, _ps_mul(F, list(self.coeffs), list(other.coeffs), n), prec)

    __rmul__ = __mul__

    def scale(self, c):
        code = c.code if isinstance(c, FqElem) else self.field.from_int(c)
        F = self.field
        return LaurentSeries(F, self.val, [F.mul(code, x) for x in self.coeffs], self.prec)

    def shift(self, k):
        """Multiply by u^k."""
        return LaurentSeries(self.field, self.val + k, self.coeffs, self.prec + k)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("series is zero to precision; cannot invert")
        n = self.prec - self.val
        return LaurentSeries(self.field, -self.val, _ps_inv(self.field, list(self.coeffs), n),
                             self.prec - 2 * self.val)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e):
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = LaurentSeries.const(self.field, 1, base.prec - base.val)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def agrees(self, other, prec=None):
        """True iff self - other vanishes to ``prec`` (default: the common precision)."""
        other = self._coerce(other)
        diff = self - other
        if prec is None:
            prec = diff.prec
        if prec > diff.prec:
            raise ValueError(f"cannot compare to u^{prec}: only known to u^{diff.prec}")
        return diff.is_zero() or diff.val >= prec

    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return (self.field, self.val, self.coeffs, self.prec) == (
                other.field, other.val, other.coeffs, other.prec)
        return NotImplemented

    __hash__ = None

    def to_string(self, name="u"):
        from ..textio import format_elem
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{format_elem(self.field, c)}*{name}^{self.val + i}")
        terms.append(f"O({name}^{self.prec})")
        return " + ".join(terms)

    def __repr__(self):
        return f"LaurentSeries({self.to_string()})"


def laurent_sqrt(f, prec):
    """Square root of a monic even-degree polynomial in F_q((1/T)), monic branch.

    Newton iteration s <- (s + f/s)/2 on the normalized series T^{-deg f} f, started
    from the exact root of its first two terms. The root is returned to absolute
    precision prec + deg(f)/2, so that its square agrees with f up to O(u^prec).
    """
    F = f.field
    if not F.odd:
        raise EvenCharacteristic("square roots via Newton need odd characteristic")
    if not f.is_monic():
        raise NotMonic("laurent_sqrt expects a monic polynomial")
    if f.deg % 2:
        raise OddDegree("odd degree: the square root is not in F_q((1/T))")
    m = f.deg // 2
    n = max(prec + 2 * m, 1)
    h = [f[f.deg - k] if k <= f.deg else 0 for k in range(n)]
    half = F.inv(F.from_int(2))
    s = [1] + ([F.mul(h[1], half)] if n > 1 else [])
    s += [0] * (n - len(s))
    good = 2
    while good < n:
        hs = _ps_mul(F, h, _ps_inv(F, s, n), n)
        s = [F.mul(F.add(x, y), half) for x, y in zip(s, hs)]
        good *= 2
    # one extra pass as a fixed-point confirmation
    hs = _ps_mul(F, h, _ps_inv(F, s, n), n)
    s2 = [F.mul(F.add(x, y), half) for x, y in zip(s, hs)]
    assert s2 == s, "Newton iteration failed to converge"
    return LaurentSeries(F, -m, s, prec + m)
