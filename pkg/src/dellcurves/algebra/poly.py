"""Univariate polynomials in T over a finite field."""

from itertools import product

from ..errors import ConstantInput, DivisionByZero, FieldMismatch, TooLarge
from .field import MAX_Q, FqElem

NEG_INF = float("-inf")  # deg(0); never -1


def _trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


class Poly:
    """A polynomial over ``field``; ``coeffs`` holds element codes, constant term first."""

    __slots__ = ("field", "_c", "_hash")

    def __init__(self, field, coeffs=()):
        self.field = field
        self._c = _trim(list(coeffs))
        self._hash = None

    # -- constructors ----------------------------------------------------------------
    @classmethod
    def T(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field, c):
        if isinstance(c, FqElem):
            c = c.code
        else:
            c = field.from_int(c)
        return cls(field, (c,))

    @classmethod
    def from_ints(cls, field, ints):
        """Coefficients given as integers reduced into the prime field."""
        return cls(field, [field.from_int(k) for k in ints])

    @classmethod
    def from_elems(cls, field, elems):
        return cls(field, [e.code for e in elems])

    @classmethod
    def monomial(cls, field, k, c=1):
        return cls(field, (0,) * k + (c,))

    # -- basic accessors -------------------------------------------------------------
    @property
    def codes(self):
        return self._c

    @property
    def coeffs(self):
        return tuple(FqElem(self.field, c) for c in self._c)

    @property
    def deg(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def lc(self):
        """Leading coefficient code (0 for the zero polynomial)."""
        return self._c[-1] if self._c else 0

    def is_zero(self):
        return not self._c

    def is_const(self):
        return len(self._c) <= 1

    def is_monic(self):
        return bool(self._c) and self._c[-1] == 1

    def __getitem__(self, k):
        return self._c[k] if 0 <= k < len(self._c) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self._c == other._c
        if isinstance(other, int):
            return self._c == _trim([self.field.from_int(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.q, self._c))
        return self._hash

    def sort_key(self):
        """Degree first, then lexicographic on coefficients (constant term first)."""
        return (len(self._c), self._c)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Poly({self}, {self.field!r})"

    def __str__(self):
        from ..textio import format_poly
        return format_poly(self)

    def __bool__(self):
        return bool(self._c)

    # -- ring operations -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, FqElem)):
            return Poly.const(self.field, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        F = self.field
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        if F.n == 1:
            p = F.p
            out = [(x + y) % p for x, y in zip(a, b)] + list(a[len(b):])
        else:
            out = [F.add(x, y) for x, y in zip(a, b)] + list(a[len(b):])
        return Poly(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self._c])

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
        a, b = self._c, other._c
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        if F.n == 1:
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            p = F.p
            return Poly(F, [c % p for c in out])
        add, mul = F.add, F.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly(F, out)

    __rmul__ = __mul__

    def scale(self, c):
        if isinstance(c, FqElem):
            c = c.code
        F = self.field
        return Poly(F, [F.mul(c, x) for x in self._c])

    def __pow__(self, e):
        result = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other):
        other = self._coerce(other)
        if other is None or other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        r = list(self._c)
        b = other._c
        db = len(b) - 1
        if len(r) - 1 < db:
            return Poly(F), Poly(F, r)
        inv = F.inv(b[-1])
        quo = [0] * (len(r) - db)
        if F.n == 1:
            p = F.p
            for k in range(len(r) - 1, db - 1, -1):
                c = r[k] * inv % p
                if c:
                    quo[k - db] = c
                    off = k - db
                    for i, bi in enumerate(b):
                        r[off + i] = (r[off + i] - c * bi) % p
        else:
            for k in range(len(r) - 1, db - 1, -1):
                c = F.mul(r[k], inv)
                if c:
                    quo[k - db] = c
                    off = k - db
                    for i, bi in enumerate(b):
                        r[off + i] = F.sub(r[off + i], F.mul(c, bi))
        return Poly(F, quo), Poly(F, r[:db])

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc))

    def gcd(self, other):
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def eval(self, x):
        """Value at ``x`` (an FqElem or int); returns FqElem."""
        F = self.field
        code = x.code if isinstance(x, FqElem) else F.from_int(x)
        acc = 0
        for c in reversed(self._c):
            acc = F.add(F.mul(acc, code), c)
        return FqElem(F, acc)

    def powmod(self, e, m):
        result = Poly.const(self.field, 1) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    def derivative(self):
        F = self.field
        return Poly(F, [F.mul(F.from_int(k), c) for k, c in enumerate(self._c)][1:])

    def shift(self, k):
        """Multiply by T^k (k >= 0)."""
        if not self._c:
            return self
        return Poly(self.field, (0,) * k + self._c)


def poly_basic(op, f, g=None, x=None):
    """Dispatch helper over the elementary operations: add, mul, divmod, gcd, eval."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "divmod":
        return f.divmod(g)
    if op == "gcd":
        return f.gcd(g)
    if op == "eval":
        return f.eval(x)
    raise ValueError(f"unknown operation {op!r}")


def multiplicity(f, p):
    """Largest m with p^m | f (f nonzero, p nonconstant); returns (m, f / p^m)."""
    if f.is_zero():
        raise ValueError("multiplicity in the zero polynomial is infinite")
    m = 0
    while True:
        quo, rem = f.divmod(p)
        if not rem.is_zero():
            return m, f
        f, m = quo, m + 1


def poly_is_irreducible(f):
    """Distinct-degree test: f is irreducible iff gcd(f, T^{q^i} - T) = 1 for i <= deg/2."""
    if f.is_zero() or f.deg < 1:
        raise ConstantInput("irreducibility is only defined for deg >= 1")
    if f.deg == 1:
        return True
    F = f.field
    f = f.monic()
    T = Poly.T(F)
    if f[0] == 0:
        return False
    h = T
    for _ in range(f.deg // 2):
        h = h.powmod(F.q, f)
        if not f.gcd(h - T).is_const():
            return False
    return True


def iter_monic(field, d):
    """All monic polynomials of degree d, lexicographic with the constant term first."""
    codes = range(field.q)
    for lower in product(codes, repeat=d):
        yield Poly(field, lower + (1,))


def iter_monic_irreducibles(field, d):
    for f in iter_monic(field, d):
        if d == 1 or poly_is_irreducible(f):
            yield f


def monic_irreducibles(field, d):
    if d < 1:
        raise ValueError("degree must be positive")
    if field.q ** d > MAX_Q:
        raise TooLarge(f"q^d = {field.q}^{d} is beyond desk scale")
    return list(iter_monic_irreducibles(field, d))


def count_monic_irreducibles(q, d):
    """Necklace count of monic irreducibles of degree d over F_q (Moebius inversion)."""
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += _mobius(d // e) * q ** e
    return total // d


def _mobius(n):
    result = 1
    k = 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


def first_irreducible(field, d):
    """Least monic irreducible of degree d without materializing the whole list."""
    return next(iter_monic_irreducibles(field, d))


def poly_is_square(f):
    """True iff f is a square in F_q[T] (equivalently in F_q(T))."""
    if f.is_zero():
        return True
    F = f.field
    if not F.odd:
        # every element of F_{2^n} is a square; Frobenius is additive
        return all(c == 0 for c in f.codes[1::2])
    if f.deg % 2 or not F.is_square_code(f.lc):
        return False
    return poly_sqrt(f) is not None


def poly_sqrt(f):
    """Exact square root with monic-normalized leading term, or None (odd q)."""
    from .laurent import laurent_sqrt
    F = f.field
    if f.is_zero():
        return f
    if f.deg % 2:
        return None
    lc = f.lc
    if not F.is_square_code(lc):
        return None
    m = f.deg // 2
    s = laurent_sqrt(f.monic(), 1).polynomial_part()
    root_lc = _sqrt_code(F, lc)
    s = s.scale(root_lc)
    return s if s * s == f and s.deg == m else None


def _sqrt_code(F, x):
    for y in range(F.q):
        if F.mul(y, y) == x:
            return y
    return None
