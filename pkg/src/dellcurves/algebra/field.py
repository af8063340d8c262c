"""Finite fields F_{p^n} with a deterministic defining modulus.

Elements are stored as integer codes: the element c_0 + c_1 a + ... + c_{n-1} a^{n-1}
(with ``a`` a root of the modulus) has code ``c_0 + c_1 p + ... + c_{n-1} p^{n-1}``.
The code order is the "deterministic element ordering" used everywhere a least
element is requested.  ``FqElem`` wraps a code for the public API; polynomial and
series arithmetic work on raw codes through the ``FieldSpec`` helpers.
"""

from functools import lru_cache
from itertools import product

from ..errors import FieldMismatch, NotPrime, TooLarge, ZeroElement

MAX_Q = 2 ** 20


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _divisors(m):
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _prime_factors(m):
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


# -- polynomials over F_p as int lists, constant term first; only used to find moduli
def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = list(a)
    inv = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(_fp_trim(a)) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
    return a


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_trim([c % p for c in out])


def _fp_gcd(a, b, p):
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_powmod(base, e, m, p):
    result = [1]
    base = _fp_mod(base, m, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        base = _fp_mod(_fp_mul(base, base, p), m, p)
        e >>= 1
    return result


def _fp_irreducible(f, p):
    n = len(f) - 1
    x = [0, 1]
    xp = x
    for _ in range(n // 2):
        xp = _fp_powmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _fp_gcd(f, _fp_trim(diff), p)
        if len(g) > 1:
            return False
    return True


def _least_modulus(p, n):
    if n == 1:
        return (0, 1)
    # lexicographic on the coefficient tuple (constant term first)
    for lower in product(range(p), repeat=n):
        f = list(lower) + [1]
        if f[0] != 0 and _fp_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """The finite field F_q, q = p^n, with the lexicographically least modulus."""

    __slots__ = ("p", "n", "q", "modulus", "_exp", "_log", "_add")

    def __init__(self, p, n, modulus):
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = tuple(modulus)
        self._exp = None
        self._log = None
        self._add = None

    def __repr__(self):
        return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.n, self.modulus) == (
            other.p, other.n, other.modulus)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __reduce__(self):
        return (field_make, (self.p, self.n))

    @property
    def odd(self):
        return self.p != 2

    # -- code-level arithmetic -------------------------------------------------
    def digits(self, x):
        p = self.p
        out = []
        for _ in range(self.n):
            x, r = divmod(x, p)
            out.append(r)
        return out

    def from_digits(self, ds):
        x = 0
        for d in reversed(list(ds)):
            x = x * self.p + d % self.p
        return x

    def add(self, x, y):
        if self.n == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        if self._add is not None:
            return self._add[x][y]
        return self.from_digits(a + b for a, b in zip(self.digits(x), self.digits(y)))

    def neg(self, x):
        if self.n == 1:
            return -x % self.p
        if self.p == 2:
            return x
        return self.from_digits(-a for a in self.digits(x))

    def sub(self, x, y):
        if self.n == 1:
            return (x - y) % self.p
        return self.add(x, self.neg(y))

    def _tables(self):
        if self._exp is None:
            self._build_tables()
        return self._exp, self._log

    def _slow_mul(self, x, y):
        prod = _fp_mul(_fp_trim(self.digits(x)), _fp_trim(self.digits(y)), self.p)
        return self.from_digits(_fp_mod(prod, self.modulus, self.p))

    def _build_tables(self):
        q = self.q
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._slow_mul(x, g)
            if len(exp) == q - 1:
                log = [0] * q
                for k, v in enumerate(exp):
                    log[v] = k
                self._exp, self._log = exp, log
                break
        if self.p != 2 and q <= 256:
            self._add = [[self.from_digits(a + b for a, b in zip(self.digits(x), self.digits(y)))
                          for y in range(q)] for x in range(q)]

    def mul(self, x, y):
        if self.n == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        exp, log = self._tables()
        return exp[(log[x] + log[y]) % (self.q - 1)]

    def inv(self, x):
        if x == 0:
            raise ZeroElement("0 has no inverse")
        if self.n == 1:
            return pow(x, self.p - 2, self.p)
        exp, log = self._tables()
        return exp[-log[x] % (self.q - 1)]

    def pow(self, x, e):
        if e < 0:
            x, e = self.inv(x), -e
        if self.n == 1:
            return pow(x, e, self.p)
        if x == 0:
            return 1 if e == 0 else 0
        exp, log = self._tables()
        return exp[log[x] * e % (self.q - 1)]

    def from_int(self, k):
        """Image of the integer ``k`` under Z -> F_p -> F_q."""
        return k % self.p

    # -- element-level API ---------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, FqElem):
            if x.spec != self:
                raise FieldMismatch(f"{x!r} is not in {self!r}")
            return x
        return FqElem(self, self.from_int(x))

    def elem(self, code):
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FqElem(self, code)

    def zero(self):
        return FqElem(self, 0)

    def one(self):
        return FqElem(self, 1)

    def gen(self):
        """The canonical generator ``a``, a root of the modulus (the prime field: 1)."""
        return FqElem(self, self.p if self.n > 1 else 1)

    def elements(self):
        return [FqElem(self, c) for c in range(self.q)]

    def is_square_code(self, x):
        if x == 0 or self.p == 2:
            return True
        return self.pow(x, (self.q - 1) // 2) == 1

    def trace_code(self, x):
        """Absolute trace to F_p, as an integer in [0, p)."""
        t = 0
        y = x
        for _ in range(self.n):
            t = self.add(t, y)
            y = self.pow(y, self.p)
        return t


@lru_cache(maxsize=None)
def field_make(p, n=1):
    """Return F_{p^n} with the lexicographically smallest monic irreducible modulus."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be positive")
    if p ** n > MAX_Q:
        raise TooLarge(f"q = {p}^{n} exceeds the desk-scale bound {MAX_Q}")
    return FieldSpec(p, n, _least_modulus(p, n))


def field_from_q(q):
    """Split a prime power q into (p, n) and build the field."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    factors = _prime_factors(q)
    if len(factors) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p = factors[0]
    n = 0
    while q > 1:
        q //= p
        n += 1
    return field_make(p, n)


class FqElem:
    """An element of a finite field; immutable."""

    __slots__ = ("spec", "code")

    def __init__(self, spec, code):
        self.spec = spec
        self.code = code

    @property
    def coeffs(self):
        return tuple(self.spec.digits(self.code))

    def _other(self, other):
        if isinstance(other, FqElem):
            if other.spec != self.spec:
                raise FieldMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other.code
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        y = self._other(other)
        return NotImplemented if y is NotImplemented else FqElem(self.spec, self.spec.add(self.code, y))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._other(other)
        return NotImplemented if y is NotImplemented else FqElem(self.spec, self.spec.sub(self.code, y))

    def __rsub__(self, other):
        y = self._other(other)
        return NotImplemented if y is NotImplemented else FqElem(self.spec, self.spec.sub(y, self.code))

    def __mul__(self, other):
        y = self._other(other)
        return NotImplemented if y is NotImplemented else FqElem(self.spec, self.spec.mul(self.code, y))

    __rmul__ = __mul__

    def __truediv__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return FqElem(self.spec, self.spec.mul(self.code, self.spec.inv(y)))

    def __rtruediv__(self, other):
        y = self._other(other)
        if y is NotImplemented:
            return NotImplemented
        return FqElem(self.spec, self.spec.mul(y, self.spec.inv(self.code)))

    def __neg__(self):
        return FqElem(self.spec, self.spec.neg(self.code))

    def __pow__(self, e):
        return FqElem(self.spec, self.spec.pow(self.code, e))

    def inverse(self):
        return FqElem(self.spec, self.spec.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.spec == other.spec and self.code == other.code
        if isinstance(other, int):
            return self.code == self.spec.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.q, self.code))

    def __lt__(self, other):
        return self.code < other.code

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __repr__(self):
        return f"FqElem({self}, {self.spec!r})"

    def __str__(self):
        from ..textio import format_elem
        return format_elem(self.spec, self.code)

    def is_square(self):
        return fq_is_square(self)

    def order(self):
        return fq_element_order(self)


def fq_is_square(x):
    """True iff ``x`` is a square in its field (always, in characteristic 2)."""
    return x.spec.is_square_code(x.code)


def fq_distinguished_element(spec):
    """The fixed element xi: least non-square for odd q, least trace-1 element for even q."""
    for code in range(1, spec.q):
        if spec.odd:
            if not spec.is_square_code(code):
                return FqElem(spec, code)
        elif spec.trace_code(code) == 1:
            return FqElem(spec, code)
    raise AssertionError("unreachable")  # pragma: no cover


def fq_element_order(x):
    if x.code == 0:
        raise ZeroElement("0 has no multiplicative order")
    spec = x.spec
    for d in _divisors(spec.q - 1):
        if spec.pow(x.code, d) == 1:
            return d
    raise AssertionError("unreachable")  # pragma: no cover


def multiplicative_order(x, one, group_order, mul):
    """Order of ``x`` in a group of known exponent, using only ``mul`` and equality.

    Used for elements of models other than ``FieldSpec`` (F_{q^2} pairs, quaternions).
    """
    def power(y, e):
        result, base = one, y
        while e:
            if e & 1:
                result = mul(result, base)
            base = mul(base, base)
            e >>= 1
        return result

    if power(x, group_order) != one:
        raise ValueError("element order does not divide the stated group exponent")
    order = group_order
    for ell in _prime_factors(group_order):
        while order % ell == 0 and power(x, order // ell) == one:
            order //= ell
    return order
