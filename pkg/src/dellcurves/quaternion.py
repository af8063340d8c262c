"""The quaternion algebra H(xi, r) over F_q(T): arithmetic, maximal order, torsion units,
the embedding into 2x2 matrices over F_q((1/T)), and the genus-0 conic."""

from dataclasses import dataclass
from itertools import permutations

from .algebra.field import fq_distinguished_element, multiplicative_order
from .algebra.laurent import LaurentSeries, laurent_sqrt
from .algebra.poly import Poly
from .algebra.ratfunc import RatFunc
from .errors import (AlgebraMismatch, EqualRoots, EvenCharacteristic, InsufficientPrecision,
                     NonPolynomialCoords, NotTorsion, OddRViolated, ScopeViolation)
from .places import Place, hilbert_symbol, iter_places

BASIS = ("1", "i", "j", "k")


class QuatAlgebra:
    """H(a, b) with a = xi and b = r.

    Odd q: i^2 = a, j^2 = b, ij = -ji. Even q: i^2 + i = a, j^2 = b, ij = j(i + 1).
    In both cases k = ij; products of basis elements are stored as coordinate vectors.
    """

    def __init__(self, spec, r, xi=None):
        self.spec = spec
        self.r = r
        self.xi = fq_distinguished_element(spec) if xi is None else xi
        self.parity = "odd" if spec.odd else "even"
        a = Poly.const(spec, self.xi)
        b = r
        Z = Poly(spec)
        one = Poly.const(spec, 1)
        if spec.odd:
            table = {
                (1, 1): (a, Z, Z, Z), (2, 2): (b, Z, Z, Z), (3, 3): (-(a * b), Z, Z, Z),
                (1, 2): (Z, Z, Z, one), (2, 1): (Z, Z, Z, -one),
                (1, 3): (Z, Z, a, Z), (3, 1): (Z, Z, -a, Z),
                (2, 3): (Z, -b, Z, Z), (3, 2): (Z, b, Z, Z),
            }
        else:
            table = {
                (1, 1): (a, one, Z, Z), (2, 2): (b, Z, Z, Z), (3, 3): (a * b, Z, Z, Z),
                (1, 2): (Z, Z, Z, one), (2, 1): (Z, Z, one, one),
                (1, 3): (Z, Z, a, one), (3, 1): (Z, Z, a, Z),
                (2, 3): (b, b, Z, Z), (3, 2): (Z, b, Z, Z),
            }
        for t in range(4):
            e = tuple(one if s == t else Z for s in range(4))
            table[(0, t)] = e
            table[(t, 0)] = e
        self._table = {k: tuple(RatFunc(c) for c in v) for k, v in table.items()}

    def __eq__(self, other):
        return (isinstance(other, QuatAlgebra) and self.spec == other.spec
                and self.r == other.r and self.xi == other.xi)

    def __hash__(self):
        return hash((self.spec, self.r, self.xi.code))

    def __repr__(self):
        return f"QuatAlgebra(xi={self.xi}, r={self.r}, q={self.spec.q})"

    def elem(self, *coords):
        return Quaternion(self, coords)

    def one(self):
        return self.elem(1, 0, 0, 0)

    def basis(self):
        return tuple(self.elem(*(1 if s == t else 0 for s in range(4))) for t in range(4))


class Quaternion:
    """x0 + x1 i + x2 j + x3 k with coordinates in F_q(T)."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        F = algebra.spec
        if len(coords) != 4:
            raise ValueError("a quaternion has four coordinates")
        self.algebra = algebra
        self.coords = tuple(RatFunc.coerce(c, F) for c in coords)

    def _other(self, other):
        if isinstance(other, Quaternion):
            if other.algebra != self.algebra:
                raise AlgebraMismatch("quaternions from different algebras")
            return other
        if isinstance(other, (int, Poly, RatFunc)) or hasattr(other, "code"):
            return Quaternion(self.algebra, (other, 0, 0, 0))
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.algebra, [x + y for x, y in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(self.algebra, [-x for x in self.coords])

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        table = self.algebra._table
        out = [RatFunc(Poly(self.algebra.spec))] * 4
        for s, x in enumerate(self.coords):
            if x.is_zero():
                continue
            for t, y in enumerate(other.coords):
                if y.is_zero():
                    continue
                xy = x * y
                for m, c in enumerate(table[(s, t)]):
                    if not c.is_zero():
                        out[m] = out[m] + xy * c
        return Quaternion(self.algebra, out)

    def __rmul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.algebra.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def conj(self):
        x0, x1, x2, x3 = self.coords
        if self.algebra.parity == "odd":
            return Quaternion(self.algebra, (x0, -x1, -x2, -x3))
        return Quaternion(self.algebra, (x0 + x1, x1, x2, x3))

    def scalar(self):
        """The coordinate on 1, provided the others vanish."""
        if any(not c.is_zero() for c in self.coords[1:]):
            raise ValueError(f"{self} is not a scalar")
        return self.coords[0]

    def norm(self):
        return (self * self.conj()).scalar()

    def trace(self):
        return (self + self.conj()).scalar()

    def inverse(self):
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("zero divisor in a split algebra")
        return self.conj() * n.inverse()

    def is_polynomial(self):
        return all(c.is_poly() for c in self.coords)

    def __str__(self):
        terms = []
        for c, name in zip(self.coords, BASIS):
            if c.is_zero():
                continue
            s = str(c)
            if name == "1":
                terms.append(s)
            elif s == "1":
                terms.append(name)
            else:
                terms.append(f"({s}){name}" if (" " in s or "+" in s or "/" in s) else f"{s}{name}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"Quaternion({self})"


def quat_arith(x, y, op):
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def quat_conj_nr_tr(x):
    """(conjugate, reduced norm, reduced trace); x^2 - Tr(x) x + Nr(x) = 0 is checked."""
    c = x.conj()
    nr = (x * c).scalar()
    tr = (x + c).scalar()
    assert x * x - x * tr + nr == Quaternion(x.algebra, (0, 0, 0, 0))
    return c, nr, tr


def unit_norm_test(x):
    """True iff Nr(x) is a nonzero constant (x a unit of the standard order)."""
    if not x.is_polynomial():
        raise NonPolynomialCoords("unit_norm_test needs coordinates in F_q[T]")
    n = x.norm()
    return n.is_poly() and not n.is_zero() and n.num.is_const()


# -- maximal order -------------------------------------------------------------------------------

def _det(M):
    n = len(M)
    total = Poly(M[0][0].field)
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = Poly.const(total.field, 1)
        for row, col in enumerate(perm):
            term = term * M[row][col]
            if term.is_zero():
                break
        total = total - term if inv % 2 else total + term
    return total


@dataclass(frozen=True)
class MaximalOrderCheck:
    ok: bool
    gram: tuple
    det: Poly
    expected: Poly


def maximal_order_check(algebra, ram):
    """Gram determinant of 1, i, j, ij under (x, y) -> Tr(xy); for a maximal order it
    generates (r)^2."""
    if algebra.parity != "odd":
        raise EvenCharacteristic("the standard order check is for odd q")
    if not ram.odd_flag:
        raise OddRViolated("H(xi, r) is the division algebra D only when Odd(R) = 1")
    B = algebra.basis()
    gram = tuple(tuple((x * y).trace().num for y in B) for x in B)
    det = _det(gram)
    F = algebra.spec
    r = ram.r
    xi = Poly.const(F, algebra.xi)
    expected = (xi * xi * r * r).scale(F.from_int(-16))
    q_, rem = det.divmod(r * r)
    ok = det == expected and rem.is_zero() and q_.deg == 0 and algebra.r == r
    return MaximalOrderCheck(ok, gram, det, expected)


# -- torsion units -------------------------------------------------------------------------------

@dataclass(frozen=True)
class TorsionUnits:
    algebra: QuatAlgebra
    theta1: Quaternion
    theta2: Quaternion
    b0: Poly
    d0: object


def torsion_units(spec, alpha1, alpha2):
    """theta1 = i and theta2 = i(b0 + d0 j) for R = {T - alpha1, T - alpha2}."""
    if not spec.odd:
        raise EvenCharacteristic("torsion units are constructed for odd q")
    a1, a2 = spec(alpha1), spec(alpha2)
    if a1 == a2:
        raise EqualRoots("alpha1 and alpha2 must differ")
    T = Poly.T(spec)
    r = (T - Poly.const(spec, a1)) * (T - Poly.const(spec, a2))
    alg = QuatAlgebra(spec, r)
    w = (a1 - a2).inverse()
    two = spec(2)
    b0 = T.scale(two * w) - Poly.const(spec, (a1 + a2) * w)
    d0 = -two * w
    i, j = alg.basis()[1:3]
    theta1 = i
    theta2 = i * (Quaternion(alg, (b0, 0, 0, 0)) + j * Poly.const(spec, d0))
    xi = Quaternion(alg, (Poly.const(spec, alg.xi), 0, 0, 0))
    assert theta1 * theta1 == xi and theta2 * theta2 == xi
    return TorsionUnits(alg, theta1, theta2, b0, d0)


def quat_order(x, bound):
    """Multiplicative order of x if it divides ``bound``, else None."""
    one = x.algebra.one()
    if x ** bound != one:
        return None
    return multiplicative_order(x, one, bound, lambda a, b: a * b)


def cyclic_generator(theta):
    """Least a + b*theta (lexicographic on codes) generating F_q(theta)^x, theta^2 = xi."""
    alg = theta.algebra
    F = alg.spec
    xi = Quaternion(alg, (Poly.const(F, alg.xi), 0, 0, 0))
    if alg.parity != "odd" or theta * theta != xi:
        raise NotTorsion("cyclic_generator needs theta with theta^2 = xi, q odd")
    n = F.q * F.q - 1
    for a in range(F.q):
        for b in range(1, F.q):
            g = theta * Poly.const(F, F.elem(b)) + Poly.const(F, F.elem(a))
            if quat_order(g, n) == n:
                return g
    raise NotTorsion("no generator found")  # impossible: F_q(theta) is a field of size q^2


# -- matrix embedding ----------------------------------------------------------------------------

class MatrixRep:
    """2x2 matrix over F_q((1/T)); entries are LaurentSeries in u = 1/T."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows):
        (a, b), (c, d) = rows
        return cls((a, b, c, d))

    @classmethod
    def identity(cls, field, prec):
        one, zero = LaurentSeries.const(field, 1, prec), LaurentSeries.zero(field, prec)
        return cls((one, zero, zero, one))

    @classmethod
    def diag(cls, x, y):
        zero = LaurentSeries.zero(x.field, min(x.prec, y.prec))
        return cls((x, zero, zero, y))

    @property
    def prec(self):
        return min(e.prec for e in self.entries)

    def rows(self):
        a, b, c, d = self.entries
        return ((a, b), (c, d))

    def __mul__(self, other):
        if not isinstance(other, MatrixRep):
            return MatrixRep([e * other for e in self.entries])
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MatrixRep((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))

    def det(self):
        a, b, c, d = self.entries
        return a * d - b * c

    def inverse(self):
        a, b, c, d = self.entries
        dinv = self.det().inverse()
        return MatrixRep((d * dinv, -b * dinv, -c * dinv, a * dinv))

    def agrees(self, other, prec):
        return all(x.agrees(y, prec) for x, y in zip(self.entries, other.entries))

    def to_json(self, name="u"):
        return [[e.to_string(name) for e in row] for row in self.rows()]

    def __repr__(self):
        return f"MatrixRep({self.to_json()})"


def _working_sqrt(algebra, prec):
    return laurent_sqrt(algebra.r, prec)


def matrix_embed(x, prec, branch=1):
    """Image of x under i -> ((0,1),(xi,0)), j -> ((s,0),(0,-s)) with s = branch * sqrt(r).

    Entries are correct to O(u^prec); branch=1 is the monic square root, -1 the other one.
    """
    alg = x.algebra
    if alg.parity != "odd":
        raise EvenCharacteristic("the matrix embedding is built for odd q")
    coords = x.coords
    # extra working precision absorbs negative valuations of the coordinates
    slack = max((c.num.deg - c.den.deg for c in coords if not c.is_zero()), default=0)
    work = prec + max(slack, 0) + 1
    s = laurent_sqrt(alg.r, work)
    s = s.with_prec(work)
    if branch == -1:
        s = -s
    x0, x1, x2, x3 = (LaurentSeries.from_ratfunc(c, work) for c in coords)
    xi = alg.xi
    ents = (x0 + x2 * s, x1 - x3 * s, (x1 + x3 * s).scale(xi), x0 - x2 * s)
    return MatrixRep([e.with_prec(prec) for e in ents])


def uniformizer_pi(units, prec):
    """pi = b0 + d0 sqrt(r), a uniformizer of F_q((1/T)) under the monic branch."""
    alg = units.algebra
    s = laurent_sqrt(alg.r, prec)
    pi = (s.scale(units.d0) + units.b0).with_prec(prec)
    assert pi.valuation == 1
    return pi


def vertex_fix_check(m, basis, prec=None):
    """True iff m fixes the homothety class of the lattice spanned by the columns of basis."""
    conj = basis.inverse() * m * basis
    if prec is not None:
        conj = MatrixRep([e.with_prec(prec) for e in conj.entries])
    vals = [e.valuation for e in conj.entries if not e.is_zero()]
    if not vals:
        raise InsufficientPrecision("every entry vanishes to the available precision")
    k = min(vals)
    for e in conj.entries:
        if e.is_zero() and e.prec < k:
            raise InsufficientPrecision(f"entry known only to u^{e.prec} < u^{k}")
    det = conj.det()
    if det.is_zero():
        if det.prec <= 2 * k:
            raise InsufficientPrecision(f"determinant known only to u^{det.prec}")
        return False
    return det.valuation == 2 * k


# -- the conic -----------------------------------------------------------------------------------

@dataclass(frozen=True)
class Conic:
    coefficients: tuple
    equation: str
    solubility: tuple

    def to_json(self):
        return {"equation": self.equation,
                "coefficients": [str(c) for c in self.coefficients],
                "solubility": {str(v): ok for v, ok in self.solubility}}


def conic_equation(ram, max_degree=2):
    """X^2 - xi Y^2 - r Z^2 = 0, with local solubility at R, infinity and every place of
    degree <= max_degree."""
    F = ram.spec
    if not F.odd or sorted(ram.degrees) != [1, 1]:
        raise ScopeViolation("the conic model needs odd q and R = two degree-1 places")
    xi = fq_distinguished_element(F)
    r = ram.r
    coeffs = (Poly.const(F, 1), -Poly.const(F, xi), -r)
    eq = f"X^2 - {xi}*Y^2 - ({r})*Z^2 = 0"
    places = []
    for v in iter_places(F):
        if v.deg > max_degree:
            break
        places.append(v)
    table = tuple((v, hilbert_symbol(Poly.const(F, xi), r, v) == 1) for v in places)
    bad = {v for v, ok in table if not ok}
    assert bad == set(ram.R), "insoluble places differ from R"
    return Conic(coeffs, eq, table)


__all__ = [
    "QuatAlgebra", "Quaternion", "quat_arith", "quat_conj_nr_tr", "unit_norm_test",
    "MaximalOrderCheck", "maximal_order_check", "TorsionUnits", "torsion_units", "quat_order",
    "cyclic_generator", "MatrixRep", "matrix_embed", "uniformizer_pi", "vertex_fix_check",
    "Conic", "conic_equation", "Place",
]
