"""Places of F_q(T): valuations, residues, quadratic splitting and tame Hilbert symbols."""

import enum
from functools import lru_cache

from .algebra.field import FqElem
from .algebra.poly import Poly, iter_monic_irreducibles, multiplicity, poly_is_irreducible, poly_is_square
from .algebra.ratfunc import RatFunc
from .errors import (EvenCharacteristic, NotQuadratic, SquareInput, UnsupportedArtinSchreier,
                     ValidationError, ZeroDenominator, ZeroInput)


class Place:
    """A finite place (a monic irreducible) or the infinite place."""

    __slots__ = ("field", "poly")

    def __init__(self, field, poly=None):
        self.field = field
        self.poly = poly

    @classmethod
    def finite(cls, poly, check=True):
        if check:
            if poly.deg < 1 or not poly.is_monic():
                raise ValidationError(f"{poly} is not a monic polynomial of positive degree")
            if not poly_is_irreducible(poly):
                raise ValidationError(f"{poly} is reducible; places need irreducible generators")
        return cls(poly.field, poly)

    @classmethod
    def infinity(cls, field):
        return cls(field, None)

    @property
    def is_infinite(self):
        return self.poly is None

    @property
    def deg(self):
        return 1 if self.poly is None else self.poly.deg

    @property
    def norm(self):
        """q_v, the size of the residue field."""
        return self.field.q ** self.deg

    def sort_key(self):
        # finite places by (degree, coefficients); infinity after the degree-1 finite places
        if self.poly is None:
            return (1, 1, ())
        return (self.deg, 0 if self.deg == 1 else 1, self.poly.codes)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        return isinstance(other, Place) and self.field == other.field and self.poly == other.poly

    def __hash__(self):
        return hash(("place", self.field.q, self.poly))

    def __str__(self):
        return "inf" if self.poly is None else str(self.poly)

    def __repr__(self):
        return f"Place({self})"


def iter_places(field):
    """All places in order of degree; the infinite place follows the degree-1 finite ones."""
    d = 1
    while True:
        for f in iter_monic_irreducibles(field, d):
            yield Place(field, f)
        if d == 1:
            yield Place.infinity(field)
        d += 1


def places_of_degree(field, d):
    out = [Place(field, f) for f in iter_monic_irreducibles(field, d)]
    return out + [Place.infinity(field)] if d == 1 else out


class SplitType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"

    @property
    def artin_symbol(self):
        """Artin-Legendre symbol: +1 split, -1 inert, 0 ramified."""
        return {"split": 1, "inert": -1, "ramified": 0}[self.value]

    def __str__(self):
        return self.value


# -- valuations and residues ---------------------------------------------------------------

def _as_ratfunc(x, field=None):
    if isinstance(x, tuple):
        num, den = x
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        return RatFunc(num, den)
    return RatFunc.coerce(x, field)


def ord_at(v, num, den=None):
    """Valuation at v of num/den (den defaults to 1)."""
    if den is None:
        den = Poly.const(num.field, 1)
    if den.is_zero():
        raise ZeroDenominator("zero denominator")
    if num.is_zero():
        raise ZeroInput("the valuation of 0 is undefined")
    if v.is_infinite:
        return den.deg - num.deg
    return multiplicity(num, v.poly)[0] - multiplicity(den, v.poly)[0]


def _unit_residue(v, f):
    """(ord_v(f), residue of f / uniformizer^ord) for a nonzero polynomial f.

    At a finite place the residue is a polynomial of degree < deg(v) (an element of
    F_v = F_q[T]/(P)); at infinity it is the leading coefficient (uniformizer 1/T).
    """
    if v.is_infinite:
        return -f.deg, Poly.const(f.field, FqElem(f.field, f.lc))
    m, rest = multiplicity(f, v.poly)
    return m, rest % v.poly


class ResidueField:
    """F_v realised as F_q[T]/(P_v) (or F_q at infinity); elements are reduced Polys."""

    def __init__(self, place):
        self.place = place
        self.field = place.field
        self.size = place.norm
        self.modulus = place.poly if not place.is_infinite else Poly.T(place.field)

    def reduce(self, f):
        """Image of a v-integral polynomial."""
        if self.place.is_infinite:
            if f.deg > 0:
                raise ValueError("polynomial of positive degree is not integral at infinity")
            return f
        return f % self.modulus

    def mul(self, x, y):
        return (x * y) % self.modulus

    def pow(self, x, e):
        return x.powmod(e, self.modulus)

    def is_square(self, x):
        x = self.reduce(x)
        if x.is_zero() or not self.field.odd:
            return True
        return self.pow(x, (self.size - 1) // 2) == 1

    def legendre(self, x):
        """Quadratic character of a nonzero residue: +1 or -1."""
        return 1 if self.is_square(x) else -1


@lru_cache(maxsize=4096)
def residue_field(place):
    return ResidueField(place)


# -- quadratic splitting ---------------------------------------------------------------------

def split_type_kummer(v, d):
    """Behaviour of v in F(sqrt(d)), q odd."""
    if not d.field.odd:
        raise EvenCharacteristic("Kummer extensions need odd q")
    if d.is_zero():
        raise ZeroInput("d must be nonzero")
    if poly_is_square(d):
        raise SquareInput(f"{d} is a square in F; F(sqrt d) is not quadratic")
    m, res = _unit_residue(v, d)
    if m % 2:
        return SplitType.RAMIFIED
    return SplitType.SPLIT if residue_field(v).is_square(res) else SplitType.INERT


def split_type_general(v, a, b):
    """Behaviour of v in F(alpha), alpha^2 + a alpha + b = 0."""
    F = a.field
    if F.odd:
        d = a * a - b.scale(F.from_int(4))
        if d.is_zero() or poly_is_square(d):
            raise NotQuadratic(f"X^2 + ({a})X + ({b}) does not define a quadratic extension")
        return split_type_kummer(v, d)
    if not a.is_zero():
        raise UnsupportedArtinSchreier("Artin-Schreier splitting (even q, a != 0) is not supported")
    if poly_is_square(b):
        raise NotQuadratic(f"X^2 + ({b}) is a square; not a quadratic extension")
    return SplitType.RAMIFIED


# -- Hilbert symbols -------------------------------------------------------------------------

def hilbert_symbol(u, w, v):
    """Tame Hilbert symbol (u, w)_v for q odd; u, w are Polys, RatFuncs or (num, den) pairs."""
    u, w = _as_ratfunc(u, v.field), _as_ratfunc(w, v.field)
    if not v.field.odd:
        raise EvenCharacteristic("the tame symbol formula needs odd q")
    if u.is_zero() or w.is_zero():
        raise ZeroInput("Hilbert symbol of zero")
    k = residue_field(v)
    a_num, ru_num = _unit_residue(v, u.num)
    a_den, ru_den = _unit_residue(v, u.den)
    b_num, rw_num = _unit_residue(v, w.num)
    b_den, rw_den = _unit_residue(v, w.den)
    alpha, beta = a_num - a_den, b_num - b_den
    # residue of (-1)^{alpha beta} u^beta w^{-alpha}; the quadratic character is multiplicative
    sign = 1
    if alpha * beta % 2:
        sign *= k.legendre(Poly.const(v.field, -1))
    if beta % 2:
        sign *= k.legendre(ru_num) * k.legendre(ru_den)
    if alpha % 2:
        sign *= k.legendre(rw_num) * k.legendre(rw_den)
    return sign


def _finite_support(x):
    out = set()
    for f in (x.num, x.den):
        out |= set(prime_factors(f))
    return out


def prime_factors(f):
    """Monic irreducible factors of f, by trial division in degree order.

    Enough for the small polynomials in reciprocity checks; not a general factoring routine.
    """
    F = f.field
    out = []
    f = f.monic()
    d = 1
    while f.deg >= 2 * d:
        for g in iter_monic_irreducibles(F, d):
            if f.deg < 2 * d:
                break
            m, rest = multiplicity(f, g)
            if m:
                out.append(Place(F, g))
                f = rest
        d += 1
    if f.deg >= 1:
        out.append(Place(F, f))
    return out


def hilbert_product(u, w):
    """Product over every place of (u, w)_v, with the local symbols."""
    F = (u.num if isinstance(u, RatFunc) else (u[0] if isinstance(u, tuple) else u)).field
    u, w = _as_ratfunc(u, F), _as_ratfunc(w, F)
    places = sorted(_finite_support(u) | _finite_support(w)) + [Place.infinity(F)]
    symbols = {v: hilbert_symbol(u, w, v) for v in places}
    prod = 1
    for s in symbols.values():
        prod *= s
    return prod, symbols


def hilbert_product_check(u, w):
    """True iff the Hilbert symbols of (u, w) multiply to +1 over all places."""
    return hilbert_product(u, w)[0] == 1
