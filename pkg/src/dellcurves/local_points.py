"""Local points of X^D over finite extensions K of completions F_v, and what follows globally.

Verdicts at good places may need a finite search for a quadratic witness; everything else
is a closed-form rule. Each verdict carries a certificate that can be re-checked by hand.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra.field import fq_distinguished_element
from .algebra.poly import Poly, poly_is_square
from .errors import BadPlace, ValidationError
from .invariants import RamData, odd_indicator
from .places import Place, iter_places, split_type_kummer, SplitType


@dataclass(frozen=True)
class ExtensionProfile:
    e: int = 1
    f: int = 1

    def __post_init__(self):
        if not (isinstance(self.e, int) and isinstance(self.f, int)) or self.e < 1 or self.f < 1:
            raise ValidationError(f"e and f must be positive integers, got e={self.e}, f={self.f}")


@dataclass(frozen=True)
class Certificate:
    """Why a verdict holds.

    kind is "witness" (a quadratic alpha with its splitting table), "exhausted" (every
    candidate up to ``bound`` rejected, ``count`` of them) or "closed-form" (``rule``).
    """

    kind: str
    rule: str = ""
    witness_a: Poly = None
    witness_c: object = None
    splitting: tuple = ()
    bound: int = None
    count: int = None

    def splitting_dict(self):
        return dict(self.splitting)

    def to_json(self):
        out = {
            "kind": self.kind,
            "witness_a": None if self.witness_a is None else str(self.witness_a),
            "witness_c": None if self.witness_c is None else str(self.witness_c),
            "splitting": {str(v): str(t) for v, t in self.splitting},
        }
        if self.rule:
            out["rule"] = self.rule
        if self.bound is not None:
            out["bound"] = self.bound
            out["count"] = self.count
        return out


@dataclass(frozen=True)
class LocalVerdict:
    place: Place
    e: int
    f: int
    has_points: bool
    certificate: Certificate

    def __bool__(self):
        return self.has_points

    def to_json(self):
        return {"place": str(self.place), "e": self.e, "f": self.f,
                "has_points": self.has_points, "certificate": self.certificate.to_json()}


def _closed(place, prof, value, rule):
    return LocalVerdict(place, prof.e, prof.f, value, Certificate("closed-form", rule=rule))


# -- good places -----------------------------------------------------------------------------

def _candidate_as(F, bound):
    """All a in A with deg(a) <= bound, zero first, then by (degree, coefficients)."""
    yield Poly(F)
    nonzero = range(1, F.q)
    for d in range(bound + 1):
        for lower in product(range(F.q), repeat=d):
            for top in nonzero:
                yield Poly(F, lower + (top,))


def _check_candidate(a, c, bP, ram, o, f):
    """Splitting table if X^2 + aX + c P_o^f gives a witness, else None."""
    F = a.field
    b = bP.scale(c)
    d = a * a - b.scale(F.from_int(4))
    if poly_is_square(d):
        return None  # F(alpha) is not quadratic
    table = []
    for v in tuple(ram.R) + (Place.infinity(F),):
        t = split_type_kummer(v, d)
        if t is SplitType.SPLIT:
            return None
        table.append((v, t))
    t_o = split_type_kummer(o, d)
    divides = f >= 2 and (a % o.poly).is_zero()
    if divides and t_o is SplitType.SPLIT:
        return None
    table.append((o, t_o))
    return tuple(sorted(table, key=lambda vt: vt[0].sort_key()))


def _search_chunk(args):
    spec, R, o_codes, f, a_codes = args
    ram = RamData.make(spec, [Place(spec, Poly(spec, r)) for r in R])
    o = Place(spec, Poly(spec, o_codes))
    bP = o.poly ** f
    for codes in a_codes:
        a = Poly(spec, codes)
        for c in range(1, spec.q):
            table = _check_candidate(a, c, bP, ram, o, f)
            if table is not None:
                return codes, c, table
    return None


def _search(ram, o, f, bound, parallel):
    F = ram.spec
    cands = [a.codes for a in _candidate_as(F, bound)]
    R = tuple(v.poly.codes for v in ram.R)
    if parallel and parallel > 1 and len(cands) > 64:
        size = math.ceil(len(cands) / (4 * parallel))
        chunks = [cands[i:i + size] for i in range(0, len(cands), size)]
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_search_chunk, [(F, R, o.poly.codes, f, ch) for ch in chunks]))
        # chunks are in candidate order, so the first hit is the least witness
        hit = next((r for r in results if r is not None), None)
    else:
        hit = _search_chunk((F, R, o.poly.codes, f, cands))
    return hit, len(cands)


def points_good_place(ram, o, e=1, f=1, parallel=None):
    """Decide X^D(K) != empty for K/F_o with o outside R and finite."""
    prof = ExtensionProfile(e, f)
    if o.is_infinite or o in ram.R:
        raise BadPlace(f"{o} is not a good finite place")
    if f % 2 == 0:
        return _closed(o, prof, True, "f-even")
    F = ram.spec
    if not F.odd:
        return _closed(o, prof, True, "inseparable witness")
    bound = -(-f * o.deg // 2)
    hit, n_a = _search(ram, o, f, bound, parallel)
    if hit is None:
        cert = Certificate("exhausted", bound=bound, count=(F.q - 1) * n_a)
        return LocalVerdict(o, e, f, False, cert)
    codes, c, table = hit
    cert = Certificate("witness", witness_a=Poly(F, codes), witness_c=F.elem(c), splitting=table)
    return LocalVerdict(o, e, f, True, cert)


# -- bad places and infinity -----------------------------------------------------------------

def points_bad_place(ram, o, e=1, f=1):
    prof = ExtensionProfile(e, f)
    if o not in ram.R:
        raise BadPlace(f"{o} is not in R")
    if f % 2 == 0:
        return _closed(o, prof, True, "f-even")
    if e % 2:
        return _closed(o, prof, False, "e-odd-f-odd")
    F = ram.spec
    if not F.odd:
        return _closed(o, prof, True, "inseparable: (R-o) and infinity ramify")
    others = [v for v in ram.R if v != o] + [Place.infinity(F)]
    # only two square classes of c, hence only two ramified quadratic extensions of F_o
    for c in (F.one(), fq_distinguished_element(F)):
        d = o.poly.scale(c)
        table = tuple((v, split_type_kummer(v, d)) for v in others)
        if all(t is not SplitType.SPLIT for _, t in table):
            cert = Certificate("closed-form", rule="e-even: no split place for c", witness_c=c,
                               splitting=table)
            return LocalVerdict(o, e, f, True, cert)
    return _closed(o, prof, False, "e-even: both square classes meet a split place")


def points_infinity(ram, e=1, f=1):
    prof = ExtensionProfile(e, f)
    inf = Place.infinity(ram.spec)
    if e == 1 and f == 1:
        return _closed(inf, prof, bool(ram.odd_flag), "Odd(R)")
    return _closed(inf, prof, True, "non-trivial extension")


def local_points(ram, v, e=1, f=1, parallel=None):
    if v.is_infinite:
        return points_infinity(ram, e, f)
    if v in ram.R:
        return points_bad_place(ram, v, e, f)
    return points_good_place(ram, v, e, f, parallel)


# -- global consequences ---------------------------------------------------------------------

@dataclass(frozen=True)
class GlobalVerdict:
    has_points: bool
    reason_place: Place

    def __bool__(self):
        return self.has_points


def global_points(ram):
    """X^D(F) is empty: any place of R already has no points over its completion."""
    v = min(ram.R)
    assert not points_bad_place(ram, v, 1, 1).has_points
    return GlobalVerdict(False, v)


def find_small_place(spec, S):
    """Least place outside S; its degree is at most floor(log_q(sum of degrees)) + 1."""
    S = set(S)
    s = sum(v.deg for v in S)
    for v in iter_places(spec):
        if v not in S:
            if s:
                k = 0
                while spec.q ** (k + 1) <= s:
                    k += 1
                assert v.deg <= k + 1
            return v


@dataclass(frozen=True)
class GonalityBound:
    exact: Fraction
    crude_squared: Fraction
    deg_r: int

    def crude_le_exact(self):
        return self.crude_squared <= self.exact ** 2


def gonality_lower_bound(ram):
    """Lower bound on the gonality over the constant extension; the crude bound is squared
    because q^{deg(r)/2 - 3} is irrational for odd deg(r) and q not a square."""
    q, n = ram.q, ram.deg_r
    num = math.prod(v.norm - 1 for v in ram.R)
    exact = Fraction(num, (q * q - 1) * (q * n + 3))
    crude_sq = Fraction(q) ** (n - 6) / (n + 3) ** 2
    return GonalityBound(exact, crude_sq, n)


@dataclass
class DiophantineReport:
    m_v: dict
    m_loc: int
    global_empty: bool
    gonality: GonalityBound
    hasse: object = None

    def to_json(self):
        return {
            "m_v": {str(v): m for v, m in sorted(self.m_v.items(), key=lambda t: t[0].sort_key())},
            "m_loc": self.m_loc,
            "global_empty": self.global_empty,
            "gonality_bound": str(self.gonality.exact),
            "hasse": None if self.hasse is None else self.hasse.to_json(),
        }


def min_local_degrees(ram, extra_places=None):
    """m_v over R, infinity and some good places (degree-1 by default); m_loc = lcm."""
    F = ram.spec
    if extra_places is None:
        extra_places = [Place(F, Poly(F, (c, 1))) for c in range(F.q)]
    places = sorted(set(ram.R) | {Place.infinity(F)} | set(extra_places))
    m_v = {}
    for v in places:
        if local_points(ram, v, 1, 1).has_points:
            m_v[v] = 1
        else:
            # degree 2 always works: f = 2 at finite places, any nontrivial L at infinity
            ext = ExtensionProfile(1, 2)
            assert local_points(ram, v, ext.e, ext.f).has_points
            m_v[v] = 2
    m_loc = math.lcm(*m_v.values())
    assert m_loc == 2, "a place of R has no points over its completion"
    return m_v, m_loc


@dataclass(frozen=True)
class HasseCertificate:
    issued: bool
    m_loc: int
    global_empty: bool
    bound: Fraction
    deg_r: int
    reason: str

    @property
    def deg_r_ge_20(self):
        return self.deg_r >= 20

    def to_json(self):
        return {"issued": self.issued, "m_loc": self.m_loc, "global_empty": self.global_empty,
                "bound": str(self.bound), "deg_r": self.deg_r, "deg_r_ge_20": self.deg_r_ge_20,
                "reason": self.reason}


def hasse_certificate(ram):
    """Certify the hypotheses delta > 2 m_loc > 2 that force Hasse violations over
    infinitely many quadratic L/F."""
    _, m_loc = min_local_degrees(ram, extra_places=())
    glob = global_points(ram)
    gb = gonality_lower_bound(ram)
    threshold = 2 * m_loc
    if gb.exact > threshold:
        reason = f"bound {gb.exact} > {threshold} = 2*m_loc"
        issued = True
    else:
        reason = f"bound {gb.exact} <= {threshold} = 2*m_loc"
        issued = False
    issued = issued and m_loc == 2 and not glob.has_points
    return HasseCertificate(issued, m_loc, not glob.has_points, gb.exact, gb.deg_r, reason)


def diophantine_report(ram):
    m_v, m_loc = min_local_degrees(ram)
    return DiophantineReport(m_v, m_loc, not global_points(ram).has_points,
                             gonality_lower_bound(ram), hasse_certificate(ram))


__all__ = [
    "ExtensionProfile", "Certificate", "LocalVerdict", "points_good_place", "points_bad_place",
    "points_infinity", "local_points", "GlobalVerdict", "global_points", "find_small_place",
    "GonalityBound", "gonality_lower_bound", "DiophantineReport", "min_local_degrees",
    "HasseCertificate", "hasse_certificate", "diophantine_report", "odd_indicator",
]
