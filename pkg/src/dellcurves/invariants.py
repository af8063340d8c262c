"""Closed-form invariants of X^D: genus, quotient-graph counts, bad-fibre edges, unit groups.

All formulas are evaluated over ``fractions.Fraction``; a non-integral result means the
inputs violate the formulas' hypotheses and raises ``NonIntegral``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .algebra.poly import Poly
from .errors import NonIntegral, PlaceNotInR, ValidationError
from .places import Place


def odd_indicator(places):
    """Odd(S): 1 if every place of S has odd degree (vacuously for S empty)."""
    return int(all(v.deg % 2 for v in places))


@dataclass(frozen=True)
class RamData:
    """Ramification set R of D together with its discriminant r = prod P_x."""

    spec: object
    R: tuple
    r: Poly = field(compare=False)

    @classmethod
    def make(cls, spec, places):
        places = tuple(sorted(places))
        if len(set(places)) != len(places):
            raise ValidationError("R contains a duplicate place")
        if any(v.is_infinite for v in places):
            raise ValidationError("R must consist of finite places (D is split at infinity)")
        if len(places) < 2 or len(places) % 2:
            raise ValidationError("R must have even cardinality >= 2")
        r = Poly.const(spec, 1)
        for v in places:
            if v.field != spec:
                raise ValidationError(f"{v} is not a place of F_{spec.q}(T)")
            r = r * v.poly
        return cls(spec, places, r)

    @property
    def q(self):
        return self.spec.q

    @property
    def odd_flag(self):
        return odd_indicator(self.R)

    @property
    def deg_r(self):
        return self.r.deg

    @property
    def degrees(self):
        return tuple(v.deg for v in self.R)


def _as_int(x, what):
    if x.denominator != 1:
        raise NonIntegral(f"{what} = {x} is not an integer")
    return int(x)


def genus_from_degrees(q, degrees):
    """g(R) from q and the multiset of place degrees of R."""
    odd = int(all(d % 2 for d in degrees))
    g = (1 + Fraction(prod(q ** d - 1 for d in degrees), q * q - 1)
         - Fraction(q, q + 1) * 2 ** (len(degrees) - 1) * odd)
    return _as_int(g, "g(R)")


def genus(ram):
    return genus_from_degrees(ram.q, ram.degrees)


@dataclass(frozen=True)
class GraphInvariants:
    g: int
    V1: int
    Vq1: int
    E: int
    euler_ok: bool

    @property
    def h1(self):
        return self.g


def graph_invariants_from_degrees(q, degrees):
    g = genus_from_degrees(q, degrees)
    odd = int(all(d % 2 for d in degrees))
    n = len(degrees)
    V1 = 2 ** (n - 1) * odd
    Vq1 = _as_int(Fraction(2, q - 1) * (g - 1 + Fraction(2 ** n, 4) * odd), "V_{q+1}")
    E = _as_int(Fraction(V1 + (q + 1) * Vq1, 2), "E")
    euler_ok = E + 1 == g + V1 + Vq1
    if not euler_ok:
        raise NonIntegral(f"Euler identity fails: E+1={E + 1}, g+V1+Vq1={g + V1 + Vq1}")
    return GraphInvariants(g, V1, Vq1, E, euler_ok)


def graph_invariants(ram):
    return graph_invariants_from_degrees(ram.q, ram.degrees)


@dataclass(frozen=True)
class BadFibreData:
    o: Place
    long_edge_count: int
    lengths_allowed: tuple


def bad_fibre_long_edges(ram, o):
    """Number of length-(q+1) edges in the dual graph of the special fibre at o in R."""
    if o not in ram.R:
        raise PlaceNotInR(f"{o} is not in R")
    rest = [v for v in ram.R if v != o]
    count = 2 ** (len(ram.R) - 1) * odd_indicator(rest) * (1 - odd_indicator([o]))
    return BadFibreData(o, count, (1, ram.q + 1))


@dataclass(frozen=True)
class PresentationReport:
    case: str
    generator_count: int
    generator_orders: tuple
    relations: tuple
    free_rank: int
    torsion: str
    torsion_class_count: int
    generator_bound: int
    graph: str = ""
    notes: tuple = ()


def group_structure(ram):
    """Structure of the unit group of a maximal order, without a full presentation."""
    q = ram.q
    g = genus(ram)
    n = len(ram.R)
    bound = 2 ** (n - 1) + g
    if ram.odd_flag:
        torsion = f"maximal finite subgroups ~ F_{q * q}^x"
        classes = 2 ** (n - 1)
    else:
        torsion = f"Gamma_tor = F_{q}^x"
        classes = 0
    return PresentationReport(
        case="General", generator_count=bound, generator_orders=(), relations=(),
        free_rank=g, torsion=torsion, torsion_class_count=classes, generator_bound=bound,
        notes=("Gamma/Gamma_tor is free of rank g(R)",))


def presentation_if_tree(ram):
    q = ram.q
    base = group_structure(ram)
    degs = sorted(ram.degrees)
    if degs == [1, 1]:
        e1, e2 = q * q - 1, q + 1
        return PresentationReport(
            case="Tree1", generator_count=2, generator_orders=(e1, e1),
            relations=(f"g1^{e1} = 1", f"g2^{e1} = 1", f"g1^{e2} = g2^{e2}"),
            free_rank=0, torsion=base.torsion, torsion_class_count=base.torsion_class_count,
            generator_bound=base.generator_bound, graph="segment: 2 vertices, 1 edge")
    if q == 4 and degs == [1, 1, 1, 1]:
        rels = tuple(f"g{i}^15 = 1" for i in range(1, 9)) + (
            " = ".join(f"g{i}^5" for i in range(1, 9)),)
        return PresentationReport(
            case="Tree2", generator_count=8, generator_orders=(15,) * 8, relations=rels,
            free_rank=0, torsion=base.torsion, torsion_class_count=base.torsion_class_count,
            generator_bound=base.generator_bound,
            graph="tree: 2 vertices of degree 5 joined by an edge, 4 terminal vertices on each")
    if degs == [1, 2]:
        return PresentationReport(
            case="Hyperelliptic", generator_count=base.generator_count, generator_orders=(),
            relations=(), free_rank=base.free_rank, torsion=base.torsion,
            torsion_class_count=base.torsion_class_count, generator_bound=base.generator_bound,
            graph=f"2 vertices, {q + 1} edges",
            notes=("minimal model: drop terminal vertices (none here)",))
    return base


def minimal_model_note():
    return "the minimal regular model is obtained by removing the terminal vertices"
