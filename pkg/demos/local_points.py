"""
Local points
============

Deciding whether the curve has points over extensions of a completion,
with the certificate that backs each answer.
"""

from dellcurves.algebra import field_from_q
from dellcurves.invariants import RamData
from dellcurves.local_points import local_points, min_local_degrees
from dellcurves.places import Place
from dellcurves.textio import parse_place

F = field_from_q(3)
ram = RamData.make(F, [parse_place(F, "T"), parse_place(F, "T-1")])

# a good place: the search finds a quadratic field in which no place of R or infinity splits
v = local_points(ram, parse_place(F, "T-2"))
print(v.has_points, v.certificate.witness_a, v.certificate.witness_c)
for w, kind in v.certificate.splitting:
    print("   ", w, kind)

# places of R: no points over unramified odd-degree extensions
print(local_points(ram, parse_place(F, "T"), e=1, f=1).certificate.rule)
print(local_points(ram, parse_place(F, "T"), e=2, f=1).certificate.rule)

# infinity, and the minimal local degree over all places
print(local_points(ram, Place.infinity(F)).certificate.rule)
m_v, m_loc = min_local_degrees(ram)
print({str(w): m for w, m in m_v.items()}, "m_loc =", m_loc)

# an instance with no points over F_o: every candidate meets a split place
empty = RamData.make(F, [parse_place(F, "T+1"), parse_place(F, "T^3+T^2+2")])
v = local_points(empty, parse_place(F, "T"))
print(v.has_points, v.certificate.kind, "candidates:", v.certificate.count)
