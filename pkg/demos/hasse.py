"""
Conics and Hasse principle violations
=====================================

The quaternion algebra as a conic, and the certificate that a curve of large
discriminant has points everywhere locally over a quadratic extension but no global points.
"""

from dellcurves.algebra import field_from_q, first_irreducible
from dellcurves.invariants import RamData
from dellcurves.local_points import gonality_lower_bound, hasse_certificate
from dellcurves.places import Place
from dellcurves.quaternion import conic_equation
from dellcurves.textio import parse_place

F = field_from_q(3)
small = RamData.make(F, [parse_place(F, "T"), parse_place(F, "T-1")])

# the conic is insoluble exactly at the places of R
c = conic_equation(small)
print(c.equation)
print([str(v) for v, ok in c.solubility if not ok])

# small discriminant: the gonality bound is too weak
print(hasse_certificate(small).reason)

# degrees 9 and 11: deg r = 20 and the bound exceeds 4
big = RamData.make(F, [Place.finite(first_irreducible(F, 9)),
                       Place.finite(first_irreducible(F, 11))])
gb = gonality_lower_bound(big)
print("gonality >=", gb.exact, "~", float(gb.exact))
h = hasse_certificate(big)
print("issued:", h.issued, "-", h.reason)
