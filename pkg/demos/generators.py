"""
Torsion units and the tree
==========================

For q odd and R = {T - a1, T - a2}, two torsion units of the maximal order
generate the group. We build them, embed them into 2x2 matrices over
Laurent series in 1/T, and check which vertices they fix.
"""

from dellcurves.algebra import LaurentSeries, field_from_q
from dellcurves.quaternion import (MatrixRep, cyclic_generator, matrix_embed, quat_order,
                                   torsion_units, uniformizer_pi, vertex_fix_check)

F = field_from_q(3)
tu = torsion_units(F, 1, 0)
print("b0 =", tu.b0, " d0 =", tu.d0)
print("theta1 =", tu.theta1)
print("theta2 =", tu.theta2)

# 1 - theta generates the cyclic group of order q^2 - 1
for theta in (tu.theta1, tu.theta2):
    g = 1 - theta
    print(g, "has order", quat_order(g, 8), "; least generator:", cyclic_generator(theta))

# the image of 1 - theta1 is a constant matrix
prec = 30
for row in matrix_embed(1 - tu.theta1, prec).rows():
    print("   ", [e.to_string() for e in row])

# theta1 fixes the standard vertex v, theta2 the adjacent vertex w
pi = uniformizer_pi(tu, prec)
v = MatrixRep.identity(F, prec)
w = MatrixRep.diag(LaurentSeries.const(F, 1, prec), pi)
t1, t2 = matrix_embed(tu.theta1, prec), matrix_embed(tu.theta2, prec)
print("theta1 fixes v:", vertex_fix_check(t1, v, prec), " w:", vertex_fix_check(t1, w, prec))
print("theta2 fixes w:", vertex_fix_check(t2, w, prec), " v:", vertex_fix_check(t2, v, prec))
