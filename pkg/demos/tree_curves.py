"""
Genus and quotient graphs
=========================

Closed-form invariants of the curve attached to a ramification set R,
and the three cases in which the quotient graph has a small presentation.
"""

from dellcurves.algebra import field_from_q
from dellcurves.invariants import RamData, graph_invariants, presentation_if_tree
from dellcurves.textio import parse_place


def show(q, R):
    F = field_from_q(q)
    ram = RamData.make(F, [parse_place(F, s) for s in R])
    gi = graph_invariants(ram)
    pres = presentation_if_tree(ram)
    print(f"q={q} R={R}: g={gi.g} V1={gi.V1} Vq1={gi.Vq1} E={gi.E} ({pres.case})")
    for rel in pres.relations:
        print("   ", rel)
    if pres.graph:
        print("    graph:", pres.graph)


# two places of degree 1: the quotient graph is a segment
show(3, ["T", "T-1"])

# q=4 with all four degree-1 places: a tree with 8 spokes
show(4, ["T", "T+1", "T+a", "T+a2"])

# degrees 1 and 2: two vertices joined by q+1 edges
show(3, ["T", "T^2+1"])

# anything else has positive genus and no short presentation
show(5, ["T", "T^3+T+1"])
