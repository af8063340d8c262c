from collections import Counter
from itertools import combinations_with_replacement

import pytest

from dellcurves.algebra import count_monic_irreducibles, field_from_q
from dellcurves.errors import PlaceNotInR, ValidationError
from dellcurves.invariants import (RamData, bad_fibre_long_edges, genus, genus_from_degrees,
                                   graph_invariants, graph_invariants_from_degrees,
                                   group_structure, odd_indicator, presentation_if_tree)
from dellcurves.places import Place
from conftest import place, places_up_to


def ram_of(F, *polys):
    return RamData.make(F, [place(F, *c) for c in polys])


def test_odd_indicator(F3):
    assert odd_indicator([place(F3, 0, 1), place(F3, 2, 1)]) == 1
    assert odd_indicator([place(F3, 0, 1), place(F3, 1, 0, 1)]) == 0
    assert odd_indicator([]) == 1
    assert odd_indicator([Place.infinity(F3)]) == 1


def test_ramdata_validation(F3):
    with pytest.raises(ValidationError):
        RamData.make(F3, [place(F3, 0, 1)])
    with pytest.raises(ValidationError):
        RamData.make(F3, [place(F3, 0, 1), place(F3, 0, 1)])
    with pytest.raises(ValidationError):
        RamData.make(F3, [place(F3, 0, 1), Place.infinity(F3)])
    ram = ram_of(F3, (0, 1), (2, 1))
    assert ram.r.is_monic() and ram.deg_r == 2 and str(ram.r) == "T^2+2T"


def test_genus_examples(F3):
    assert genus(ram_of(F3, (0, 1), (2, 1))) == 0
    assert genus(ram_of(F3, (0, 1), (1, 0, 1))) == 3
    assert genus_from_degrees(4, [1, 1, 1, 1]) == 0
    # 1 + (2*26)/8 - (3/4)*2*1 = 6
    assert genus_from_degrees(3, [1, 3]) == 6


def test_graph_examples(F3):
    gi = graph_invariants(ram_of(F3, (0, 1), (2, 1)))
    assert (gi.g, gi.V1, gi.Vq1, gi.E) == (0, 2, 0, 1)
    gi = graph_invariants_from_degrees(4, [1, 1, 1, 1])
    assert (gi.g, gi.V1, gi.Vq1, gi.E) == (0, 8, 2, 9)
    gi = graph_invariants(ram_of(F3, (0, 1), (1, 0, 1)))
    assert (gi.g, gi.V1, gi.Vq1, gi.E) == (3, 0, 2, 4)
    assert gi.h1 == gi.g


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_sweep_properties(q):
    for n in (2, 4):
        for degs in combinations_with_replacement(range(1, 5), n):
            if any(count_monic_irreducibles(q, d) < m for d, m in Counter(degs).items()):
                continue
            gi = graph_invariants_from_degrees(q, degs)
            assert min(gi.g, gi.V1, gi.Vq1, gi.E) >= 0
            assert gi.E + 1 == gi.g + gi.V1 + gi.Vq1
            assert (gi.V1 > 0) == all(d % 2 for d in degs)
            tree = degs == (1, 1) or (q == 4 and degs == (1, 1, 1, 1))
            assert (gi.g == 0) == tree


def test_bad_fibre_counts(F3):
    ram = ram_of(F3, (0, 1), (2, 1))
    assert bad_fibre_long_edges(ram, place(F3, 0, 1)).long_edge_count == 0
    ram = ram_of(F3, (0, 1), (1, 0, 1))
    bf = bad_fibre_long_edges(ram, place(F3, 1, 0, 1))
    assert bf.long_edge_count == 2 and bf.lengths_allowed == (1, 4)
    with pytest.raises(PlaceNotInR):
        bad_fibre_long_edges(ram, place(F3, 1, 1))


def test_long_edges_vanish_at_odd_degree_places():
    F = field_from_q(3)
    for R in [places_up_to(F, 3)[i:i + 2] for i in range(0, 10, 2)]:
        ram = RamData.make(F, R)
        for o in ram.R:
            if o.deg % 2:
                assert bad_fibre_long_edges(ram, o).long_edge_count == 0


def test_group_structure(F3):
    gs = group_structure(ram_of(F3, (0, 1), (2, 1)))
    assert (gs.free_rank, gs.torsion_class_count, gs.generator_bound) == (0, 2, 2)
    gs = group_structure(ram_of(F3, (0, 1), (1, 0, 1)))
    assert gs.torsion == "Gamma_tor = F_3^x"
    assert gs.generator_bound == 2 + 3
    gs = group_structure(ram_of(F3, (0, 1), (1, 2, 0, 1)))
    assert (gs.free_rank, gs.torsion_class_count, gs.generator_bound) == (6, 2, 8)


def test_presentations(F3):
    p = presentation_if_tree(ram_of(F3, (0, 1), (2, 1)))
    assert p.case == "Tree1" and p.generator_orders == (8, 8)
    assert p.relations[-1] == "g1^4 = g2^4"
    F5 = field_from_q(5)
    p = presentation_if_tree(ram_of(F5, (0, 1), (4, 1)))
    assert p.case == "Tree1" and p.generator_orders == (24, 24) and "g1^6 = g2^6" in p.relations
    F4 = field_from_q(4)
    p = presentation_if_tree(RamData.make(F4, places_up_to(F4, 1)))
    assert p.case == "Tree2" and p.generator_count == 8 and set(p.generator_orders) == {15}
    p = presentation_if_tree(ram_of(F3, (0, 1), (1, 0, 1)))
    assert p.case == "Hyperelliptic" and p.graph == "2 vertices, 4 edges"
    p = presentation_if_tree(ram_of(F3, (0, 1), (1, 2, 0, 1)))
    assert p.case == "General" and p.relations == ()
