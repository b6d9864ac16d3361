import itertools

import pytest

from flatwall.generators import wall
from flatwall.graph import Graph, Hypergraph
from flatwall.rural import (RuralDivision, boundary, check_disk_embeddable, check_linkage,
                            division_from_edge_lists, internal_flaps, trivial_division,
                            validate_rural)
from flatwall.wall import Compass, SubdividedWall, compass, identity_wall, perimeter

from oracles import min_vertex_cut


def bare_compass(k: int) -> Compass:
    w = identity_wall(k)
    return compass(w.host, w)


def augmented_compass(extra_vertices, extra_edges) -> Compass:
    """wall(2) with extras riding in the interior component."""
    w = identity_wall(2)
    g = w.host.add_vertices(extra_vertices).add_edges(extra_edges)
    return compass(g, SubdividedWall(g, 2, w.original, w.paths))


def test_boundary_of_edge_flap():
    c = bare_compass(2)
    flap = Graph([0, 1], [(0, 1)])
    b = boundary(c, flap)
    assert 0 in b  # corner
    assert 1 in b  # meets the rest of the wall


def test_boundary_requires_subgraph():
    c = bare_compass(1)
    with pytest.raises(ValueError):
        boundary(c, Graph([99], []))
    with pytest.raises(ValueError):
        boundary(c, Graph([0, 2], [(0, 2)]))  # not a compass edge


def test_trivial_division_validates_heights_1_to_3():
    for k in (1, 2, 3):
        c = bare_compass(k)
        rd = trivial_division(c)
        assert len(rd.flaps) == c.graph.m
        assert validate_rural(rd)


def test_division_positions_match_edges():
    c = bare_compass(1)
    rd = division_from_edge_lists(c, [[e] for e in c.graph.edges])
    assert rd.boundaries()


def test_property1_missing_edge():
    c = bare_compass(1)
    groups = [[e] for e in list(c.graph.edges)[:-1]]
    v = validate_rural(division_from_edge_lists(c, groups))
    assert not v and v.condition == "property-1"


def test_property1_duplicated_edge():
    c = bare_compass(1)
    groups = [[e] for e in c.graph.edges] + [[list(c.graph.edges)[0]]]
    v = validate_rural(division_from_edge_lists(c, groups))
    assert not v and v.condition == "property-1"


def test_property2_equal_boundaries():
    # a path 8-z-9 beside the interior edge (8,9): same boundary {8, 9}
    c = augmented_compass([20], [(8, 20), (20, 9)])
    groups = [[(8, 20), (20, 9)]] + [[e] for e in wall(2).graph.edges]
    v = validate_rural(division_from_edge_lists(c, groups))
    assert not v and v.condition == "property-2"


def test_property3_boundary_pair_not_joined():
    # two wall edges at a degree-3 vertex in one flap: its boundary has a
    # pair whose only inside-connection runs through the boundary itself
    c = bare_compass(2)
    es = list(c.graph.edges)
    at2 = [e for e in es if 2 in e]
    assert len(at2) == 3
    groups = [at2[:2]] + [[e] for e in es if e not in at2[:2]]
    v = validate_rural(division_from_edge_lists(c, groups))
    assert not v and v.condition == "property-3"


def test_property4_fat_boundary():
    # a star flap touching the wall at four places
    c = augmented_compass([20], [(8, 20), (9, 20), (2, 20), (3, 20)])
    star = [(8, 20), (9, 20), (2, 20), (3, 20)]
    groups = [star] + [[e] for e in wall(2).graph.edges]
    v = validate_rural(division_from_edge_lists(c, groups))
    assert not v and v.condition == "property-4"


def test_property5_unlinkable_boundary():
    # pendant triangle behind the cut vertex 8: boundary {t1, t2} cannot
    # reach two corners disjointly
    t1, t2, t3 = 20, 21, 22
    c = augmented_compass([t1, t2, t3],
                          [(8, t1), (8, t2), (t1, t2), (t2, t3), (t1, t3)])
    tri = [(t1, t2), (t2, t3), (t1, t3)]
    rest = [e for e in c.graph.edges if e not in tri]
    groups = [tri] + [[e] for e in rest]
    v = validate_rural(division_from_edge_lists(c, groups))
    assert not v and v.condition == "property-5"
    assert v.witness == ("linkage", 0)


def test_flap_outside_compass_is_an_error():
    c = bare_compass(1)
    rd = RuralDivision(c, [Graph([98, 99], [(98, 99)])])
    with pytest.raises(ValueError):
        validate_rural(rd)


def test_internal_flaps_avoid_the_perimeter():
    c = augmented_compass([20], [(8, 20), (9, 20)])
    groups = [[(8, 20)], [(9, 20)]] + [[e] for e in wall(2).graph.edges]
    rd = division_from_edge_lists(c, groups)
    ring = set(perimeter(rd.compass.wall))
    inner = internal_flaps(rd)
    assert all(not (set(d.vertices) & ring) for d in inner)
    assert len(inner) == 3  # the two new flaps plus the old interior edge


def test_check_disk_embeddable_corner_cases():
    h = Hypergraph([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert check_disk_embeddable(h, (0, 1, 2, 3))
    with pytest.raises(ValueError):
        check_disk_embeddable(h, (0, 1, 2, 9))


def test_check_linkage_matches_menger_oracle():
    for k in (1, 2):
        c = bare_compass(k)
        corners = list(c.corners)
        vs = sorted(c.graph.vertices)
        for size in (1, 2, 3):
            for e in list(itertools.combinations(vs, size))[:15]:
                want = min_vertex_cut(c.graph, list(e), corners) >= size
                assert check_linkage(c, frozenset(e)) == want


def test_check_linkage_rejects_oversize_boundary():
    c = bare_compass(2)
    non_corners = [v for v in c.graph.vertices if v not in c.corners][:5]
    with pytest.raises(ValueError):
        check_linkage(c, frozenset(non_corners))
