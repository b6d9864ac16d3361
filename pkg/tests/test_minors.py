import random

import pytest

from flatwall.common import SizeCapExceeded
from flatwall.generators import grid, wall
from flatwall.graph import Graph, complete_graph, cycle_graph, delete, path_graph
from flatwall.minors import (ContractionModel, MinorModel, SmoothContractionWitness,
                             delta_y, dissolve, find_minor, find_topological_minor,
                             subdivide, verify_contraction, verify_minor_model,
                             verify_smooth_contraction)
from flatwall.planarity import embed_planar, faces_of, _canon_cycle

from oracles import has_minor_by_partition, random_graph


def test_find_minor_on_known_hosts():
    g3, _ = grid(3, 3)
    m = find_minor(g3, complete_graph(4))
    assert m is not None and verify_minor_model(m)
    assert find_minor(g3, complete_graph(5)) is None  # planar host
    assert find_minor(wall(2).graph, complete_graph(4)) is not None
    assert find_minor(cycle_graph(5), cycle_graph(3)) is not None
    assert find_minor(path_graph(6), cycle_graph(3)) is None


def test_find_minor_matches_partition_oracle():
    rng = random.Random(5)
    pats = [complete_graph(3), cycle_graph(4), path_graph(3), complete_graph(4)]
    for _ in range(30):
        host = random_graph(rng, rng.randint(3, 6), 0.45)
        pat = rng.choice(pats)
        got = find_minor(host, pat)
        want = has_minor_by_partition(host, pat)
        assert (got is not None) == want
        if got is not None:
            assert verify_minor_model(got)


def test_find_minor_caps():
    with pytest.raises(SizeCapExceeded):
        find_minor(grid(7, 7)[0], complete_graph(4))
    with pytest.raises(SizeCapExceeded):
        find_minor(grid(3, 3)[0], complete_graph(7))


def test_minor_model_constructor_rejects_unknown_vertices():
    g = path_graph(3)
    with pytest.raises(ValueError):
        MinorModel(g, path_graph(2), {0: [0], 1: [9]})
    with pytest.raises(ValueError):
        MinorModel(g, path_graph(2), {0: [0], 7: [1]})


def test_verify_minor_model_conditions():
    g = path_graph(4)
    pat = path_graph(2)
    v = verify_minor_model(MinorModel(g, pat, {0: [0], 1: [2]}))
    assert not v and v.condition == "unrealized-pattern-edge"
    v = verify_minor_model(MinorModel(g, pat, {0: [0, 2], 1: [3]}))
    assert not v and v.condition == "branch-set-disconnected"
    v = verify_minor_model(MinorModel(g, pat, {0: [0, 1], 1: [1, 2]}))
    assert not v and v.condition == "overlapping-branch-sets"
    assert verify_minor_model(MinorModel(g, pat, {0: [0, 1], 1: [2]}))


def test_contraction_model_roundtrip():
    g = cycle_graph(6)
    phi = {0: 0, 1: 0, 2: 1, 3: 1, 4: 2, 5: 2}
    m = ContractionModel(g, cycle_graph(3), phi)
    assert verify_contraction(m)
    assert m.model_of(1) == frozenset({2, 3})


def test_contraction_must_be_total_and_onto_known_vertices():
    g = cycle_graph(4)
    with pytest.raises(ValueError):
        ContractionModel(g, cycle_graph(3), {0: 0, 1: 1, 2: 2})
    with pytest.raises(ValueError):
        ContractionModel(g, cycle_graph(3), {0: 0, 1: 1, 2: 2, 3: 9})


def test_minor_to_contraction():
    g, _ = grid(3, 3)
    m = find_minor(g, complete_graph(4))
    cm = m.to_contraction()
    assert verify_contraction(cm)


def test_subdivide_and_dissolve_are_inverse():
    g = cycle_graph(4)
    g2, nv = subdivide(g, (0, 1))
    assert g2.n == 5 and g2.m == 5
    assert sorted(g2.neighbors(nv)) == [0, 1]
    assert dissolve(g2, nv) == g
    with pytest.raises(ValueError):
        subdivide(g, (0, 2))


def test_dissolve_needs_degree_two():
    with pytest.raises(ValueError):
        dissolve(complete_graph(4), 0)


def test_delta_y_replaces_triangle_by_hub():
    g = complete_graph(3)
    g2, hub = delta_y(g, (0, 1, 2))
    assert g2.n == 4 and g2.m == 3
    assert sorted(g2.neighbors(hub)) == [0, 1, 2]
    with pytest.raises(ValueError):
        delta_y(path_graph(3), (0, 1, 2))


def test_find_topological_minor_subdivision():
    g = cycle_graph(8)
    emb = find_topological_minor(g, cycle_graph(4))
    assert emb is not None
    # K4 is 3-regular, so topological containment needs three edge-paths per vertex
    k4 = complete_graph(4)
    host, _ = subdivide(k4, (0, 1))
    host, _ = subdivide(host, (2, 3))
    assert find_topological_minor(host, k4) is not None
    assert find_topological_minor(cycle_graph(8), k4) is None


def _identity_witness(g, loaded):
    model = ContractionModel(g, g, {v: v for v in g.vertices})
    part = delete(g, [loaded])
    emb = embed_planar(part)
    assert emb is not None
    outer = _canon_cycle(emb.outer_face)
    faces = [f for f in faces_of(emb) if _canon_cycle(f) != outer]
    return SmoothContractionWitness(model, emb, loaded, faces)


def test_smooth_contraction_identity_witness():
    from flatwall.generators import gamma
    tg = gamma(4)
    w = _identity_witness(tg.graph, tg.loaded)
    assert verify_smooth_contraction(w)


def test_smooth_contraction_rejects_wrong_disk():
    from flatwall.generators import gamma
    tg = gamma(4)
    w = _identity_witness(tg.graph, tg.loaded)
    # punch an interior face out of the disk: the union stops being a disk
    faces = sorted(w.disk_faces)
    bad = SmoothContractionWitness(w.model, w.embedding, w.v, faces[:2] + faces[3:])
    v = verify_smooth_contraction(bad)
    assert not v and v.condition == "disk-not-a-disk"
