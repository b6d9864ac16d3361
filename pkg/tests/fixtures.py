"""Shared handmade fixtures: contraction witnesses and wired hosts."""

from flatwall.generators import wall
from flatwall.graph import Graph, delete
from flatwall.minors import ContractionModel, SmoothContractionWitness, subdivide
from flatwall.planarity import _canon_cycle, embed_planar, faces_of


def identity_witness(g: Graph, loaded: int) -> SmoothContractionWitness:
    """g contracts onto itself; the disk is everything minus the loaded corner."""
    model = ContractionModel(g, g, {v: v for v in g.vertices})
    part = delete(g, [loaded])
    emb = embed_planar(part)
    assert emb is not None
    outer = _canon_cycle(emb.outer_face)
    faces = [f for f in faces_of(emb) if _canon_cycle(f) != outer]
    return SmoothContractionWitness(model, emb, loaded, faces)


def subdivided_witness(g: Graph, loaded: int) -> SmoothContractionWitness:
    """Every edge of g subdivided once; midpoints contract into an endpoint."""
    host = g
    phi = {v: v for v in g.vertices}
    for a, b in sorted(g.edges):
        host, mid = subdivide(host, (a, b))
        phi[mid] = loaded if loaded in (a, b) else min(a, b)
    model = ContractionModel(host, g, phi)
    hidden = sorted(v for v, p in phi.items() if p == loaded)
    part = delete(host, hidden)
    emb = embed_planar(part)
    assert emb is not None
    outer = _canon_cycle(emb.outer_face)
    faces = [f for f in faces_of(emb) if _canon_cycle(f) != outer]
    return SmoothContractionWitness(model, emb, loaded, faces)


def wired_nonflat_host(k: int, wiring) -> Graph:
    """wall(k) plus two fresh vertices linking the anti-diametrical corner
    pairs, threaded into the compass interior so the cross paths count.

    wiring: pair of interior vertices the fresh vertices also attach to.
    """
    w = wall(k)
    g = w.graph
    c1, c2, c3, c4 = w.corners
    z1 = max(g.vertices) + 1
    z2 = z1 + 1
    i1, i2 = wiring
    return g.add_vertices([z1, z2]).add_edges(
        [(c1, z1), (z1, c3), (z1, i1), (c2, z2), (z2, c4), (z2, i2)])


def interior_vertices(k: int):
    from flatwall.wall import identity_wall, perimeter
    w = identity_wall(k)
    return sorted(w.vertices() - set(perimeter(w)))


def apexed_wall_host(k: int, attachments):
    """wall(k) plus one fresh vertex per attachment list, wired as given.

    Returns (host, apex ids, identity wall anchored in the wall part).
    """
    from flatwall.wall import identity_wall
    wg = wall(k)
    base = max(wg.graph.vertices) + 1
    apexes = tuple(base + i for i in range(len(attachments)))
    g = wg.graph.add_vertices(apexes)
    edges = []
    for aj, targets in zip(apexes, attachments):
        edges.extend((aj, t) for t in targets)
    return g.add_edges(edges), apexes, identity_wall(k)
