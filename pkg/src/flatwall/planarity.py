"""Planarity testing that produces a combinatorial embedding (rotation system).

The embedder works per biconnected block with the classic incremental
face-splitting scheme: start from any cycle (two faces), then repeatedly pick a
bridge of the embedded subgraph, check which current faces contain all of its
attachment vertices, and embed one attachment-to-attachment path through the
bridge into such a face, splitting it in two. If some bridge has no admissible
face the block (hence the graph) is not planar; preferring bridges with exactly
one admissible face makes the procedure exact. Quadratic-ish and fine at desk
scale.

Faces are kept as directed vertex cycles so that every embedded edge occurs
exactly once in each direction; the rotation system is read off from the face
set and block rotations are concatenated at cut vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .common import Verdict
from .graph import Graph, Hypergraph, incidence_graph


# ---------------------------------------------------------------------------
# biconnected blocks


def biconnected_blocks(g: Graph) -> List[Tuple[Tuple[int, int], ...]]:
    """Edge sets of the biconnected components, iterative Hopcroft-Tarjan."""
    depth: Dict[int, int] = {}
    low: Dict[int, int] = {}
    parent: Dict[int, int] = {}
    blocks: List[Tuple[Tuple[int, int], ...]] = []
    estack: List[Tuple[int, int]] = []
    for root in g.vertices:
        if root in depth:
            continue
        depth[root] = low[root] = 0
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            pushed = False
            for w in it:
                if w not in depth:
                    parent[w] = v
                    depth[w] = low[w] = depth[v] + 1
                    estack.append((v, w))
                    stack.append((w, iter(g.neighbors(w))))
                    pushed = True
                    break
                if w != parent.get(v) and depth[w] < depth[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], depth[w])
            if pushed:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= depth[u]:
                    block = set()
                    while estack:
                        e = estack.pop()
                        block.add(tuple(sorted(e)))
                        if e == (u, v):
                            break
                    blocks.append(tuple(sorted(block)))
    return blocks


# ---------------------------------------------------------------------------
# face-splitting embedder for one biconnected block


def _find_cycle(g: Graph, start: int) -> List[int]:
    # DFS until a back edge closes a cycle; g is biconnected with >= 3 vertices
    parent = {start: None}
    stack = [start]
    order = []
    while stack:
        v = stack.pop()
        order.append(v)
        for w in g.neighbors(v):
            if w not in parent:
                parent[w] = v
                stack.append(w)
            elif parent[v] != w and parent.get(w) != v:
                # back edge v-w: build cycle from the tree paths
                pv, pw = [], []
                a = v
                while a is not None:
                    pv.append(a)
                    a = parent[a]
                a = w
                seen = set(pv)
                while a not in seen:
                    pw.append(a)
                    a = parent[a]
                meet = a
                cyc = pv[: pv.index(meet) + 1]
                cyc.reverse()  # [meet, ..., v]
                cyc.extend(pw)  # then v-w back edge, w's tree path down to meet
                if len(cyc) >= 3:
                    return cyc
    raise ValueError("no cycle found in supposed biconnected block")


def _bridges(g: Graph, emb_v: set, emb_e: set):
    """Bridges of g relative to the embedded subgraph.

    Returns a list of (attachments, path_provider) where path_provider() gives
    a path between two attachments whose interior avoids embedded vertices.
    """
    out = []
    for e in g.edges:
        if e not in emb_e and e[0] in emb_v and e[1] in emb_v:
            out.append((frozenset(e), list(e)))
    seen = set(emb_v)
    for v in g.vertices:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.neighbors(u):
                if w not in seen and w not in emb_v:
                    seen.add(w)
                    stack.append(w)
        compset = set(comp)
        attach = sorted({w for u in comp for w in g.neighbors(u) if w in emb_v})
        # biconnected block: every such component has >= 2 attachments
        a, b = attach[0], attach[1]
        # BFS a -> b through the component
        prev = {a: None}
        queue = [a]
        found = False
        while queue and not found:
            nxt = []
            for u in queue:
                cand = g.neighbors(u)
                for w in cand:
                    if w in prev:
                        continue
                    if w == b and u != a:
                        prev[w] = u
                        found = True
                        break
                    if w in compset:
                        prev[w] = u
                        nxt.append(w)
                if found:
                    break
            queue = nxt
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        path.reverse()
        out.append((frozenset(attach), path))
    return out


def _split_face(face: List[int], path: List[int]) -> Tuple[List[int], List[int]]:
    x, y = path[0], path[-1]
    i, j = face.index(x), face.index(y)
    if i <= j:
        seg_a = face[i : j + 1]
        seg_b = face[j:] + face[: i + 1]
    else:
        seg_a = face[i:] + face[: j + 1]
        seg_b = face[j : i + 1]
    interior = path[1:-1]
    face1 = seg_a[:-1] + [y] + list(reversed(interior))
    face2 = seg_b[:-1] + [x] + interior
    return face1, face2


def _embed_block(g: Graph) -> Optional[List[List[int]]]:
    """Faces of a planar embedding of a biconnected block, or None."""
    cyc = _find_cycle(g, g.vertices[0])
    faces: List[List[int]] = [list(cyc), list(reversed(cyc))]
    emb_v = set(cyc)
    emb_e = {tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))}
    total_edges = set(g.edges)
    while emb_e != total_edges:
        bridges = _bridges(g, emb_v, emb_e)
        best = None
        for attach, path in bridges:
            adm = [fi for fi, f in enumerate(faces) if attach <= set(f)]
            if not adm:
                return None
            key = (len(adm), sorted(attach))
            if best is None or key < best[0]:
                best = (key, adm[0], path)
        _, face_idx, path = best
        f1, f2 = _split_face(faces[face_idx], path)
        faces[face_idx] = f1
        faces.insert(face_idx + 1, f2)
        emb_v.update(path)
        for i in range(len(path) - 1):
            emb_e.add(tuple(sorted((path[i], path[i + 1]))))
    return faces


def _rotation_from_faces(faces: List[List[int]]) -> Dict[int, Tuple[int, ...]]:
    nxt: Dict[int, Dict[int, int]] = {}
    for f in faces:
        m = len(f)
        for t in range(m):
            a, b, c = f[t - 1], f[t], f[(t + 1) % m]
            nxt.setdefault(b, {})[a] = c
    rot: Dict[int, Tuple[int, ...]] = {}
    for v, mapping in nxt.items():
        start = min(mapping)
        cycle = [start]
        cur = mapping[start]
        while cur != start:
            cycle.append(cur)
            cur = mapping[cur]
        if len(cycle) != len(mapping):
            raise ValueError("face set does not induce a single rotation cycle")
        rot[v] = tuple(cycle)
    return rot


# ---------------------------------------------------------------------------
# public embedding type


@dataclass(frozen=True)
class RotationEmbedding:
    """Rotation system plus one designated outer facial walk."""

    graph: Graph
    rotation: Dict[int, Tuple[int, ...]]
    outer_face: Tuple[int, ...]


def trace_faces(graph: Graph, rotation: Dict[int, Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Facial walks: orbits of directed edges under the rotation successor rule."""
    faces = []
    seen = set()
    for a in graph.vertices:
        for b in rotation.get(a, ()):
            if (a, b) in seen:
                continue
            walk = []
            x, y = a, b
            while (x, y) not in seen:
                seen.add((x, y))
                walk.append(x)
                rot = rotation[y]
                z = rot[(rot.index(x) + 1) % len(rot)]
                x, y = y, z
            faces.append(tuple(walk))
    return faces


def _canon_cycle(walk: Sequence[int]) -> Tuple[int, ...]:
    w = tuple(walk)
    rots = [w[i:] + w[:i] for i in range(len(w))]
    return min(rots)


def embed_planar(g) -> Optional[RotationEmbedding]:
    """Planar embedding with rotation system, or None if not planar."""
    if isinstance(g, Hypergraph):
        g = incidence_graph(g)
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return None
    rotation: Dict[int, List[int]] = {v: [] for v in g.vertices}
    for block in sorted(biconnected_blocks(g)):
        bverts = sorted({v for e in block for v in e})
        if len(block) == 1:
            a, b = block[0]
            rotation[a].append((b,))
            rotation[b].append((a,))
            continue
        sub = Graph(bverts, block)
        faces = _embed_block(sub)
        if faces is None:
            return None
        rot = _rotation_from_faces(faces)
        for v, cyc in rot.items():
            rotation[v].append(cyc)
    merged = {v: tuple(x for cyc in cycles for x in cyc) for v, cycles in rotation.items()}
    faces = trace_faces(g, merged)
    if faces:
        outer = max(faces, key=lambda f: (len(f), _canon_cycle(f)))
    else:
        outer = ()
    return RotationEmbedding(g, merged, tuple(outer))


def is_planar(g) -> bool:
    return embed_planar(g) is not None


def validate_embedding(emb: RotationEmbedding) -> Verdict:
    g = emb.graph
    if set(emb.rotation) != set(g.vertices):
        return Verdict.reject("rotation-domain", sorted(set(emb.rotation) ^ set(g.vertices)))
    for v in g.vertices:
        if tuple(sorted(emb.rotation[v])) != g.neighbors(v):
            return Verdict.reject("rotation-neighbors", v)
    faces = trace_faces(g, emb.rotation)
    if emb.outer_face and _canon_cycle(emb.outer_face) not in {_canon_cycle(f) for f in faces}:
        return Verdict.reject("outer-face", emb.outer_face)
    # Euler formula per connected component; an isolated vertex counts one face
    from .graph import connected_components

    for comp in connected_components(g):
        cset = set(comp)
        ecount = sum(1 for e in g.edges if e[0] in cset)
        fcount = sum(1 for f in faces if set(f) <= cset) if ecount else 1
        if len(comp) - ecount + fcount != 2:
            return Verdict.reject("euler", comp)
    return Verdict.accept()


def faces_of(emb: RotationEmbedding) -> List[Tuple[int, ...]]:
    return trace_faces(emb.graph, emb.rotation)


def find_face(emb: RotationEmbedding, vertex_walk: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """The facial walk equal to the given closed walk (up to rotation), if any."""
    want = _canon_cycle(vertex_walk)
    for f in faces_of(emb):
        if len(f) == len(want) and _canon_cycle(f) == want:
            return f
        if len(f) == len(want) and _canon_cycle(tuple(reversed(f))) == want:
            return f
    return None


def embeds_in_disk_with_boundary(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff g embeds in a closed disk whose boundary is exactly this cycle.

    Every cycle edge is subdivided and a hub is attached to all cycle and
    subdivision vertices: a planar embedding of the gadget exists iff some face
    of g is bounded by the full cycle, i.e. everything else can be drawn inside.
    """
    cyc = list(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise ValueError("boundary must be a simple cycle")
    pairs = [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    for a, b in pairs:
        if not g.has_edge(a, b):
            raise ValueError(f"boundary pair ({a},{b}) is not an edge")
    nid = g.fresh_id()
    verts = list(g.vertices)
    edges = [e for e in g.edges if tuple(sorted(e)) not in {tuple(sorted(p)) for p in pairs}]
    hub_targets = list(cyc)
    for a, b in pairs:
        s = nid
        nid += 1
        verts.append(s)
        edges.append((a, s))
        edges.append((s, b))
        hub_targets.append(s)
    hub = nid
    verts.append(hub)
    edges.extend((hub, t) for t in hub_targets)
    return is_planar(Graph(verts, edges))
