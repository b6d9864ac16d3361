"""Minor and contraction relations with explicit certifying models.

A contraction is certified by a total map phi (host vertex -> pattern
vertex), a minor by disjoint connected branch sets, a topological minor by
an injective branch-vertex map plus internally disjoint paths.  The find_*
searches are exhaustive within size caps, so a failure is a proof of
absence, not a timeout.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from .common import SizeCapExceeded, Verdict
from .graph import Graph, delete, induced_subgraph, is_connected
from .planarity import RotationEmbedding, _canon_cycle, faces_of, validate_embedding

MINOR_PATTERN_CAP = 6
MINOR_HOST_CAP = 30


class ContractionModel:
    """Total map phi from host vertices onto pattern vertices."""

    __slots__ = ("host", "pattern", "phi")

    def __init__(self, host: Graph, pattern: Graph, phi: Mapping[int, int]):
        for v in host.vertices:
            if v not in phi:
                raise ValueError("phi is not total: vertex %r unmapped" % (v,))
        for v, img in phi.items():
            if not host.has_vertex(v):
                raise ValueError("phi maps unknown host vertex %r" % (v,))
            if not pattern.has_vertex(img):
                raise ValueError("phi hits unknown pattern vertex %r" % (img,))
        self.host = host
        self.pattern = pattern
        self.phi = dict(phi)

    def model_of(self, v: int) -> frozenset:
        """The set of host vertices mapped to pattern vertex v."""
        return frozenset(u for u, img in self.phi.items() if img == v)


def verify_contraction(m: ContractionModel) -> Verdict:
    """Check the three contraction conditions; report the first failure.

    In order: each preimage induces a connected subgraph, each pattern
    edge's joint preimage induces a connected subgraph, and each host edge
    maps to equal endpoints or to a pattern edge.
    """
    models = {v: set() for v in m.pattern.vertices}
    for u, img in m.phi.items():
        models[img].add(u)
    empty = [v for v in m.pattern.vertices if not models[v]]
    if empty:
        raise ValueError("phi is not surjective: no preimage for %r" % (empty[0],))
    for v in m.pattern.vertices:
        if not is_connected(induced_subgraph(m.host, models[v])):
            return Verdict.reject("model-disconnected", witness=v,
                                  detail="preimage of %r induces a disconnected graph" % (v,))
    for v, u in m.pattern.edges:
        if not is_connected(induced_subgraph(m.host, models[v] | models[u])):
            return Verdict.reject("edge-union-disconnected", witness=(v, u),
                                  detail="joint preimage of pattern edge %r-%r is disconnected" % (v, u))
    for a, b in m.host.edges:
        fa, fb = m.phi[a], m.phi[b]
        if fa != fb and not m.pattern.has_edge(fa, fb):
            return Verdict.reject("host-edge-unmatched", witness=(a, b),
                                  detail="host edge %r-%r maps to non-edge %r-%r" % (a, b, fa, fb))
    return Verdict.accept()


class MinorModel:
    """Pairwise disjoint connected branch sets, one per pattern vertex."""

    __slots__ = ("host", "pattern", "branch_sets")

    def __init__(self, host: Graph, pattern: Graph, branch_sets: Mapping[int, Iterable[int]]):
        self.host = host
        self.pattern = pattern
        self.branch_sets = {v: frozenset(s) for v, s in branch_sets.items()}
        for v in self.branch_sets:
            if not pattern.has_vertex(v):
                raise ValueError("branch set for unknown pattern vertex %r" % (v,))
            for u in self.branch_sets[v]:
                if not host.has_vertex(u):
                    raise ValueError("branch set of %r contains unknown vertex %r" % (v, u))

    def to_contraction(self) -> ContractionModel:
        """The equivalent contraction of a host subgraph.

        The subgraph keeps all edges inside branch sets but only one
        realizing edge per pattern edge, so that stray host edges between
        non-adjacent branch sets do not break condition 3.
        """
        owner = {}
        for v, s in self.branch_sets.items():
            for u in s:
                owner[u] = v
        keep = []
        realized = set()
        for a, b in self.host.edges:
            if a not in owner or b not in owner:
                continue
            va, vb = owner[a], owner[b]
            if va == vb:
                keep.append((a, b))
            elif self.pattern.has_edge(va, vb):
                key = (va, vb) if va < vb else (vb, va)
                if key not in realized:
                    realized.add(key)
                    keep.append((a, b))
        sub = Graph(sorted(owner), keep)
        return ContractionModel(sub, self.pattern, owner)


def verify_minor_model(m: MinorModel) -> Verdict:
    """Check disjointness, connectivity, and edge realization of branch sets."""
    for v in m.pattern.vertices:
        if not m.branch_sets.get(v):
            return Verdict.reject("empty-branch-set", witness=v)
    ids = sorted(m.branch_sets)
    for i, v in enumerate(ids):
        for u in ids[i + 1:]:
            if m.branch_sets[v] & m.branch_sets[u]:
                return Verdict.reject("overlapping-branch-sets", witness=(v, u))
    for v in m.pattern.vertices:
        if not is_connected(induced_subgraph(m.host, m.branch_sets[v])):
            return Verdict.reject("branch-set-disconnected", witness=v)
    for v, u in m.pattern.edges:
        sv, su = m.branch_sets[v], m.branch_sets[u]
        if not any(b in su for a in sv for b in m.host.neighbors(a)):
            return Verdict.reject("unrealized-pattern-edge", witness=(v, u))
    return Verdict.accept()


def _mask_neighborhood(adj: List[int], mask: int) -> int:
    acc = 0
    m = mask
    while m:
        low = m & -m
        acc |= adj[low.bit_length() - 1]
        m ^= low
    return acc & ~mask


def _grow_connected(adj: List[int], s: int, size: int, ok: int,
                    max_size: int) -> Iterator[int]:
    # Binary-partition enumeration: branch on each frontier vertex in
    # ascending order, excluding it from all later branches at this level,
    # so every connected superset is produced exactly once.
    yield s
    if size == max_size:
        return
    ext = _mask_neighborhood(adj, s) & ok
    shut = 0
    while ext:
        v = ext & -ext
        ext ^= v
        yield from _grow_connected(adj, s | v, size + 1, ok & ~shut, max_size)
        shut |= v


def _connected_subsets(adj: List[int], allowed: int, anchors: int,
                       max_size: int) -> Iterator[int]:
    """All connected subsets of allowed meeting anchors, small sets early.

    Canonical form: the smallest anchor contained in the subset; smaller
    anchors are banned from the extension, so each subset appears once.
    """
    banned = 0
    seeds = anchors & allowed
    while seeds:
        low = seeds & -seeds
        seeds ^= low
        yield from _grow_connected(adj, low, 1, allowed & ~banned, max_size)
        banned |= low


def _host_masks(g: Graph) -> Tuple[List[int], List[int]]:
    order = list(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for a, b in g.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]
    return order, adj


def find_minor(host: Graph, pattern: Graph, pattern_cap: int = MINOR_PATTERN_CAP,
               host_cap: int = MINOR_HOST_CAP) -> Optional[MinorModel]:
    """Exhaustive branch-set search: a valid model, or None if none exists."""
    if pattern.n > pattern_cap:
        raise SizeCapExceeded("pattern capped at %d vertices, got %d" % (pattern_cap, pattern.n))
    if host.n > host_cap:
        raise SizeCapExceeded("host capped at %d vertices, got %d" % (host_cap, host.n))
    if pattern.n > host.n or pattern.m > host.m:
        return None
    if pattern.n == 0:
        return MinorModel(host, pattern, {})

    order, adj = _host_masks(host)
    full = (1 << host.n) - 1
    porder = sorted(pattern.vertices, key=lambda v: (-pattern.degree(v), v))

    def rec(i: int, used: int, sets: Dict[int, int]) -> Optional[Dict[int, int]]:
        if i == len(porder):
            return sets
        p = porder[i]
        free = full & ~used
        max_size = free.bit_count() - (len(porder) - i - 1)
        if max_size <= 0:
            return None
        req = [sets[q] for q in pattern.neighbors(p) if q in sets]
        anchors = (_mask_neighborhood(adj, req[0]) & free) if req else free
        for s in _connected_subsets(adj, free, anchors, max_size):
            if any(not _mask_neighborhood(adj, s) & r for r in req[1:]):
                continue
            sets[p] = s
            out = rec(i + 1, used | s, sets)
            if out is not None:
                return out
            del sets[p]
        return None

    found = rec(0, 0, {})
    if found is None:
        return None
    branch = {p: [order[i] for i in range(host.n) if s >> i & 1] for p, s in found.items()}
    return MinorModel(host, pattern, branch)


class SubdivisionEmbedding:
    """Injective branch-vertex map plus one host path per pattern edge."""

    __slots__ = ("host", "pattern", "vertex_map", "paths")

    def __init__(self, host: Graph, pattern: Graph, vertex_map: Mapping[int, int],
                 paths: Mapping[Tuple[int, int], Tuple[int, ...]]):
        self.host = host
        self.pattern = pattern
        self.vertex_map = dict(vertex_map)
        self.paths = {(min(e), max(e)): tuple(p) for e, p in paths.items()}

    def branch_vertices(self) -> frozenset:
        return frozenset(self.vertex_map.values())

    def all_vertices(self) -> frozenset:
        """Every host vertex used by the embedding."""
        used = set(self.vertex_map.values())
        for p in self.paths.values():
            used.update(p)
        return frozenset(used)

    def subgraph(self) -> Graph:
        """The subdivision itself as a host subgraph."""
        edges = []
        for p in self.paths.values():
            edges.extend(zip(p, p[1:]))
        return Graph(sorted(self.all_vertices()), edges)


def verify_topological_embedding(emb: SubdivisionEmbedding) -> Verdict:
    vm = emb.vertex_map
    if sorted(vm) != list(emb.pattern.vertices):
        return Verdict.reject("bad-vertex-map", witness=sorted(set(vm) ^ set(emb.pattern.vertices)))
    if len(set(vm.values())) != len(vm):
        return Verdict.reject("vertex-map-not-injective")
    for v in vm.values():
        if not emb.host.has_vertex(v):
            return Verdict.reject("unknown-host-vertex", witness=v)
    want = {(min(e), max(e)) for e in emb.pattern.edges}
    if set(emb.paths) != want:
        return Verdict.reject("path-keys-mismatch", witness=sorted(set(emb.paths) ^ want))
    interior_seen = set()
    branch = set(vm.values())
    for (a, b), p in sorted(emb.paths.items()):
        if len(p) < 2 or p[0] != vm[a] or p[-1] != vm[b]:
            return Verdict.reject("path-endpoints", witness=(a, b))
        if len(set(p)) != len(p):
            return Verdict.reject("path-self-intersects", witness=(a, b))
        for x, y in zip(p, p[1:]):
            if not emb.host.has_edge(x, y):
                return Verdict.reject("path-edge-missing", witness=(x, y))
        for x in p[1:-1]:
            if x in branch or x in interior_seen:
                return Verdict.reject("paths-overlap", witness=x)
        interior_seen.update(p[1:-1])
    return Verdict.accept()


def _iter_paths(host: Graph, start: int, goals, blocked: set,
                max_len: int) -> Iterator[Tuple[int, ...]]:
    """Simple paths from start into goals, shortest first, then lexicographic.

    Interior vertices avoid blocked and goals; goals is a predicate over
    candidate endpoints.
    """
    for length in range(1, max_len + 1):
        path = [start]
        on_path = {start}

        def dfs(remaining: int) -> Iterator[Tuple[int, ...]]:
            at = path[-1]
            for w in host.neighbors(at):
                if w in on_path or w in blocked:
                    continue
                if remaining == 1:
                    if goals(w):
                        yield tuple(path) + (w,)
                    continue
                if goals(w):
                    continue  # goal vertices only close a path
                path.append(w)
                on_path.add(w)
                yield from dfs(remaining - 1)
                path.pop()
                on_path.remove(w)

        yield from dfs(length)


def iter_topological_embeddings(host: Graph, pattern: Graph,
                                pattern_cap: int = MINOR_PATTERN_CAP,
                                host_cap: int = MINOR_HOST_CAP) -> Iterator[SubdivisionEmbedding]:
    """All subdivision embeddings of pattern in host, short paths first."""
    if pattern.n > pattern_cap:
        raise SizeCapExceeded("pattern capped at %d vertices, got %d" % (pattern_cap, pattern.n))
    if host.n > host_cap:
        raise SizeCapExceeded("host capped at %d vertices, got %d" % (host_cap, host.n))
    if pattern.n > host.n or pattern.m > host.m:
        return
    if pattern.n == 0:
        yield SubdivisionEmbedding(host, pattern, {}, {})
        return

    # Process pattern edges so each has a mapped endpoint when reached;
    # any leftover isolated pattern vertices are mapped at the end.
    comps = []
    seen = set()
    for v in pattern.vertices:
        if v in seen:
            continue
        comp_edges = []
        queue = [v]
        seen.add(v)
        while queue:
            x = queue.pop(0)
            for w in pattern.neighbors(x):
                e = (min(x, w), max(x, w))
                if e not in comp_edges:
                    comp_edges.append(e)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append((v, comp_edges))

    plan = []  # (kind, payload): ("root", v) or ("edge", (a, b))
    for root, comp_edges in comps:
        plan.append(("root", root))
        placed = {root}
        pending = list(comp_edges)
        while pending:
            for idx, (a, b) in enumerate(pending):
                if a in placed or b in placed:
                    break
            a, b = pending.pop(idx)
            plan.append(("edge", (a, b)))
            placed.update((a, b))

    vm: Dict[int, int] = {}
    paths: Dict[Tuple[int, int], Tuple[int, ...]] = {}
    used = set()  # branch images plus path interiors

    def degree_ok(hv: int, pv: int) -> bool:
        return host.degree(hv) >= pattern.degree(pv)

    def step(i: int) -> Iterator[SubdivisionEmbedding]:
        if i == len(plan):
            yield SubdivisionEmbedding(host, pattern, vm, paths)
            return
        kind, payload = plan[i]
        if kind == "root":
            v = payload
            for hv in host.vertices:
                if hv in used or not degree_ok(hv, v):
                    continue
                vm[v] = hv
                used.add(hv)
                yield from step(i + 1)
                used.remove(hv)
                del vm[v]
            return
        a, b = payload
        if a not in vm:
            a, b = b, a
        start = vm[a]
        room = host.n - len(used)
        if b in vm:
            goal = vm[b]
            blocked = used - {start, goal}
            for p in _iter_paths(host, start, lambda w: w == goal, blocked, room + 1):
                paths[(min(a, b), max(a, b))] = p if a < b else tuple(reversed(p))
                used.update(p[1:-1])
                yield from step(i + 1)
                used.difference_update(p[1:-1])
                del paths[(min(a, b), max(a, b))]
        else:
            blocked = used - {start}
            free_goal = lambda w: w not in used and degree_ok(w, b)
            for p in _iter_paths(host, start, free_goal, blocked, room):
                vm[b] = p[-1]
                paths[(min(a, b), max(a, b))] = p if a < b else tuple(reversed(p))
                used.update(p[1:])
                yield from step(i + 1)
                used.difference_update(p[1:])
                del paths[(min(a, b), max(a, b))]
                del vm[b]

    yield from step(0)


def find_topological_minor(host: Graph, pattern: Graph,
                           pattern_cap: int = MINOR_PATTERN_CAP,
                           host_cap: int = MINOR_HOST_CAP) -> Optional[SubdivisionEmbedding]:
    for emb in iter_topological_embeddings(host, pattern, pattern_cap, host_cap):
        return emb
    return None


def delta_y(g: Graph, triangle: Iterable[int]) -> Tuple[Graph, int]:
    """Replace a triangle by a new degree-3 hub adjacent to its corners."""
    tri = sorted(set(triangle))
    if len(tri) != 3:
        raise ValueError("need three distinct vertices, got %r" % (tri,))
    x, y, z = tri
    for a, b in ((x, y), (y, z), (x, z)):
        if not g.has_edge(a, b):
            raise ValueError("%r does not induce a triangle: %r-%r missing" % (tri, a, b))
    w = g.fresh_id()
    out = delete(g, edges=[(x, y), (y, z), (x, z)])
    out = out.add_vertices([w]).add_edges([(x, w), (y, w), (z, w)])
    return out, w


def subdivide(g: Graph, e: Tuple[int, int]) -> Tuple[Graph, int]:
    """Replace edge e by a length-two path through a fresh vertex."""
    a, b = e
    if not g.has_edge(a, b):
        raise ValueError("cannot subdivide missing edge %r" % (e,))
    w = g.fresh_id()
    out = delete(g, edges=[(a, b)])
    return out.add_vertices([w]).add_edges([(a, w), (w, b)]), w


def dissolve(g: Graph, v: int) -> Graph:
    """Remove a degree-2 vertex, joining its two neighbors directly."""
    nb = g.neighbors(v)
    if len(nb) != 2:
        raise ValueError("vertex %r has degree %d, need 2" % (v, len(nb)))
    a, b = nb
    if g.has_edge(a, b):
        raise ValueError("dissolving %r would double edge %r-%r" % (v, a, b))
    return delete(g, vertices=[v]).add_edges([(a, b)])


@dataclass(frozen=True)
class SmoothContractionWitness:
    """A contraction plus the closed disk that isolates one model.

    The disk is a union of faces of the embedded part of the host; every
    host vertex outside that union (including any vertex missing from the
    embedding entirely) must belong to the model of v.
    """

    model: ContractionModel
    embedding: RotationEmbedding
    v: int
    disk_faces: frozenset


def verify_smooth_contraction(w: SmoothContractionWitness) -> Verdict:
    ok = verify_contraction(w.model)
    if not ok:
        raise ValueError("invalid contraction model: %s" % ok.condition)
    emb_ok = validate_embedding(w.embedding)
    if not emb_ok:
        raise ValueError("invalid embedding: %s" % emb_ok.condition)
    host = w.model.host
    eg = w.embedding.graph
    if not (set(eg.vertices) <= set(host.vertices) and set(eg.edges) <= set(host.edges)):
        raise ValueError("embedded part is not a subgraph of the host")
    if not w.model.pattern.has_vertex(w.v):
        raise ValueError("unknown pattern vertex %r" % (w.v,))

    by_canon = {_canon_cycle(f): f for f in faces_of(w.embedding)}
    chosen = []
    for f in w.disk_faces:
        cf = by_canon.get(_canon_cycle(tuple(f)))
        if cf is None:
            return Verdict.reject("unknown-disk-face", witness=tuple(f))
        chosen.append(cf)
    if not chosen:
        return Verdict.reject("disk-not-a-disk", detail="no faces chosen")

    # Multiplicity of each undirected edge over the chosen faces: interior
    # edges are covered twice, boundary edges once.
    edge_count: Dict[Tuple[int, int], int] = {}
    region_vertices = set()
    for f in chosen:
        region_vertices.update(f)
        for i in range(len(f)):
            a, b = f[i], f[(i + 1) % len(f)]
            e = (a, b) if a < b else (b, a)
            edge_count[e] = edge_count.get(e, 0) + 1
    if any(c > 2 for c in edge_count.values()):
        return Verdict.reject("disk-not-a-disk", detail="an edge lies on more than two chosen face sides")

    # Chosen faces must form one edge-connected patch.
    face_adj = {i: set() for i in range(len(chosen))}
    edge_faces: Dict[Tuple[int, int], List[int]] = {}
    for i, f in enumerate(chosen):
        for j in range(len(f)):
            a, b = f[j], f[(j + 1) % len(f)]
            e = (a, b) if a < b else (b, a)
            edge_faces.setdefault(e, []).append(i)
    for members in edge_faces.values():
        for i in members:
            for j in members:
                if i != j:
                    face_adj[i].add(j)
    seen = {0}
    stack = [0]
    while stack:
        for j in face_adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != len(chosen):
        return Verdict.reject("disk-not-a-disk", detail="chosen faces are not edge-connected")

    if len(region_vertices) - len(edge_count) + len(chosen) != 1:
        return Verdict.reject("disk-not-a-disk", detail="face union is not simply connected")

    boundary = [e for e, c in edge_count.items() if c == 1]
    bdeg: Dict[int, int] = {}
    for a, b in boundary:
        bdeg[a] = bdeg.get(a, 0) + 1
        bdeg[b] = bdeg.get(b, 0) + 1
    if not boundary or any(d != 2 for d in bdeg.values()):
        return Verdict.reject("disk-not-a-disk", detail="boundary is not a single cycle")
    bverts = sorted(bdeg)
    bseen = {bverts[0]}
    bstack = [bverts[0]]
    badj: Dict[int, List[int]] = {}
    for a, b in boundary:
        badj.setdefault(a, []).append(b)
        badj.setdefault(b, []).append(a)
    while bstack:
        for y in badj[bstack.pop()]:
            if y not in bseen:
                bseen.add(y)
                bstack.append(y)
    if len(bseen) != len(bverts):
        return Verdict.reject("disk-not-a-disk", detail="boundary is not a single cycle")

    exterior = set(host.vertices) - region_vertices
    model_v = w.model.model_of(w.v)
    if exterior != model_v:
        return Verdict.reject("exterior-mismatch",
                              witness=sorted(exterior ^ model_v),
                              detail="vertices outside the disk differ from the model of %r" % (w.v,))

    # Every other model must avoid some face, so it fits in an open disk.
    all_faces = faces_of(w.embedding)
    for u in w.model.pattern.vertices:
        if u == w.v:
            continue
        mu = w.model.model_of(u)
        if not any(not (mu & set(f)) for f in all_faces):
            return Verdict.reject("model-not-in-open-disk", witness=u)
    return Verdict.accept()
