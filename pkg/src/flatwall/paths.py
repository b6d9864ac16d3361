"""Vertex-disjoint path machinery.

Two search problems live here: the exhaustive two-disjoint-paths decision
(exact, exponential, fine at the scales we run) and the maximum number of
vertex-disjoint paths between two terminal sets (Menger via unit-capacity
max-flow, polynomial).
"""

import hashlib
import time
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

from .graph import Graph


class DisjointPathsResult:
    """Outcome of a two-disjoint-paths search.

    verdict is "found", "none" or "unknown" (budget ran out).  For "found",
    paths holds the two vertex sequences; for "none" the search was
    exhaustive and transcript_hash fingerprints the exploration order.
    """

    __slots__ = ("verdict", "paths", "explored", "transcript_hash")

    def __init__(self, verdict: str, paths, explored: int, transcript_hash: str):
        self.verdict = verdict
        self.paths = paths
        self.explored = explored
        self.transcript_hash = transcript_hash

    def __bool__(self) -> bool:
        return self.verdict == "found"

    def __repr__(self) -> str:
        return "DisjointPathsResult(%r, explored=%d)" % (self.verdict, self.explored)


def _bfs_path(g: Graph, s: int, t: int, blocked: set) -> Optional[List[int]]:
    """Shortest s-t path avoiding blocked vertices, or None."""
    if s in blocked or t in blocked:
        return None
    parent = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            path = []
            while u is not None:
                path.append(u)
                u = parent[u]
            return path[::-1]
        for w in g.neighbors(u):
            if w not in parent and w not in blocked:
                parent[w] = u
                queue.append(w)
    return None


class _OutOfTime(Exception):
    pass


def two_disjoint_paths(g: Graph, first: Tuple[int, int], second: Tuple[int, int],
                       budget_ms: Optional[float] = None) -> DisjointPathsResult:
    """Search for vertex-disjoint paths first[0]..first[1] and second[0]..second[1].

    Depth-first enumeration of candidate first paths, abandoning a branch as
    soon as the rest of the graph disconnects the second pair.  Endpoints
    count: the paths must be disjoint including their ends.
    """
    s1, t1 = first
    s2, t2 = second
    for v in (s1, t1, s2, t2):
        if not g.has_vertex(v):
            raise ValueError("vertex %r is not in the graph" % (v,))
    if len({s1, t1, s2, t2}) != 4:
        raise ValueError("need four distinct endpoints")

    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
    log = hashlib.sha256()
    log.update(("two-disjoint-paths %d-%d %d-%d\n" % (s1, t1, s2, t2)).encode())
    explored = 0

    path = [s1]
    on_path = {s1}
    banned = {s1, s2, t2}  # the first path may never touch the second pair

    def extend() -> Optional[Tuple[List[int], List[int]]]:
        nonlocal explored
        explored += 1
        if deadline is not None and time.monotonic() > deadline:
            raise _OutOfTime
        u = path[-1]
        if u == t1:
            other = _bfs_path(g, s2, t2, on_path)
            log.update(("done %s %d\n" % (" ".join(map(str, path)), other is not None)).encode())
            if other is not None:
                return list(path), other
            return None
        if _bfs_path(g, s2, t2, on_path) is None:
            log.update(("cut %d %d\n" % (u, len(path))).encode())
            return None
        for w in g.neighbors(u):
            if w in banned or w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            hit = extend()
            path.pop()
            on_path.discard(w)
            if hit is not None:
                return hit
        return None

    try:
        hit = extend()
    except _OutOfTime:
        return DisjointPathsResult("unknown", None, explored, "")
    log.update(("end %d\n" % explored).encode())
    if hit is not None:
        return DisjointPathsResult("found", hit, explored, log.hexdigest())
    return DisjointPathsResult("none", None, explored, log.hexdigest())


def max_vertex_disjoint_paths(g: Graph, sources: Iterable[int],
                              sinks: Iterable[int]) -> Tuple[int, List[List[int]]]:
    """Maximum set of pairwise vertex-disjoint paths from sources to sinks.

    Unit vertex capacities, so disjointness includes endpoints; a vertex in
    both sets contributes a zero-length path.  Returns (count, paths).
    """
    src = sorted(set(sources))
    snk = sorted(set(sinks))
    for v in src + snk:
        if not g.has_vertex(v):
            raise ValueError("terminal %r is not in the graph" % (v,))
    idx = {v: i for i, v in enumerate(g.vertices)}
    n = g.n
    # node 2i = v_in, 2i+1 = v_out, 2n = source, 2n+1 = sink
    S, T = 2 * n, 2 * n + 1
    cap = [dict() for _ in range(2 * n + 2)]

    def arc(u, w):
        cap[u][w] = 1
        cap[w].setdefault(u, 0)

    for v in g.vertices:
        arc(2 * idx[v], 2 * idx[v] + 1)
    for a, b in g.edges:
        arc(2 * idx[a] + 1, 2 * idx[b])
        arc(2 * idx[b] + 1, 2 * idx[a])
    for v in src:
        arc(S, 2 * idx[v])
    for v in snk:
        arc(2 * idx[v] + 1, T)

    flow = 0
    while True:
        parent = {S: None}
        queue = deque([S])
        while queue and T not in parent:
            u = queue.popleft()
            for w in sorted(cap[u]):
                if w not in parent and cap[u][w] > 0:
                    parent[w] = u
                    queue.append(w)
        if T not in parent:
            break
        w = T
        while parent[w] is not None:
            u = parent[w]
            cap[u][w] -= 1
            cap[w][u] += 1
            w = u
        flow += 1

    # walk the unit flow out of S; vertex capacities keep the walks simple
    back = list(g.vertices)
    paths = []
    for v in src:
        if cap[S][2 * idx[v]] != 0:
            continue
        walk = [v]
        node = 2 * idx[v] + 1
        while T not in cap[node] or cap[node][T] != 0:
            nxt = next(w for w in sorted(cap[node])
                       if w % 2 == 0 and w < 2 * n and cap[node][w] == 0)
            cap[node][nxt] = 1  # consume the arc so parallel walks stay apart
            walk.append(back[nxt // 2])
            node = nxt + 1
        cap[node][T] = 1
        paths.append(walk)
    assert len(paths) == flow
    return flow, paths
