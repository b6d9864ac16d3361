"""Immutable simple graphs and hypergraphs with opaque integer vertex ids.

All derived orders (vertex lists, neighbor lists, component lists) are by
ascending id so that every operation is deterministic. Ids are stable under
deletion; nothing is ever renumbered behind the caller's back.
"""
from __future__ import annotations

import hashlib
import json
from typing import Iterable, Mapping, Optional, Sequence, Tuple


def _norm_edge(e) -> Tuple[int, int]:
    a, b = e
    if a == b:
        raise ValueError(f"loop edge {e!r} not allowed")
    return (a, b) if a < b else (b, a)


class Graph:
    """Finite simple undirected graph. Immutable value; equality is structural."""

    __slots__ = ("vertices", "edges", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int], edges: Iterable = ()):
        vs = sorted(set(vertices))
        es = sorted({_norm_edge(e) for e in edges})
        vset = set(vs)
        for a, b in es:
            if a not in vset or b not in vset:
                raise ValueError(f"edge ({a},{b}) has endpoint outside vertex set")
        self.vertices: Tuple[int, ...] = tuple(vs)
        self.edges: Tuple[Tuple[int, int], ...] = tuple(es)
        adj = {v: [] for v in vs}
        for a, b in es:
            adj[a].append(b)
            adj[b].append(a)
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self._hash = hash((self.vertices, self.edges))

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, a: int, b: int) -> bool:
        if a == b:
            return False
        return b in self._adj.get(a, ())

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs ------------------------------------------------

    def add_vertices(self, new: Iterable[int]) -> "Graph":
        return Graph(list(self.vertices) + list(new), self.edges)

    def add_edges(self, new: Iterable) -> "Graph":
        return Graph(self.vertices, list(self.edges) + [_norm_edge(e) for e in new])

    def fresh_id(self) -> int:
        return self.vertices[-1] + 1 if self.vertices else 0


def complete_graph(n: int) -> Graph:
    return Graph(range(n), [(a, b) for a in range(n) for b in range(a + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs >= 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    ss = set(s)
    unknown = ss - set(g.vertices)
    if unknown:
        raise ValueError(f"unknown vertex ids {sorted(unknown)}")
    return Graph(ss, [e for e in g.edges if e[0] in ss and e[1] in ss])


def delete(g: Graph, vertices: Iterable[int] = (), edges: Iterable = ()) -> Graph:
    vs = set(vertices)
    es = {_norm_edge(e) for e in edges}
    unknown_v = vs - set(g.vertices)
    if unknown_v:
        raise ValueError(f"unknown vertex ids {sorted(unknown_v)}")
    unknown_e = es - set(g.edges)
    if unknown_e:
        raise ValueError(f"unknown edges {sorted(unknown_e)}")
    keep = [v for v in g.vertices if v not in vs]
    kept_edges = [
        e for e in g.edges if e not in es and e[0] not in vs and e[1] not in vs
    ]
    return Graph(keep, kept_edges)


def connected_components(g: Graph) -> list:
    """Components as sorted vertex tuples, ordered by smallest contained id."""
    seen = set()
    comps = []
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
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def component_of(g: Graph, v: int) -> Tuple[int, ...]:
    for comp in connected_components(g):
        if v in comp:
            return comp
    raise ValueError(f"unknown vertex {v}")


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def union(a: Graph, b: Graph) -> Graph:
    return Graph(set(a.vertices) | set(b.vertices), list(a.edges) + list(b.edges))


def graph_hash(g: Graph) -> str:
    """Stable content hash used to reference host graphs from certificates."""
    payload = json.dumps(
        {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]},
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode()).hexdigest()


class Hypergraph:
    """Hypergraph with vertex ids disjoint from nothing in particular.

    Hyperedges are stored as sorted tuples, deduplicated, in sorted order.
    """

    __slots__ = ("vertices", "hyperedges")

    def __init__(self, vertices: Iterable[int], hyperedges: Iterable[Iterable[int]]):
        vs = sorted(set(vertices))
        vset = set(vs)
        hes = sorted({tuple(sorted(set(h))) for h in hyperedges})
        for h in hes:
            if not h:
                raise ValueError("empty hyperedge")
            for v in h:
                if v not in vset:
                    raise ValueError(f"hyperedge vertex {v} outside vertex set")
        self.vertices: Tuple[int, ...] = tuple(vs)
        self.hyperedges: Tuple[Tuple[int, ...], ...] = tuple(hes)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.vertices == other.vertices
            and self.hyperedges == other.hyperedges
        )

    def __repr__(self) -> str:
        return f"Hypergraph(n={len(self.vertices)}, m={len(self.hyperedges)})"


def incidence_node_ids(h: Hypergraph) -> Mapping[Tuple[int, ...], int]:
    """Fresh node id for each hyperedge: consecutive ids after max vertex id."""
    base = (max(h.vertices) + 1) if h.vertices else 0
    return {he: base + i for i, he in enumerate(h.hyperedges)}


def incidence_graph(h: Hypergraph) -> Graph:
    """Bipartite incidence graph; original ids kept, one fresh id per hyperedge."""
    ids = incidence_node_ids(h)
    edges = [(v, ids[he]) for he in h.hyperedges for v in he]
    return Graph(list(h.vertices) + sorted(ids.values()), edges)
