"""Graph isomorphism and subdivision matching.

The matcher refines vertex colors (degree, then multiset of neighbor colors,
iterated to a fixpoint) and then backtracks inside color classes, smallest
class first. Exact; meant for graphs of desk scale, not for adversarial
inputs.
"""
from __future__ import annotations

from collections import Counter
from typing import Dict, List, Optional, Tuple

from .graph import Graph


def _refine_colors(g: Graph) -> Dict[int, int]:
    color = {v: g.degree(v) for v in g.vertices}
    while True:
        sig = {
            v: (color[v], tuple(sorted(color[w] for w in g.neighbors(v))))
            for v in g.vertices
        }
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in g.vertices}
        if new == color:
            return color
        color = new


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[Dict[int, int]]:
    """A vertex bijection g1 -> g2 preserving adjacency, or None."""
    if g1.n != g2.n or g1.m != g2.m:
        return None
    c1, c2 = _refine_colors(g1), _refine_colors(g2)
    if Counter(c1.values()) != Counter(c2.values()):
        return None
    by_color2: Dict[int, List[int]] = {}
    for v, c in sorted(c2.items()):
        by_color2.setdefault(c, []).append(v)
    # order g1 vertices: rarest color first, then connect-out from placed ones
    order = sorted(g1.vertices, key=lambda v: (len(by_color2[c1[v]]), v))
    placed: List[int] = []
    for v in order:
        if v in placed:
            continue
        placed.append(v)
        queue = [v]
        while queue:
            u = queue.pop(0)
            for w in g1.neighbors(u):
                if w not in placed:
                    placed.append(w)
                    queue.append(w)
    mapping: Dict[int, int] = {}
    used = set()

    def extend(i: int) -> bool:
        if i == len(placed):
            return True
        v = placed[i]
        for w in by_color2[c1[v]]:
            if w in used:
                continue
            ok = True
            for u in mapping:
                if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


# ---------------------------------------------------------------------------
# subdivision matching via branch multigraphs


def _branch_multigraph(g: Graph):
    """Collapse maximal chains of degree-2 vertices.

    Returns (branch_vertices, chains, cycles) where chains is a list of
    (u, v, length) for paths between branch vertices (length = edge count) and
    cycles is a list of lengths of components that are bare cycles.
    """
    branch = [v for v in g.vertices if g.degree(v) != 2]
    bset = set(branch)
    chains: List[Tuple[int, int, int]] = []
    seen_dir = set()
    for u in branch:
        for w in g.neighbors(u):
            if (u, w) in seen_dir:
                continue
            # walk the chain starting with edge u-w until the next branch vertex
            path = [u, w]
            seen_dir.add((u, w))
            prev, cur = u, w
            while cur not in bset:
                nxt = [x for x in g.neighbors(cur) if x != prev][0]
                prev, cur = cur, nxt
                path.append(cur)
            seen_dir.add((path[-1], path[-2]))
            chains.append((min(u, path[-1]), max(u, path[-1]), len(path) - 1))
    # components with no branch vertex at all are bare cycles
    reach = set(branch)
    stack = list(branch)
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in reach:
                reach.add(w)
                stack.append(w)
    cycles: List[int] = []
    comp_seen = set()
    for v in g.vertices:
        if v in reach or v in comp_seen:
            continue
        comp = [v]
        comp_seen.add(v)
        stk = [v]
        while stk:
            u = stk.pop()
            for w in g.neighbors(u):
                if w not in comp_seen and w not in reach:
                    comp_seen.add(w)
                    comp.append(w)
                    stk.append(w)
        cycles.append(len(comp))
    chains.sort()
    return branch, chains, cycles


def is_isomorphic_to_subdivision(big: Graph, small: Graph) -> bool:
    """True iff big is isomorphic to some subdivision of small.

    Both graphs are collapsed to branch multigraphs (vertices of degree != 2
    joined by chains with recorded lengths, plus bare-cycle components); big
    matches iff there is a multigraph isomorphism under which every chain of
    small maps to a chain at least as long, and bare cycles pair up likewise.
    """
    b1, ch1, cy1 = _branch_multigraph(big)
    b2, ch2, cy2 = _branch_multigraph(small)
    if len(b1) != len(b2) or len(ch1) != len(ch2) or len(cy1) != len(cy2):
        return False
    # bare cycles: ascending pairing realizes a big >= small matching if any exists
    if any(big_len < small_len for big_len, small_len in zip(sorted(cy1), sorted(cy2))):
        return False
    # group chains by endpoints
    def grouped(chains):
        d: Dict[Tuple[int, int], List[int]] = {}
        for u, v, ln in chains:
            d.setdefault((u, v), []).append(ln)
        for lens in d.values():
            lens.sort()
        return d

    g1, g2 = grouped(ch1), grouped(ch2)
    # degree (in the multigraph) signature per branch vertex
    def mdeg(groups, verts):
        d = {v: 0 for v in verts}
        for (u, v), lens in groups.items():
            d[u] += len(lens)
            d[v] += len(lens)
        return d

    d1, d2 = mdeg(g1, b1), mdeg(g2, b2)
    if Counter(d1.values()) != Counter(d2.values()):
        return False

    order = sorted(b2, key=lambda v: (-d2[v], v))
    mapping: Dict[int, int] = {}
    used = set()

    def pair_ok(v_small: int, v_big: int) -> bool:
        # every already-mapped small neighbor group must match in multiplicity
        for u in mapping:
            key_s = (min(u, v_small), max(u, v_small))
            key_b = (min(mapping[u], v_big), max(mapping[u], v_big))
            lens_s = g2.get(key_s, [])
            lens_b = g1.get(key_b, [])
            if len(lens_s) != len(lens_b):
                return False
            if any(lb < ls for ls, lb in zip(lens_s, lens_b)):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in sorted(b1):
            if w in used or d1[w] != d2[v]:
                continue
            if pair_ok(v, w):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    # pair_ok enforced multiplicities and lengths for every mapped pair, and the
    # total chain counts agree, so a completed extension is a full match
    return extend(0)
