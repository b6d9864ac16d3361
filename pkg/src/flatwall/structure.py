"""Apex machinery and the weak-structure trichotomy checker.

The centerpiece is trichotomy_check: given a host graph, an excluded
graph, a wall height and a width threshold, it certifies one of three
mutually acceptable outcomes -- an excluded-graph minor, a small tree
decomposition, or an apex set plus a flat wall with a rural division --
or reports "undetermined" when none is certifiable at desk scale.  Every
certificate is re-checkable from scratch by verify_certificate.

The quantity bookkeeping (g, f3, f4, f5) keeps two published black-box
quantities as injected parameters; only the formula plumbing is computed
here.
"""

from itertools import combinations
from math import isqrt
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .common import SizeCapExceeded, Verdict
from .decomposition import TreeDecomposition, exact_treewidth, validate as validate_td, width
from .generators import grid, pyramid, wall
from .graph import Graph, connected_components, delete, induced_subgraph, union
from .minors import (MINOR_HOST_CAP, MINOR_PATTERN_CAP, MinorModel, find_minor,
                     iter_topological_embeddings, verify_minor_model)
from .planarity import is_planar
from .rural import RuralDivision, internal_flaps, trivial_division, validate_rural
from .wall import SubdividedWall, compass, disjoint_subwalls, is_flat, verify_wall

APEX_CAP = 16
TRICHOTOMY_HOST_CAP = 16
TRICHOTOMY_PATTERN_CAP = 6


def _ceil_sqrt(x: int) -> int:
    return 0 if x == 0 else isqrt(x - 1) + 1


class StructureConstants:
    """Derived quantities g, f5, f4, f3 over injected base parameters.

    f1_value and f2_value stand in for quantities with no effective
    construction; they are supplied, never computed.
    """

    __slots__ = ("h", "an_h", "a_size", "f1_value", "f2_value")

    def __init__(self, h: int, an_h: int, a_size: int, f1_value: int, f2_value: int):
        for name, v in (("h", h), ("an_h", an_h), ("a_size", a_size),
                        ("f1_value", f1_value), ("f2_value", f2_value)):
            if not isinstance(v, int) or v < 0:
                raise ValueError("%s must be a natural number, got %r" % (name, v))
        self.h = h
        self.an_h = an_h
        self.a_size = a_size
        self.f1_value = f1_value
        self.f2_value = f2_value

    def f5(self) -> int:
        return 14 * (self.h - self.an_h) + _ceil_sqrt(self.an_h) - 24

    def g(self) -> int:
        # same expression as f5; both names appear in use
        return self.f5()

    def f4(self) -> int:
        exp = self.a_size - self.an_h + 1
        if exp < 0:
            raise ValueError("apex budget %d is below the apex parameter %d"
                             % (self.a_size, self.an_h))
        base = self.f5()
        if base < 1:
            raise ValueError("f5 = %d < 1: h too small relative to its apex parameter" % base)
        return base ** exp

    def f3(self, k: int) -> int:
        return self.f2_value * (4 * k * self.f4() + 12) + self.f1_value

    def __repr__(self) -> str:
        return "StructureConstants(h=%d, an_h=%d, a_size=%d)" % (self.h, self.an_h, self.a_size)


def apex_number(g: Graph, cap: int = APEX_CAP) -> Tuple[int, Tuple[int, ...]]:
    """Smallest number of vertices whose removal leaves g planar, with the
    lexicographically least witness set."""
    if g.n > cap:
        raise SizeCapExceeded("apex search capped at %d vertices, got %d" % (cap, g.n))
    for size in range(g.n + 1):
        for s in combinations(g.vertices, size):
            if is_planar(delete(g, s)):
                return size, s
    raise AssertionError("unreachable: the empty graph is planar")


def pyramid_minor_model(k: int, h: int) -> MinorModel:
    """Explicit pyramid(k, h) minor inside pyramid(k + ceil(sqrt(h)), h).

    The pattern grid maps identically onto the host's top-left k x k
    block; each pattern apex absorbs one host apex plus a share of a
    disjoint alpha x alpha block, realizing the complete contraction onto
    the apices.
    """
    if k < 2 or h < 1:
        raise ValueError("need grid side >= 2 and at least one apex, got (%d, %d)" % (k, h))
    alpha = _ceil_sqrt(h)
    side = k + alpha
    host = pyramid(side, h)
    _, hostc = grid(side, side)
    pattern = pyramid(k, h)
    _, patc = grid(k, k)

    branch: Dict[int, List[int]] = {}
    for y in range(1, k + 1):
        for x in range(1, k + 1):
            branch[patc.id(x, y)] = [hostc.id(x, y)]
    cells = [hostc.id(k + x, y) for y in range(1, alpha + 1) for x in range(1, alpha + 1)]
    q, r = divmod(len(cells), h)
    at = 0
    for i in range(h):
        take = q + (1 if i < r else 0)
        branch[k * k + i] = [side * side + i] + cells[at:at + take]
        at += take
    model = MinorModel(host, pattern, branch)
    ok = verify_minor_model(model)
    if not ok:
        raise AssertionError("pyramid model construction broke: %s" % ok.condition)
    return model


class HMinorFound(Exception):
    """Raised when apex reduction proves the excluded minor present.

    Every apex saw every window compass, so the apices together with the
    window compasses realize a complete-bipartite minor (the pyramid
    threshold); the witnessing model is attached.
    """

    def __init__(self, message: str, model: MinorModel):
        super().__init__(message)
        self.model = model


def _bipartite_pattern(left: int, right: int) -> Graph:
    edges = [(i, left + j) for i in range(left) for j in range(right)]
    return Graph(range(left + right), edges)


def apex_reduce(g: Graph, h_graph: Graph, a: Iterable[int], w: SubdividedWall,
                k: int, consts: StructureConstants,
                window_count: Optional[int] = None) -> Tuple[Tuple[int, ...], SubdividedWall]:
    """Drop one apex that misses some window compass.

    Windows `window_count` (default g(h)^2) disjoint height-k subwalls out
    of w, computes each compass in g minus the apex set, and flags which
    apices have an edge into which compass.  An apex with a zero flag is
    removed and that window's subwall returned; its compass then avoids
    the entire original apex set.  If every apex sees every compass the
    complete-bipartite evidence is raised as HMinorFound.
    """
    apexes = tuple(sorted(set(a)))
    if len(apexes) < consts.an_h:
        raise ValueError("apex set of %d is below the apex parameter %d"
                         % (len(apexes), consts.an_h))
    if h_graph.n <= MINOR_PATTERN_CAP and g.n <= MINOR_HOST_CAP:
        if find_minor(g, h_graph) is not None:
            raise ValueError("the excluded graph is already a minor of the host")
    count = consts.g() ** 2 if window_count is None else window_count
    if count < 1:
        raise ValueError("window count %d is not positive" % count)

    ga = delete(g, apexes)
    try:
        wa = SubdividedWall(ga, w.height, w.original, w.paths)
    except (ValueError, KeyError):
        raise ValueError("wall does not avoid the apex set")
    ok = verify_wall(wa)
    if not ok:
        raise ValueError("wall is not valid in the host minus the apex set: %s" % ok.condition)

    subs = disjoint_subwalls(wa, count, k)
    comps = [compass(ga, s) for s in subs]
    seen = []
    for aj in apexes:
        row = []
        for c in comps:
            row.append(1 if any(g.has_edge(aj, v) for v in c.graph.vertices) else 0)
        seen.append(tuple(row))

    for j, row in enumerate(seen):
        for i, bit in enumerate(row):
            if bit == 0:
                reduced = tuple(x for x in apexes if x != apexes[j])
                ga2 = delete(g, reduced)
                w2 = SubdividedWall(ga2, subs[i].height, subs[i].original, subs[i].paths)
                ok = verify_wall(w2)
                if not ok:
                    raise AssertionError("windowed subwall broke: %s" % ok.condition)
                c2 = compass(ga2, w2)
                leak = set(c2.graph.vertices) & set(apexes)
                if leak:
                    raise AssertionError("compass still meets apex set at %r" % sorted(leak))
                return reduced, w2

    pattern = _bipartite_pattern(len(apexes), count)
    branch = {j: [apexes[j]] for j in range(len(apexes))}
    for i, c in enumerate(comps):
        branch[len(apexes) + i] = list(c.graph.vertices)
    model = MinorModel(g, pattern, branch)
    raise HMinorFound("every apex sees every window compass: complete-bipartite "
                      "minor on %d apices and %d windows" % (len(apexes), count), model)


def merge_flaps(family: Sequence[Graph], s: Iterable[int], g: Graph) -> List[Graph]:
    """Union the components of each family member minus s by their trace.

    Components missing V(g) minus s entirely are dropped; components with
    equal trace merge into one class graph, and classes come back ordered
    by their smallest trace vertex.
    """
    s = set(s)
    keep = set(g.vertices) - s
    classes: Dict[FrozenSet[int], Graph] = {}
    for member in family:
        cut = member if not (s & set(member.vertices)) else delete(member, s & set(member.vertices))
        for comp in connected_components(cut):
            trace = frozenset(comp) & keep
            if not trace:
                continue
            piece = induced_subgraph(cut, comp)
            t = frozenset(trace)
            classes[t] = union(classes[t], piece) if t in classes else piece
    order = sorted(classes, key=lambda t: (min(t), tuple(sorted(t))))
    return [classes[t] for t in order]


class WeakStructureCertificate:
    """Tagged union over the three clauses, or an explicit undetermined."""

    __slots__ = ("clause", "minor", "decomposition", "width_bound",
                 "apex_set", "wall", "division", "flap_width_bound")

    def __init__(self, clause, minor: Optional[MinorModel] = None,
                 decomposition: Optional[TreeDecomposition] = None,
                 width_bound: Optional[int] = None,
                 apex_set: Optional[Tuple[int, ...]] = None,
                 wall: Optional[SubdividedWall] = None,
                 division: Optional[RuralDivision] = None,
                 flap_width_bound: Optional[int] = None):
        if clause not in (1, 2, 3, "undetermined"):
            raise ValueError("unknown clause %r" % (clause,))
        have = {
            1: minor is not None,
            2: decomposition is not None and width_bound is not None,
            3: apex_set is not None and wall is not None and division is not None
               and flap_width_bound is not None,
        }
        if clause == "undetermined":
            if any(x is not None for x in (minor, decomposition, apex_set, wall, division)):
                raise ValueError("undetermined certificate carries a payload")
        else:
            if not have[clause]:
                raise ValueError("clause %r certificate is missing its payload" % clause)
            for other, present in have.items():
                if other != clause and present:
                    raise ValueError("certificate populates clauses %r and %r" % (clause, other))
        self.clause = clause
        self.minor = minor
        self.decomposition = decomposition
        self.width_bound = width_bound
        self.apex_set = tuple(apex_set) if apex_set is not None else None
        self.wall = wall
        self.division = division
        self.flap_width_bound = flap_width_bound

    def __repr__(self) -> str:
        return "WeakStructureCertificate(clause=%r)" % (self.clause,)


def _find_flat_wall_certificate(g: Graph, apexes: Tuple[int, ...], k: int):
    """First flat height-k wall in g minus apexes whose per-edge division
    validates, with the division and internal-flap width bound; or None."""
    ga = delete(g, apexes)
    target = wall(k)
    if target.graph.n > ga.n:
        return None
    try:
        embeddings = iter_topological_embeddings(ga, target.graph,
                                                 pattern_cap=max(target.graph.n, MINOR_PATTERN_CAP),
                                                 host_cap=max(ga.n, MINOR_HOST_CAP))
        for emb in embeddings:
            cand = SubdividedWall(ga, k, emb.vertex_map, emb.paths)
            if not verify_wall(cand):
                continue
            try:
                c = compass(ga, cand)
            except ValueError:
                continue
            if is_flat(c).flat is not True:
                continue
            rd = trivial_division(c)
            if not validate_rural(rd):
                continue
            widths = [exact_treewidth(d)[0] for d in internal_flaps(rd)]
            return cand, rd, max(widths, default=0)
    except SizeCapExceeded:
        return None
    return None


def trichotomy_check(g: Graph, h_graph: Graph, k: int,
                     width_threshold: int) -> WeakStructureCertificate:
    """Certify the first holding clause: excluded minor, small treewidth,
    or apex set plus flat wall plus rural division; else undetermined.

    Clause order is fixed (minor first) and every search is exhaustive
    and lexicographic, so the outcome is deterministic.
    """
    if g.n > TRICHOTOMY_HOST_CAP:
        raise SizeCapExceeded("host capped at %d vertices, got %d"
                              % (TRICHOTOMY_HOST_CAP, g.n))
    if h_graph.n > TRICHOTOMY_PATTERN_CAP:
        raise SizeCapExceeded("excluded graph capped at %d vertices, got %d"
                              % (TRICHOTOMY_PATTERN_CAP, h_graph.n))
    if k not in (1, 2):
        raise SizeCapExceeded("wall height must be 1 or 2 at this scale, got %r" % (k,))

    model = find_minor(g, h_graph)
    if model is not None:
        return WeakStructureCertificate(1, minor=model)

    tw, td = exact_treewidth(g)
    if tw <= width_threshold:
        return WeakStructureCertificate(2, decomposition=td, width_bound=width_threshold)

    an, _ = apex_number(h_graph)
    for size in range(0, an):
        for apexes in combinations(g.vertices, size):
            found = _find_flat_wall_certificate(g, apexes, k)
            if found is not None:
                cand, rd, bound = found
                return WeakStructureCertificate(3, apex_set=apexes, wall=cand,
                                                division=rd, flap_width_bound=bound)
    return WeakStructureCertificate("undetermined")


def verify_certificate(g: Graph, h_graph: Graph, k: int,
                       cert: WeakStructureCertificate) -> Verdict:
    """Re-validate every part of the claimed clause from scratch."""
    if not isinstance(cert, WeakStructureCertificate):
        raise ValueError("not a certificate: %r" % (cert,))
    if cert.clause == "undetermined":
        return Verdict.reject("undetermined", detail="an undetermined outcome certifies nothing")

    if cert.clause == 1:
        m = cert.minor
        if m.host != g:
            return Verdict.reject("wrong-host", detail="minor model host differs from g")
        if m.pattern != h_graph:
            return Verdict.reject("wrong-pattern", detail="minor model pattern differs from the excluded graph")
        ok = verify_minor_model(m)
        if not ok:
            return Verdict.reject("minor-invalid", witness=ok.witness, detail=ok.detail)
        return Verdict.accept()

    if cert.clause == 2:
        td = cert.decomposition
        if td.host != g:
            return Verdict.reject("wrong-host", detail="decomposition host differs from g")
        ok = validate_td(td)
        if not ok:
            return Verdict.reject("decomposition-invalid", witness=ok.witness, detail=ok.detail)
        if width(td) > cert.width_bound:
            return Verdict.reject("width-exceeded", witness=width(td),
                                  detail="width %d exceeds bound %d" % (width(td), cert.width_bound))
        return Verdict.accept()

    an, _ = apex_number(h_graph)
    if len(cert.apex_set) > an - 1:
        return Verdict.reject("apex-set-too-large", witness=cert.apex_set,
                              detail="apex set of %d exceeds %d" % (len(cert.apex_set), an - 1))
    for v in cert.apex_set:
        if not g.has_vertex(v):
            return Verdict.reject("apex-outside-host", witness=v)
    ga = delete(g, cert.apex_set)
    try:
        w = SubdividedWall(ga, cert.wall.height, cert.wall.original, cert.wall.paths)
    except (ValueError, KeyError) as e:
        return Verdict.reject("wall-invalid", detail=str(e))
    ok = verify_wall(w)
    if not ok:
        return Verdict.reject("wall-invalid", witness=ok.witness, detail=ok.detail)
    if w.height != k:
        return Verdict.reject("wall-height", witness=w.height,
                              detail="wall height %d, expected %d" % (w.height, k))
    try:
        c = compass(ga, w)
    except ValueError as e:
        return Verdict.reject("wall-invalid", detail=str(e))
    flat = is_flat(c)
    if flat.flat is not True:
        return Verdict.reject("not-flat", witness=flat.witness)
    rd = RuralDivision(c, cert.division.flaps)
    try:
        ok = validate_rural(rd)
    except ValueError as e:
        return Verdict.reject("division-invalid", detail=str(e))
    if not ok:
        return Verdict.reject("division-invalid", witness=ok.witness,
                              detail="%s: %s" % (ok.condition, ok.detail))
    for d in internal_flaps(rd):
        tw, _ = exact_treewidth(d)
        if tw > cert.flap_width_bound:
            return Verdict.reject("flap-width", witness=d.vertices,
                                  detail="internal flap width %d exceeds %d"
                                  % (tw, cert.flap_width_bound))
    return Verdict.accept()
