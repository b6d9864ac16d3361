"""JSON interchange for graphs, decompositions and certificates.

One function pair per object kind.  Readers validate shape strictly and
raise ValueError on malformed documents; semantic validity (does the
minor model hold, is the wall really a wall) stays with the verifiers.
Vertex ids in the graph format run 0..n-1; every other document
references vertices of a host graph supplied separately, with the host
pinned by a content hash where a certificate would otherwise be portable
to the wrong graph.
"""

from typing import Dict, List, Tuple

from .decomposition import TreeDecomposition
from .graph import Graph, graph_hash
from .minors import MinorModel
from .rural import RuralDivision, division_from_edge_lists
from .structure import WeakStructureCertificate
from .wall import Compass, SubdividedWall

SCHEMA_VERSION = 1


def _require(cond: bool, what: str):
    if not cond:
        raise ValueError("malformed document: %s" % what)


def _int_pairs(obj, what: str) -> List[Tuple[int, int]]:
    _require(isinstance(obj, list), "%s is not a list" % what)
    out = []
    for e in obj:
        _require(isinstance(e, list) and len(e) == 2
                 and all(isinstance(x, int) for x in e), "%s entry %r" % (what, e))
        out.append((e[0], e[1]))
    return out


def graph_to_json(g: Graph, labels: Dict[int, str] = None) -> dict:
    if g.vertices != tuple(range(g.n)):
        raise ValueError("interchange requires vertex ids 0..n-1")
    doc = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if labels:
        doc["labels"] = {str(v): labels[v] for v in sorted(labels)}
    return doc


def graph_from_json(obj) -> Graph:
    _require(isinstance(obj, dict), "graph document is not an object")
    _require(isinstance(obj.get("n"), int) and obj["n"] >= 0, "bad vertex count")
    n = obj["n"]
    edges = _int_pairs(obj.get("edges", []), "edges")
    for a, b in edges:
        _require(0 <= a < n and 0 <= b < n, "edge (%d,%d) out of range" % (a, b))
    return Graph(range(n), edges)


def td_to_json(td: TreeDecomposition) -> dict:
    return {
        "tree_edges": [list(e) for e in td.tree.edges],
        "bags": {str(i): sorted(td.bags[i]) for i in sorted(td.bags)},
    }


def td_from_json(host: Graph, obj) -> TreeDecomposition:
    _require(isinstance(obj, dict), "decomposition document is not an object")
    _require(isinstance(obj.get("bags"), dict) and obj["bags"], "missing bags")
    bags = {}
    for key, bag in obj["bags"].items():
        _require(isinstance(bag, list) and all(isinstance(v, int) for v in bag),
                 "bag %r" % key)
        try:
            bags[int(key)] = bag
        except ValueError:
            raise ValueError("malformed document: bag id %r" % key)
    tree_edges = _int_pairs(obj.get("tree_edges", []), "tree_edges")
    tree = Graph(bags.keys(), tree_edges)
    return TreeDecomposition(host, tree, bags)


def minor_to_json(m: MinorModel) -> dict:
    return {
        "branch_sets": {str(v): sorted(s) for v, s in sorted(m.branch_sets.items())},
        "pattern": graph_to_json(m.pattern),
        "host_ref": graph_hash(m.host),
    }


def minor_from_json(host: Graph, obj) -> MinorModel:
    _require(isinstance(obj, dict), "minor document is not an object")
    _require(isinstance(obj.get("branch_sets"), dict), "missing branch_sets")
    if obj.get("host_ref") != graph_hash(host):
        raise ValueError("certificate host_ref does not match the supplied graph")
    pattern = graph_from_json(obj.get("pattern"))
    sets = {}
    for key, vs in obj["branch_sets"].items():
        _require(isinstance(vs, list) and all(isinstance(v, int) for v in vs),
                 "branch set %r" % key)
        try:
            sets[int(key)] = vs
        except ValueError:
            raise ValueError("malformed document: pattern vertex %r" % key)
    return MinorModel(host, pattern, sets)


def wall_to_json(w: SubdividedWall) -> dict:
    return {
        "height": w.height,
        "original": {str(p): v for p, v in sorted(w.original.items())},
        "paths": [{"edge": list(e), "path": list(p)} for e, p in sorted(w.paths.items())],
        "corners": list(w.corners),
    }


def wall_from_json(host: Graph, obj) -> SubdividedWall:
    _require(isinstance(obj, dict), "wall document is not an object")
    _require(isinstance(obj.get("height"), int), "missing height")
    _require(isinstance(obj.get("original"), dict), "missing original map")
    _require(isinstance(obj.get("paths"), list), "missing paths")
    original = {}
    for key, v in obj["original"].items():
        _require(isinstance(v, int), "original image %r" % v)
        try:
            original[int(key)] = v
        except ValueError:
            raise ValueError("malformed document: pattern vertex %r" % key)
    paths = {}
    for entry in obj["paths"]:
        _require(isinstance(entry, dict) and "edge" in entry and "path" in entry,
                 "path entry %r" % entry)
        (a, b), = _int_pairs([entry["edge"]], "path edge")
        p = entry["path"]
        _require(isinstance(p, list) and all(isinstance(x, int) for x in p),
                 "host path for edge (%d,%d)" % (a, b))
        paths[(a, b)] = tuple(p)
    return SubdividedWall(host, obj["height"], original, paths)


def rural_to_json(rd: RuralDivision) -> dict:
    return {"flaps": [[list(e) for e in d.edges] for d in rd.flaps]}


def rural_from_json(c: Compass, obj) -> RuralDivision:
    _require(isinstance(obj, dict), "division document is not an object")
    _require(isinstance(obj.get("flaps"), list), "missing flaps")
    groups = [_int_pairs(flap, "flap %d" % i) for i, flap in enumerate(obj["flaps"])]
    return division_from_edge_lists(c, groups)


def certificate_to_json(cert: WeakStructureCertificate) -> dict:
    doc = {"clause": cert.clause}
    if cert.clause == 1:
        doc["minor"] = minor_to_json(cert.minor)
    elif cert.clause == 2:
        doc["decomposition"] = td_to_json(cert.decomposition)
        doc["width_bound"] = cert.width_bound
    elif cert.clause == 3:
        doc["apex_set"] = list(cert.apex_set)
        doc["wall"] = wall_to_json(cert.wall)
        doc["division"] = rural_to_json(cert.division)
        doc["flap_width_bound"] = cert.flap_width_bound
    return doc


def certificate_from_json(g: Graph, obj) -> WeakStructureCertificate:
    """Rebuild a certificate against host g.

    Shape errors raise; semantic problems (invalid wall, broken division)
    are left intact for verify_certificate to reject with a named
    condition.
    """
    _require(isinstance(obj, dict), "certificate document is not an object")
    clause = obj.get("clause")
    if clause == "undetermined":
        return WeakStructureCertificate("undetermined")
    if clause == 1:
        return WeakStructureCertificate(1, minor=minor_from_json(g, obj.get("minor")))
    if clause == 2:
        _require(isinstance(obj.get("width_bound"), int), "missing width_bound")
        td = td_from_json(g, obj.get("decomposition"))
        return WeakStructureCertificate(2, decomposition=td, width_bound=obj["width_bound"])
    if clause == 3:
        apexes = obj.get("apex_set")
        _require(isinstance(apexes, list) and all(isinstance(v, int) for v in apexes),
                 "missing apex_set")
        _require(isinstance(obj.get("flap_width_bound"), int), "missing flap_width_bound")
        w = wall_from_json(g, obj.get("wall"))
        c = Compass(w, g)  # placeholder anchor; the verifier recomputes it
        rd = rural_from_json(c, obj.get("division"))
        return WeakStructureCertificate(3, apex_set=tuple(apexes), wall=w, division=rd,
                                        flap_width_bound=obj["flap_width_bound"])
    raise ValueError("malformed document: unknown clause %r" % (clause,))
