"""Deterministic constructors for the graph families used everywhere else:
grids, triangulated grids with a loaded corner, walls, pyramids, and the
grid-plus-clique lower-bound graph.

Coordinates are 1-based, x for the column and y for the row, row 1 at the
north.  Vertex ids are row-major over the underlying full grid, so the
coordinate map stays stable when construction prunes vertices.
"""

from typing import Dict, Iterable, List, Optional, Tuple

from .graph import Graph, delete
from .planarity import embed_planar


class GridCoords:
    """Bijection between (x, y) coordinates and row-major vertex ids."""

    __slots__ = ("rows", "cols")

    def __init__(self, rows: int, cols: int):
        self.rows = rows
        self.cols = cols

    @property
    def height(self) -> int:
        return self.rows

    @property
    def width(self) -> int:
        return self.cols

    def id(self, x: int, y: int) -> int:
        if not self.contains(x, y):
            raise ValueError("coordinate (%d,%d) outside %dx%d grid" % (x, y, self.rows, self.cols))
        return (y - 1) * self.cols + (x - 1)

    def coord(self, v: int) -> Tuple[int, int]:
        if not 0 <= v < self.rows * self.cols:
            raise ValueError("id %r outside %dx%d grid" % (v, self.rows, self.cols))
        return v % self.cols + 1, v // self.cols + 1

    def contains(self, x: int, y: int) -> bool:
        return 1 <= x <= self.cols and 1 <= y <= self.rows

    def corner_ids(self) -> Tuple[int, ...]:
        """The four degree-2 vertices of the full grid."""
        return tuple(self.id(x, y) for x, y in
                     ((1, 1), (self.cols, 1), (self.cols, self.rows), (1, self.rows)))

    def internal_ids(self) -> Tuple[int, ...]:
        """Degree-4 vertices: both coordinates strictly inside."""
        return tuple(self.id(x, y)
                     for y in range(2, self.rows) for x in range(2, self.cols))

    def external_ids(self) -> Tuple[int, ...]:
        """Boundary vertices in clockwise cyclic order starting at (1,1)."""
        ring = [(x, 1) for x in range(1, self.cols + 1)]
        ring += [(self.cols, y) for y in range(2, self.rows + 1)]
        ring += [(x, self.rows) for x in range(self.cols - 1, 0, -1)]
        ring += [(1, y) for y in range(self.rows - 1, 1, -1)]
        return tuple(self.id(x, y) for x, y in ring)


def grid(k: int, r: int) -> Tuple[Graph, GridCoords]:
    """The (k x r)-grid: k rows by r columns."""
    if k < 2 or r < 2:
        raise ValueError("grid needs both sides >= 2, got %dx%d" % (k, r))
    coords = GridCoords(k, r)
    edges = []
    for y in range(1, k + 1):
        for x in range(1, r + 1):
            if x < r:
                edges.append((coords.id(x, y), coords.id(x + 1, y)))
            if y < k:
                edges.append((coords.id(x, y), coords.id(x, y + 1)))
    return Graph(range(k * r), edges), coords


class TriangulatedGrid:
    """Square grid with NW-SE cell diagonals and a loaded corner joined to
    the whole external face."""

    __slots__ = ("graph", "coords", "loaded", "external", "size")

    def __init__(self, graph: Graph, coords: GridCoords, loaded: int,
                 external: Tuple[int, ...], size: int):
        self.graph = graph
        self.coords = coords
        self.loaded = loaded
        self.external = external
        self.size = size


def gamma(k: int) -> TriangulatedGrid:
    """Triangulated (k x k)-grid with corner (1,1) loaded."""
    if k < 3:
        raise ValueError("triangulated grid needs k >= 3, got %d" % (k,))
    base, coords = grid(k, k)
    diag = [(coords.id(x, y), coords.id(x + 1, y + 1))
            for y in range(1, k) for x in range(1, k)]
    loaded = coords.id(1, 1)
    ring = coords.external_ids()
    g = base.add_edges(diag)
    loading = [(loaded, u) for u in ring if u != loaded and not g.has_edge(loaded, u)]
    return TriangulatedGrid(g.add_edges(loading), coords, loaded, ring, k)


def gamma_star(k: int) -> Graph:
    """gamma(k) with every non-grid edge at the loaded corner removed."""
    tg = gamma(k)
    x0, y0 = tg.coords.coord(tg.loaded)
    keep = {tg.coords.id(x0 + 1, y0), tg.coords.id(x0, y0 + 1)}
    drop = [(tg.loaded, u) for u in tg.graph.neighbors(tg.loaded) if u not in keep]
    return delete(tg.graph, edges=drop)


class WallGraph:
    """The wall of height k with its coordinate bookkeeping.

    Built from the ((k+1) x (2k+2))-grid by dropping the vertical edges
    {(x,y),(x,y+1)} with x+y odd and then pruning degree-1 vertices.  The
    ids are the underlying grid's row-major ids.
    """

    __slots__ = ("height", "graph", "coords", "corners", "_perimeter")

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("wall height must be >= 1, got %d" % (k,))
        self.height = k
        rows, cols = k + 1, 2 * k + 2
        self.coords = GridCoords(rows, cols)
        edges = []
        for y in range(1, rows + 1):
            for x in range(1, cols + 1):
                if x < cols:
                    edges.append((self.coords.id(x, y), self.coords.id(x + 1, y)))
                if y < rows and (x + y) % 2 == 0:
                    edges.append((self.coords.id(x, y), self.coords.id(x, y + 1)))
        g = Graph(range(rows * cols), edges)
        while True:
            drop = [v for v in g.vertices if g.degree(v) <= 1]
            if not drop:
                break
            g = delete(g, vertices=drop)
        self.graph = g
        even = (k + 1) % 2
        self.corners = (
            self.coords.id(1, 1),
            self.coords.id(2 * k + 1, 1),
            self.coords.id(2 * k + 1 + even, k + 1),
            self.coords.id(1 + even, k + 1),
        )
        self._perimeter = None

    def id(self, x: int, y: int) -> int:
        v = self.coords.id(x, y)
        if not self.graph.has_vertex(v):
            raise ValueError("(%d,%d) was pruned from the wall" % (x, y))
        return v

    def coord(self, v: int) -> Tuple[int, int]:
        return self.coords.coord(v)

    def row_ids(self, y: int) -> Tuple[int, ...]:
        return tuple(self.coords.id(x, y) for x in range(1, self.coords.cols + 1)
                     if self.graph.has_vertex(self.coords.id(x, y)))

    def horizontal_path(self, j: int) -> Tuple[int, ...]:
        """Row j west to east; rows are induced paths of the wall."""
        return self.row_ids(j)

    def vertical_path(self, i: int) -> Tuple[int, ...]:
        """The zigzag climb from row 1 to row k+1 within columns i, i+1."""
        if not 1 <= i <= 2 * self.height + 1:
            raise ValueError("column index %d out of range" % (i,))
        strip = [v for v in self.graph.vertices if self.coord(v)[0] in (i, i + 1)]
        sub = {v: [w for w in self.graph.neighbors(v) if self.coord(w)[0] in (i, i + 1)]
               for v in strip}
        start = self.id(i, 1)
        top = self.height + 1
        goal_x = i if self.graph.has_vertex(self.coords.id(i, top)) else i + 1
        goal = self.id(goal_x, top)
        prev = {start: None}
        queue = [start]
        while queue:
            u = queue.pop(0)
            if u == goal:
                break
            for w in sub[u]:
                if w not in prev:
                    prev[w] = u
                    queue.append(w)
        path = [goal]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        return tuple(reversed(path))

    def northern_path(self) -> Tuple[int, ...]:
        return self.horizontal_path(1)

    def southern_path(self) -> Tuple[int, ...]:
        return self.horizontal_path(self.height + 1)

    def western_path(self) -> Tuple[int, ...]:
        return self.vertical_path(1)

    def eastern_path(self) -> Tuple[int, ...]:
        return self.vertical_path(2 * self.height + 1)

    def perimeter(self) -> Tuple[int, ...]:
        """Boundary cycle, starting at corner 1 and heading toward corner 2."""
        if self._perimeter is None:
            emb = embed_planar(self.graph)
            cyc = list(emb.outer_face)
            at = cyc.index(self.corners[0])
            cyc = cyc[at:] + cyc[:at]
            east = self.id(2, 1)
            if cyc[1] != east:
                cyc = [cyc[0]] + cyc[:0:-1]
            self._perimeter = tuple(cyc)
        return self._perimeter

    def bricks(self) -> List[Tuple[int, ...]]:
        """All k^2 hexagonal faces, row by row, west to east."""
        out = []
        k = self.height
        for r in range(1, k + 1):
            rungs = [x for x in range(1, 2 * k + 3)
                     if (x + r) % 2 == 0
                     and self.graph.has_vertex(self.coords.id(x, r))
                     and self.graph.has_vertex(self.coords.id(x, r + 1))]
            for x1, x2 in zip(rungs, rungs[1:]):
                out.append((self.id(x1, r), self.id(x1 + 1, r), self.id(x2, r),
                            self.id(x2, r + 1), self.id(x1 + 1, r + 1), self.id(x1, r + 1)))
        return out


def wall(k: int) -> WallGraph:
    return WallGraph(k)


def pyramid(k: int, l: int) -> Graph:
    """(k x k)-grid plus an l-clique joined completely to the grid."""
    if k < 2:
        raise ValueError("pyramid grid side must be >= 2, got %d" % (k,))
    if l < 0:
        raise ValueError("clique size must be >= 0, got %d" % (l,))
    base, _ = grid(k, k)
    clique = list(range(k * k, k * k + l))
    edges = [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    edges += [(a, v) for a in clique for v in range(k * k)]
    return base.add_vertices(clique).add_edges(edges)


def lower_bound_graph(k: int, h: int) -> Graph:
    """(k x k)-grid joined to K_{h-5}: treewidth k+h-5 but no K_h minor."""
    if k < 3:
        raise ValueError("need k >= 3, got %d" % (k,))
    if h < 6:
        raise ValueError("need h >= 6, got %d" % (h,))
    return pyramid(k, h - 5)
