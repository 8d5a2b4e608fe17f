"""Representing graphs, hole (chordless cycle) search, and reduction rules.

Bipartite vertices are ("r", label) / ("c", label) pairs.  Contracting a
4-cycle produces merged vertices whose label is the sorted tuple of the
original labels on that side; the graph's merge map remembers the
constituents so certificates can be expanded back to input labels.
"""

from dataclasses import dataclass

from .matrix import BinaryMatrix


class GraphFormatError(ValueError):
    """Raised when graph text does not follow the exchange format."""


def vertex_key(v):
    """Sort key: rows before columns, unmerged before merged, then label."""
    side, label = v
    if isinstance(label, tuple):
        return (0 if side == "r" else 1, 1, label)
    return (0 if side == "r" else 1, 0, (label,))


def format_vertex(v):
    side, label = v
    if isinstance(label, tuple):
        return side + "+".join(str(x) for x in label)
    return f"{side}{label}"


class BipartiteGraph:
    """Immutable bipartite graph with row/column tagged vertices."""

    __slots__ = ("row_vertices", "col_vertices", "vertices",
                 "_adj", "_sorted_adj", "merge_map")

    def __init__(self, row_vertices, col_vertices, edges, merge_map=None):
        rows = tuple(sorted(row_vertices, key=vertex_key))
        cols = tuple(sorted(col_vertices, key=vertex_key))
        rowset, colset = set(rows), set(cols)
        if len(rowset) != len(rows) or len(colset) != len(cols):
            raise ValueError("duplicate vertices")
        adj = {v: set() for v in rows}
        adj.update({v: set() for v in cols})
        for u, v in edges:
            if u in colset and v in rowset:
                u, v = v, u
            if u not in rowset or v not in colset:
                raise ValueError(f"edge {u},{v} must join a row to a column")
            adj[u].add(v)
            adj[v].add(u)
        self.row_vertices = rows
        self.col_vertices = cols
        self.vertices = rows + cols
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._sorted_adj = {v: tuple(sorted(ns, key=vertex_key))
                            for v, ns in adj.items()}
        self.merge_map = dict(merge_map or {})

    def neighbors(self, v):
        return self._sorted_adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def adjacent(self, u, v):
        return v in self._adj[u]

    def edges(self):
        for u in self.row_vertices:
            for v in self._sorted_adj[u]:
                yield (u, v)

    def n_edges(self):
        return sum(self.degree(u) for u in self.row_vertices)

    def constituents(self, v):
        """Original labels a vertex stands for (itself if never merged)."""
        if v in self.merge_map:
            return self.merge_map[v]
        label = v[1]
        return label if isinstance(label, tuple) else (label,)

    def induced(self, keep):
        keep = set(keep)
        rows = [v for v in self.row_vertices if v in keep]
        cols = [v for v in self.col_vertices if v in keep]
        edges = [(u, w) for u in rows for w in self._sorted_adj[u] if w in keep]
        mm = {v: c for v, c in self.merge_map.items() if v in keep}
        return BipartiteGraph(rows, cols, edges, mm)

    def delete_vertices(self, drop):
        drop = set(drop)
        return self.induced(v for v in self.vertices if v not in drop)

    def to_edge_text(self):
        return "".join(f"{format_vertex(u)} {format_vertex(v)}\n"
                       for u, v in self.edges())

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.row_vertices == other.row_vertices
                and self.col_vertices == other.col_vertices
                and self._adj == other._adj
                and self.merge_map == other.merge_map)

    def __hash__(self):
        return hash((self.row_vertices, self.col_vertices,
                     tuple(sorted(self._adj.items(), key=lambda kv: vertex_key(kv[0]),))))

    def __repr__(self):
        return (f"BipartiteGraph({len(self.row_vertices)}+"
                f"{len(self.col_vertices)} vertices, {self.n_edges()} edges)")


def representing_graph(m):
    """Bipartite graph with a vertex per row/column and an edge per 1-entry."""
    rows = [("r", lab) for lab in m.row_labels]
    cols = [("c", lab) for lab in m.col_labels]
    edges = []
    for i, mask in enumerate(m.row_masks):
        while mask:
            j = (mask & -mask).bit_length() - 1
            edges.append((rows[i], cols[j]))
            mask &= mask - 1
    return BipartiteGraph(rows, cols, edges)


def half_adjacency(g):
    """Matrix whose rows/columns are g's row/column vertices (label order)."""
    if g.merge_map:
        raise ValueError("graph has merged vertices")
    col_pos = {v: j for j, v in enumerate(g.col_vertices)}
    masks = []
    for u in g.row_vertices:
        mask = 0
        for w in g._adj[u]:
            mask |= 1 << col_pos[w]
        masks.append(mask)
    return BinaryMatrix.from_masks(
        masks, len(g.col_vertices),
        tuple(lab for _, lab in g.row_vertices),
        tuple(lab for _, lab in g.col_vertices))


@dataclass(frozen=True)
class Hole:
    """A chordless cycle, as the canonical vertex sequence."""
    vertices: tuple

    def __post_init__(self):
        if len(self.vertices) < 4 or len(self.vertices) % 2:
            raise ValueError("hole length must be even and at least 4")

    @property
    def length(self):
        return len(self.vertices)


def _find_cycle_exact(g, length):
    """Lexicographically least induced cycle of exactly this length, if any.

    The sequence starts at the cycle's least vertex and runs toward its
    smaller neighbor, so each cycle is produced exactly once.
    """
    adj = g._adj
    key = vertex_key

    def extend(path, start_key):
        last = path[-1]
        final = len(path) == length - 1
        for v in g._sorted_adj[last]:
            if key(v) <= start_key or v in path_set:
                continue
            if final:
                if path[0] not in adj[v]:
                    continue
                if any(u in adj[v] for u in path[1:-1]):
                    continue
                if key(path[1]) < key(v):
                    return path + [v]
            else:
                if any(u in adj[v] for u in path[:-1]):
                    continue
                path.append(v)
                path_set.add(v)
                got = extend(path, start_key)
                if got:
                    return got
                path.pop()
                path_set.discard(v)
        return None

    for s in g.vertices:
        path_set = {s}
        found = extend([s], key(s))
        if found:
            return Hole(tuple(found))
    return None


def find_hole(g, min_len=6):
    """Least minimum-length chordless cycle of length >= min_len, or None."""
    if min_len < 4 or min_len % 2:
        raise ValueError("min_len must be even and at least 4")
    n = len(g.vertices)
    for length in range(min_len, n + 1, 2):
        hole = _find_cycle_exact(g, length)
        if hole:
            return hole
    return None


def find_induced_4cycle(g):
    return _find_cycle_exact(g, 4)


def is_chordal_bipartite(g):
    return find_hole(g, 6) is None


def rule2_contract_4cycle(g):
    """Contract the least induced 4-cycle into a single edge.

    The two row vertices collapse into one merged row vertex inheriting
    both neighborhoods; same for the two column vertices; the merged pair
    is joined by an edge.
    """
    c4 = find_induced_4cycle(g)
    if c4 is None:
        raise ValueError("no induced 4-cycle")
    x1, y1, x2, y2 = c4.vertices
    cons_x = tuple(sorted(set(g.constituents(x1)) | set(g.constituents(x2))))
    cons_y = tuple(sorted(set(g.constituents(y1)) | set(g.constituents(y2))))
    vx = ("r", cons_x)
    vy = ("c", cons_y)
    removed = {x1, x2, y1, y2}

    rows = [v for v in g.row_vertices if v not in removed] + [vx]
    cols = [v for v in g.col_vertices if v not in removed] + [vy]
    edges = [(u, w) for u in g.row_vertices if u not in removed
             for w in g._sorted_adj[u] if w not in removed]
    edges += [(vx, w) for w in (g._adj[x1] | g._adj[x2]) - {y1, y2}]
    edges += [(w, vy) for w in (g._adj[y1] | g._adj[y2]) - {x1, x2}]
    edges.append((vx, vy))

    mm = {v: c for v, c in g.merge_map.items() if v not in removed}
    mm[vx] = cons_x
    mm[vy] = cons_y
    return BipartiteGraph(rows, cols, edges, mm)


def rule3_prune(g):
    """Drop vertices of degree <= 1 until none remain (holes are untouched)."""
    deg = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    queue = [v for v in g.vertices if deg[v] <= 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g._adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    if len(alive) == len(g.vertices):
        return g
    return g.induced(alive)


def connected_components(g):
    """Vertex sets of connected components, each sorted, in sorted order."""
    seen = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        frontier = [s]
        while frontier:
            u = frontier.pop()
            for w in g._sorted_adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    frontier.append(w)
        comps.append(sorted(comp, key=vertex_key))
    return comps


class Graph:
    """Simple undirected graph on vertices 0..n-1 (reduction inputs)."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n, edges):
        if n < 0:
            raise ValueError("negative vertex count")
        adj = [set() for _ in range(n)]
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError("self-loop")
            e = (min(u, v), max(u, v))
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = tuple(sorted(canon))
        self._adj = tuple(frozenset(a) for a in adj)

    def neighbors(self, v):
        return sorted(self._adj[v])

    def degree(self, v):
        return len(self._adj[v])

    def adjacent(self, u, v):
        return v in self._adj[u]

    def connected(self):
        if self.n == 0:
            return True
        seen = {0}
        frontier = [0]
        while frontier:
            u = frontier.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == self.n

    def bipartition(self):
        """(side0, side1) by BFS 2-coloring, or None if an odd cycle exists.

        Each component is rooted at its least vertex, which gets side 0.
        """
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            frontier = [s]
            while frontier:
                u = frontier.pop()
                for w in self._adj[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        frontier.append(w)
                    elif color[w] == color[u]:
                        return None
        side0 = tuple(v for v in range(self.n) if color[v] == 0)
        side1 = tuple(v for v in range(self.n) if color[v] == 1)
        return side0, side1

    @classmethod
    def parse(cls, text):
        """Parse "n m" header plus m lines "u v" (0-based)."""
        if "\r" in text:
            raise GraphFormatError("CR line endings are not accepted")
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if not lines:
            raise GraphFormatError("empty input")
        header = lines[0].split(" ")
        if len(header) != 2 or not all(p.isdigit() for p in header):
            raise GraphFormatError(f"bad header line {lines[0]!r}")
        n, m = int(header[0]), int(header[1])
        if len(lines) - 1 != m:
            raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
        edges = []
        for line in lines[1:]:
            parts = line.split(" ")
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise GraphFormatError(f"bad edge line {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
        try:
            return cls(n, edges)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None

    def to_text(self):
        lines = [f"{self.n} {len(self.edges)}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"
