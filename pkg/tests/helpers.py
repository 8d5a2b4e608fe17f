"""Brute-force reference implementations shared by the tests.

Everything here is deliberately independent of the package internals:
checks run by explicit permutation or subset enumeration, so package
results can be validated from first principles.  Keep sizes tiny.
"""

from itertools import combinations, permutations

from sc1p import BinaryMatrix


def consecutive(bits):
    ones = [i for i, b in enumerate(bits) if b]
    return not ones or ones[-1] - ones[0] + 1 == len(ones)


def joint_sc1p(rows):
    """SC1P by explicit search over (row perm, column perm) pairs."""
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    if nr == 0 or nc == 0:
        return True
    for rp in permutations(range(nr)):
        arranged = [rows[i] for i in rp]
        for cp in permutations(range(nc)):
            grid = [[row[j] for j in cp] for row in arranged]
            if all(consecutive(r) for r in grid) and all(
                    consecutive([grid[i][j] for i in range(nr)])
                    for j in range(nc)):
                return True
    return False


def config_equal(rows_a, rows_b):
    """Some row and column permutation maps rows_a onto rows_b."""
    if len(rows_a) != len(rows_b):
        return False
    nc = len(rows_a[0]) if rows_a else 0
    if rows_a and len(rows_b[0]) != nc:
        return False
    want = sorted(tuple(r) for r in rows_b)
    for cp in permutations(range(nc)):
        if sorted(tuple(r[j] for j in cp) for r in rows_a) == want:
            return True
    return False


def contains_config(m, template):
    """m has a submatrix in the template's configuration (subset brute)."""
    tr = len(template)
    tc = len(template[0])
    if tr > m.nrows or tc > m.ncols:
        return False
    lists = m.to_lists()
    for rs in combinations(range(m.nrows), tr):
        for cs in combinations(range(m.ncols), tc):
            sub = [[lists[i][j] for j in cs] for i in rs]
            if config_equal(sub, template):
                return True
    return False


def all_holes(g):
    """Every chordless cycle of length >= 6, as a frozenset of vertices.

    Subset enumeration: a vertex set is a hole iff its induced subgraph
    is connected with every degree exactly two.  Only sane for graphs on
    at most ~16 vertices.
    """
    verts = list(g.row_vertices) + list(g.col_vertices)
    holes = []
    for size in range(6, len(verts) + 1, 2):
        for sub in combinations(verts, size):
            keep = set(sub)
            degs = [sum(1 for u in g.neighbors(v) if u in keep) for v in sub]
            if any(d != 2 for d in degs):
                continue
            seen = {sub[0]}
            stack = [sub[0]]
            while stack:
                v = stack.pop()
                for u in g.neighbors(v):
                    if u in keep and u not in seen:
                        seen.add(u)
                        stack.append(u)
            if len(seen) == size:
                holes.append(frozenset(sub))
    return holes


def rand_rows(rng, nrows, ncols, density=0.5):
    return [[1 if rng.random() < density else 0 for _ in range(ncols)]
            for _ in range(nrows)]


def rand_col_bounded(rng, nrows, ncols, per_col=2):
    """Random matrix with at most per_col ones in every column."""
    rows = [[0] * ncols for _ in range(nrows)]
    for j in range(ncols):
        count = rng.randint(0, min(per_col, nrows))
        for i in rng.sample(range(nrows), count):
            rows[i][j] = 1
    return rows


def matrix_from_code(code, nrows, ncols):
    """Bit i*ncols+j of code is entry (i, j)."""
    return BinaryMatrix([[(code >> (ncols * i + j)) & 1 for j in range(ncols)]
                         for i in range(nrows)])


def min_cost_by_enumeration(m, problem, limit):
    """Smallest certificate cost up to limit via the package oracle."""
    from sc1p import oracle
    for d in range(limit + 1):
        cert = oracle(m, d, problem)
        if cert is not None:
            return cert.cost
    return None


def connected_graphs(n):
    """Every connected simple graph on vertices 0..n-1, one per edge set."""
    from sc1p import Graph
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
        if g.connected():
            yield g


def is_chain_rows(rows):
    """No two rows with ones on both sides of the difference."""
    for i, a in enumerate(rows):
        for b in rows[i + 1:]:
            if any(x and not y for x, y in zip(a, b)) and any(
                    y and not x for x, y in zip(a, b)):
                return False
    return True


def biadjacency(g, parts):
    side0, side1 = parts
    return [[1 if g.adjacent(u, v) else 0 for v in side1] for u in side0]


def chain_completion_min(g, parts):
    """Fewest cross edges to add until row neighborhoods form a chain."""
    a = biadjacency(g, parts)
    zeros = [(i, j) for i, row in enumerate(a)
             for j, v in enumerate(row) if not v]
    for k in range(len(zeros) + 1):
        for combo in combinations(zeros, k):
            b = [row[:] for row in a]
            for i, j in combo:
                b[i][j] = 1
            if is_chain_rows(b):
                return k
    return None


def chain_editing_min(g, parts):
    """Fewest cross-pair toggles until row neighborhoods form a chain."""
    a = biadjacency(g, parts)
    cells = [(i, j) for i in range(len(a)) for j in range(len(a[0]))]
    for k in range(len(cells) + 1):
        for combo in combinations(cells, k):
            b = [row[:] for row in a]
            for i, j in combo:
                b[i][j] ^= 1
            if is_chain_rows(b):
                return k
    return None
