"""Hardness reductions used as instance generators, plus their baselines.

Each reduction turns a graph problem into one of the matrix problems so
that the answers coincide; the baselines (Hamiltonian-path search, chain
checks) let tests confirm the equivalence on small instances.
"""

from .graphs import Graph
from .matrix import BinaryMatrix


def reduce_hampath(g):
    """Edge-vertex incidence matrix and budget for the row-deletion problem.

    Rows are g's edges in sorted order, columns its vertices; the budget is
    m - n + 1.  The graph has a Hamiltonian path exactly when that many row
    deletions suffice.  Requires a connected graph.
    """
    if not g.connected():
        raise ValueError("graph must be connected")
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    matrix = BinaryMatrix.from_masks(masks, g.n)
    return matrix, len(g.edges) - g.n + 1


def brute_hamiltonian_path(g):
    """True iff some vertex order is a path; bitmask sweep, |V| <= 10."""
    if g.n > 10:
        raise ValueError("brute_hamiltonian_path is limited to 10 vertices")
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    reach = [[False] * g.n for _ in range(full + 1)]
    for v in range(g.n):
        reach[1 << v][v] = True
    for mask in range(full + 1):
        row = reach[mask]
        for v in range(g.n):
            if not row[v]:
                continue
            for w in g._adj[v]:
                nxt = mask | (1 << w)
                if nxt != mask:
                    reach[nxt][w] = True
    return any(reach[full])


def _validate_parts(g, parts):
    side0, side1 = tuple(parts[0]), tuple(parts[1])
    if sorted(side0 + side1) != list(range(g.n)):
        raise ValueError("parts must partition the vertices")
    pos0 = set(side0)
    for u, v in g.edges:
        if (u in pos0) == (v in pos0):
            raise ValueError(f"edge ({u},{v}) does not cross the bipartition")
    return side0, side1


def _biadjacency(g, side0, side1):
    col_pos = {v: j for j, v in enumerate(side1)}
    masks = []
    for u in side0:
        mask = 0
        for w in g._adj[u]:
            mask |= 1 << col_pos[w]
        masks.append(mask)
    return masks


def reduce_chain_completion(g, parts=None):
    """Block matrix whose minimum 0-flip count equals g's chain-completion size.

    With parts sized m and n and biadjacency A, the output is the 2m x 2n
    matrix [[J, A], [0, J]] (all blocks m x n, J all-ones).  parts defaults
    to the BFS 2-coloring; pass them explicitly when components leave the
    coloring ambiguous.
    """
    if parts is None:
        parts = g.bipartition()
        if parts is None:
            raise ValueError("graph is not bipartite")
    side0, side1 = _validate_parts(g, parts)
    m_, n_ = len(side0), len(side1)
    a = _biadjacency(g, side0, side1)
    j_block = (1 << n_) - 1
    masks = [j_block | (a[i] << n_) for i in range(m_)]
    masks += [j_block << n_ for _ in range(m_)]
    return BinaryMatrix.from_masks(masks, 2 * n_)


def reduce_chain_editing(g, parts=None):
    """Block matrix whose minimum edit count equals g's chain-editing size.

    With parts sized m and n and biadjacency A, the output is the
    (m + mn) x (mn + n) matrix [[J, A], [0, J]]: the top-left all-ones
    block is m x mn, the bottom-right mn x n.
    """
    if parts is None:
        parts = g.bipartition()
        if parts is None:
            raise ValueError("graph is not bipartite")
    side0, side1 = _validate_parts(g, parts)
    m_, n_ = len(side0), len(side1)
    mn = m_ * n_
    a = _biadjacency(g, side0, side1)
    j_left = (1 << mn) - 1
    masks = [j_left | (a[i] << mn) for i in range(m_)]
    masks += [((1 << n_) - 1) << mn for _ in range(mn)]
    return BinaryMatrix.from_masks(masks, mn + n_)


def is_chain_matrix(a):
    """No 2x2 identity-configuration submatrix: rows pairwise comparable."""
    for i in range(a.nrows):
        for k in range(i + 1, a.nrows):
            ri, rk = a.row_masks[i], a.row_masks[k]
            if ri & ~rk and rk & ~ri:
                return False
    return True


def is_chain_matrix_nested(a):
    """Row neighborhoods form a chain under inclusion (independent check)."""
    masks = sorted(a.row_masks, key=lambda mask: mask.bit_count())
    for small, big in zip(masks, masks[1:]):
        if small & ~big:
            return False
    return True
