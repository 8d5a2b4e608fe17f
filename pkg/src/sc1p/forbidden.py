"""Catalog of the forbidden submatrices and deterministic searches for them.

A matrix has the simultaneous consecutive ones property exactly when no
submatrix of it (or of its transpose) can be row/column-permuted into one
of ten fixed small patterns or into a member of one infinite family.  The
infinite family is, viewed as a bipartite graph, a chordless cycle, so the
minimum member present is found through hole search in the representing
graph; the fixed patterns are found by direct submatrix search.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .graphs import find_hole, representing_graph
from .matrix import BinaryMatrix

FIXED_KINDS = ("M21", "M22", "M31", "M32", "M33",
               "M21T", "M22T", "M31T", "M32T", "M33T")

_BASE_ROWS = {
    "M21": ((1, 1, 0, 0),
            (0, 1, 1, 0),
            (0, 1, 1, 1),
            (1, 1, 0, 1)),
    "M22": ((1, 1, 0, 0, 0),
            (0, 1, 1, 0, 0),
            (0, 0, 1, 1, 0),
            (0, 1, 1, 1, 1),
            (1, 1, 1, 0, 1)),
    "M31": ((1, 1, 0, 0),
            (0, 1, 1, 0),
            (0, 1, 0, 1)),
    "M32": ((1, 1, 0, 0, 0),
            (0, 1, 1, 0, 0),
            (0, 0, 1, 1, 0),
            (0, 1, 1, 0, 1)),
    "M33": ((1, 1, 0, 0, 0, 0),
            (0, 1, 1, 0, 0, 0),
            (0, 0, 1, 1, 0, 0),
            (0, 0, 0, 1, 1, 0),
            (0, 1, 1, 1, 0, 1)),
}


def _transpose_rows(rows):
    return tuple(tuple(r[i] for r in rows) for i in range(len(rows[0])))


def template_rows(kind, k=None):
    if kind in ("MIk", "MIkT"):
        if k is None or k < 1:
            raise ValueError("family patterns need k >= 1")
        side = k + 2
        rows = [[0] * side for _ in range(side)]
        for i in range(k + 1):
            rows[i][i] = rows[i][i + 1] = 1
        rows[k + 1][0] = rows[k + 1][k + 1] = 1
        rows = tuple(tuple(r) for r in rows)
        return _transpose_rows(rows) if kind == "MIkT" else rows
    if kind in _BASE_ROWS:
        return _BASE_ROWS[kind]
    base = kind[:-1]
    if kind.endswith("T") and base in _BASE_ROWS:
        return _transpose_rows(_BASE_ROWS[base])
    raise ValueError(f"unknown pattern kind {kind!r}")


@dataclass(frozen=True)
class ForbiddenPattern:
    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind in ("MIk", "MIkT"):
            if self.k is None or self.k < 1:
                raise ValueError("family patterns need k >= 1")
        elif self.kind in FIXED_KINDS:
            if self.k is not None:
                raise ValueError("fixed patterns take no k")
        else:
            raise ValueError(f"unknown pattern kind {self.kind!r}")

    def template(self):
        return BinaryMatrix([list(r) for r in template_rows(self.kind, self.k)])


@dataclass(frozen=True)
class ForbiddenHit:
    pattern: ForbiddenPattern
    row_labels: tuple
    col_labels: tuple

    def submatrix(self, m):
        rp = [m.row_index(lab) for lab in self.row_labels]
        cp = [m.col_index(lab) for lab in self.col_labels]
        return m.submatrix_pos(rp, cp)


def _canon_rows(rows):
    srows = sorted(rows)
    cols = sorted(_transpose_rows(tuple(srows)))
    return tuple(sorted(_transpose_rows(tuple(cols))))


def matches_configuration(m, pattern):
    """True iff m equals the pattern after some row and column permutation.

    Shape mismatch is a plain False.  Equal iterated-sort forms decide the
    common case cheaply but can miss equivalent pairs, so a miss falls back
    to the explicit permutation search.
    """
    t = template_rows(pattern.kind, pattern.k)
    rows = tuple(tuple(m.value(i, j) for j in range(m.ncols))
                 for i in range(m.nrows))
    if len(rows) != len(t) or (rows and len(rows[0]) != len(t[0])):
        return False
    if _canon_rows(rows) == _canon_rows(t):
        return True
    return matches_configuration_complete(m, pattern)


def matches_configuration_complete(m, pattern):
    """Reference matcher: explicit search over row permutations."""
    t = template_rows(pattern.kind, pattern.k)
    rows = tuple(tuple(m.value(i, j) for j in range(m.ncols))
                 for i in range(m.nrows))
    if len(rows) != len(t) or (rows and len(rows[0]) != len(t[0])):
        return False
    have = sorted(_transpose_rows(rows))
    for perm in permutations(range(len(t))):
        if sorted(_transpose_rows(tuple(t[i] for i in perm))) == have:
            return True
    return False


@lru_cache(maxsize=None)
def _kind_data(kind):
    """(nrows, ncols, signature multisets, sorted row sums) for one kind.

    A signature multiset is the sorted tuple of column bit-signatures of
    the template under one of its row orders; a submatrix with a matching
    column-signature multiset is in the pattern's configuration.
    """
    t = template_rows(kind)
    r, c = len(t), len(t[0])
    sigsets = set()
    for perm in permutations(range(r)):
        sigs = []
        for j in range(c):
            v = 0
            for i, ti in enumerate(perm):
                v |= t[ti][j] << i
            sigs.append(v)
        sigsets.add(tuple(sorted(sigs)))
    row_sums = tuple(sorted((sum(row) for row in t), reverse=True))
    return r, c, frozenset(sigsets), row_sums


_TIERS = {
    3: ("M31",),
    4: ("M21", "M32", "M21T", "M31T"),
    5: ("M22", "M33", "M22T", "M32T"),
    6: ("M33T",),
}


def find_fixed_forbidden(m):
    """Least hit of any fixed pattern, or None.

    Hits are compared by row count, then row label set, then column label
    set, then kind order in FIXED_KINDS.
    """
    kind_rank = {kind: i for i, kind in enumerate(FIXED_KINDS)}
    row_pop = [mask.bit_count() for mask in m.row_masks]
    for r in (3, 4, 5, 6):
        if r > m.nrows:
            break
        kinds = [k for k in _TIERS[r] if _kind_data(k)[1] <= m.ncols]
        if not kinds:
            continue
        for rows in combinations(range(m.nrows), r):
            sums = sorted((row_pop[i] for i in rows), reverse=True)
            if not any(all(a >= b for a, b in zip(sums, _kind_data(k)[3]))
                       for k in kinds):
                continue
            sig_positions = {}
            for j in range(m.ncols):
                v = 0
                for i, ri in enumerate(rows):
                    v |= ((m.col_masks[j] >> ri) & 1) << i
                sig_positions.setdefault(v, []).append(j)
            best = None
            for kind in kinds:
                _, c, sigsets, _ = _kind_data(kind)
                for target in sigsets:
                    need = {}
                    for s in target:
                        need[s] = need.get(s, 0) + 1
                    if any(len(sig_positions.get(s, ())) < n
                           for s, n in need.items()):
                        continue
                    cols = sorted(p for s, n in need.items()
                                  for p in sig_positions[s][:n])
                    key = (tuple(cols), kind_rank[kind])
                    if best is None or key < best:
                        best = key
            if best is not None:
                cols, rank = best
                kind = FIXED_KINDS[rank]
                return ForbiddenHit(
                    ForbiddenPattern(kind),
                    tuple(m.row_labels[i] for i in rows),
                    tuple(m.col_labels[j] for j in cols))
    return None


def find_min_MIk(m):
    """Minimum-k member of the cycle family present in m, or None."""
    hole = find_hole(representing_graph(m), 6)
    if hole is None:
        return None
    k = (hole.length - 4) // 2
    rows = tuple(sorted(lab for side, lab in hole.vertices if side == "r"))
    cols = tuple(sorted(lab for side, lab in hole.vertices if side == "c"))
    return ForbiddenHit(ForbiddenPattern("MIk", k=k), rows, cols)


def find_forbidden(m):
    """Some forbidden hit if m lacks the SC1P: fixed patterns first."""
    return find_fixed_forbidden(m) or find_min_MIk(m)
