"""Ground truth by enumeration.

The oracle walks candidate solutions by increasing size and, within one
size, in lexicographic order over the problem's element space (rows,
columns, both, or cells), so the first success is the minimum-cost,
canonical certificate.  A guard refuses spaces too large to sweep.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

from .matrix import Certificate, ProblemKind
from .recognize import brute_sc1p, has_sc1p


class OracleGuardError(Exception):
    """The candidate space is too large for exhaustive enumeration."""


GUARD_LIMIT = 10_000_000

# Below this many permutation pairs the applied matrix is re-checked by
# plain permutation sweep instead of the component recognizer.
_BRUTE_PAIR_LIMIT = 144


def _is_sc1p(m):
    if math.factorial(m.nrows) * math.factorial(m.ncols) <= _BRUTE_PAIR_LIMIT:
        return brute_sc1p(m) is not None
    return has_sc1p(m) is not None


def _element_space(m, problem):
    """Candidate elements in canonical order: rows, then columns, row-major cells."""
    rows = [("r", lab) for lab in sorted(m.row_labels)]
    cols = [("c", lab) for lab in sorted(m.col_labels)]
    if problem is ProblemKind.SC1S_R:
        return rows
    if problem is ProblemKind.SC1S_C:
        return cols
    if problem is ProblemKind.SC1S_RC:
        return rows + cols
    cells = []
    for rlab in sorted(m.row_labels):
        for clab in sorted(m.col_labels):
            val = m.entry(rlab, clab)
            if val in problem.flip_sources:
                cells.append(("f", rlab, clab, val))
    return cells


def _apply_elements(m, elems):
    del_rows = [e[1] for e in elems if e[0] == "r"]
    del_cols = [e[1] for e in elems if e[0] == "c"]
    out = m
    if del_rows:
        out = out.delete_rows(del_rows)
    if del_cols:
        out = out.delete_cols(del_cols)
    for e in elems:
        if e[0] == "f":
            out = out.flip(e[1], e[2])
    return out


def _certificate(elems):
    return Certificate(
        deleted_rows=frozenset(e[1] for e in elems if e[0] == "r"),
        deleted_cols=frozenset(e[1] for e in elems if e[0] == "c"),
        flips=frozenset((e[1], e[2], e[3]) for e in elems if e[0] == "f"),
        cost=len(elems))


def _space_size(n, d):
    return sum(math.comb(n, s) for s in range(min(n, d) + 1))


def _scan_chunk(m, chunk):
    """Index of the first working candidate within the chunk, or None."""
    for i, elems in chunk:
        if _is_sc1p(_apply_elements(m, elems)):
            return i, elems
    return None


def oracle(m, d, problem, threads=1):
    """Minimum-cost certificate of cost <= d by exhaustive search, or None."""
    problem = ProblemKind(problem)
    if d < 0:
        return None
    space = _element_space(m, problem)
    if _space_size(len(space), d) > GUARD_LIMIT:
        raise OracleGuardError(
            f"{len(space)} elements at budget {d} exceed the oracle guard")
    for size in range(min(d, len(space)) + 1):
        if threads > 1 and size > 0:
            candidates = list(enumerate(combinations(space, size)))
            step = (len(candidates) + threads - 1) // threads
            chunks = [candidates[i:i + step]
                      for i in range(0, len(candidates), step)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                hits = [h for h in pool.map(lambda ch: _scan_chunk(m, ch), chunks)
                        if h is not None]
            if hits:
                return _certificate(min(hits)[1])
        else:
            for elems in combinations(space, size):
                if _is_sc1p(_apply_elements(m, elems)):
                    return _certificate(elems)
    return None
