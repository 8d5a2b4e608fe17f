"""Recognition of the consecutive ones properties, with witness orders.

``c1p_rows`` finds a column order making every row's ones contiguous by
decomposing the rows into strict-overlap components.  Within a component
the order of the column blocks is forced up to reversal; across components
the unions are laminar, so they nest into a tree whose free choices are the
order of children (picked lexicographically) and the direction of each
component (forward or reversed, whichever yields the smaller sequence).

``has_sc1p`` combines the row witness with the column witness of the
transpose; the pair is checked jointly before it is returned.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .matrix import BinaryMatrix


@dataclass(frozen=True)
class Witness:
    """Row and column orders (as label sequences) realizing the SC1P."""
    row_order: tuple
    col_order: tuple


def _strictly_overlap(a, b):
    i = a & b
    return i != 0 and i != a and i != b


def _overlap_components(rows):
    n = len(rows)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            a = stack.pop()
            for b in range(n):
                if not seen[b] and _strictly_overlap(rows[a], rows[b]):
                    seen[b] = True
                    comp.append(b)
                    stack.append(b)
        comps.append(sorted(comp))
    return comps


def _insert_row(blocks, s):
    """Refine a block arrangement with one more row set; None if impossible.

    Blocks are disjoint column masks in display order; every previously
    placed row is a union of consecutive blocks and stays that way.
    """
    t = len(blocks)
    touched = [i for i, b in enumerate(blocks) if b & s]
    if not touched:
        return None
    lo, hi = touched[0], touched[-1]
    if len(touched) != hi - lo + 1:
        return None
    for i in range(lo + 1, hi):
        if blocks[i] & ~s:
            return None
    union = 0
    for b in blocks:
        union |= b
    new = s & ~union
    lo_in, lo_out = blocks[lo] & s, blocks[lo] & ~s
    hi_in, hi_out = blocks[hi] & s, blocks[hi] & ~s

    if not new:
        # No new columns: split the end blocks toward the inside.
        if lo == hi:
            return None
        mid = [lo_out, lo_in] if lo_out else [blocks[lo]]
        mid += blocks[lo + 1:hi]
        mid += [hi_in, hi_out] if hi_out else [blocks[hi]]
        return blocks[:lo] + mid + blocks[hi + 1:]

    # New columns join as one block at an end of the arrangement, next to
    # the touched span; the far end of the span may be split inward, the
    # near end must be fully inside the row (or be the only touched block).
    right_ok = hi == t - 1 and (lo == hi or not hi_out)
    left_ok = lo == 0 and (lo == hi or not lo_out)
    if right_ok:
        mid = [lo_out, lo_in] if lo_out else [blocks[lo]]
        mid += blocks[lo + 1:hi + 1]
        mid.append(new)
        return blocks[:lo] + mid
    if left_ok:
        mid = [new]
        if lo == hi:
            mid += [lo_in, lo_out] if lo_out else [blocks[lo]]
        else:
            mid.append(blocks[lo])
            mid += blocks[lo + 1:hi]
            mid += [hi_in, hi_out] if hi_out else [blocks[hi]]
        return mid + blocks[hi + 1:]
    return None


def _arrange(rows):
    """Block arrangement of one overlap component, or None."""
    blocks = [rows[0]]
    placed = [rows[0]]
    pending = list(rows[1:])
    while pending:
        pick = None
        for idx, s in enumerate(pending):
            if any(_strictly_overlap(s, p) for p in placed):
                pick = idx
                break
        assert pick is not None, "overlap component is connected"
        s = pending.pop(pick)
        blocks = _insert_row(blocks, s)
        if blocks is None:
            return None
        placed.append(s)
    for s in rows:
        touched = [i for i, b in enumerate(blocks) if b & s]
        lo, hi = touched[0], touched[-1]
        if len(touched) != hi - lo + 1:
            return None
        cover = 0
        for i in range(lo, hi + 1):
            if blocks[i] & ~s:
                return None
            cover |= blocks[i]
        if cover != s:
            return None
    return blocks


@lru_cache(maxsize=1 << 18)
def _c1p_order(canon_rows, ncols, col_labels):
    rows = list(canon_rows)
    if not rows:
        return tuple(sorted(col_labels))

    comps = []
    for comp_idx in _overlap_components(rows):
        sub = sorted(rows[i] for i in comp_idx)
        blocks = _arrange(sub)
        if blocks is None:
            return None
        union = 0
        for b in blocks:
            union |= b
        comps.append((union, blocks))

    # Bigger unions first; for equal unions the coarser (fewer blocks)
    # component must become the ancestor.
    comps.sort(key=lambda c: (-c[0].bit_count(), len(c[1]),
                              (c[0] & -c[0]).bit_length(), c[0],
                              tuple(c[1])))

    children = [[[] for _ in blocks] for _, blocks in comps]
    roots = []
    for idx, (union, _) in enumerate(comps):
        best = None
        for pidx in range(idx):
            pu = comps[pidx][0]
            if union & ~pu == 0:
                key = (pu.bit_count(), -pidx)
                if best is None or key < best[0]:
                    best = (key, pidx)
        if best is None:
            roots.append(idx)
            continue
        pidx = best[1]
        spot = None
        for j, b in enumerate(comps[pidx][1]):
            if union & ~b == 0:
                spot = j
                break
        if spot is None:
            return None
        children[pidx][spot].append(idx)

    labels = list(col_labels)

    def emit_p(free_mask, child_idxs):
        parts = []
        mm = free_mask
        while mm:
            j = (mm & -mm).bit_length() - 1
            parts.append((labels[j],))
            mm &= mm - 1
        for ci in child_idxs:
            parts.append(emit_q(ci))
        parts.sort()
        return tuple(x for p in parts for x in p)

    def emit_q(ci):
        _, blocks = comps[ci]
        cells = []
        for j, b in enumerate(blocks):
            covered = 0
            for k in children[ci][j]:
                covered |= comps[k][0]
            cells.append(emit_p(b & ~covered, children[ci][j]))
        fwd = tuple(x for c in cells for x in c)
        rev = tuple(x for c in reversed(cells) for x in c)
        return min(fwd, rev)

    top_cover = 0
    for idx in roots:
        top_cover |= comps[idx][0]
    order = emit_p(((1 << ncols) - 1) & ~top_cover, roots)

    pos = {lab: p for p, lab in enumerate(order)}
    for mask in rows:
        ps = []
        mm = mask
        while mm:
            j = (mm & -mm).bit_length() - 1
            ps.append(pos[labels[j]])
            mm &= mm - 1
        if max(ps) - min(ps) + 1 != len(ps):
            raise RuntimeError("constructed column order failed verification")
    return order


def c1p_rows(m):
    """Column order (as labels) making each row's ones consecutive, or None."""
    canon = tuple(sorted({mask for mask in m.row_masks if mask}))
    return _c1p_order(canon, m.ncols, m.col_labels)


def check_witness(m, witness):
    """True iff the witness orders make both rows and columns consecutive."""
    cp = [m.col_index(lab) for lab in witness.col_order]
    rp = [m.row_index(lab) for lab in witness.row_order]
    if len(cp) != m.ncols or len(rp) != m.nrows:
        return False

    def all_consecutive(masks, order):
        for mask in masks:
            v = 0
            for p, j in enumerate(order):
                v |= ((mask >> j) & 1) << p
            if v:
                w = v >> ((v & -v).bit_length() - 1)
                if w & (w + 1):
                    return False
        return True

    return (all_consecutive([m.row_masks[i] for i in rp], cp)
            and all_consecutive([m.col_masks[j] for j in cp], rp))


def has_sc1p(m):
    """Witness iff rows and columns can simultaneously be made consecutive.

    The row-side and column-side orders are computed independently; their
    combination is verified before returning.
    """
    col_order = c1p_rows(m)
    if col_order is None:
        return None
    row_order = c1p_rows(m.transpose())
    if row_order is None:
        return None
    w = Witness(row_order, col_order)
    if not check_witness(m, w):
        raise RuntimeError("independent row/column witnesses are incompatible")
    return w


def _first_c1p_perm(masks, positions, labels_by_position):
    """First column order (lex by label) making all masks consecutive."""
    rows = [mask for mask in masks if mask]
    if not rows:
        return tuple(labels_by_position[j] for j in positions)
    for order in permutations(positions):
        ok = True
        for mask in rows:
            v = 0
            for p, j in enumerate(order):
                v |= ((mask >> j) & 1) << p
            w = v >> ((v & -v).bit_length() - 1)
            if w & (w + 1):
                ok = False
                break
        if ok:
            return tuple(labels_by_position[j] for j in order)
    return None


def brute_sc1p(m):
    """Exhaustive-permutation SC1P check; same acceptance rule as has_sc1p."""
    if m.nrows > 8 or m.ncols > 8:
        raise ValueError("brute_sc1p is limited to 8x8 matrices")
    cols_by_label = sorted(range(m.ncols), key=lambda j: m.col_labels[j])
    col_order = _first_c1p_perm(m.row_masks, cols_by_label, m.col_labels)
    if col_order is None:
        return None
    rows_by_label = sorted(range(m.nrows), key=lambda i: m.row_labels[i])
    row_order = _first_c1p_perm(m.col_masks, rows_by_label, m.row_labels)
    if row_order is None:
        return None
    w = Witness(row_order, col_order)
    if not check_witness(m, w):
        raise RuntimeError("independent row/column witnesses are incompatible")
    return w
