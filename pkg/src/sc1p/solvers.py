"""Bounded-search solvers for the six editing problems.

The general solvers interleave two phases: branching on the lines or
zeros of a fixed forbidden pattern while one is present, then closing the
cycle family.  The cycle family is closed by row branching (row deletion),
by hole-vertex branching with contraction and pruning reductions (mixed
deletion), or by quadrangulating each shortest hole (zero flipping).

Matrices whose rows or columns carry at most two ones get dedicated
solvers: a linear scan over path/cycle components when both sides are
bounded, and weight-aware branching over duplicate line classes when one
side is.  ``approx_solve`` trades optimality for a constant factor.

Branch order is canonical everywhere (ascending labels, rows before
columns, zeros in row-major order), so the first certificate found is the
same for any thread count; parallel runs evaluate root branches
speculatively and keep the least successful index.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .forbidden import ForbiddenHit, ForbiddenPattern, find_fixed_forbidden, find_min_MIk
from .graphs import (connected_components, find_hole, find_induced_4cycle,
                     representing_graph, rule2_contract_4cycle, rule3_prune,
                     vertex_key)
from .matrix import Certificate, ProblemKind, classify, dedupe_weighted
from .recognize import has_sc1p


@dataclass
class SearchStats:
    """Counters exposed through the CLI; aggregation is associative."""
    nodes_expanded: int = 0
    max_depth: int = 0
    fixed_phase_nodes: int = 0
    cycle_phase_nodes: int = 0

    def enter(self, depth):
        self.nodes_expanded += 1
        if depth > self.max_depth:
            self.max_depth = depth

    def merge(self, other):
        self.nodes_expanded += other.nodes_expanded
        self.max_depth = max(self.max_depth, other.max_depth)
        self.fixed_phase_nodes += other.fixed_phase_nodes
        self.cycle_phase_nodes += other.cycle_phase_nodes

    def as_dict(self):
        return {"nodes_expanded": self.nodes_expanded,
                "max_depth": self.max_depth,
                "fixed_phase_nodes": self.fixed_phase_nodes,
                "cycle_phase_nodes": self.cycle_phase_nodes}


def _explore_root(branches, eval_branch, stats, threads):
    """Evaluate root branches; first success wins, stats cover 0..winner.

    With threads > 1 every branch is evaluated speculatively; the result
    and the aggregated stats are identical to the sequential scan.
    """
    if threads > 1 and len(branches) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outs = list(pool.map(eval_branch, branches))
        upto = len(outs) - 1
        winner = None
        for i, (res, _) in enumerate(outs):
            if res is not None:
                winner, upto = res, i
                break
        for i in range(upto + 1):
            stats.merge(outs[i][1])
        return winner
    for branch in branches:
        res, st = eval_branch(branch)
        stats.merge(st)
        if res is not None:
            return res
    return None


# ---------------------------------------------------------------- row deletion

def _r_rec(m, d, depth, stats, memo):
    stats.enter(depth)
    if has_sc1p(m) is not None:
        return frozenset()
    if d <= 0:
        return None
    if m.row_labels in memo:
        return None
    hit = find_fixed_forbidden(m)
    if hit is not None:
        stats.fixed_phase_nodes += 1
        for lab in hit.row_labels:
            sub = _r_rec(m.delete_rows([lab]), d - 1, depth + 1, stats, memo)
            if sub is not None:
                return sub | {lab}
        memo.add(m.row_labels)
        return None
    rows = cos_r_exact(m, d, stats=stats, depth=depth + 1)
    if rows is None:
        memo.add(m.row_labels)
        return None
    return frozenset(rows)


def solve_sc1s_r(m, d, stats=None, threads=1):
    """Certificate of at most d row deletions, or None."""
    if d < 0:
        return None
    stats = stats if stats is not None else SearchStats()
    stats.enter(0)
    if has_sc1p(m) is not None:
        return Certificate(cost=0)
    if d == 0:
        return None
    hit = find_fixed_forbidden(m)
    if hit is None:
        rows = cos_r_exact(m, d, stats=stats, depth=1)
        if rows is None:
            return None
        return Certificate(deleted_rows=frozenset(rows), cost=len(rows))
    stats.fixed_phase_nodes += 1

    def eval_branch(lab):
        st = SearchStats()
        sub = _r_rec(m.delete_rows([lab]), d - 1, 1, st, set())
        return (None if sub is None else sub | {lab}), st

    rows = _explore_root(list(hit.row_labels), eval_branch, stats, threads)
    if rows is None:
        return None
    return Certificate(deleted_rows=frozenset(rows), cost=len(rows))


def solve_sc1s_c(m, d, stats=None, threads=1):
    """Certificate of at most d column deletions, or None."""
    cert = solve_sc1s_r(m.transpose(), d, stats=stats, threads=threads)
    if cert is None:
        return None
    return Certificate(deleted_cols=cert.deleted_rows, cost=cert.cost)


def _cos_try(m, size, depth, stats):
    stats.enter(depth)
    hit = find_min_MIk(m)
    if hit is None:
        return frozenset()
    if size == 0:
        return None
    stats.cycle_phase_nodes += 1
    for lab in hit.row_labels:
        sub = _cos_try(m.delete_rows([lab]), size - 1, depth + 1, stats)
        if sub is not None:
            return sub | {lab}
    return None


def cos_r_exact(m, d, stats=None, depth=0):
    """Minimum row set (at most d) whose removal leaves no cycle-family hit.

    The matrix must already be free of the fixed patterns; this is checked
    and a ValueError raised otherwise.  The returned set is re-verified.
    """
    if find_fixed_forbidden(m) is not None:
        raise ValueError("matrix still contains a fixed forbidden pattern")
    stats = stats if stats is not None else SearchStats()
    for size in range(d + 1):
        rows = _cos_try(m, size, depth, stats)
        if rows is not None:
            assert find_min_MIk(m.delete_rows(rows)) is None
            return rows
    return None


# ----------------------------------------------------------- mixed deletion

def _cvd_try(g, size, depth, stats):
    stats.enter(depth)
    hole = find_hole(g, 6)
    if hole is None:
        return frozenset()
    if size == 0:
        return None
    stats.cycle_phase_nodes += 1
    for v in sorted(hole.vertices, key=vertex_key):
        sub = _cvd_try(g.delete_vertices([v]), size - 1, depth + 1, stats)
        if sub is not None:
            return sub | {v}
    return None


def chordal_vertex_deletion_exact(g, d, stats=None, depth=0):
    """Minimum vertex set (at most d) leaving no hole of length >= 6."""
    if d < 0:
        return None
    stats = stats if stats is not None else SearchStats()
    for size in range(d + 1):
        got = _cvd_try(g, size, depth, stats)
        if got is not None:
            return got
    return None


def _expand_vertices(g, vertices):
    rows, cols, reduced = set(), set(), False
    for v in vertices:
        cons = g.constituents(v)
        if len(cons) > 1:
            reduced = True
        if v[0] == "r":
            rows.update(cons)
        else:
            cols.update(cons)
    return rows, cols, reduced


def _rc_graph(g, budget, depth, stats):
    """Hole elimination on the representing graph.

    Success is (rows, cols, reduced, used): expanded label sets, whether a
    merged vertex was ever deleted, and the number of deletions charged to
    the budget (one per vertex, merged or not).
    """
    stats.enter(depth)
    hole = find_hole(g, 6)
    if hole is None:
        return set(), set(), False, 0
    if hole.length <= 10:
        if budget <= 0:
            return None
        stats.cycle_phase_nodes += 1
        for v in sorted(hole.vertices, key=vertex_key):
            sub = _rc_graph(g.delete_vertices([v]), budget - 1, depth + 1, stats)
            if sub is not None:
                rows, cols, reduced, used = sub
                vr, vc, vreduced = _expand_vertices(g, [v])
                return rows | vr, cols | vc, reduced or vreduced, used + 1
        return None
    # Shortest hole is length >= 12: contract one 4-cycle and rescan, or,
    # once none is left, prune and finish exactly.
    if find_induced_4cycle(g) is not None:
        return _rc_graph(rule2_contract_4cycle(g), budget, depth + 1, stats)
    g = rule3_prune(g)
    vertices = chordal_vertex_deletion_exact(g, budget, stats=stats, depth=depth + 1)
    if vertices is None:
        return None
    rows, cols, reduced = _expand_vertices(g, sorted(vertices, key=vertex_key))
    return rows, cols, reduced, len(vertices)


def _rc_rec(m, d, depth, stats, memo):
    stats.enter(depth)
    if has_sc1p(m) is not None:
        return set(), set(), False, 0
    if d <= 0:
        return None
    key = (m.row_labels, m.col_labels)
    if key in memo:
        return None
    hit = find_fixed_forbidden(m)
    if hit is None:
        out = _rc_graph(representing_graph(m), d, depth + 1, stats)
        if out is None:
            memo.add(key)
        return out
    stats.fixed_phase_nodes += 1
    lines = [("r", lab) for lab in hit.row_labels]
    lines += [("c", lab) for lab in hit.col_labels]
    for side, lab in lines:
        child = m.delete_rows([lab]) if side == "r" else m.delete_cols([lab])
        sub = _rc_rec(child, d - 1, depth + 1, stats, memo)
        if sub is not None:
            rows, cols, reduced, used = sub
            (rows if side == "r" else cols).add(lab)
            return rows, cols, reduced, used + 1
    memo.add(key)
    return None


def solve_sc1s_rc(m, d, stats=None, threads=1):
    """Certificate of at most d row or column deletions, or None."""
    if d < 0:
        return None
    stats = stats if stats is not None else SearchStats()
    stats.enter(0)
    if has_sc1p(m) is not None:
        return Certificate(cost=0)
    if d == 0:
        return None
    hit = find_fixed_forbidden(m)
    if hit is None:
        out = _rc_graph(representing_graph(m), d, 1, stats)
        return None if out is None else _finish_rc(m, out)
    stats.fixed_phase_nodes += 1
    lines = [("r", lab) for lab in hit.row_labels]
    lines += [("c", lab) for lab in hit.col_labels]

    def eval_branch(line):
        side, lab = line
        st = SearchStats()
        child = m.delete_rows([lab]) if side == "r" else m.delete_cols([lab])
        sub = _rc_rec(child, d - 1, 1, st, set())
        if sub is None:
            return None, st
        rows, cols, reduced, used = sub
        (rows if side == "r" else cols).add(lab)
        return (rows, cols, reduced, used + 1), st

    out = _explore_root(lines, eval_branch, stats, threads)
    return None if out is None else _finish_rc(m, out)


def _finish_rc(m, out):
    rows, cols, reduced, used = out
    applied = m
    if rows:
        applied = applied.delete_rows(rows)
    if cols:
        applied = applied.delete_cols(cols)
    if has_sc1p(applied) is None:
        raise RuntimeError("mixed-deletion certificate failed verification")
    return Certificate(deleted_rows=frozenset(rows), deleted_cols=frozenset(cols),
                       cost=used, from_reduced_graph=reduced)


# ------------------------------------------------------------- zero flipping

@dataclass(frozen=True)
class Quadrangulation:
    """Non-crossing dissection of an even cycle into quadrilaterals.

    Chords are (i, j) position pairs along the cycle, i < j, j - i odd.
    """
    cycle_len: int
    chords: frozenset


def count_ternary_trees(n):
    """Ternary trees with n internal nodes: C(3n, n) / (2n + 1), exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    q, r = divmod(math.comb(3 * n, n), 2 * n + 1)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def enumerate_quadrangulations(cycle_len):
    """All quadrangulations of a cycle, sorted by their chord lists."""
    if cycle_len < 6 or cycle_len % 2:
        raise ValueError("cycle length must be even and at least 6")

    def rec(lo, hi):
        if hi - lo == 1:
            return [frozenset()]
        out = []
        for a in range(lo + 1, hi, 2):
            for b in range(a + 1, hi, 2):
                fixed = []
                if a - lo > 1:
                    fixed.append((lo, a))
                if b - a > 1:
                    fixed.append((a, b))
                if hi - b > 1:
                    fixed.append((b, hi))
                for s1 in rec(lo, a):
                    for s2 in rec(a, b):
                        for s3 in rec(b, hi):
                            out.append(frozenset(fixed) | s1 | s2 | s3)
        return out

    found = rec(0, cycle_len - 1)
    assert len(found) == count_ternary_trees(cycle_len // 2 - 1)
    qs = [Quadrangulation(cycle_len, chords) for chords in found]
    qs.sort(key=lambda q: tuple(sorted(q.chords)))
    return tuple(qs)


def _chord_cells(vertices, chords):
    """Matrix cells ((row label, col label)) named by cycle-position chords."""
    cells = []
    for i, j in sorted(chords):
        u, v = vertices[i], vertices[j]
        if u[0] == "r":
            cells.append((u[1], v[1]))
        else:
            cells.append((v[1], u[1]))
    return cells


def _0e_branches(m, d, stats):
    """Branch list at a non-SC1P node: list of flip lists, or None if stuck."""
    hit = find_fixed_forbidden(m)
    if hit is not None:
        stats.fixed_phase_nodes += 1
        zeros = [(r, c) for r in hit.row_labels for c in hit.col_labels
                 if m.entry(r, c) == 0]
        return [[cell] for cell in zeros]
    hole = find_hole(representing_graph(m), 6)
    k = (hole.length - 4) // 2
    if k > d:
        return None
    stats.cycle_phase_nodes += 1
    return [_chord_cells(hole.vertices, q.chords)
            for q in enumerate_quadrangulations(hole.length)]


def _0e_rec(m, d, depth, stats, memo):
    stats.enter(depth)
    if has_sc1p(m) is not None:
        return frozenset()
    if d <= 0:
        return None
    if m.row_masks in memo:
        return None
    branches = _0e_branches(m, d, stats)
    if branches is None:
        memo.add(m.row_masks)
        return None
    for cells in branches:
        if len(cells) > d:
            continue
        mm = m
        for r, c in cells:
            mm = mm.flip(r, c)
        sub = _0e_rec(mm, d - len(cells), depth + 1, stats, memo)
        if sub is not None:
            return sub | set(cells)
    memo.add(m.row_masks)
    return None


def solve_sc1p_0e(m, d, stats=None, threads=1):
    """Certificate of at most d zero flips, or None."""
    if d < 0:
        return None
    stats = stats if stats is not None else SearchStats()
    stats.enter(0)
    if has_sc1p(m) is not None:
        return Certificate(cost=0)
    if d == 0:
        return None
    branches = _0e_branches(m, d, stats)
    if branches is None:
        return None

    def eval_branch(cells):
        st = SearchStats()
        if len(cells) > d:
            return None, st
        mm = m
        for r, c in cells:
            mm = mm.flip(r, c)
        sub = _0e_rec(mm, d - len(cells), 1, st, set())
        return (None if sub is None else sub | set(cells)), st

    flips = _explore_root(branches, eval_branch, stats, threads)
    if flips is None:
        return None
    return Certificate(flips=frozenset((r, c, 0) for r, c in flips), cost=len(flips))


# --------------------------------------------------- both sides bounded by 2

def _cycle_sequence(g, comp):
    start = min(comp, key=vertex_key)
    seq = [start]
    prev, cur = None, start
    while True:
        nxt = min((u for u in g.neighbors(cur) if u != prev), key=vertex_key)
        if nxt == start:
            return seq
        seq.append(nxt)
        prev, cur = cur, nxt


def solve_22(m, d, problem):
    """Linear-time solver when every row and column has at most two ones.

    Components of the representing graph are paths or cycles; each cycle of
    length at least 6 costs one deletion or one-flip, or length/2 - 2 zero
    flips placed along a quadrangulation that keeps the component clean.
    """
    if classify(m).tag != "(2,2)":
        raise ValueError("matrix is not in the (2,2) class")
    problem = ProblemKind(problem)
    if d < 0:
        return None
    g = representing_graph(m)
    rows_del, cols_del, flips = set(), set(), set()
    cost = 0
    for comp in connected_components(g):
        if len(comp) < 6 or any(g.degree(v) != 2 for v in comp):
            continue
        seq = _cycle_sequence(g, comp)
        if problem is ProblemKind.SC1S_R:
            rows_del.add(min(lab for s, lab in comp if s == "r"))
            cost += 1
        elif problem is ProblemKind.SC1S_C:
            cols_del.add(min(lab for s, lab in comp if s == "c"))
            cost += 1
        elif problem is ProblemKind.SC1S_RC:
            v = min(comp, key=vertex_key)
            (rows_del if v[0] == "r" else cols_del).add(v[1])
            cost += 1
        elif problem in (ProblemKind.SC1P_1E, ProblemKind.SC1P_01E):
            edges = []
            for a, b in zip(seq, seq[1:] + seq[:1]):
                r, c = (a[1], b[1]) if a[0] == "r" else (b[1], a[1])
                edges.append((r, c))
            r, c = min(edges)
            flips.add((r, c, 1))
            cost += 1
        else:  # zero flipping
            comp_rows = sorted(lab for s, lab in comp if s == "r")
            comp_cols = sorted(lab for s, lab in comp if s == "c")
            done = False
            for q in enumerate_quadrangulations(len(seq)):
                cells = _chord_cells(tuple(seq), q.chords)
                mm = m
                for r, c in cells:
                    mm = mm.flip(r, c)
                sub = mm.submatrix_pos([mm.row_index(lab) for lab in comp_rows],
                                       [mm.col_index(lab) for lab in comp_cols])
                if has_sc1p(sub) is not None:
                    flips.update((r, c, 0) for r, c in cells)
                    cost += len(cells)
                    done = True
                    break
            assert done, "some quadrangulation must close the cycle"
    if cost > d:
        return None
    return Certificate(deleted_rows=frozenset(rows_del),
                       deleted_cols=frozenset(cols_del),
                       flips=frozenset(flips), cost=cost)


# ------------------------------------------------ one side bounded by 2

def _restricted_hit(m, tag):
    """Hit of the one fixed pattern possible in a bounded class, or None.

    With column sums at most 2 the only fixed pattern is the transpose
    star (a hub row over three columns, each finished by its own row);
    with row sums at most 2 it is the star itself, mirrored.
    """
    if tag == "(2,2)":
        return None
    if tag == "(2,*)":
        hub_masks, off_masks = m.row_masks, m.col_masks
    else:
        hub_masks, off_masks = m.col_masks, m.row_masks
    for h, mask in enumerate(hub_masks):
        if mask.bit_count() < 3:
            continue
        ones = []
        mm = mask
        while mm:
            ones.append((mm & -mm).bit_length() - 1)
            mm &= mm - 1
        for trip in combinations(ones, 3):
            partners = []
            ok = True
            for c in trip:
                other = off_masks[c] & ~(1 << h)
                if other == 0 or other & (other - 1):
                    ok = False
                    break
                partners.append(other.bit_length() - 1)
            if not ok or len(set(partners)) != 3:
                continue
            if tag == "(2,*)":
                rows = tuple(sorted(m.row_labels[i] for i in (h, *partners)))
                cols = tuple(sorted(m.col_labels[j] for j in trip))
                return ForbiddenHit(ForbiddenPattern("M31T"), rows, cols)
            rows = tuple(sorted(m.row_labels[i] for i in trip))
            cols = tuple(sorted(m.col_labels[j] for j in (h, *partners)))
            return ForbiddenHit(ForbiddenPattern("M31"), rows, cols)
    return None


def _line_weight_members(w, side, lab):
    if side == "r":
        i = w.matrix.row_index(lab)
        return w.row_weights[i], w.row_members[i]
    j = w.matrix.col_index(lab)
    return w.col_weights[j], w.col_members[j]


def _restr_stage2(cur, budget, target, depth, stats):
    """Exact greedy closing of the cycle family in a bounded, star-free matrix.

    Maximal cycle-family hits are pairwise disjoint here, so removing one
    cheapest line (or flipping one cheapest edge) per hole is optimal.
    """
    rows_del, cols_del = set(), set()
    while True:
        stats.enter(depth)
        w = dedupe_weighted(cur)
        hole = find_hole(representing_graph(w.matrix), 6)
        if hole is None:
            return rows_del, cols_del
        stats.cycle_phase_nodes += 1
        options = []
        for side, lab in hole.vertices:
            if target == "rows" and side != "r":
                continue
            if target == "cols" and side != "c":
                continue
            weight, members = _line_weight_members(w, side, lab)
            options.append((weight, 0 if side == "r" else 1, lab, side, members))
        weight, _, _, side, members = min(options)
        if weight > budget:
            return None
        budget -= weight
        if side == "r":
            rows_del.update(members)
            cur = cur.delete_rows(members)
        else:
            cols_del.update(members)
            cur = cur.delete_cols(members)


def _restr_rec(cur, budget, tag, target, depth, stats, memo):
    stats.enter(depth)
    w = dedupe_weighted(cur)
    if has_sc1p(w.matrix) is not None:
        return set(), set()
    if budget <= 0:
        return None
    key = (cur.row_labels, cur.col_labels)
    if key in memo:
        return None
    hit = _restricted_hit(w.matrix, tag)
    if hit is None:
        out = _restr_stage2(cur, budget, target, depth + 1, stats)
        if out is None:
            memo.add(key)
            return None
        return set(out[0]), set(out[1])
    stats.fixed_phase_nodes += 1
    for side, lab in _hit_lines(hit, target):
        weight, members = _line_weight_members(w, side, lab)
        if weight > budget:
            continue
        child = (cur.delete_rows(members) if side == "r"
                 else cur.delete_cols(members))
        sub = _restr_rec(child, budget - weight, tag, target, depth + 1, stats, memo)
        if sub is not None:
            rows, cols = sub
            (rows if side == "r" else cols).update(members)
            return rows, cols
    memo.add(key)
    return None


def _hit_lines(hit, target):
    lines = []
    if target in ("rows", "both"):
        lines += [("r", lab) for lab in hit.row_labels]
    if target in ("cols", "both"):
        lines += [("c", lab) for lab in hit.col_labels]
    return lines


def solve_restricted_sc1s(m, d, target="rows", stats=None, threads=1):
    """Weighted deletion solver for matrices bounded on one side.

    target picks the deletable lines: "rows", "cols", or "both".  Duplicate
    lines are folded into weighted classes and deleted wholesale; weights
    count against the budget.
    """
    tag = classify(m).tag
    if tag == "(*,*)":
        raise ValueError("matrix is not in a bounded class")
    if target not in ("rows", "cols", "both"):
        raise ValueError(f"unknown target {target!r}")
    if d < 0:
        return None
    stats = stats if stats is not None else SearchStats()
    stats.enter(0)
    w = dedupe_weighted(m)
    if has_sc1p(w.matrix) is not None:
        return Certificate(cost=0)
    if d == 0:
        return None
    hit = _restricted_hit(w.matrix, tag)
    if hit is None:
        out = _restr_stage2(m, d, target, 1, stats)
        if out is None:
            return None
        rows, cols = out
    else:
        stats.fixed_phase_nodes += 1

        def eval_branch(line):
            side, lab = line
            st = SearchStats()
            weight, members = _line_weight_members(w, side, lab)
            if weight > d:
                return None, st
            child = (m.delete_rows(members) if side == "r"
                     else m.delete_cols(members))
            sub = _restr_rec(child, d - weight, tag, target, 1, st, set())
            if sub is None:
                return None, st
            rows, cols = sub
            (rows if side == "r" else cols).update(members)
            return (rows, cols), st

        out = _explore_root(_hit_lines(hit, target), eval_branch, stats, threads)
        if out is None:
            return None
        rows, cols = out
    return Certificate(deleted_rows=frozenset(rows), deleted_cols=frozenset(cols),
                       cost=len(rows) + len(cols))


def _entry_weight_members(w, rlab, clab):
    i, j = w.matrix.row_index(rlab), w.matrix.col_index(clab)
    cells = [(r, c) for r in w.row_members[i] for c in w.col_members[j]]
    return w.row_weights[i] * w.col_weights[j], cells


def _hit_one_entries(w, hit):
    cells = []
    for r in hit.row_labels:
        for c in hit.col_labels:
            if w.matrix.entry(r, c) == 1:
                cells.append((r, c))
    return cells


def _flip_cells(cur, cells):
    for r, c in cells:
        cur = cur.flip(r, c)
    return cur


def _restr_1e_stage2(cur, budget, depth, stats):
    flips = set()
    while True:
        stats.enter(depth)
        w = dedupe_weighted(cur)
        hole = find_hole(representing_graph(w.matrix), 6)
        if hole is None:
            return flips
        stats.cycle_phase_nodes += 1
        options = []
        seq = hole.vertices
        for a, b in zip(seq, seq[1:] + seq[:1]):
            r, c = (a[1], b[1]) if a[0] == "r" else (b[1], a[1])
            weight, cells = _entry_weight_members(w, r, c)
            options.append((weight, r, c, tuple(cells)))
        weight, _, _, cells = min(options)
        if weight > budget:
            return None
        budget -= weight
        flips.update(cells)
        cur = _flip_cells(cur, cells)


def _restr_1e_rec(cur, budget, tag, depth, stats, memo):
    stats.enter(depth)
    w = dedupe_weighted(cur)
    if has_sc1p(w.matrix) is not None:
        return set()
    if budget <= 0:
        return None
    if cur.row_masks in memo:
        return None
    hit = _restricted_hit(w.matrix, tag)
    if hit is None:
        out = _restr_1e_stage2(cur, budget, depth + 1, stats)
        if out is None:
            memo.add(cur.row_masks)
            return None
        return set(out)
    stats.fixed_phase_nodes += 1
    for rlab, clab in _hit_one_entries(w, hit):
        weight, cells = _entry_weight_members(w, rlab, clab)
        if weight > budget:
            continue
        sub = _restr_1e_rec(_flip_cells(cur, cells), budget - weight,
                            tag, depth + 1, stats, memo)
        if sub is not None:
            return sub | set(cells)
    memo.add(cur.row_masks)
    return None


def solve_restricted_sc1p_1e(m, d, stats=None, threads=1):
    """Weighted one-flip solver for matrices bounded on one side."""
    tag = classify(m).tag
    if tag == "(*,*)":
        raise ValueError("matrix is not in a bounded class")
    if d < 0:
        return None
    stats = stats if stats is not None else SearchStats()
    stats.enter(0)
    w = dedupe_weighted(m)
    if has_sc1p(w.matrix) is not None:
        return Certificate(cost=0)
    if d == 0:
        return None
    hit = _restricted_hit(w.matrix, tag)
    if hit is None:
        flips = _restr_1e_stage2(m, d, 1, stats)
        if flips is None:
            return None
    else:
        stats.fixed_phase_nodes += 1

        def eval_branch(cell):
            rlab, clab = cell
            st = SearchStats()
            weight, cells = _entry_weight_members(w, rlab, clab)
            if weight > d:
                return None, st
            sub = _restr_1e_rec(_flip_cells(m, cells), d - weight, tag, 1, st, set())
            return (None if sub is None else sub | set(cells)), st

        flips = _explore_root(_hit_one_entries(w, hit), eval_branch, stats, threads)
        if flips is None:
            return None
    return Certificate(flips=frozenset((r, c, 1) for r, c in flips), cost=len(flips))


# ------------------------------------------------------------- approximation

def approx_solve(m, problem):
    """Constant-factor solution for deletion and one-flip problems on
    matrices bounded on one side.

    While a star hit is present, all of its candidate lines (or all six of
    its ones) are removed at once on the raw, unfolded matrix; the cycle
    family is then closed exactly on the weighted fold.
    """
    tag = classify(m).tag
    if tag == "(*,*)":
        raise ValueError("matrix is not in a bounded class")
    problem = ProblemKind(problem)
    targets = {ProblemKind.SC1S_R: "rows", ProblemKind.SC1S_C: "cols",
               ProblemKind.SC1S_RC: "both"}
    if problem not in targets and problem is not ProblemKind.SC1P_1E:
        raise ValueError(f"no approximation for {problem}")
    cur = m
    rows_del, cols_del, flips = set(), set(), set()
    while True:
        hit = _restricted_hit(cur, classify(cur).tag)
        if hit is None:
            break
        if problem is ProblemKind.SC1P_1E:
            cells = [(r, c) for r in hit.row_labels for c in hit.col_labels
                     if cur.entry(r, c) == 1]
            flips.update(cells)
            cur = _flip_cells(cur, cells)
            continue
        target = targets[problem]
        if target in ("rows", "both"):
            rows_del.update(hit.row_labels)
            cur = cur.delete_rows(hit.row_labels)
        if target in ("cols", "both"):
            cols_del.update(hit.col_labels)
            cur = cur.delete_cols(hit.col_labels)
    stats = SearchStats()
    if problem is ProblemKind.SC1P_1E:
        more = _restr_1e_stage2(cur, m.nrows * m.ncols + 1, 1, stats)
        flips.update(more)
        cur = _flip_cells(cur, more)
        cert = Certificate(flips=frozenset((r, c, 1) for r, c in flips),
                           cost=len(flips))
    else:
        out = _restr_stage2(cur, m.nrows + m.ncols + 1, targets[problem], 1, stats)
        rows2, cols2 = out
        rows_del |= rows2
        cols_del |= cols2
        cur = m.delete_rows(rows_del) if rows_del else m
        if cols_del:
            cur = cur.delete_cols(cols_del)
        cert = Certificate(deleted_rows=frozenset(rows_del),
                           deleted_cols=frozenset(cols_del),
                           cost=len(rows_del) + len(cols_del))
    if has_sc1p(cur) is None:
        raise RuntimeError("approximation left a forbidden pattern behind")
    return cert
