import random

import pytest

import helpers
from sc1p import (BinaryMatrix, FIXED_KINDS, ForbiddenPattern, find_fixed_forbidden,
                  find_forbidden, find_min_MIk, has_sc1p, matches_configuration,
                  template_rows)
from sc1p.forbidden import matches_configuration_complete

MI1 = BinaryMatrix([[1, 1, 0], [0, 1, 1], [1, 0, 1]])

EXPECTED_SHAPES = {
    "M21": (4, 4), "M22": (5, 5), "M31": (3, 4), "M32": (4, 5), "M33": (5, 6),
    "M21T": (4, 4), "M22T": (5, 5), "M31T": (4, 3), "M32T": (5, 4),
    "M33T": (6, 5),
}


def block_diag(a, b):
    lists_a, lists_b = a.to_lists(), b.to_lists()
    rows = [r + [0] * b.ncols for r in lists_a]
    rows += [[0] * a.ncols + r for r in lists_b]
    return BinaryMatrix(rows)


def test_template_shapes():
    for kind, (r, c) in EXPECTED_SHAPES.items():
        t = template_rows(kind)
        assert (len(t), len(t[0])) == (r, c)
    for k in (1, 2, 3):
        t = template_rows("MIk", k)
        assert (len(t), len(t[0])) == (k + 2, k + 2)
        assert all(sum(row) == 2 for row in t)
        assert all(sum(col) == 2 for col in zip(*t))
    tt = template_rows("MIkT", 2)
    assert tt == tuple(zip(*template_rows("MIk", 2)))


def test_template_errors():
    with pytest.raises(ValueError):
        template_rows("MIk", 0)
    with pytest.raises(ValueError):
        template_rows("MIk")
    with pytest.raises(ValueError):
        template_rows("M99")
    with pytest.raises(ValueError):
        ForbiddenPattern("M21", k=1)
    with pytest.raises(ValueError):
        ForbiddenPattern("MIk")


def test_transpose_templates_are_transposes():
    for base in ("M21", "M22", "M31", "M32", "M33"):
        t = template_rows(base)
        tt = template_rows(base + "T")
        assert tt == tuple(zip(*t))


def test_matches_configuration_worked_cases():
    m31 = template_rows("M31")
    swapped = BinaryMatrix([[row[2], row[1], row[0], row[3]] for row in m31])
    assert matches_configuration(swapped, ForbiddenPattern("M31"))
    assert not matches_configuration(BinaryMatrix([list(r) for r in m31]),
                                     ForbiddenPattern("M31T"))
    for kind in FIXED_KINDS:
        t = BinaryMatrix([list(r) for r in template_rows(kind)])
        assert matches_configuration(t, ForbiddenPattern(kind))
        assert matches_configuration_complete(t, ForbiddenPattern(kind))


def test_matches_configuration_vs_reference_matcher():
    rng = random.Random(31)
    pats = [ForbiddenPattern("M31"), ForbiddenPattern("MIk", 1)]
    for _ in range(400):
        pat = pats[rng.randint(0, 1)]
        t = template_rows(pat.kind, pat.k)
        m = BinaryMatrix(helpers.rand_rows(rng, len(t), len(t[0]), 0.5))
        assert matches_configuration(m, pat) == \
            matches_configuration_complete(m, pat)
        assert matches_configuration(m, pat) == \
            helpers.config_equal(m.to_lists(), [list(r) for r in t])


def test_find_fixed_worked_cases():
    m31 = BinaryMatrix([list(r) for r in template_rows("M31")])
    hit = find_fixed_forbidden(m31)
    assert hit.pattern.kind == "M31"
    assert hit.row_labels == (0, 1, 2)
    assert set(hit.col_labels) == {0, 1, 2, 3}
    assert find_fixed_forbidden(BinaryMatrix([[1, 0], [0, 1]])) is None
    assert find_fixed_forbidden(MI1) is None


def test_every_fixed_kind_is_found_when_embedded():
    rng = random.Random(41)
    for kind in FIXED_KINDS:
        t = template_rows(kind)
        nr, nc = len(t), len(t[0])
        # pad with an extra all-zero row and column plus scattered noise
        # away from the pattern block
        rows = [list(r) + [0] for r in t] + [[0] * (nc + 1)]
        rows[nr][nc] = 1
        m = BinaryMatrix(rows)
        hit = find_fixed_forbidden(m)
        assert hit is not None
        sub = hit.submatrix(m)
        assert matches_configuration(sub, hit.pattern)
        assert helpers.contains_config(m, [list(r) for r in
                                           template_rows(hit.pattern.kind)])


def test_hits_validate_on_random_matrices():
    rng = random.Random(43)
    rows_of = {k: len(template_rows(k)) for k in FIXED_KINDS}
    checked = 0
    for _ in range(300):
        m = BinaryMatrix(helpers.rand_rows(rng, 4, 5, 0.5))
        hit = find_fixed_forbidden(m)
        if hit is None:
            continue
        checked += 1
        assert matches_configuration(hit.submatrix(m), hit.pattern)
        # row-count minimality against the brute containment checker
        fewer = [k for k in FIXED_KINDS if rows_of[k] < len(hit.row_labels)]
        for k in fewer:
            assert not helpers.contains_config(
                m, [list(r) for r in template_rows(k)])
    assert checked > 20


def test_find_min_MIk_worked_cases():
    hit = find_min_MIk(MI1)
    assert hit.pattern.kind in ("MIk", "MIkT")
    assert hit.pattern.k == 1
    assert set(hit.row_labels) == {0, 1, 2}
    assert set(hit.col_labels) == {0, 1, 2}
    assert find_min_MIk(BinaryMatrix([[1, 1, 0], [0, 1, 1]])) is None
    mi2 = BinaryMatrix([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]])
    assert find_min_MIk(block_diag(mi2, MI1)).pattern.k == 1
    assert find_min_MIk(mi2).pattern.k == 2


def test_min_MIk_matches_hole_length():
    rng = random.Random(47)
    from sc1p import find_hole, representing_graph
    for _ in range(200):
        m = BinaryMatrix(helpers.rand_rows(rng, 4, 4, 0.5))
        hit = find_min_MIk(m)
        hole = find_hole(representing_graph(m), 6)
        if hole is None:
            assert hit is None
        else:
            assert hit.pattern.k == (hole.length - 4) // 2
            assert len(hit.row_labels) + len(hit.col_labels) == hole.length


def test_find_forbidden_is_the_recognizer_complement():
    rng = random.Random(53)
    for _ in range(400):
        m = BinaryMatrix(helpers.rand_rows(rng, 4, 4, 0.5))
        hit = find_forbidden(m)
        assert (hit is None) == (has_sc1p(m) is not None)
        if hit is not None:
            assert matches_configuration(hit.submatrix(m), hit.pattern)
