"""Binary matrices with stable row/column labels, plus solution certificates.

Rows are stored as Python ints (bit j is the column at position j) with a
mirrored tuple of column masks, so row-wise and column-wise scans are both
cheap.  Labels are the original 0-based indices and survive deletions, which
lets a solution found deep inside a search tree be replayed against the
input matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class MatrixFormatError(ValueError):
    """Raised when matrix text does not follow the exchange format."""


class CertificateError(ValueError):
    pass


class UnknownLabelError(CertificateError):
    pass


class FlipSourceError(CertificateError):
    pass


def _column_masks(row_masks, ncols):
    cols = [0] * ncols
    for i, mask in enumerate(row_masks):
        bit = 1 << i
        while mask:
            j = (mask & -mask).bit_length() - 1
            cols[j] |= bit
            mask &= mask - 1
    return tuple(cols)


class BinaryMatrix:
    """Immutable 0/1 matrix.

    ``row_masks[i]`` has bit ``j`` set iff the cell at position ``(i, j)`` is
    one; ``col_masks[j]`` mirrors the same cells with bit ``i`` per row.
    ``row_labels`` / ``col_labels`` are duplicate-free identifiers (original
    0-based indices for parsed matrices) preserved by every derived matrix.
    """

    __slots__ = ("nrows", "ncols", "row_masks", "col_masks",
                 "row_labels", "col_labels", "_row_pos", "_col_pos", "_hash")

    def __init__(self, rows, row_labels=None, col_labels=None):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        masks = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            mask = 0
            for j, v in enumerate(r):
                if v not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                if v:
                    mask |= 1 << j
            masks.append(mask)
        self._init_from_masks(tuple(masks), ncols, row_labels, col_labels)

    @classmethod
    def from_masks(cls, row_masks, ncols, row_labels=None, col_labels=None):
        m = object.__new__(cls)
        m._init_from_masks(tuple(row_masks), ncols, row_labels, col_labels)
        return m

    def _init_from_masks(self, row_masks, ncols, row_labels, col_labels):
        nrows = len(row_masks)
        if row_labels is None:
            row_labels = tuple(range(nrows))
        else:
            row_labels = tuple(row_labels)
        if col_labels is None:
            col_labels = tuple(range(ncols))
        else:
            col_labels = tuple(col_labels)
        if len(row_labels) != nrows or len(col_labels) != ncols:
            raise ValueError("label count mismatch")
        if len(set(row_labels)) != nrows or len(set(col_labels)) != ncols:
            raise ValueError("duplicate labels")
        limit = 1 << ncols
        for mask in row_masks:
            if not 0 <= mask < limit:
                raise ValueError("row mask out of range")
        self.nrows = nrows
        self.ncols = ncols
        self.row_masks = row_masks
        self.col_masks = _column_masks(row_masks, ncols)
        self.row_labels = row_labels
        self.col_labels = col_labels
        self._row_pos = {lab: i for i, lab in enumerate(row_labels)}
        self._col_pos = {lab: j for j, lab in enumerate(col_labels)}
        self._hash = hash((row_masks, ncols, row_labels, col_labels))

    # -- queries ---------------------------------------------------------

    def value(self, i, j):
        """Entry at row position i, column position j."""
        return (self.row_masks[i] >> j) & 1

    def row_index(self, label):
        try:
            return self._row_pos[label]
        except KeyError:
            raise UnknownLabelError(f"unknown row label {label!r}") from None

    def col_index(self, label):
        try:
            return self._col_pos[label]
        except KeyError:
            raise UnknownLabelError(f"unknown column label {label!r}") from None

    def entry(self, row_label, col_label):
        return self.value(self.row_index(row_label), self.col_index(col_label))

    def row_ones(self, i):
        return self.row_masks[i].bit_count()

    def col_ones(self, j):
        return self.col_masks[j].bit_count()

    def to_lists(self):
        return [[(mask >> j) & 1 for j in range(self.ncols)]
                for mask in self.row_masks]

    # -- algebra ---------------------------------------------------------

    def transpose(self):
        return BinaryMatrix.from_masks(self.col_masks, self.nrows,
                                       self.col_labels, self.row_labels)

    def submatrix_pos(self, row_positions, col_positions):
        """Submatrix by positions, keeping the positions' order and labels."""
        col_positions = list(col_positions)
        masks = []
        for i in row_positions:
            src = self.row_masks[i]
            mask = 0
            for jj, j in enumerate(col_positions):
                if (src >> j) & 1:
                    mask |= 1 << jj
            masks.append(mask)
        return BinaryMatrix.from_masks(
            masks, len(col_positions),
            tuple(self.row_labels[i] for i in row_positions),
            tuple(self.col_labels[j] for j in col_positions))

    def delete_rows(self, labels):
        drop = {self.row_index(lab) for lab in labels}
        keep = [i for i in range(self.nrows) if i not in drop]
        return self.submatrix_pos(keep, range(self.ncols))

    def delete_cols(self, labels):
        drop = {self.col_index(lab) for lab in labels}
        keep = [j for j in range(self.ncols) if j not in drop]
        return self.submatrix_pos(range(self.nrows), keep)

    def flip(self, row_label, col_label):
        """Toggle one cell, by labels."""
        i = self.row_index(row_label)
        j = self.col_index(col_label)
        masks = list(self.row_masks)
        masks[i] ^= 1 << j
        return BinaryMatrix.from_masks(masks, self.ncols,
                                       self.row_labels, self.col_labels)

    # -- text format -----------------------------------------------------

    @classmethod
    def parse(cls, text):
        """Parse the exchange format: "m n" header then m rows of 0/1 chars.

        The format is strict: ASCII decimals in the header, exactly n
        characters per row, LF line endings (a missing final LF is
        tolerated), nothing else.
        """
        if "\r" in text:
            raise MatrixFormatError("CR line endings are not accepted")
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if not lines:
            raise MatrixFormatError("empty input")
        header = lines[0].split(" ")
        if len(header) != 2 or not all(p.isdigit() for p in header):
            raise MatrixFormatError(f"bad header line {lines[0]!r}")
        nrows, ncols = int(header[0]), int(header[1])
        if len(lines) - 1 != nrows:
            raise MatrixFormatError(
                f"expected {nrows} row lines, found {len(lines) - 1}")
        masks = []
        for line in lines[1:]:
            if len(line) != ncols or line.strip("01") != "":
                raise MatrixFormatError(f"bad row line {line!r}")
            mask = 0
            for j, ch in enumerate(line):
                if ch == "1":
                    mask |= 1 << j
            masks.append(mask)
        return cls.from_masks(masks, ncols)

    def to_text(self):
        lines = [f"{self.nrows} {self.ncols}"]
        for mask in self.row_masks:
            lines.append("".join("1" if (mask >> j) & 1 else "0"
                                 for j in range(self.ncols)))
        return "\n".join(lines) + "\n"

    # -- plumbing --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return (self.row_masks == other.row_masks and self.ncols == other.ncols
                and self.row_labels == other.row_labels
                and self.col_labels == other.col_labels)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"BinaryMatrix({self.nrows}x{self.ncols})"


@dataclass(frozen=True)
class MatrixClass:
    max_ones_per_col: int
    max_ones_per_row: int
    tag: str  # one of "(2,2)", "(2,*)", "(*,2)", "(*,*)"


def classify(m):
    """Column/row one-count maxima and the tightest (x,y) class tag."""
    max_col = max((c.bit_count() for c in m.col_masks), default=0)
    max_row = max((r.bit_count() for r in m.row_masks), default=0)
    if max_col <= 2 and max_row <= 2:
        tag = "(2,2)"
    elif max_col <= 2:
        tag = "(2,*)"
    elif max_row <= 2:
        tag = "(*,2)"
    else:
        tag = "(*,*)"
    return MatrixClass(max_col, max_row, tag)


@dataclass(frozen=True)
class WeightedMatrix:
    """A matrix with duplicate rows/columns collapsed into weights.

    ``row_members[i]`` lists the original row labels merged into row i of
    ``matrix`` (first label kept as the row's own label); weights are the
    member counts.  Flipping a cell of the reduced matrix stands for
    flipping row_weight * col_weight cells of the original.
    """
    matrix: BinaryMatrix
    row_weights: tuple
    col_weights: tuple
    row_members: tuple
    col_members: tuple


def dedupe_weighted(m):
    groups = {}
    for i, mask in enumerate(m.row_masks):
        groups.setdefault(mask, []).append(i)
    keep_rows = sorted(min(g) for g in groups.values())
    row_members = tuple(tuple(m.row_labels[i] for i in groups[m.row_masks[k]])
                        for k in keep_rows)
    m2 = m.submatrix_pos(keep_rows, range(m.ncols))

    groups = {}
    for j, mask in enumerate(m2.col_masks):
        groups.setdefault(mask, []).append(j)
    keep_cols = sorted(min(g) for g in groups.values())
    col_members = tuple(tuple(m2.col_labels[j] for j in groups[m2.col_masks[k]])
                        for k in keep_cols)
    m3 = m2.submatrix_pos(range(m2.nrows), keep_cols)

    return WeightedMatrix(m3,
                          tuple(len(mem) for mem in row_members),
                          tuple(len(mem) for mem in col_members),
                          row_members, col_members)


class ProblemKind(enum.Enum):
    SC1S_R = "sc1s-r"
    SC1S_C = "sc1s-c"
    SC1S_RC = "sc1s-rc"
    SC1P_0E = "sc1p-0e"
    SC1P_1E = "sc1p-1e"
    SC1P_01E = "sc1p-01e"

    def __str__(self):
        return self.value

    @classmethod
    def from_string(cls, s):
        for kind in cls:
            if kind.value == s:
                return kind
        raise ValueError(f"unknown problem {s!r}")

    @property
    def allows_row_deletion(self):
        return self in (ProblemKind.SC1S_R, ProblemKind.SC1S_RC)

    @property
    def allows_col_deletion(self):
        return self in (ProblemKind.SC1S_C, ProblemKind.SC1S_RC)

    @property
    def flip_sources(self):
        """Set of cell values the problem may flip (empty for deletion problems)."""
        if self is ProblemKind.SC1P_0E:
            return frozenset({0})
        if self is ProblemKind.SC1P_1E:
            return frozenset({1})
        if self is ProblemKind.SC1P_01E:
            return frozenset({0, 1})
        return frozenset()


@dataclass(frozen=True)
class Certificate:
    """A solution: deletions and/or flips, in input-matrix labels.

    A flip is (row label, col label, source value); source 0 means the flip
    turns a 0 into a 1.  ``from_reduced_graph`` marks certificates whose
    cost was incurred on a reduced instance (merged vertices expand into
    several labels but were paid for once); for those, cost may be lower
    than the element count.
    """
    deleted_rows: frozenset = frozenset()
    deleted_cols: frozenset = frozenset()
    flips: frozenset = frozenset()
    cost: int = 0
    from_reduced_graph: bool = False


def apply_certificate(m, cert):
    """Matrix after deletions then flips; the input matrix is unchanged.

    Raises UnknownLabelError for labels absent from the matrix (a flip on a
    deleted line counts as unknown) and FlipSourceError when a flip's source
    value disagrees with the cell.
    """
    out = m
    if cert.deleted_rows:
        out = out.delete_rows(cert.deleted_rows)
    if cert.deleted_cols:
        out = out.delete_cols(cert.deleted_cols)
    if cert.flips:
        masks = list(out.row_masks)
        for r, c, src in sorted(cert.flips, key=repr):
            i = out.row_index(r)
            j = out.col_index(c)
            if (masks[i] >> j) & 1 != src:
                raise FlipSourceError(
                    f"flip at ({r},{c}) expects {src}, cell differs")
            masks[i] ^= 1 << j
        out = BinaryMatrix.from_masks(masks, out.ncols,
                                      out.row_labels, out.col_labels)
    return out


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_certificate(m, cert, problem, budget):
    """Check a certificate against a matrix, problem kind, and budget.

    Failure reasons: "KIND" (operation not allowed by the problem), "LABEL",
    "SOURCE" (bad flip), "COST" (cost field inconsistent with the elements),
    "BUDGET" (cost exceeds the budget), "NOT-SC1P" (result still lacks the
    property).
    """
    if cert.deleted_rows and not problem.allows_row_deletion:
        return VerifyResult(False, "KIND")
    if cert.deleted_cols and not problem.allows_col_deletion:
        return VerifyResult(False, "KIND")
    allowed = problem.flip_sources
    for _, _, src in cert.flips:
        if src not in allowed:
            return VerifyResult(False, "KIND")
    try:
        result = apply_certificate(m, cert)
    except UnknownLabelError:
        return VerifyResult(False, "LABEL")
    except FlipSourceError:
        return VerifyResult(False, "SOURCE")
    n_elems = len(cert.deleted_rows) + len(cert.deleted_cols) + len(cert.flips)
    if cert.from_reduced_graph:
        if not 0 <= cert.cost <= n_elems:
            return VerifyResult(False, "COST")
    elif cert.cost != n_elems:
        return VerifyResult(False, "COST")
    if cert.cost > budget:
        return VerifyResult(False, "BUDGET")
    from .recognize import has_sc1p
    if not has_sc1p(result):
        return VerifyResult(False, "NOT-SC1P")
    return VerifyResult(True)
