"""Exact ranks of 0/1 matrices: real, binary (= nonnegative integer), term.

Real rank uses fraction-exact Gaussian elimination so singularity decisions
never depend on floating-point tolerance.  Binary rank is the minimum number
of all-ones rectangles partitioning the 1-entries, found by an exact
backtracking search (see _kernels).  Term rank is the maximum matching on the
1-entries with a Konig minimum line cover as the dual witness.

Matrix entries are addressed 1-indexed in every public structure and file
format; internal bitmask work is 0-indexed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import _kernels
from .errors import ParseError


class BinaryMatrix:
    """Immutable 0/1 matrix with tuple-of-tuples storage."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable[int]]) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {width}")
            for x in row:
                if x not in (0, 1):
                    raise ValueError(f"entry {x!r} in row {i + 1} is not 0/1")
        self.data = rows
        self.rows = len(rows)
        self.cols = width

    def entry(self, i: int, j: int) -> int:
        """1-indexed entry access."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"entry ({i},{j}) out of range")
        return self.data[i - 1][j - 1]

    def row_bits(self) -> list[int]:
        """Row masks with bit j set iff data[i][j] == 1 (0-indexed)."""
        out = []
        for row in self.data:
            mask = 0
            for j, x in enumerate(row):
                mask |= x << j
            out.append(mask)
        return out

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(zip(*self.data))

    def one_count(self) -> int:
        return sum(sum(row) for row in self.data)

    @staticmethod
    def identity(n: int) -> "BinaryMatrix":
        return BinaryMatrix([[int(i == j) for j in range(n)] for i in range(n)])

    @staticmethod
    def ones(rows: int, cols: int) -> "BinaryMatrix":
        return BinaryMatrix([[1] * cols for _ in range(rows)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "BinaryMatrix":
        return BinaryMatrix([[0] * cols for _ in range(rows)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols})"


def real_rank(m: BinaryMatrix) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m.data]
    rank = 0
    for col in range(m.cols):
        pivot = next((i for i in range(rank, m.rows) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        prow = a[rank]
        inv = 1 / prow[col]
        for i in range(m.rows):
            if i != rank and a[i][col]:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
        rank += 1
    return rank


def kernel_check(m: BinaryMatrix, x: Sequence[int]) -> bool:
    """True iff M x = 0 under exact integer arithmetic."""
    if len(x) != m.cols:
        raise ValueError(f"vector length {len(x)} != cols {m.cols}")
    return all(sum(r * xi for r, xi in zip(row, x)) == 0 for row in m.data)


@dataclass(frozen=True)
class TermRankResult:
    """Maximum matching and equal-size minimum line cover (Konig duality).

    matching: (row, col) pairs, 1-indexed; row_cover/col_cover: the lines of
    the minimum cover.  Every 1-entry lies on a cover line.
    """

    value: int
    matching: tuple[tuple[int, int], ...]
    row_cover: tuple[int, ...]
    col_cover: tuple[int, ...]


def term_rank(m: BinaryMatrix) -> TermRankResult:
    """Term rank via augmenting-path matching plus the Konig cover."""
    match_col = [-1] * m.cols  # col -> row, 0-indexed
    match_row = [-1] * m.rows

    def augment(i: int, seen: list[bool]) -> bool:
        for j in range(m.cols):
            if m.data[i][j] and not seen[j]:
                seen[j] = True
                if match_col[j] == -1 or augment(match_col[j], seen):
                    match_col[j] = i
                    match_row[i] = j
                    return True
        return False

    size = 0
    for i in range(m.rows):
        if any(m.data[i]):
            if augment(i, [False] * m.cols):
                size += 1

    # Konig: alternate from unmatched rows; cover = unreached rows + reached cols.
    reach_row = [match_row[i] == -1 and any(m.data[i]) for i in range(m.rows)]
    reach_col = [False] * m.cols
    queue = [i for i in range(m.rows) if reach_row[i]]
    while queue:
        i = queue.pop(0)
        for j in range(m.cols):
            if m.data[i][j] and not reach_col[j]:
                reach_col[j] = True
                i2 = match_col[j]
                if i2 != -1 and not reach_row[i2]:
                    reach_row[i2] = True
                    queue.append(i2)
    row_cover = tuple(i + 1 for i in range(m.rows) if match_row[i] != -1 and not reach_row[i])
    col_cover = tuple(j + 1 for j in range(m.cols) if reach_col[j])
    matching = tuple(
        (i + 1, match_row[i] + 1) for i in range(m.rows) if match_row[i] != -1
    )
    return TermRankResult(size, matching, row_cover, col_cover)


@dataclass(frozen=True)
class Rectangle:
    """An all-ones block of the host matrix; indices 1-based."""

    row_set: frozenset[int]
    col_set: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "row_set", frozenset(self.row_set))
        object.__setattr__(self, "col_set", frozenset(self.col_set))
        if not self.row_set or not self.col_set:
            raise ValueError("rectangle parts must be nonempty")
        for v in self.row_set | self.col_set:
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"invalid index {v!r}")

    def entries(self) -> Iterator[tuple[int, int]]:
        for i in self.row_set:
            for j in self.col_set:
                yield (i, j)


@dataclass(frozen=True)
class RectanglePartition:
    rectangles: tuple[Rectangle, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rectangles", tuple(self.rectangles))

    def __len__(self) -> int:
        return len(self.rectangles)

    def __iter__(self) -> Iterator[Rectangle]:
        return iter(self.rectangles)

    def to_dict(self) -> dict:
        return {
            "rectangles": [
                {"rows": sorted(r.row_set), "cols": sorted(r.col_set)}
                for r in self.rectangles
            ]
        }

    @staticmethod
    def from_dict(d: object) -> "RectanglePartition":
        if not isinstance(d, dict) or "rectangles" not in d:
            raise ParseError("rectangle JSON must be an object with 'rectangles'")
        items = d["rectangles"]
        if not isinstance(items, list):
            raise ParseError("'rectangles' must be a list")
        out = []
        for i, item in enumerate(items):
            if not isinstance(item, dict) or "rows" not in item or "cols" not in item:
                raise ParseError(f"rectangle {i} must have 'rows' and 'cols'")
            try:
                out.append(Rectangle(frozenset(item["rows"]), frozenset(item["cols"])))
            except (ValueError, TypeError) as exc:
                raise ParseError(f"rectangle {i}: {exc}") from None
        return RectanglePartition(tuple(out))


@dataclass(frozen=True)
class RectangleValidationReport:
    """Defect list for a proposed rectangle partition of the 1-entries."""

    valid: bool
    illegal_rectangles: tuple[tuple[int, str], ...]
    uncovered_entries: tuple[tuple[int, int], ...]
    overcovered_entries: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "illegal_rectangles": [
                {"index": i, "reason": r} for i, r in self.illegal_rectangles
            ],
            "uncovered_entries": [list(e) for e in self.uncovered_entries],
            "overcovered_entries": [list(e) for e in self.overcovered_entries],
        }


def validate_rectangle_partition(
    m: BinaryMatrix, rp: RectanglePartition
) -> RectangleValidationReport:
    """Check all-ones rectangles, pairwise disjointness, exact 1-coverage."""
    illegal: list[tuple[int, str]] = []
    coverage: dict[tuple[int, int], int] = {}
    for idx, rect in enumerate(rp):
        out_of_range = next(
            (
                (i, j)
                for i, j in sorted(rect.entries())
                if i > m.rows or j > m.cols
            ),
            None,
        )
        if out_of_range is not None:
            illegal.append((idx, f"entry {out_of_range} out of range"))
        zero = None
        for i, j in sorted(rect.entries()):
            if i > m.rows or j > m.cols:
                continue
            if m.data[i - 1][j - 1]:
                coverage[(i, j)] = coverage.get((i, j), 0) + 1
            elif zero is None:
                zero = (i, j)
        if zero is not None:
            illegal.append((idx, f"entry {zero} is 0"))
    ones = [
        (i + 1, j + 1)
        for i in range(m.rows)
        for j in range(m.cols)
        if m.data[i][j]
    ]
    uncovered = tuple(e for e in ones if e not in coverage)
    overcovered = tuple(sorted(e for e, c in coverage.items() if c > 1))
    valid = not illegal and not uncovered and not overcovered
    return RectangleValidationReport(valid, tuple(illegal), uncovered, overcovered)


@dataclass(frozen=True)
class BinaryRankResult:
    """Outcome of the exact rectangle-partition search.

    status "proven" means value is the true binary rank and partition is an
    optimal witness.  status "upper_only" means the search ran out of budget:
    value is the best upper bound (witnessed), lower the residual lower bound,
    so the true rank lies in [lower, value].
    """

    value: int
    status: str
    lower: int
    partition: RectanglePartition | None

    @property
    def proven(self) -> bool:
        return self.status == "proven"


def _trivial_partition(m: BinaryMatrix) -> RectanglePartition:
    # One rectangle per nonzero line, on whichever side has fewer of them.
    nz_rows = [i for i in range(m.rows) if any(m.data[i])]
    nz_cols = [j for j in range(m.cols) if any(m.data[i][j] for i in range(m.rows))]
    rects = []
    if len(nz_rows) <= len(nz_cols):
        for i in nz_rows:
            cols = frozenset(j + 1 for j in range(m.cols) if m.data[i][j])
            rects.append(Rectangle(frozenset({i + 1}), cols))
    else:
        for j in nz_cols:
            rows = frozenset(i + 1 for i in range(m.rows) if m.data[i][j])
            rects.append(Rectangle(rows, frozenset({j + 1})))
    return RectanglePartition(tuple(rects))


def _rects_from_kernel(slots) -> RectanglePartition:
    return RectanglePartition(
        tuple(
            Rectangle(
                frozenset(i + 1 for i in rows), frozenset(j + 1 for j in cols)
            )
            for rows, cols in slots
        )
    )


def binary_rank_exact(m: BinaryMatrix, budget_ms: int | None = None) -> BinaryRankResult:
    """Minimum rectangle-partition size of the 1-entries, by iterative deepening.

    Target sizes run from max(real_rank, 1) up to the trivial line-partition
    bound; each size is decided by an exact backtracking search over entry
    assignments with rectangle-closure propagation.  With sufficient budget
    the result is proven optimal; on budget exhaustion the best known interval
    is reported instead of an exception.

    Args:
        m: host matrix.
        budget_ms: optional wall-clock budget for the whole search.

    Returns:
        BinaryRankResult; status "proven" unless the budget ran out.
    """
    if m.one_count() == 0:
        return BinaryRankResult(0, "proven", 0, RectanglePartition(()))
    lower = max(real_rank(m), 1)
    trivial = _trivial_partition(m)
    upper = len(trivial)
    deadline = None
    if budget_ms is not None:
        deadline = time.monotonic_ns() + budget_ms * 1_000_000
    row_bits = m.row_bits()
    for k in range(lower, upper):
        status, slots = _kernels.rectangle_partition(
            m.rows, m.cols, row_bits, k, deadline
        )
        if status == "found":
            return BinaryRankResult(k, "proven", k, _rects_from_kernel(slots))
        if status == "aborted":
            return BinaryRankResult(upper, "upper_only", k, trivial)
    return BinaryRankResult(upper, "proven", upper, trivial)


def tournament_check(m: BinaryMatrix) -> bool:
    """True iff zero diagonal and m[i,j] + m[j,i] = 1 for all i != j."""
    if m.rows != m.cols:
        raise ValueError(f"tournament check needs a square matrix, got {m.rows}x{m.cols}")
    d = m.data
    n = m.rows
    if any(d[i][i] for i in range(n)):
        return False
    return all(d[i][j] + d[j][i] == 1 for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class RankReport:
    """The three computed ranks plus witnesses; binary may be an interval."""

    real: int
    term: TermRankResult
    binary: BinaryRankResult | None

    def to_dict(self) -> dict:
        out: dict = {"real_rank": self.real, "term_rank": self.term.value}
        if self.binary is not None:
            out["binary_rank"] = self.binary.value
            out["nonneg_integer_rank"] = self.binary.value
            out["binary_status"] = self.binary.status
            out["binary_lower"] = self.binary.lower
        out["witnesses"] = {
            "matching": [list(p) for p in self.term.matching],
            "row_cover": list(self.term.row_cover),
            "col_cover": list(self.term.col_cover),
        }
        if self.binary is not None and self.binary.partition is not None:
            out["witnesses"]["rectangles"] = self.binary.partition.to_dict()["rectangles"]
        return out


def rank_report(
    m: BinaryMatrix, budget_ms: int | None = None, include_binary: bool = True
) -> RankReport:
    binary = binary_rank_exact(m, budget_ms) if include_binary else None
    return RankReport(real_rank(m), term_rank(m), binary)


# --- text format: "<rows> <cols>" then rows of space-separated 0/1 ---

def parse_matrix(text: str) -> BinaryMatrix:
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("c")
    ]
    if not lines:
        raise ParseError("empty matrix input")
    no, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise ParseError("expected '<rows> <cols>' header", no)
    try:
        rows, cols = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError("header fields must be integers", no) from None
    if rows < 1 or cols < 1:
        raise ParseError(f"invalid dimensions {rows}x{cols}", no)
    if len(lines) - 1 != rows:
        raise ParseError(f"expected {rows} data rows, found {len(lines) - 1}")
    data = []
    for no, line in lines[1:]:
        fields = line.split()
        if len(fields) != cols:
            raise ParseError(f"expected {cols} entries, found {len(fields)}", no)
        row = []
        for f in fields:
            if f not in ("0", "1"):
                raise ParseError(f"entry {f!r} is not 0/1", no)
            row.append(int(f))
        data.append(row)
    return BinaryMatrix(data)


def format_matrix(m: BinaryMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(" ".join(str(x) for x in row) for row in m.data)
    return "\n".join(lines) + "\n"
