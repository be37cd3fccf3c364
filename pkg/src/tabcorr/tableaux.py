"""Semistandard Young tableaux: validation, weight, enumeration, Kostka numbers,
and the Schensted-style insertion primitives the correspondences are built on.

Cell coordinates are 0-based (row, col) throughout; letters are 1-based values.
"""

from bisect import bisect_left, bisect_right
from functools import cache

from .partitions import check_partition, partitions_of


class NonPartitionShape(ValueError):
    pass


class RowDecreasing(ValueError):
    pass


class ColumnNotStrict(ValueError):
    pass


class EntryOutOfRange(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


class NotACorner(ValueError):
    pass


class NotCoherent(ValueError):
    pass


class Tableau:
    """A filled Young diagram, stored as a tuple of row tuples (top to bottom).

    The container itself is dumb: `validate` enforces semistandardness, and
    the dual-insertion routines use the same container for row-strict arrays.
    Instances are immutable and hashable.
    """

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({[list(r) for r in self.rows]})"

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def validate(rows, n: int) -> Tableau:
    """Check that `rows` is a semistandard tableau over the alphabet 1..n.

    Raises NonPartitionShape / RowDecreasing / ColumnNotStrict /
    EntryOutOfRange, naming the first violating cell (0-based).
    """
    rows = [list(r) for r in rows]
    for i in range(len(rows) - 1):
        if len(rows[i + 1]) > len(rows[i]):
            raise NonPartitionShape(f"row {i + 1} is longer than row {i}")
        if len(rows[i + 1]) == 0:
            raise NonPartitionShape(f"row {i + 1} is empty")
    if rows and len(rows[0]) == 0:
        raise NonPartitionShape("row 0 is empty")
    for i, row in enumerate(rows):
        for j, e in enumerate(row):
            if not isinstance(e, int) or e < 1 or e > n:
                raise EntryOutOfRange(f"entry {e!r} at cell ({i}, {j}) not in 1..{n}")
            if j > 0 and row[j - 1] > e:
                raise RowDecreasing(f"row not weakly increasing at cell ({i}, {j})")
            if i > 0 and rows[i - 1][j] >= e:
                raise ColumnNotStrict(f"column not strictly increasing at cell ({i}, {j})")
    return Tableau(rows)


def weight(t: Tableau, n: int) -> tuple[int, ...]:
    """Multiplicity vector: coordinate i-1 counts occurrences of letter i."""
    coords = [0] * n
    for row in t.rows:
        for e in row:
            coords[e - 1] += 1
    return tuple(coords)


def _fill(shape, n, budget):
    """Column-major backtracking fill of `shape` with letters 1..n.

    budget is None (unbounded) or a mutable list of remaining letter counts.
    Yields completed row arrays.
    """
    conj_heights = []
    if shape:
        conj_heights = [sum(1 for p in shape if p >= c + 1) for c in range(shape[0])]
    cells = [(r, c) for c in range(len(conj_heights)) for r in range(conj_heights[c])]
    rows = [[0] * p for p in shape]

    def rec(k):
        if k == len(cells):
            yield [row[:] for row in rows]
            return
        r, c = cells[k]
        lo = 1
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        # letters below this cell in the same column need strictly larger values
        hi = n - (conj_heights[c] - r - 1)
        for e in range(lo, hi + 1):
            if budget is not None:
                if budget[e - 1] == 0:
                    continue
                budget[e - 1] -= 1
            rows[r][c] = e
            yield from rec(k + 1)
            if budget is not None:
                budget[e - 1] += 1

    yield from rec(0)


def enumerate_tableaux(lam: tuple[int, ...], n: int) -> list[Tableau]:
    """All semistandard tableaux of shape lam over 1..n, in fill order.

    Empty when lam has more than n nonzero parts (the first column cannot be
    filled strictly).
    """
    lam = check_partition(lam)
    if len(lam) > n:
        return []
    return [Tableau(rows) for rows in _fill(lam, n, None)]


def enumerate_tableaux_weight(lam: tuple[int, ...], mu) -> list[Tableau]:
    """All semistandard tableaux of shape lam and weight mu, in fill order."""
    lam = check_partition(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|shape| = {sum(lam)} but weight sums to {sum(mu)}")
    if len(lam) > len(mu):
        return []
    return [Tableau(rows) for rows in _fill(lam, len(mu), list(mu))]


@cache
def kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Kostka number: the number of tableaux of shape lam and weight mu.

    Computed by exhaustive enumeration (which doubles as its own oracle);
    symmetry under permuting mu is a tested property, not an assumption.
    """
    return len(enumerate_tableaux_weight(lam, mu))


def standard_count(lam: tuple[int, ...]) -> int:
    """Number of standard tableaux of shape lam (weight all-ones)."""
    lam = check_partition(lam)
    return kostka(lam, (1,) * sum(lam))


# ---------------------------------------------------------------------------
# Insertion primitives.  Row insertion bumps the leftmost entry strictly
# greater than x; column insertion bumps the topmost entry >= x; dual row
# insertion bumps the leftmost entry >= x (producing row-strict arrays).
# Each reverse routine exactly undoes its forward op, starting from an
# outer-corner cell.
# ---------------------------------------------------------------------------


def _is_corner(rows, cell) -> bool:
    r, c = cell
    if r < 0 or r >= len(rows) or c != len(rows[r]) - 1:
        return False
    return r + 1 == len(rows) or len(rows[r + 1]) <= c


def row_insert(t: Tableau, x: int) -> tuple[Tableau, tuple[int, int]]:
    rows = [list(r) for r in t.rows]
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            cell = (r, 0)
            break
        row = rows[r]
        i = bisect_right(row, x)
        if i == len(row):
            row.append(x)
            cell = (r, i)
            break
        x, row[i] = row[i], x
        r += 1
    return Tableau(rows), cell


def reverse_row_insert(t: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    rows = [list(r) for r in t.rows]
    if not _is_corner(rows, cell):
        raise NotACorner(f"cell {cell} is not an outer corner of shape {t.shape}")
    r, _ = cell
    y = rows[r].pop()
    if not rows[r]:
        rows.pop()
    for i in range(r - 1, -1, -1):
        row = rows[i]
        j = bisect_left(row, y) - 1
        if j < 0:
            raise NotCoherent(f"no entry below {y} in row {i} to un-bump")
        y, row[j] = row[j], y
    return Tableau(rows), y


def _columns(rows):
    if not rows:
        return []
    return [[row[c] for row in rows if len(row) > c] for c in range(len(rows[0]))]


def _rows_from_columns(cols):
    if not cols:
        return []
    return [[col[r] for col in cols if len(col) > r] for r in range(len(cols[0]))]


def col_insert(t: Tableau, x: int) -> tuple[Tableau, tuple[int, int]]:
    cols = _columns(t.rows)
    c = 0
    while True:
        if c == len(cols):
            cols.append([x])
            cell = (0, c)
            break
        col = cols[c]
        i = bisect_left(col, x)
        if i == len(col):
            col.append(x)
            cell = (i, c)
            break
        x, col[i] = col[i], x
        c += 1
    return Tableau(_rows_from_columns(cols)), cell


def reverse_col_insert(t: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    rows = [list(r) for r in t.rows]
    if not _is_corner(rows, cell):
        raise NotACorner(f"cell {cell} is not an outer corner of shape {t.shape}")
    cols = _columns(rows)
    r, c = cell
    y = cols[c].pop()
    if not cols[c]:
        cols.pop()
    for i in range(c - 1, -1, -1):
        col = cols[i]
        j = bisect_left(col, y) - 1
        if j < 0:
            raise NotCoherent(f"no entry below {y} in column {i} to un-bump")
        y, col[j] = col[j], y
    return Tableau(_rows_from_columns(cols)), y


def dual_row_insert(t: Tableau, x: int) -> tuple[Tableau, tuple[int, int]]:
    """Insert into a row-strict array (rows strictly increasing, columns weakly)."""
    rows = [list(r) for r in t.rows]
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            cell = (r, 0)
            break
        row = rows[r]
        i = bisect_left(row, x)
        if i == len(row):
            row.append(x)
            cell = (r, i)
            break
        x, row[i] = row[i], x
        r += 1
    return Tableau(rows), cell


def reverse_dual_row_insert(t: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    rows = [list(r) for r in t.rows]
    if not _is_corner(rows, cell):
        raise NotACorner(f"cell {cell} is not an outer corner of shape {t.shape}")
    r, _ = cell
    y = rows[r].pop()
    if not rows[r]:
        rows.pop()
    for i in range(r - 1, -1, -1):
        row = rows[i]
        j = bisect_right(row, y) - 1
        if j < 0:
            raise NotCoherent(f"no entry at most {y} in row {i} to un-bump")
        y, row[j] = row[j], y
    return Tableau(rows), y


def all_tableaux_up_to(max_size: int, n: int) -> list[Tableau]:
    """Every semistandard tableau with at most max_size cells over 1..n."""
    out = []
    for d in range(max_size + 1):
        for lam in partitions_of(d):
            out.extend(enumerate_tableaux(lam, n))
    return out
