"""Signed Schensted bumping: row and column insertion and their inverses.

Row insertion of a letter x scans a row for the bumping position, which
depends on the parity of x: a parity-0 letter bumps the leftmost entry
strictly greater than x, a parity-1 letter bumps the leftmost entry greater
than or equal to x.  If nothing bumps, x lands at the end of the row and the
procedure reports the row index.  Column insertion is the mirror image,
scanning columns with the parity roles swapped: a parity-0 letter bumps the
topmost entry greater than or equal to x, a parity-1 letter the topmost
entry strictly greater.

Row deletion inverts row insertion.  Starting from the last entry of a row
whose final cell is a removable corner, the in-hand letter x walks upward:
in each higher row it swaps with the rightmost entry strictly smaller than x
when x has parity 0, or the rightmost entry not exceeding x when x has
parity 1, and the letter ejected from the top row is returned.  Column
deletion is realized by transposing, deleting a row over the conjugate
alphabet, and transposing back.

The module-level functions are pure: they copy the input tableau and return
fresh objects.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .errors import AlphabetMismatchError, CornerError
from .tableau import Tableau, Word

Trace = tuple[tuple[int, int, int], ...]


def _bump_row(rows: list[list[int]], x: int, par: tuple[int, ...], trace=None) -> int:
    """Insert letter index x, mutating rows; returns the 1-based row index
    of the cell added at the end of the bumping chain."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            if trace is not None:
                trace.append((i + 1, 1, x))
            return i + 1
        row = rows[i]
        j = bisect_right(row, x) if par[x] == 0 else bisect_left(row, x)
        if j == len(row):
            row.append(x)
            if trace is not None:
                trace.append((i + 1, j + 1, x))
            return i + 1
        row[j], x = x, row[j]
        if trace is not None:
            trace.append((i + 1, j + 1, row[j]))
        i += 1


def _unbump_row(rows: list[list[int]], i: int, par: tuple[int, ...]) -> int:
    """Delete the last cell of 1-based row i, mutating rows; returns the
    ejected letter index.  The caller checks the corner precondition."""
    x = rows[i - 1].pop()
    if not rows[i - 1]:
        assert i == len(rows)
        rows.pop()
    for h in range(i - 2, -1, -1):
        row = rows[h]
        if par[x] == 0:
            jj = bisect_left(row, x) - 1
        else:
            jj = bisect_right(row, x) - 1
        if jj < 0:
            break
        row[jj], x = x, row[jj]
    return x


def _col_height(rows: list[list[int]], j: int) -> int:
    h = 0
    while h < len(rows) and len(rows[h]) > j:
        h += 1
    return h


def _bump_col(rows: list[list[int]], x: int, par: tuple[int, ...], trace=None) -> int:
    """Insert letter index x by columns, mutating rows; returns the 1-based
    column index of the added cell."""
    j = 0
    while True:
        h = _col_height(rows, j)
        i = 0
        if par[x] == 0:
            while i < h and rows[i][j] < x:
                i += 1
        else:
            while i < h and rows[i][j] <= x:
                i += 1
        if i == h:
            if h == len(rows):
                rows.append([x])
            else:
                assert len(rows[h]) == j
                rows[h].append(x)
            if trace is not None:
                trace.append((h + 1, j + 1, x))
            return j + 1
        rows[i][j], x = x, rows[i][j]
        if trace is not None:
            trace.append((i + 1, j + 1, rows[i][j]))
        j += 1


def _transpose_rows(rows: list[list[int]]) -> list[list[int]]:
    out: list[list[int]] = []
    if rows:
        for j in range(len(rows[0])):
            out.append([r[j] for r in rows if len(r) > j])
    return out


def _unbump_col(rows: list[list[int]], j: int, par: tuple[int, ...]) -> int:
    """Delete the bottom cell of 1-based column j via the transpose of the
    row deletion over the conjugate alphabet."""
    t = _transpose_rows(rows)
    conj = tuple(1 - p for p in par)
    x = _unbump_row(t, j, conj)
    rows[:] = _transpose_rows(t)
    return x


def row_insert(tableau: Tableau, x: str) -> tuple[Tableau, int]:
    """Row insert the letter x; returns the new tableau and the 1-based row
    index where the bumping chain ended."""
    xi = tableau.alphabet.index(x)
    rows = [list(r) for r in tableau.rows]
    i = _bump_row(rows, xi, tableau.alphabet.parities)
    return Tableau(tableau.alphabet, rows), i


def row_insert_trace(tableau: Tableau, x: str) -> tuple[Tableau, int, Trace]:
    """Like row_insert, also returning the bumping chain as a tuple of
    (row, column, symbol) placements, the final appended cell included."""
    xi = tableau.alphabet.index(x)
    rows = [list(r) for r in tableau.rows]
    steps: list[tuple[int, int, int]] = []
    i = _bump_row(rows, xi, tableau.alphabet.parities, steps)
    trace = tuple((r, c, tableau.alphabet.symbol(v)) for r, c, v in steps)
    return Tableau(tableau.alphabet, rows), i, trace


def row_delete(tableau: Tableau, i: int) -> tuple[Tableau, str]:
    """Remove the last cell of row i (which must be a removable corner) and
    run the bumping chain backwards; returns the new tableau and the ejected
    letter."""
    lam = tableau.shape
    if not 1 <= i <= len(lam):
        raise CornerError("row %d does not exist" % i)
    if i < len(lam) and lam[i - 1] <= lam[i]:
        raise CornerError("the last cell of row %d is not a removable corner" % i)
    rows = [list(r) for r in tableau.rows]
    x = _unbump_row(rows, i, tableau.alphabet.parities)
    return Tableau(tableau.alphabet, rows), tableau.alphabet.symbol(x)


def col_insert(x: str, tableau: Tableau) -> tuple[Tableau, int]:
    """Column insert the letter x; returns the new tableau and the 1-based
    column index where the bumping chain ended."""
    xi = tableau.alphabet.index(x)
    rows = [list(r) for r in tableau.rows]
    j = _bump_col(rows, xi, tableau.alphabet.parities)
    return Tableau(tableau.alphabet, rows), j


def col_insert_trace(x: str, tableau: Tableau) -> tuple[Tableau, int, Trace]:
    """Like col_insert, also returning the bumping chain as (row, column,
    symbol) placements."""
    xi = tableau.alphabet.index(x)
    rows = [list(r) for r in tableau.rows]
    steps: list[tuple[int, int, int]] = []
    j = _bump_col(rows, xi, tableau.alphabet.parities, steps)
    trace = tuple((r, c, tableau.alphabet.symbol(v)) for r, c, v in steps)
    return Tableau(tableau.alphabet, rows), j, trace


def col_delete(tableau: Tableau, j: int) -> tuple[Tableau, str]:
    """Remove the bottom cell of column j (which must be a removable corner)
    and run the column bumping chain backwards; returns the new tableau and
    the ejected letter."""
    rows = [list(r) for r in tableau.rows]
    h = _col_height(rows, j - 1)
    if j < 1 or h == 0:
        raise CornerError("column %d does not exist" % j)
    if len(rows[h - 1]) != j:
        raise CornerError("the bottom cell of column %d is not a removable corner" % j)
    x = _unbump_col(rows, j, tableau.alphabet.parities)
    return Tableau(tableau.alphabet, rows), tableau.alphabet.symbol(x)


def row_insert_word(tableau: Tableau, word: Word) -> Tableau:
    """Row insert the letters of the word from left to right."""
    if word.alphabet != tableau.alphabet:
        raise AlphabetMismatchError("word and tableau live over different alphabets")
    rows = [list(r) for r in tableau.rows]
    par = tableau.alphabet.parities
    for x in word.letters:
        _bump_row(rows, x, par)
    return Tableau(tableau.alphabet, rows)


def tableau_of_word(word: Word) -> Tableau:
    """Tableau of a word: row insert its letters into the empty tableau."""
    rows: list[list[int]] = []
    par = word.alphabet.parities
    for x in word.letters:
        _bump_row(rows, x, par)
    return Tableau(word.alphabet, rows)
