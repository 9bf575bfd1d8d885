"""Super RSK: two-rowed arrays, the correspondence, and its symmetry.

A two-rowed array over alphabets L (top) and P (bottom) is a sequence of
columns (a_i, b_i) that weakly increases in the product order, where pairs
are compared bottom entry first, then top entry, and where equal adjacent
columns are allowed only when the pair parity |a| + |b| is 0.

The forward map builds a pair of equal-shape tableaux (T, U): reading the
columns left to right, the top letter a is row inserted into T when the
bottom letter b has parity 0 and column inserted when b has parity 1, and b
is then placed in U at the cell where T grew.  The inverse map peels the
largest bottom letter back out of U, undoing a row deletion or a column
deletion on T accordingly, until both tableaux are empty; sorting the
recovered columns into the product order restores the array.

Swapping the two rows of every column and re-sorting gives the involution
on arrays.  An array "has symmetry" when the involution exchanges the roles
of T and U.  That always happens classically; over signed alphabets it is
guaranteed when both alphabets put all their parity-0 letters before all
their parity-1 letters (or both the other way around) and every column has
pair parity 0.  Outside those hypotheses `symmetry_probe` surveys what
actually happens.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .alphabet import SignedAlphabet, make_alphabet
from .bumping import _bump_col, _bump_row, _unbump_col, _unbump_row, tableau_of_word
from .errors import (
    BoundExceededError,
    CornerError,
    HypothesisError,
    ShapeError,
    ValidationError,
)
from .plactic import DEFAULT_MAX_WORD_LEN
from .shape import as_partition
from .tableau import Tableau, Word, _check_index_rows, enumerate_standard


class TwoRowedArray(object):
    """A two-rowed array; `pairs` holds (top, bottom) letter index pairs.

    The constructor trusts its input; use `validate_array` to build one
    from symbols with full checking.
    """

    __slots__ = ("top_alphabet", "bottom_alphabet", "pairs", "_hash")

    def __init__(
        self,
        top_alphabet: SignedAlphabet,
        bottom_alphabet: SignedAlphabet,
        pairs: Iterable[tuple[int, int]] = (),
    ):
        pairs = tuple((a, b) for a, b in pairs)
        object.__setattr__(self, "top_alphabet", top_alphabet)
        object.__setattr__(self, "bottom_alphabet", bottom_alphabet)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "_hash", hash((top_alphabet, bottom_alphabet, pairs)))

    def __setattr__(self, name, value):
        raise AttributeError("TwoRowedArray is immutable")

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def top_symbols(self) -> tuple[str, ...]:
        return self.top_alphabet.to_symbols(a for a, _ in self.pairs)

    @property
    def bottom_symbols(self) -> tuple[str, ...]:
        return self.bottom_alphabet.to_symbols(b for _, b in self.pairs)

    def pair_parities(self) -> tuple[int, ...]:
        pl = self.top_alphabet.parities
        pp = self.bottom_alphabet.parities
        return tuple((pl[a] + pp[b]) % 2 for a, b in self.pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoRowedArray):
            return NotImplemented
        return (
            self.top_alphabet == other.top_alphabet
            and self.bottom_alphabet == other.bottom_alphabet
            and self.pairs == other.pairs
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        cols = ", ".join("(%s,%s)" % (a, b) for a, b in zip(self.top_symbols, self.bottom_symbols))
        return "TwoRowedArray(%s)" % cols

    def pretty(self) -> str:
        if not self.pairs:
            return "(empty)"
        tops = self.top_symbols
        bots = self.bottom_symbols
        widths = [max(len(t), len(b)) for t, b in zip(tops, bots)]
        line1 = " ".join(t.ljust(w) for t, w in zip(tops, widths)).rstrip()
        line2 = " ".join(b.ljust(w) for b, w in zip(bots, widths)).rstrip()
        return line1 + "\n" + line2


def validate_array(
    columns: Iterable[tuple[str, str]],
    top_alphabet: SignedAlphabet,
    bottom_alphabet: SignedAlphabet,
) -> TwoRowedArray:
    """Build a two-rowed array from (top, bottom) symbol columns, checking
    the product-order sorting and the parity condition on repeats."""
    pairs = []
    for a_sym, b_sym in columns:
        pairs.append((top_alphabet.index(a_sym), bottom_alphabet.index(b_sym)))
    pl = top_alphabet.parities
    pp = bottom_alphabet.parities
    for t in range(len(pairs) - 1):
        a1, b1 = pairs[t]
        a2, b2 = pairs[t + 1]
        if (b1, a1) > (b2, a2):
            raise ValidationError(
                "columns %d and %d are out of order" % (t + 1, t + 2), cell=(1, t + 2)
            )
        if (a1, b1) == (a2, b2) and (pl[a1] + pp[b1]) % 2 != 0:
            raise ValidationError(
                "columns %d and %d repeat a pair of parity 1" % (t + 1, t + 2),
                cell=(1, t + 2),
            )
    return TwoRowedArray(top_alphabet, bottom_alphabet, pairs)


def rsk_forward(array: TwoRowedArray) -> tuple[Tableau, Tableau]:
    """The correspondence: array to an equal-shape tableau pair (T, U)."""
    L = array.top_alphabet
    P = array.bottom_alphabet
    lpar = L.parities
    ppar = P.parities
    trows: list[list[int]] = []
    urows: list[list[int]] = []
    for a, b in array.pairs:
        if ppar[b] == 0:
            i = _bump_row(trows, a, lpar)
            if i - 1 == len(urows):
                urows.append([b])
            else:
                urows[i - 1].append(b)
        else:
            j = _bump_col(trows, a, lpar)
            h = 0
            while h < len(urows) and len(urows[h]) >= j:
                h += 1
            if h == len(urows):
                urows.append([b])
            else:
                assert len(urows[h]) == j - 1
                urows[h].append(b)
    _check_index_rows(urows, P)
    T = Tableau(L, trows)
    U = Tableau(P, urows)
    assert T.shape == U.shape
    return T, U


def rsk_inverse(t: Tableau, u: Tableau) -> TwoRowedArray:
    """Inverse correspondence: an equal-shape pair back to its array.

    Repeatedly takes the largest letter y of u; when y has parity 0 it is
    removed from the end of the lowest-index row of u that ends in y, and a
    row deletion at that row of t releases the matching top letter; when y
    has parity 1 the same happens at the lowest-index column, with a column
    deletion.  The recovered columns, sorted into the product order, form
    the array.
    """
    if t.shape != u.shape:
        raise ShapeError("tableaux have shapes %r and %r" % (t.shape, u.shape))
    L = t.alphabet
    P = u.alphabet
    lpar = L.parities
    ppar = P.parities
    trows = [list(r) for r in t.rows]
    urows = [list(r) for r in u.rows]
    out = []
    while urows:
        y = max(max(r) for r in urows)
        if ppar[y] == 0:
            i = 0
            for r in range(len(urows)):
                last_in_row = urows[r][-1]
                corner = r + 1 == len(urows) or len(urows[r]) > len(urows[r + 1])
                if last_in_row == y and corner:
                    i = r + 1
                    break
            else:
                raise CornerError(
                    "letter %s heads no removable row corner; not a valid pair"
                    % P.symbol(y)
                )
            x = _unbump_row(trows, i, lpar)
            urows[i - 1].pop()
            if not urows[i - 1]:
                urows.pop()
        else:
            j = 0
            for c in range(len(urows[0])):
                h = 0
                while h < len(urows) and len(urows[h]) > c:
                    h += 1
                if urows[h - 1][c] == y and len(urows[h - 1]) == c + 1:
                    j = c + 1
                    break
            else:
                raise CornerError(
                    "letter %s heads no removable column corner; not a valid pair"
                    % P.symbol(y)
                )
            x = _unbump_col(trows, j, lpar)
            h = 0
            while h < len(urows) and len(urows[h]) >= j:
                h += 1
            urows[h - 1].pop()
            if not urows[h - 1]:
                urows.pop()
        out.append((x, y))
    out.sort(key=lambda ab: (ab[1], ab[0]))
    return TwoRowedArray(L, P, out)


def word_to_array(word: Word) -> TwoRowedArray:
    """Embed a word as an array over positions: bottom letters are the
    positions 1..n, all of parity 0."""
    n = len(word)
    places = make_alphabet([str(k) for k in range(1, n + 1)], [0] * n)
    return TwoRowedArray(word.alphabet, places, [(x, k) for k, x in enumerate(word.letters)])


def class_size(word: Word, max_len: int = DEFAULT_MAX_WORD_LEN) -> int:
    """Number of words congruent to this one: the count of standard fillings
    of the shape of its tableau."""
    if len(word) > max_len:
        raise BoundExceededError(
            "word of length %d exceeds the class size bound %d" % (len(word), max_len)
        )
    return enumerate_standard(tableau_of_word(word).shape)


def array_involution(array: TwoRowedArray) -> TwoRowedArray:
    """Swap the two rows of every column and re-sort into the product order
    over the swapped alphabet pair."""
    swapped = sorted(((b, a) for a, b in array.pairs), key=lambda ba: (ba[1], ba[0]))
    return TwoRowedArray(array.bottom_alphabet, array.top_alphabet, swapped)


def has_symmetry(array: TwoRowedArray) -> bool:
    """Whether the involution swaps the two tableaux of the correspondence."""
    t, u = rsk_forward(array)
    t2, u2 = rsk_forward(array_involution(array))
    return t2 == u and u2 == t


def _even_first(alphabet: SignedAlphabet) -> bool:
    seen_odd = False
    for p in alphabet.parities:
        if p == 1:
            seen_odd = True
        elif seen_odd:
            return False
    return True


def _odd_first(alphabet: SignedAlphabet) -> bool:
    seen_even = False
    for p in alphabet.parities:
        if p == 0:
            seen_even = True
        elif seen_even:
            return False
    return True


def check_susy(array: TwoRowedArray) -> bool:
    """Symmetry under the guaranteed hypotheses.

    Requires both alphabets to place their parity-0 letters before their
    parity-1 letters (or both the reverse), and every column to have pair
    parity 0; raises HypothesisError otherwise, so callers can route such
    arrays to the unrestricted probe instead.  Returns has_symmetry, which
    the hypotheses force to be True.
    """
    L = array.top_alphabet
    P = array.bottom_alphabet
    aligned = (_even_first(L) and _even_first(P)) or (_odd_first(L) and _odd_first(P))
    if not aligned:
        raise HypothesisError(
            "alphabets do not split with aligned parity blocks"
        )
    if any(p != 0 for p in array.pair_parities()):
        raise HypothesisError("array has a column of pair parity 1")
    return has_symmetry(array)


def split_array(array: TwoRowedArray) -> tuple[TwoRowedArray, TwoRowedArray]:
    """Split an all parity-0 array into its even-pair and odd-pair parts.

    Requires every column to have pair parity 0 and both alphabets to place
    parity-0 letters first.  The columns whose entries both have parity 0
    form a prefix, returned over the parity-0 sub-alphabets; the remaining
    columns are returned over the parity-1 sub-alphabets.
    """
    L = array.top_alphabet
    P = array.bottom_alphabet
    if not (_even_first(L) and _even_first(P)):
        raise HypothesisError("alphabets must place parity-0 letters first")
    if any(p != 0 for p in array.pair_parities()):
        raise HypothesisError("array has a column of pair parity 1")
    l0 = len(L.even_letters)
    p0 = len(P.even_letters)
    sub_l0 = make_alphabet(L.even_letters, [0] * l0)
    sub_l1 = make_alphabet(L.odd_letters, [1] * (len(L) - l0))
    sub_p0 = make_alphabet(P.even_letters, [0] * p0)
    sub_p1 = make_alphabet(P.odd_letters, [1] * (len(P) - p0))
    cut = sum(1 for a, _ in array.pairs if L.parities[a] == 0)
    head = array.pairs[:cut]
    tail = array.pairs[cut:]
    assert all(L.parities[a] == 0 and P.parities[b] == 0 for a, b in head)
    assert all(L.parities[a] == 1 and P.parities[b] == 1 for a, b in tail)
    s0 = TwoRowedArray(sub_l0, sub_p0, [(a, b) for a, b in head])
    s1 = TwoRowedArray(sub_l1, sub_p1, [(a - l0, b - p0) for a, b in tail])
    return s0, s1


def c_lambda(lam: Iterable[int]) -> Tableau:
    """The tableau of the given shape whose row i reads 1, 2, ..., lam_i
    over the all parity-1 alphabet 1..lam_1."""
    lam = as_partition(lam)
    width = lam[0] if lam else 0
    alphabet = make_alphabet([str(k) for k in range(1, width + 1)], [1] * width)
    return Tableau(alphabet, [range(part) for part in lam])


def enumerate_arrays(
    top_alphabet: SignedAlphabet,
    bottom_alphabet: SignedAlphabet,
    max_cols: int,
) -> Iterator[TwoRowedArray]:
    """All valid arrays with at most max_cols columns, in a deterministic
    order (by length-first choice of columns in the product order)."""
    pairs = [
        (a, b)
        for b in range(len(bottom_alphabet))
        for a in range(len(top_alphabet))
    ]
    par = [
        (top_alphabet.parities[a] + bottom_alphabet.parities[b]) % 2 for a, b in pairs
    ]
    cols: list[tuple[int, int]] = []

    def rec(start: int) -> Iterator[TwoRowedArray]:
        yield TwoRowedArray(top_alphabet, bottom_alphabet, cols)
        if len(cols) == max_cols:
            return
        for t in range(start, len(pairs)):
            cols.append(pairs[t])
            yield from rec(t if par[t] == 0 else t + 1)
            cols.pop()

    return rec(0)


_CELL_NAMES = {
    (True, True): "hypothesis_symmetric",
    (True, False): "hypothesis_asymmetric",
    (False, True): "unrestricted_symmetric",
    (False, False): "unrestricted_asymmetric",
}


@dataclass
class ProbeReport:
    """Census of the arrays over an alphabet pair, classified by whether the
    guaranteed-symmetry hypotheses hold and whether symmetry actually holds."""

    max_cols: int
    total: int = 0
    counts: dict[tuple[bool, bool], int] = field(
        default_factory=lambda: {k: 0 for k in _CELL_NAMES}
    )
    examples: dict[tuple[bool, bool], list[TwoRowedArray]] = field(
        default_factory=lambda: {k: [] for k in _CELL_NAMES}
    )

    def to_json_obj(self) -> dict:
        return {
            "max_cols": self.max_cols,
            "total": self.total,
            "counts": {_CELL_NAMES[k]: v for k, v in sorted(self.counts.items())},
            "examples": {
                _CELL_NAMES[k]: [
                    {"top": list(s.top_symbols), "bottom": list(s.bottom_symbols)}
                    for s in v
                ]
                for k, v in sorted(self.examples.items())
            },
        }


def symmetry_probe(
    top_alphabet: SignedAlphabet,
    bottom_alphabet: SignedAlphabet,
    max_cols: int,
    examples_per_cell: int = 3,
    max_arrays: int = 10**6,
    sink=None,
) -> ProbeReport:
    """Classify every array with at most max_cols columns by (hypotheses
    satisfied, symmetric).  `sink`, if given, receives one dict per array,
    which the command line driver streams out as JSON lines."""
    aligned = (_even_first(top_alphabet) and _even_first(bottom_alphabet)) or (
        _odd_first(top_alphabet) and _odd_first(bottom_alphabet)
    )
    report = ProbeReport(max_cols=max_cols)
    for array in enumerate_arrays(top_alphabet, bottom_alphabet, max_cols):
        report.total += 1
        if report.total > max_arrays:
            raise BoundExceededError("probe exceeded %d arrays" % max_arrays)
        hyp = aligned and all(p == 0 for p in array.pair_parities())
        sym = has_symmetry(array)
        key = (hyp, sym)
        report.counts[key] += 1
        if len(report.examples[key]) < examples_per_cell:
            report.examples[key].append(array)
        if sink is not None:
            sink(
                {
                    "top": list(array.top_symbols),
                    "bottom": list(array.bottom_symbols),
                    "hypothesis": hyp,
                    "symmetric": sym,
                }
            )
    return report


def array_to_json(array: TwoRowedArray) -> dict:
    return {"top": list(array.top_symbols), "bottom": list(array.bottom_symbols)}


def array_from_json(
    obj: dict, top_alphabet: SignedAlphabet, bottom_alphabet: SignedAlphabet
) -> TwoRowedArray:
    if not isinstance(obj, dict) or "top" not in obj or "bottom" not in obj:
        raise ValidationError('array JSON must have "top" and "bottom" arrays')
    top = obj["top"]
    bottom = obj["bottom"]
    if len(top) != len(bottom):
        raise ValidationError("top and bottom rows have different lengths")
    return validate_array(zip(top, bottom), top_alphabet, bottom_alphabet)
