"""Signed alphabets: totally ordered finite letter sets with a parity map.

A signed alphabet is a finite sequence of distinct symbols together with a
parity (0 or 1) for each symbol.  The order of the sequence is the order of
the alphabet; it is deliberately independent of any lexicographic order on
the symbols themselves.  Parity-0 letters behave like ordinary (even)
letters, parity-1 letters are the odd ones.

Letters are opaque strings at the API boundary.  Internally the rest of the
package works with letter indices (positions in the alphabet), which this
module translates in both directions.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import AlphabetError, ForeignLetterError


class SignedAlphabet:
    """An immutable ordered alphabet with a parity attached to every letter."""

    __slots__ = ("letters", "parities", "_index", "_hash")

    def __init__(self, letters: Iterable[str], parities: Iterable[int]):
        letters = tuple(letters)
        parities = tuple(parities)
        if len(letters) != len(parities):
            raise AlphabetError(
                "expected one parity per letter, got %d letters and %d parities"
                % (len(letters), len(parities))
            )
        for sym in letters:
            if not isinstance(sym, str):
                raise AlphabetError("letters must be strings, got %r" % (sym,))
        for p in parities:
            if p not in (0, 1):
                raise AlphabetError("parity must be 0 or 1, got %r" % (p,))
        index: dict[str, int] = {}
        for i, sym in enumerate(letters):
            if sym in index:
                raise AlphabetError("duplicate letter %r" % sym)
            index[sym] = i
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "parities", parities)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_hash", hash((letters, parities)))

    def __setattr__(self, name, value):
        raise AttributeError("SignedAlphabet is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedAlphabet):
            return NotImplemented
        return self.letters == other.letters and self.parities == other.parities

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        pairs = ", ".join(
            "%s:%d" % (sym, p) for sym, p in zip(self.letters, self.parities)
        )
        return "SignedAlphabet(%s)" % pairs

    def index(self, symbol: str) -> int:
        """Position of a symbol in the alphabet order."""
        try:
            return self._index[symbol]
        except KeyError:
            raise ForeignLetterError("letter %r is not in the alphabet" % (symbol,)) from None

    def symbol(self, i: int) -> str:
        if not 0 <= i < len(self.letters):
            raise ForeignLetterError("letter index %d out of range" % i)
        return self.letters[i]

    def parity_of(self, symbol: str) -> int:
        return self.parities[self.index(symbol)]

    def to_indices(self, symbols: Iterable[str]) -> tuple[int, ...]:
        idx = self._index
        try:
            return tuple(idx[s] for s in symbols)
        except KeyError as exc:
            raise ForeignLetterError("letter %r is not in the alphabet" % (exc.args[0],)) from None

    def to_symbols(self, indices: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.symbol(i) for i in indices)

    @property
    def even_letters(self) -> tuple[str, ...]:
        """Parity-0 letters, in alphabet order."""
        return tuple(s for s, p in zip(self.letters, self.parities) if p == 0)

    @property
    def odd_letters(self) -> tuple[str, ...]:
        """Parity-1 letters, in alphabet order."""
        return tuple(s for s, p in zip(self.letters, self.parities) if p == 1)


def make_alphabet(letters: Sequence[str], parities: Sequence[int]) -> SignedAlphabet:
    """Build a signed alphabet from parallel sequences of symbols and parities."""
    return SignedAlphabet(letters, parities)


def conjugate_alphabet(alphabet: SignedAlphabet) -> SignedAlphabet:
    """Same letters in the same order with every parity flipped."""
    return SignedAlphabet(alphabet.letters, tuple(1 - p for p in alphabet.parities))


def product_alphabet(left: SignedAlphabet, right: SignedAlphabet) -> SignedAlphabet:
    """Alphabet of pairs, ordered right to left and signed by parity sum.

    The letters are the pairs (a, b) with a from `left` and b from `right`,
    rendered as "(a,b)".  Pair (a1, b1) precedes (a2, b2) when b1 < b2, or
    b1 = b2 and a1 < a2, in the respective alphabet orders.  The parity of a
    pair is the sum of the parities of its components mod 2.
    """
    letters = []
    parities = []
    for b, pb in zip(right.letters, right.parities):
        for a, pa in zip(left.letters, left.parities):
            letters.append("(%s,%s)" % (a, b))
            parities.append((pa + pb) % 2)
    return SignedAlphabet(letters, parities)


def alphabet_to_json(alphabet: SignedAlphabet) -> dict:
    return {"letters": list(alphabet.letters), "parity": list(alphabet.parities)}


def alphabet_from_json(obj: dict) -> SignedAlphabet:
    if not isinstance(obj, dict) or "letters" not in obj or "parity" not in obj:
        raise AlphabetError('alphabet JSON must have "letters" and "parity" arrays')
    return SignedAlphabet(tuple(obj["letters"]), tuple(obj["parity"]))
