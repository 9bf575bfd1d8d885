import itertools
import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superplactic import (
    BoundExceededError,
    PlacticClass,
    Word,
    canonical_word,
    conjugate_partition,
    equivalent,
    greene_col,
    greene_profile,
    greene_row,
    greene_via_shape,
    is_column_word,
    is_row_word,
    knuth_neighbors,
    make_alphabet,
    plactic_class,
    tableau_of_word,
    word_of,
    z2_degree,
)
from superplactic.plactic import MAX_STATES_ENV

from oracles import classical_knuth_neighbors, greene_family_max


def all_words(alphabet, max_len, min_len=0):
    n = len(alphabet.letters)
    for length in range(min_len, max_len + 1):
        for letters in itertools.product(range(n), repeat=length):
            yield Word.from_indices(alphabet, letters)


class TestGrading:
    def test_degree_counts_odd_letters_mod_two(self, mixed4):
        assert z2_degree(Word(mixed4)) == 0
        assert z2_degree(Word(mixed4, ["3"])) == 1
        assert z2_degree(Word(mixed4, ["3", "4", "1"])) == 0
        assert z2_degree(Word(mixed4, ["3", "3", "3"])) == 1


class TestWordKinds:
    def test_repeats_depend_on_parity(self, mixed4):
        assert is_row_word(Word(mixed4, ["1", "1"]))
        assert not is_column_word(Word(mixed4, ["1", "1"]))
        assert not is_row_word(Word(mixed4, ["3", "3"]))
        assert is_column_word(Word(mixed4, ["3", "3"]))

    def test_strict_steps(self, mixed4):
        assert is_row_word(Word(mixed4, ["1", "2", "3"]))
        assert not is_row_word(Word(mixed4, ["2", "1"]))
        assert is_column_word(Word(mixed4, ["3", "2", "1"]))
        assert not is_column_word(Word(mixed4, ["1", "2"]))

    def test_trivial_words(self, mixed4):
        for w in (Word(mixed4), Word(mixed4, ["4"])):
            assert is_row_word(w)
            assert is_column_word(w)


class TestNeighbors:
    def test_all_even_matches_classical_moves(self, evens3):
        for w in all_words(evens3, 6):
            got = {v.letters for v in knuth_neighbors(w)}
            assert got == classical_knuth_neighbors(w.letters)

    def test_symmetric(self, mixed4):
        for w in all_words(mixed4, 5):
            for v in knuth_neighbors(w):
                assert w in knuth_neighbors(v)

    def test_preserve_content_degree_and_tableau(self, mixed4):
        for w in all_words(mixed4, 5, min_len=3):
            t = tableau_of_word(w)
            for v in knuth_neighbors(w):
                assert sorted(v.symbols) == sorted(w.symbols)
                assert z2_degree(v) == z2_degree(w)
                assert tableau_of_word(v) == t

    def test_short_words_have_no_neighbors(self, mixed4):
        assert knuth_neighbors(Word(mixed4)) == set()
        assert knuth_neighbors(Word(mixed4, ["1", "2"])) == set()


class TestClasses:
    def test_two_element_class(self, evens2):
        w = Word(evens2, ["1", "2", "1"])
        got = {v.symbols for v in plactic_class(w)}
        assert got == {("1", "2", "1"), ("2", "1", "1")}

    def test_row_word_class_is_singleton(self, evens2):
        w = Word(evens2, ["1", "1", "2", "2"])
        assert plactic_class(w) == {w}

    def test_class_contains_word_and_canonical(self, mixed4):
        for w in all_words(mixed4, 4):
            cls = plactic_class(w)
            assert w in cls
            assert canonical_word(w) in cls

    def test_classes_partition_by_tableau(self, mixed3):
        for w in all_words(mixed3, 4, min_len=1):
            t = tableau_of_word(w)
            for v in plactic_class(w):
                assert tableau_of_word(v) == t

    def test_length_bound(self, evens2):
        with pytest.raises(BoundExceededError):
            plactic_class(Word(evens2, ["1"] * 10))
        assert len(plactic_class(Word(evens2, ["1"] * 10), max_len=10)) == 1

    def test_state_bound(self, evens2):
        with pytest.raises(BoundExceededError):
            plactic_class(Word(evens2, ["1", "2", "1"]), max_states=1)

    def test_state_bound_from_environment(self, evens2, monkeypatch):
        monkeypatch.setenv(MAX_STATES_ENV, "1")
        with pytest.raises(BoundExceededError):
            plactic_class(Word(evens2, ["1", "2", "1"]))
        monkeypatch.setenv(MAX_STATES_ENV, "1000")
        assert len(plactic_class(Word(evens2, ["1", "2", "1"]))) == 2


class TestCanonical:
    def test_reading_word_of_tableau(self, mixed4):
        for w in all_words(mixed4, 4):
            canon = canonical_word(w)
            assert canon == word_of(tableau_of_word(w))
            assert canonical_word(canon) == canon

    def test_equivalent(self, evens2):
        assert equivalent(Word(evens2, ["1", "2", "1"]), Word(evens2, ["2", "1", "1"]))
        assert not equivalent(Word(evens2, ["1", "2", "1"]), Word(evens2, ["1", "1", "2"]))
        assert equivalent(Word(evens2), Word(evens2))

    def test_class_wrapper(self, evens2):
        pc = PlacticClass.of(Word(evens2, ["1", "2", "1"]))
        assert pc.representative.symbols == ("1", "2", "1")
        assert pc.canonical.symbols == ("2", "1", "1")
        assert pc.tableau().symbol_rows() == (("1", "1"), ("2",))


class TestGreene:
    @pytest.fixture
    def table_word(self):
        alphabet = make_alphabet(["1", "2", "3", "4", "5"], [0, 0, 1, 0, 1])
        return Word(alphabet, ["1", "2", "3", "3", "4", "5", "5"])

    def test_worked_row_values(self, table_word):
        assert greene_row(table_word, 1) == 5
        assert greene_row(table_word, 2) == 7
        assert greene_row(table_word, 3) == 7

    def test_worked_col_values(self, table_word):
        assert [greene_col(table_word, k) for k in (1, 2, 3)] == [2, 4, 5]
        assert greene_profile(table_word, 7, "col") == (2, 4, 5, 6, 7, 7, 7)

    def test_trivial_words(self, mixed4):
        assert greene_row(Word(mixed4), 1) == 0
        assert greene_col(Word(mixed4), 2) == 0
        assert greene_row(Word(mixed4, ["3"]), 1) == 1

    def test_length_bounds(self, evens2):
        with pytest.raises(BoundExceededError):
            greene_row(Word(evens2, ["1"] * 11), 1)
        with pytest.raises(BoundExceededError):
            greene_row(Word(evens2, ["1"] * 9), 4)
        assert greene_row(Word(evens2, ["1"] * 9), 3) == 9
        assert greene_row(Word(evens2, ["1"] * 11), 1, max_len=11) == 11

    def test_profile_weakly_increasing_and_capped(self, mixed4):
        for w in all_words(mixed4, 4):
            prof = greene_profile(w, 4, "row")
            assert all(a <= b for a, b in zip(prof, prof[1:]))
            assert prof[-1] <= len(w)

    def test_bad_mode(self, mixed4):
        with pytest.raises(ValueError):
            greene_profile(Word(mixed4, ["1"]), 1, "diag")

    def test_matches_family_search_mixed4(self, mixed4):
        for w in all_words(mixed4, 4):
            for k in (1, 2, 3):
                assert greene_row(w, k) == greene_family_max(w, k, "row")
                assert greene_col(w, k) == greene_family_max(w, k, "col")

    def test_matches_family_search_longer_two_letters(self, mixed2):
        for w in all_words(mixed2, 6, min_len=5):
            for k in (1, 2):
                assert greene_row(w, k) == greene_family_max(w, k, "row")
                assert greene_col(w, k) == greene_family_max(w, k, "col")

    def test_via_shape_agrees(self, mixed4):
        for w in all_words(mixed4, 4):
            lam = tableau_of_word(w).shape
            conj = conjugate_partition(lam)
            for k in (1, 2, 3):
                assert greene_via_shape(w, k, "row") == sum(lam[:k])
                assert greene_via_shape(w, k, "col") == sum(conj[:k])

    def test_invariant_across_class(self, mixed4):
        for symbols in (("2", "1", "3", "3"), ("3", "4", "1", "2"), ("4", "3", "2", "1")):
            w = Word(mixed4, symbols)
            profiles = {
                (greene_profile(v, 3, "row"), greene_profile(v, 3, "col"))
                for v in plactic_class(w)
            }
            assert len(profiles) == 1


@st.composite
def small_word(draw):
    k = draw(st.integers(1, 4))
    parities = draw(st.lists(st.integers(0, 1), min_size=k, max_size=k))
    letters = draw(st.lists(st.integers(0, k - 1), min_size=0, max_size=7))
    alphabet = make_alphabet([str(i + 1) for i in range(k)], parities)
    return Word.from_indices(alphabet, letters)


@given(small_word())
@settings(max_examples=150)
def test_greene_equals_shape_sums_random(word):
    lam = tableau_of_word(word).shape
    conj = conjugate_partition(lam)
    for k in (1, 2, 3):
        assert greene_row(word, k) == sum(lam[:k])
        assert greene_col(word, k) == sum(conj[:k])


@given(small_word())
@settings(max_examples=100)
def test_canonical_is_class_invariant_random(word):
    for v in knuth_neighbors(word):
        assert canonical_word(v) == canonical_word(word)
