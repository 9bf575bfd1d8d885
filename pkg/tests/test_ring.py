import pytest

from superplactic import (
    AlphabetMismatchError,
    BoundExceededError,
    FormalSum,
    SkewDiagram,
    contains,
    enumerate_tableaux,
    is_horizontal_strip,
    is_vertical_strip,
    make_alphabet,
    partitions,
    pieri_check,
    ring_product,
    s_col,
    s_lambda,
    s_row,
    tableau_of_word,
    validate,
    word_of,
)


class TestFormalSum:
    def test_terms_sorted_and_deterministic(self, evens3):
        f = s_lambda((2, 1), evens3)
        assert f.terms() == f.terms()
        keys = [(t.shape, t.rows) for t, _ in f.terms()]
        assert keys == sorted(keys)

    def test_coefficient_lookup(self, evens3):
        t = validate([["1", "1"]], evens3)
        f = FormalSum(evens3, [(t, 2)])
        assert f.coefficient(t) == 2
        assert f.coefficient(validate([["2"]], evens3)) == 0

    def test_addition_and_cancellation(self, evens3):
        t = validate([["1", "1"]], evens3)
        f = FormalSum(evens3, [(t, 2)])
        assert (f + f).coefficient(t) == 4
        zero = f - f
        assert len(zero) == 0
        assert not zero
        assert f + zero == f

    def test_merges_repeated_terms(self, evens3):
        t = validate([["1", "1"]], evens3)
        f = FormalSum(evens3, [(t, 1), (t, 3)])
        assert f.coefficient(t) == 4
        assert len(f) == 1

    def test_alphabet_mismatch(self, evens3, mixed3):
        with pytest.raises(AlphabetMismatchError):
            s_row(1, evens3) + s_row(1, mixed3)
        with pytest.raises(AlphabetMismatchError):
            ring_product(s_row(1, evens3), s_row(1, mixed3))


class TestSchurSums:
    def test_all_even_counts_match_classical_dimensions(self, evens3):
        dims = {(3,): 10, (2, 1): 8, (2, 2): 6, (1, 1, 1): 1}
        for lam, dim in dims.items():
            f = s_lambda(lam, evens3)
            assert len(f) == dim
            assert all(c == 1 for _, c in f.terms())
            assert all(t.shape == lam for t, _ in f.terms())

    def test_mixed_two_letter_counts(self, mixed2):
        assert len(s_lambda((2,), mixed2)) == 2
        assert len(s_lambda((1, 1), mixed2)) == 2
        assert len(s_lambda((2, 1), mixed2)) == 2
        assert len(s_lambda((2, 2), mixed2)) == 0

    def test_empty_shape_is_unit(self, mixed3):
        one = s_lambda((), mixed3)
        assert len(one) == 1
        ((t, c),) = one.terms()
        assert t.shape == () and c == 1

    def test_row_and_column_shorthands(self, mixed3):
        assert s_row(2, mixed3) == s_lambda((2,), mixed3)
        assert s_col(3, mixed3) == s_lambda((1, 1, 1), mixed3)
        assert s_row(0, mixed3) == s_lambda((), mixed3)
        assert s_col(0, mixed3) == s_lambda((), mixed3)


class TestProduct:
    def test_unit_element(self, mixed3):
        one = s_row(0, mixed3)
        f = s_lambda((2, 1), mixed3)
        assert ring_product(one, f) == f
        assert ring_product(f, one) == f

    def test_single_letters(self, evens3):
        prod = ring_product(s_row(1, evens3), s_row(1, evens3))
        assert len(prod) == 9
        assert prod.coefficient(validate([["1"], ["2"]], evens3)) == 1
        assert prod.coefficient(validate([["1", "1"]], evens3)) == 1
        assert prod == s_row(2, evens3) + s_col(2, evens3)

    def test_product_inserts_reading_words(self, mixed3):
        left = validate([["1", "2"], ["2"]], mixed3)
        right = validate([["1", "1"]], mixed3)
        prod = ring_product(FormalSum(mixed3, [(left, 1)]), FormalSum(mixed3, [(right, 1)]))
        ((t, c),) = prod.terms()
        assert c == 1
        assert t == tableau_of_word(word_of(left) + word_of(right))

    def test_associative(self, mixed3):
        a = s_row(1, mixed3)
        b = s_col(2, mixed3)
        c = s_lambda((2,), mixed3)
        assert ring_product(ring_product(a, b), c) == ring_product(a, ring_product(b, c))

    def test_coefficients_scale(self, mixed3):
        t = validate([["1"]], mixed3)
        f = FormalSum(mixed3, [(t, 2)])
        prod = ring_product(f, f)
        assert all(c == 4 for _, c in prod.terms())


class TestPieri:
    def test_row_and_column_mode_pass(self, mixed3):
        for mode in ("row", "col"):
            report = pieri_check((2, 1), 2, mixed3, mode=mode)
            assert report.equal is True
            assert report.mode == mode
            assert report.lam == (2, 1)
            assert report.p == 2
            assert report.mismatches() == ()
            for _, left, right in report.by_shape:
                assert left == right

    def test_candidate_shapes_are_strips(self, mixed3):
        report = pieri_check((2, 1), 2, mixed3, mode="row")
        shapes = [shape for shape, _, _ in report.by_shape]
        assert len(set(shapes)) == len(shapes)
        for shape in shapes:
            assert sum(shape) == 5
            assert contains(shape, (2, 1))
            assert is_horizontal_strip(SkewDiagram(shape, (2, 1)))
        report = pieri_check((2, 1), 2, mixed3, mode="col")
        for shape, _, _ in report.by_shape:
            assert is_vertical_strip(SkewDiagram(shape, (2, 1)))

    def test_empty_base_shape(self, mixed3):
        assert pieri_check((), 1, mixed3).equal is True

    def test_grid_of_small_shapes(self, mixed4):
        for n in range(4):
            for lam in partitions(n):
                for p in (1, 2):
                    assert pieri_check(lam, p, mixed4, mode="row").equal is True

    def test_size_cap(self, mixed3):
        with pytest.raises(BoundExceededError):
            pieri_check((3, 3, 3), 3, mixed3, max_cells=5)

    def test_bad_mode(self, mixed3):
        with pytest.raises(ValueError):
            pieri_check((2, 1), 2, mixed3, mode="diag")
