import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coprank import (MatrixError, PCMatrix, consistency_scan,
                     consistent_matrix, from_upper_triangle, parse_matrix)
from tests.conftest import DEMO_UPPER
from tests.oracles import random_reciprocal_grid, worst_triad_brute

DEMO_CSV = ("1,2.5,4,9.5\n"
            "0.4,1,3,6.5\n"
            "0.25,0.333333,1,5\n"
            "0.105263,0.153846,0.2,1\n")


def _positive_weights(n):
    return st.lists(st.floats(min_value=0.05, max_value=20.0), min_size=n, max_size=n)


class TestParseCsv:
    def test_demo_matrix_accepted(self):
        m = parse_matrix(DEMO_CSV, "csv")
        assert m.n == 4
        assert m.labels == ("c1", "c2", "c3", "c4")
        assert m.entry(1, 4) == 9.5
        # canonicalization rewrites the lower triangle as exact reciprocals
        assert m.entry(3, 2) == 1 / 3.0
        assert m.entry(4, 1) == 1 / 9.5

    def test_identity_judgments(self):
        m = parse_matrix("1,1\n1,1", "csv")
        assert m.n == 2
        assert np.array_equal(m.values, np.ones((2, 2)))

    def test_reciprocity_violation_coordinates(self):
        with pytest.raises(MatrixError) as exc:
            parse_matrix("1,2\n0.4,1", "csv")
        assert exc.value.row == 2
        assert exc.value.col == 1

    def test_label_header_row(self):
        m = parse_matrix("price,quality\n1,2\n0.5,1", "csv")
        assert m.labels == ("price", "quality")
        assert m.entry(1, 2) == 2.0

    def test_fractions_parse_as_division(self):
        m = parse_matrix("1,3\n1/3,1", "csv")
        assert m.entry(2, 1) == 1 / 3.0

    def test_non_numeric_cell_coordinates(self):
        with pytest.raises(MatrixError) as exc:
            parse_matrix("1,2\n0.5,x", "csv")
        assert (exc.value.row, exc.value.col) == (2, 2)

    def test_non_square(self):
        with pytest.raises(MatrixError, match="square"):
            parse_matrix("1,2,3\n0.5,1,2", "csv")

    def test_ragged(self):
        with pytest.raises(MatrixError, match="ragged"):
            parse_matrix("1,2\n0.5,1,3", "csv")

    def test_non_positive_entry(self):
        with pytest.raises(MatrixError) as exc:
            parse_matrix("1,0\n2,1", "csv")
        assert (exc.value.row, exc.value.col) == (1, 2)

    def test_diagonal_must_be_one(self):
        with pytest.raises(MatrixError) as exc:
            parse_matrix("1,2\n0.5,1.1", "csv")
        assert (exc.value.row, exc.value.col) == (2, 2)

    def test_empty(self):
        with pytest.raises(MatrixError, match="empty"):
            parse_matrix("", "csv")

    def test_one_by_one_rejected(self):
        with pytest.raises(MatrixError, match="dimension"):
            parse_matrix("1", "csv")


class TestParseJson:
    def test_roundtrip_with_labels(self, demo_matrix):
        again = parse_matrix(demo_matrix.to_json(), "json")
        assert again == demo_matrix

    def test_labels_optional(self):
        m = parse_matrix('{"matrix": [[1, 2], [0.5, 1]]}', "json")
        assert m.labels == ("c1", "c2")

    def test_invalid_json(self):
        with pytest.raises(MatrixError, match="invalid JSON"):
            parse_matrix("{nope", "json")

    def test_entry_type_checked(self):
        with pytest.raises(MatrixError) as exc:
            parse_matrix('{"matrix": [[1, "2"], [0.5, 1]]}', "json")
        assert (exc.value.row, exc.value.col) == (1, 2)

    def test_unknown_format(self):
        with pytest.raises(MatrixError, match="unknown format"):
            parse_matrix("1,1\n1,1", "tsv")


class TestRoundTrip:
    def test_csv_full_precision(self, demo_matrix):
        again = parse_matrix(demo_matrix.to_csv(), "csv")
        assert np.array_equal(again.values, demo_matrix.values)
        assert again.labels == demo_matrix.labels

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=2, max_value=7), st.integers())
    def test_csv_json_roundtrip_random(self, n, seed):
        grid = random_reciprocal_grid(np.random.default_rng(abs(seed) % 2**32), n)
        m = PCMatrix(grid, tuple(f"c{i}" for i in range(1, n + 1)))
        assert np.array_equal(parse_matrix(m.to_csv(), "csv").values, m.values)
        assert np.array_equal(parse_matrix(m.to_json(), "json").values, m.values)


class TestFromUpperTriangle:
    def test_demo_matrix(self, demo_matrix):
        assert demo_matrix.entry(1, 2) == 2.5
        assert demo_matrix.entry(2, 1) == 1 / 2.5
        expected = np.array([[1, 2.5, 4, 9.5],
                             [1 / 2.5, 1, 3, 6.5],
                             [1 / 4, 1 / 3, 1, 5],
                             [1 / 9.5, 1 / 6.5, 1 / 5, 1]])
        assert np.array_equal(demo_matrix.values, expected)

    def test_two_by_two_ties(self):
        m = from_upper_triangle(2, {(1, 2): 1.0})
        assert np.array_equal(m.values, np.ones((2, 2)))

    def test_consistent_triple(self):
        m = from_upper_triangle(3, {(1, 2): 2.0, (1, 3): 6.0, (2, 3): 3.0})
        # the single triad multiplies out to exactly 1
        assert m.entry(1, 2) * m.entry(2, 3) * m.entry(3, 1) == 1.0

    def test_triples_form_accepted(self):
        m = from_upper_triangle(2, [(1, 2, 4.0)])
        assert m.entry(2, 1) == 0.25

    def test_missing_pair(self):
        with pytest.raises(MatrixError, match="missing pair"):
            from_upper_triangle(3, {(1, 2): 2.0, (1, 3): 6.0})

    def test_duplicate_pair(self):
        with pytest.raises(MatrixError, match="duplicate"):
            from_upper_triangle(2, [(1, 2, 2.0), (1, 2, 3.0)])

    def test_lower_triangle_pair_rejected(self):
        with pytest.raises(MatrixError, match="upper-triangle"):
            from_upper_triangle(2, {(2, 1): 2.0})

    def test_non_positive_value(self):
        with pytest.raises(MatrixError) as exc:
            from_upper_triangle(2, {(1, 2): -1.0})
        assert (exc.value.row, exc.value.col) == (1, 2)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=2, max_value=6), st.integers())
    def test_reciprocity_exact(self, n, seed):
        grid = random_reciprocal_grid(np.random.default_rng(abs(seed) % 2**32), n)
        pairs = {(i + 1, j + 1): float(grid[i, j]) for i in range(n) for j in range(i + 1, n)}
        m = from_upper_triangle(n, pairs)
        for i in range(n):
            for j in range(i + 1, n):
                assert m.values[j, i] == 1.0 / m.values[i, j]


class TestSetEntry:
    def test_two_revisions_give_revised_matrix(self, demo_matrix, revised_matrix):
        expected = np.array([[1, 1.5, 4, 9.5],
                             [1 / 1.5, 1, 3, 6.5],
                             [1 / 4, 1 / 3, 1, 3],
                             [1 / 9.5, 1 / 6.5, 1 / 3, 1]])
        assert np.array_equal(revised_matrix.values, expected)
        # source matrix untouched
        assert demo_matrix.entry(3, 4) == 5.0

    def test_same_value_is_identity(self, demo_matrix):
        assert demo_matrix.set_entry(1, 2, demo_matrix.entry(1, 2)) == demo_matrix

    def test_on_tie_matrix(self):
        m = from_upper_triangle(2, {(1, 2): 1.0}).set_entry(1, 2, 4.0)
        assert np.array_equal(m.values, [[1, 4], [0.25, 1]])

    def test_lower_triangle_target(self, demo_matrix):
        m = demo_matrix.set_entry(2, 1, 3.0)
        assert m.entry(2, 1) == 3.0
        assert m.entry(1, 2) == 1 / 3.0

    def test_diagonal_immutable(self, demo_matrix):
        with pytest.raises(MatrixError, match="diagonal"):
            demo_matrix.set_entry(2, 2, 5.0)

    def test_non_positive(self, demo_matrix):
        with pytest.raises(MatrixError):
            demo_matrix.set_entry(1, 2, 0.0)

    def test_out_of_range_index(self, demo_matrix):
        with pytest.raises(MatrixError, match="outside"):
            demo_matrix.set_entry(0, 2, 1.0)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=3, max_value=6), st.integers(),
           st.floats(min_value=0.2, max_value=8.0))
    def test_touches_only_the_pair(self, n, seed, value):
        grid = random_reciprocal_grid(np.random.default_rng(abs(seed) % 2**32), n)
        m = PCMatrix(grid, tuple(f"c{i}" for i in range(1, n + 1)))
        revised = m.set_entry(1, n, value)
        assert revised.values[0, n - 1] == value
        assert revised.values[n - 1, 0] == 1.0 / value
        mask = np.ones((n, n), dtype=bool)
        mask[0, n - 1] = mask[n - 1, 0] = False
        assert np.array_equal(revised.values[mask], m.values[mask])


class TestInvariants:
    def test_values_are_read_only(self, demo_matrix):
        with pytest.raises(ValueError):
            demo_matrix.values[0, 1] = 3.0

    def test_direct_construction_validates(self):
        with pytest.raises(MatrixError):
            PCMatrix(np.array([[1.0, 2.0], [0.4, 1.0]]), ("a", "b"))

    def test_label_count_checked(self):
        with pytest.raises(MatrixError, match="labels"):
            PCMatrix(np.ones((2, 2)), ("only-one",))

    def test_dimension_cap(self):
        n = 65
        with pytest.raises(MatrixError, match="dimension"):
            PCMatrix(np.ones((n, n)), tuple(str(i) for i in range(n)))


class TestConsistencyScan:
    def test_demo_matrix_inconsistent(self, demo_matrix):
        report = consistency_scan(demo_matrix)
        assert not report.is_consistent
        # spot value: triad (1,2,3) multiplies to 1.875
        assert demo_matrix.entry(1, 2) * demo_matrix.entry(2, 3) * demo_matrix.entry(3, 1) == 1.875
        brute_triad, brute_product = worst_triad_brute(demo_matrix.values)
        assert report.worst_product == pytest.approx(brute_product, abs=1e-12)
        assert abs(report.worst_product - 1) >= 1.875 - 1

    def test_consistent_triple(self):
        m = from_upper_triangle(3, {(1, 2): 2.0, (1, 3): 6.0, (2, 3): 3.0})
        report = consistency_scan(m)
        assert report.is_consistent
        assert report.worst_product == 1.0

    def test_two_by_two_always_consistent(self):
        report = consistency_scan(from_upper_triangle(2, {(1, 2): 7.3}))
        assert report.is_consistent
        assert report.worst_triad is None

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=2, max_value=6).flatmap(
        lambda n: st.tuples(st.just(n), _positive_weights(n))))
    def test_weight_generated_matrices_scan_consistent(self, n_and_w):
        n, w = n_and_w
        report = consistency_scan(consistent_matrix(w))
        assert report.is_consistent

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=3, max_value=7), st.integers())
    def test_worst_triad_matches_brute_force(self, n, seed):
        grid = random_reciprocal_grid(np.random.default_rng(abs(seed) % 2**32), n)
        m = PCMatrix(grid, tuple(f"c{i}" for i in range(1, n + 1)))
        report = consistency_scan(m)
        _, brute_product = worst_triad_brute(grid)
        assert abs(report.worst_product - 1) == pytest.approx(abs(brute_product - 1), rel=1e-12)
        i, j, k = report.worst_triad
        product = m.entry(i, j) * m.entry(j, k) * m.entry(k, i)
        assert product == pytest.approx(report.worst_product, rel=1e-12)
