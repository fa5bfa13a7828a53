import numpy as np
import pytest

from coprank import (MatrixError, PCMatrix, UndoError, consistent_matrix,
                     eigenvector_ranking, from_upper_triangle,
                     local_discrepancy_matrix, open_session)
from coprank.schema import bundle_to_dict
from tests.conftest import DEMO_GLOBAL_DISC, DEMO_SAATY, REVISED_GLOBAL_DISC
from tests.oracles import random_reciprocal_grid


class TestOpenSession:
    def test_demo_matrix_bundle(self, demo_matrix):
        session = open_session(demo_matrix)
        bundle = session.bundle
        assert bundle.discrepancy.global_value == pytest.approx(DEMO_GLOBAL_DISC, abs=1e-9)
        assert bundle.saaty == pytest.approx(DEMO_SAATY, abs=1e-10)
        assert len(bundle.cop.poip_violations) > 0
        assert session.history == (demo_matrix,)
        assert session.steps == ()

    def test_two_by_two(self):
        session = open_session(from_upper_triangle(2, {(1, 2): 3.0}))
        assert session.bundle.discrepancy.global_value <= 1e-12
        assert session.bundle.cop.pop_safe and session.bundle.cop.poip_safe

    def test_consistent(self):
        session = open_session(consistent_matrix([4.0, 3.0, 2.0, 1.0]))
        assert session.bundle.discrepancy.global_value <= 1e-10
        assert session.bundle.cop.pop_violations == ()
        assert session.bundle.cop.poip_violations == ()


class TestSuggest:
    def test_points_at_worst_judgment(self, demo_matrix):
        suggestion = open_session(demo_matrix).suggest()
        assert suggestion.position == (3, 4)
        assert suggestion.current_value == 5.0
        assert suggestion.local_discrepancy == pytest.approx(DEMO_GLOBAL_DISC, abs=1e-9)
        assert suggestion.consistent_target == pytest.approx(3.39, abs=5e-3)

    def test_moves_on_after_first_fix(self, demo_matrix):
        session = open_session(demo_matrix).apply(3, 4, 3.0)
        assert session.suggest().position == (1, 2)

    def test_consistent_target_zeroes_the_entry(self, demo_matrix):
        session = open_session(demo_matrix)
        suggestion = session.suggest()
        i, j = suggestion.position
        revised = session.matrix.set_entry(i, j, suggestion.consistent_target)
        disc = local_discrepancy_matrix(revised, session.bundle.ranking)
        assert disc.entry(i, j) <= 1e-12

    def test_consistent_matrix_suggestion_is_noop(self):
        suggestion = open_session(consistent_matrix([2.0, 1.0, 1.0])).suggest()
        assert suggestion.local_discrepancy <= 1e-10
        assert suggestion.consistent_target == pytest.approx(suggestion.current_value, abs=1e-9)


class TestApply:
    def test_two_step_repair(self, demo_matrix, revised_matrix):
        session = open_session(demo_matrix).apply(3, 4, 3.0).apply(1, 2, 1.5)
        assert session.matrix == revised_matrix
        assert session.bundle.discrepancy.global_value == pytest.approx(REVISED_GLOBAL_DISC, abs=1e-9)
        assert session.bundle.cop.pop_safe and session.bundle.cop.poip_safe
        assert len(session.history) == 3
        assert len(session.steps) == 2
        assert session.steps[0].old_value == 5.0
        assert session.steps[0].new_value == 3.0

    def test_same_value_grows_history_only(self, demo_matrix):
        session = open_session(demo_matrix)
        again = session.apply(1, 2, demo_matrix.entry(1, 2))
        assert again.bundle.discrepancy.global_value == session.bundle.discrepancy.global_value
        assert len(again.history) == 2

    def test_validation_propagates(self, demo_matrix):
        session = open_session(demo_matrix)
        with pytest.raises(MatrixError):
            session.apply(1, 1, 2.0)
        with pytest.raises(MatrixError):
            session.apply(1, 2, -3.0)

    def test_monotone_under_old_ranking(self):
        # replacing the argmax entry by its consistent target never raises
        # the global discrepancy measured with the pre-revision ranking
        rng = np.random.default_rng(17)
        for _ in range(20):
            n = int(rng.choice([3, 4, 5, 6]))
            grid = random_reciprocal_grid(rng, n)
            session = open_session(PCMatrix(grid, tuple(f"c{k}" for k in range(1, n + 1))))
            suggestion = session.suggest()
            i, j = suggestion.position
            revised = session.matrix.set_entry(i, j, suggestion.consistent_target)
            old_mu = session.bundle.ranking
            new_disc = local_discrepancy_matrix(revised, old_mu)
            assert new_disc.global_value <= session.bundle.discrepancy.global_value + 1e-12


class TestUndo:
    def test_roundtrip_restores_bundle_exactly(self, demo_matrix):
        session = open_session(demo_matrix)
        back = session.apply(3, 4, 3.0).undo()
        assert bundle_to_dict(back.bundle) == bundle_to_dict(session.bundle)
        assert back.history == session.history
        assert back.steps == ()

    def test_double_undo_after_two_applies(self, demo_matrix):
        session = open_session(demo_matrix)
        back = session.apply(3, 4, 3.0).apply(1, 2, 1.5).undo().undo()
        assert bundle_to_dict(back.bundle) == bundle_to_dict(session.bundle)

    def test_single_undo_keeps_first_step(self, demo_matrix):
        session = open_session(demo_matrix).apply(3, 4, 3.0).apply(1, 2, 1.5).undo()
        assert session.matrix.entry(3, 4) == 3.0
        assert session.matrix.entry(1, 2) == 2.5
        # bundle matches a fresh recomputation of the intermediate matrix
        fresh = open_session(demo_matrix.set_entry(3, 4, 3.0))
        assert bundle_to_dict(session.bundle) == bundle_to_dict(fresh.bundle)

    def test_undo_on_fresh_session(self, demo_matrix):
        with pytest.raises(UndoError):
            open_session(demo_matrix).undo()


class TestDeterminism:
    def test_identical_histories_identical_bundles(self, demo_matrix):
        a = open_session(demo_matrix).apply(3, 4, 3.0, timestamp=1.0).apply(1, 2, 1.5, timestamp=2.0)
        b = open_session(demo_matrix).apply(3, 4, 3.0, timestamp=1.0).apply(1, 2, 1.5, timestamp=2.0)
        assert bundle_to_dict(a.bundle) == bundle_to_dict(b.bundle)
        assert a.steps == b.steps

    def test_ranking_bitwise_reproducible(self, demo_matrix):
        w1 = eigenvector_ranking(demo_matrix).weights
        w2 = eigenvector_ranking(demo_matrix).weights
        assert np.array_equal(w1, w2)
