"""som.py のテスト

頂点を配置する一次元コホーネンネットワークのテスト。
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nfnmk.modules.common import EmptyDatasetError, InvalidDomainError, OutOfDomainError
from nfnmk.modules.nfn.som import SomSchedule, SomState, som_init, som_step, som_train, winner

from tests.factories import SomScheduleFactory


@pytest.mark.unit
class TestSomSchedule:
    """SomSchedule のテスト"""

    def test_defaults(self) -> None:
        sched = SomSchedule()
        assert (sched.initial_rate, sched.final_rate) == (0.5, 0.01)
        assert (sched.initial_radius, sched.epochs) == (1, 50)

    def test_linear_decay(self) -> None:
        sched = SomSchedule(initial_rate=0.5, final_rate=0.1, initial_radius=2, epochs=5)
        assert sched.at(0) == (0.5, 2)
        rate, radius = sched.at(4)
        assert rate == pytest.approx(0.1)
        assert radius == 0

    def test_final_rate_above_initial_rejected(self) -> None:
        with pytest.raises(ValueError):
            SomSchedule(initial_rate=0.1, final_rate=0.2)

    def test_radius_bounded(self) -> None:
        with pytest.raises(ValueError):
            SomSchedule(initial_radius=7)


@pytest.mark.unit
class TestSomInit:
    """som_init のテスト"""

    def test_symmetric_domain(self) -> None:
        state = som_init(-10.0, 10.0)
        assert list(state.prototypes) == pytest.approx(
            [-10.0, -6.67, -3.33, 0.0, 3.33, 6.67, 10.0], abs=0.005
        )

    def test_integer_spacing(self) -> None:
        assert som_init(0.0, 6.0).prototypes == (0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0)

    def test_symmetric_about_zero(self) -> None:
        p = som_init(-1.0, 1.0).prototypes
        assert list(p) == pytest.approx([-v for v in reversed(p)], abs=1e-15)

    def test_invalid_domain(self) -> None:
        with pytest.raises(InvalidDomainError):
            som_init(3.0, 3.0)


@pytest.mark.unit
class TestWinner:
    """winner のテスト"""

    def test_exact_match(self) -> None:
        state = som_init(0.0, 6.0)
        assert winner(state, 4.0) == 4

    def test_nearest_prototype(self) -> None:
        assert winner(som_init(-10.0, 10.0), -9.0) == 0

    def test_tie_goes_to_lowest_index(self) -> None:
        assert winner(som_init(0.0, 6.0), 2.5) == 2


@pytest.mark.unit
class TestSomTrain:
    """som_train のテスト"""

    def test_fixed_point_convergence(self) -> None:
        sched = SomSchedule(initial_rate=0.5, final_rate=0.1, initial_radius=0, epochs=40)
        state = som_train(som_init(-10.0, 10.0), [2.7] * 10, sched, seed=0)
        assert min(abs(p - 2.7) for p in state.prototypes) < 1e-6

    def test_zero_rate_leaves_state_unchanged(self) -> None:
        initial = som_init(-10.0, 10.0)
        sched = SomSchedule(initial_rate=0.0, final_rate=0.0, epochs=5)
        trained = som_train(initial, [1.0, -3.0, 7.5], sched, seed=0)
        assert trained.prototypes == initial.prototypes

    def test_mirrored_stream_gives_mirrored_prototypes(self) -> None:
        rng = np.random.default_rng(5)
        samples = list(rng.uniform(-10.0, 10.0, 60))
        sched = SomScheduleFactory.build(epochs=20)
        a = som_train(som_init(-10.0, 10.0), samples, sched, seed=3)
        b = som_train(som_init(-10.0, 10.0), [-s for s in samples], sched, seed=3)
        assert list(b.prototypes) == pytest.approx([-p for p in reversed(a.prototypes)], abs=1e-6)

    def test_deterministic(self) -> None:
        samples = list(np.random.default_rng(8).uniform(-10.0, 10.0, 30))
        sched = SomScheduleFactory.build()
        a = som_train(som_init(-10.0, 10.0), samples, sched, seed=9)
        b = som_train(som_init(-10.0, 10.0), samples, sched, seed=9)
        assert a.prototypes == b.prototypes

    def test_presort_recorded(self) -> None:
        state = som_train(som_init(-10.0, 10.0), [0.0, 1.0], SomScheduleFactory.build(), seed=0)
        assert state.presort is not None
        assert sorted(state.presort) == list(state.prototypes)

    def test_empty_samples(self) -> None:
        with pytest.raises(EmptyDatasetError):
            som_train(som_init(-10.0, 10.0), [], SomSchedule(), seed=0)

    def test_samples_out_of_domain(self) -> None:
        with pytest.raises(OutOfDomainError):
            som_train(som_init(-10.0, 10.0), [0.0, 12.0], SomSchedule(), seed=0)

    @settings(max_examples=30, deadline=None)
    @given(
        st.lists(st.floats(min_value=-10.0, max_value=10.0), min_size=1, max_size=40),
        st.integers(min_value=0, max_value=2**32 - 1),
    )
    def test_output_sorted_and_clamped(self, samples: list[float], seed: int) -> None:
        sched = SomSchedule(initial_rate=1.0, final_rate=0.5, initial_radius=3, epochs=5)
        p = som_train(som_init(-10.0, 10.0), samples, sched, seed).prototypes
        assert list(p) == sorted(p)
        assert all(-10.0 <= v <= 10.0 for v in p)


@pytest.mark.unit
class TestSomStep:
    """som_step のテスト"""

    @given(
        st.floats(min_value=-10.0, max_value=10.0),
        st.floats(min_value=0.0, max_value=1.0, exclude_min=True),
    )
    def test_winner_moves_toward_sample(self, x: float, rate: float) -> None:
        state = som_init(-10.0, 10.0)
        k = winner(state, x)
        moved = som_step(state, x, rate)
        assert abs(moved.prototypes[k] - x) <= abs(state.prototypes[k] - x)

    def test_only_neighbourhood_moves(self) -> None:
        state = som_init(0.0, 6.0)
        moved = som_step(state, 3.2, 0.5, radius=1)
        pairs = zip(state.prototypes, moved.prototypes, strict=True)
        changed = [i for i, (a, b) in enumerate(pairs) if a != b]
        assert changed == [2, 3, 4]


@pytest.mark.unit
class TestSomState:
    """SomState のテスト"""

    def test_coincident_pairs(self) -> None:
        state = SomState((-10.0, -3.5, -0.2, 3.2, 6.5, 10.0, 10.0), -10.0, 10.0)
        assert state.coincident() == [(5, 6)]

    def test_crossed(self) -> None:
        state = SomState(
            (-10.0, -5.0, 0.0, 1.0, 2.0, 3.0, 4.0),
            -10.0,
            10.0,
            presort=(-10.0, 0.0, -5.0, 1.0, 2.0, 3.0, 4.0),
        )
        assert state.crossed

    def test_prototype_outside_domain(self) -> None:
        with pytest.raises(OutOfDomainError):
            SomState((-11.0, -5.0, 0.0, 1.0, 2.0, 3.0, 4.0), -10.0, 10.0)
