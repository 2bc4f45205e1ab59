"""membership.py のテスト

三角形メンバーシップ関数と相補的ファジィ分割の単体テスト。
"""

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from nfnmk.modules.common import InvalidDomainError, OpCounter, OutOfDomainError
from nfnmk.modules.nfn.membership import (
    N_CURVES,
    PUBLISHED_NEW_CURVES,
    PUBLISHED_NEW_VERTICES,
    FuzzyLabel,
    FuzzyPartition,
    TriangularMf,
    UnsortedVerticesError,
    VertexOutOfDomainError,
    active_pair,
    eval_triangle,
    rebuild_partition,
    sample_partition,
    uniform_partition,
)

in_domain = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


def _published_partition() -> FuzzyPartition:
    return rebuild_partition(PUBLISHED_NEW_VERTICES, -10.0, 10.0)


@pytest.mark.unit
class TestFuzzyLabel:
    """FuzzyLabel のテスト"""

    def test_seven_labels_in_order(self) -> None:
        """ラベルは NL < NM < ... < PL の 7 個"""
        assert [label.value for label in FuzzyLabel.ordered()] == [
            "NL", "NM", "NS", "ZE", "PS", "PM", "PL",
        ]  # fmt: skip
        assert [label.index for label in FuzzyLabel.ordered()] == list(range(N_CURVES))

    def test_at_and_meaning(self) -> None:
        """インデックスからラベル、ラベルから意味"""
        assert FuzzyLabel.at(3) is FuzzyLabel.ZE
        assert FuzzyLabel.ZE.meaning == "Zero"
        assert FuzzyLabel.PL.meaning == "Positive Large"


@pytest.mark.unit
class TestEvalTriangle:
    """eval_triangle のテスト"""

    mf = TriangularMf(left=-3.33, vertex=0.0, right=3.33)

    def test_vertex_is_one(self) -> None:
        assert eval_triangle(self.mf, 0.0) == 1.0

    def test_support_edge_is_zero(self) -> None:
        assert eval_triangle(self.mf, -3.33) == 0.0
        assert eval_triangle(self.mf, 3.33) == 0.0

    def test_linear_interpolation(self) -> None:
        """(right - x) / (right - vertex)"""
        assert eval_triangle(self.mf, 1.665) == pytest.approx(0.5, abs=1e-12)

    def test_outside_support_is_zero(self) -> None:
        assert eval_triangle(self.mf, -50.0) == 0.0
        assert eval_triangle(self.mf, 50.0) == 0.0

    def test_degenerate_right_side_is_step(self) -> None:
        """vertex == right: 頂点で 1、その先は 0"""
        mf = TriangularMf(left=6.5, vertex=10.0, right=10.0)
        assert eval_triangle(mf, 10.0) == 1.0
        assert eval_triangle(mf, 10.000001) == 0.0
        assert eval_triangle(mf, 8.25) == pytest.approx(0.5)

    def test_invalid_order_rejected(self) -> None:
        with pytest.raises(ValueError):
            TriangularMf(left=1.0, vertex=0.0, right=2.0)

    def test_sloped_side_counts_one_sub_one_mul(self) -> None:
        ops = OpCounter()
        eval_triangle(self.mf, 1.0, ops)
        assert (ops.adds, ops.subs, ops.muls) == (0, 1, 1)

    @given(
        st.floats(min_value=-3.33, max_value=0.0),
        st.floats(min_value=-3.33, max_value=0.0),
    )
    def test_non_decreasing_on_rising_side(self, a: float, b: float) -> None:
        lo, hi = sorted((a, b))
        assert eval_triangle(self.mf, lo) <= eval_triangle(self.mf, hi)

    @given(
        st.floats(min_value=0.0, max_value=3.33),
        st.floats(min_value=0.0, max_value=3.33),
    )
    def test_non_increasing_on_falling_side(self, a: float, b: float) -> None:
        lo, hi = sorted((a, b))
        assert eval_triangle(self.mf, lo) >= eval_triangle(self.mf, hi)

    @given(st.floats(min_value=-100.0, max_value=100.0))
    def test_degree_in_unit_interval(self, x: float) -> None:
        assert 0.0 <= eval_triangle(self.mf, x) <= 1.0


@pytest.mark.unit
class TestUniformPartition:
    """uniform_partition のテスト"""

    def test_vertices_over_symmetric_domain(self) -> None:
        p = uniform_partition(-10.0, 10.0)
        expected = [-10.0, -6.67, -3.33, 0.0, 3.33, 6.67, 10.0]
        assert list(p.vertices) == pytest.approx(expected, abs=0.005)
        assert p.vertices[0] == -10.0
        assert p.vertices[3] == 0.0
        assert p.vertices[6] == 10.0

    def test_ze_curve(self) -> None:
        ze = uniform_partition(-10.0, 10.0).curve(FuzzyLabel.ZE)
        assert ze.vertex == 0.0
        assert ze.left == pytest.approx(-3.33, abs=0.005)
        assert ze.right == pytest.approx(3.33, abs=0.005)

    def test_unit_domain_equal_spacing(self) -> None:
        p = uniform_partition(0.0, 1.0)
        assert list(p.vertices) == pytest.approx([k / 6 for k in range(7)], abs=1e-15)

    def test_boundary_curves_clamped_to_domain(self) -> None:
        p = uniform_partition(-10.0, 10.0)
        assert p.curves[0].left == -10.0
        assert p.curves[-1].right == 10.0

    @pytest.mark.parametrize(("lo", "hi"), [(1.0, 1.0), (2.0, -2.0)])
    def test_invalid_domain(self, lo: float, hi: float) -> None:
        with pytest.raises(InvalidDomainError):
            uniform_partition(lo, hi)


@pytest.mark.unit
class TestRebuildPartition:
    """rebuild_partition のテスト"""

    def test_new_values_grid(self) -> None:
        """公表された New Values の Left/Vertex/Right を全て再現する"""
        p = _published_partition()
        for label, left, vertex, right in sample_partition(p):
            assert (left, vertex, right) == PUBLISHED_NEW_CURVES[label]

    def test_ns_curve(self) -> None:
        ns = _published_partition().curve(FuzzyLabel.NS)
        assert (ns.left, ns.vertex, ns.right) == (-3.5, -0.2, 3.2)

    def test_pm_curve_has_degenerate_right_side(self) -> None:
        pm = _published_partition().curve(FuzzyLabel.PM)
        assert (pm.left, pm.vertex, pm.right) == (6.5, 10.0, 10.0)
        assert pm.right_slope == 0.0

    def test_equal_spacing_matches_uniform(self) -> None:
        uniform = uniform_partition(-10.0, 10.0)
        assert rebuild_partition(uniform.vertices, -10.0, 10.0) == uniform

    def test_idempotent(self) -> None:
        p = _published_partition()
        assert rebuild_partition(p.vertices, -10.0, 10.0) == p

    def test_unsorted_vertices(self) -> None:
        with pytest.raises(UnsortedVerticesError):
            rebuild_partition([-10, -3, -5, 0, 3, 6, 10], -10.0, 10.0)

    def test_vertex_out_of_domain(self) -> None:
        with pytest.raises(VertexOutOfDomainError):
            rebuild_partition([-11, -6, -3, 0, 3, 6, 10], -10.0, 10.0)

    def test_wrong_vertex_count(self) -> None:
        with pytest.raises(ValueError):
            rebuild_partition([-10, 0, 10], -10.0, 10.0)


@pytest.mark.unit
class TestActivePair:
    """active_pair のテスト"""

    def test_left_boundary(self) -> None:
        pair = active_pair(uniform_partition(-10.0, 10.0), -10.0)
        assert pair == (0, 1, 1.0, 0.0)

    def test_right_boundary(self) -> None:
        pair = active_pair(uniform_partition(-10.0, 10.0), 10.0)
        assert (pair.m, pair.m1, pair.mu_m1) == (5, 6, 1.0)
        assert pair.mu_m == 0.0

    def test_interior_vertex_takes_right_hand_pair(self) -> None:
        pair = active_pair(uniform_partition(-10.0, 10.0), 0.0)
        assert (pair.m, pair.m1, pair.mu_m, pair.mu_m1) == (3, 4, 1.0, 0.0)

    def test_complement(self) -> None:
        """μ_ZE = 0.37 のとき対になる μ_PS = 0.63"""
        p = uniform_partition(-10.0, 10.0)
        x = 0.63 * p.vertices[4]
        pair = active_pair(p, x)
        assert (FuzzyLabel.at(pair.m), FuzzyLabel.at(pair.m1)) == (FuzzyLabel.ZE, FuzzyLabel.PS)
        assert pair.mu_m == pytest.approx(0.37, abs=1e-12)
        assert pair.mu_m1 == pytest.approx(0.63, abs=1e-12)

    @pytest.mark.parametrize("x", [-10.000001, 10.5])
    def test_out_of_domain(self, x: float) -> None:
        with pytest.raises(OutOfDomainError):
            active_pair(uniform_partition(-10.0, 10.0), x)

    def test_coincident_last_vertices(self) -> None:
        """PM と PL が同じ頂点でも、最後の頂点では PL だけが 1"""
        pair = active_pair(_published_partition(), 10.0)
        assert (pair.m, pair.m1, pair.mu_m, pair.mu_m1) == (5, 6, 0.0, 1.0)

    def test_counts_membership_arithmetic(self) -> None:
        ops = OpCounter()
        active_pair(uniform_partition(-10.0, 10.0), 1.0, ops)
        assert (ops.subs, ops.muls) == (2, 2)


@pytest.mark.unit
class TestPartitionOfUnity:
    """相補性 (Σμ = 1) と疎性 (非ゼロは高々 2 個) のテスト"""

    @pytest.mark.parametrize(
        "partition",
        [uniform_partition(-10.0, 10.0), _published_partition()],
        ids=["uniform", "new-values"],
    )
    def test_thousand_random_points(self, partition: FuzzyPartition) -> None:
        rng = np.random.default_rng(20240601)
        for x in rng.uniform(-10.0, 10.0, 1000):
            degrees = [eval_triangle(c, float(x)) for c in partition.curves]
            assert abs(sum(degrees) - 1.0) < 1e-9
            assert sum(1 for d in degrees if d > 0.0) <= 2

    @given(in_domain)
    def test_memberships_sum_to_one_uniform(self, x: float) -> None:
        degrees = uniform_partition(-10.0, 10.0).memberships(x)
        assert abs(sum(degrees) - 1.0) < 1e-9
        assert sum(1 for d in degrees if d > 0.0) <= 2

    @given(in_domain)
    def test_memberships_sum_to_one_new_values(self, x: float) -> None:
        degrees = _published_partition().memberships(x)
        assert abs(sum(degrees) - 1.0) < 1e-9

    def test_shared_vertex_memberships_sum_to_one(self) -> None:
        p = _published_partition()
        assert sum(eval_triangle(c, 10.0) for c in p.curves) == 2.0
        assert sum(p.memberships(10.0)) == 1.0

    @given(in_domain)
    def test_active_pair_matches_direct_evaluation(self, x: float) -> None:
        p = uniform_partition(-10.0, 10.0)
        pair = active_pair(p, x)
        assert eval_triangle(p.curves[pair.m], x) == pair.mu_m
        assert eval_triangle(p.curves[pair.m1], x) == pair.mu_m1

    @given(in_domain)
    def test_active_pair_matches_direct_evaluation_below_coincident_end(self, x: float) -> None:
        assume(x < 10.0)
        p = _published_partition()
        pair = active_pair(p, x)
        assert eval_triangle(p.curves[pair.m], x) == pair.mu_m
        assert eval_triangle(p.curves[pair.m1], x) == pair.mu_m1
