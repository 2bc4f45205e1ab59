"""Triangular membership functions and complementary fuzzy partitions.

A partition holds seven triangles, one per linguistic label (NL ... PL). Adjacent triangles share
their supports so that at most two of them are active at any input and their degrees sum to 1.
"""

from bisect import bisect_right
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from nfnmk.modules.common import (
    InvalidDomainError,
    NfnMkError,
    OpCounter,
    OutOfDomainError,
)

N_CURVES = 7


class UnsortedVerticesError(NfnMkError, ValueError):
    """Raised when partition vertices are not non-decreasing."""


class VertexOutOfDomainError(NfnMkError, ValueError):
    """Raised when a partition vertex lies outside its domain."""


class FuzzyLabel(str, Enum):
    """Linguistic labels of the seven curves, in partition order."""

    NL = "NL"  # Negative Large
    NM = "NM"  # Negative Medium
    NS = "NS"  # Negative Small
    ZE = "ZE"  # Zero
    PS = "PS"  # Positive Small
    PM = "PM"  # Positive Medium
    PL = "PL"  # Positive Large

    @property
    def index(self) -> int:
        """Ordinal position 0..6."""
        return _LABEL_ORDER.index(self)

    @property
    def meaning(self) -> str:
        """ラベルの正式名 (例: "Negative Large")"""
        return _LABEL_MEANINGS[self]

    @classmethod
    def ordered(cls) -> tuple["FuzzyLabel", ...]:
        """NL から PL までの 7 ラベル"""
        return _LABEL_ORDER

    @classmethod
    def at(cls, index: int) -> "FuzzyLabel":
        """位置 index のラベル"""
        return _LABEL_ORDER[index]


_LABEL_ORDER: tuple[FuzzyLabel, ...] = tuple(FuzzyLabel)
_LABEL_MEANINGS = {
    FuzzyLabel.NL: "Negative Large",
    FuzzyLabel.NM: "Negative Medium",
    FuzzyLabel.NS: "Negative Small",
    FuzzyLabel.ZE: "Zero",
    FuzzyLabel.PS: "Positive Small",
    FuzzyLabel.PM: "Positive Medium",
    FuzzyLabel.PL: "Positive Large",
}


@dataclass(frozen=True)
class TriangularMf:
    """One triangle (left, vertex, right) with precomputed side slopes.

    A degenerate side (left == vertex or vertex == right) is a step: the degree is 1 exactly at
    the vertex and 0 strictly beyond. The outermost curves of a partition are shoulders:
    `left_shoulder` holds the degree at 1 on [left, vertex], `right_shoulder` on [vertex, right].
    """

    left: float
    vertex: float
    right: float
    left_shoulder: bool = False
    right_shoulder: bool = False
    left_slope: float = field(init=False, repr=False, compare=False)
    right_slope: float = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """頂点の並びを検証し、両辺の傾きを前計算"""
        if not (self.left <= self.vertex <= self.right):
            raise ValueError(
                f"triangle requires left <= vertex <= right, got "
                f"({self.left}, {self.vertex}, {self.right})"
            )
        rise = self.vertex - self.left
        fall = self.right - self.vertex
        object.__setattr__(self, "left_slope", 1.0 / rise if rise > 0 else 0.0)
        object.__setattr__(self, "right_slope", 1.0 / fall if fall > 0 else 0.0)


def eval_triangle(mf: TriangularMf, x: float, ops: OpCounter | None = None) -> float:
    """Membership degree of `x` in `mf`, in [0, 1].

    Uses only the precomputed slopes (one subtraction and one multiplication on a sloped side).
    Curves that share a vertex each return 1 there; use `FuzzyPartition.memberships` when the
    degrees must sum to 1.
    """
    if x == mf.vertex:
        return 1.0
    if x < mf.vertex:
        if x < mf.left:
            return 0.0
        if mf.left_shoulder:
            return 1.0
        if x == mf.left:
            return 0.0
        if ops is not None:
            ops.sub()
            ops.mul()
        return min(1.0, (x - mf.left) * mf.left_slope)
    if x > mf.right:
        return 0.0
    if mf.right_shoulder:
        return 1.0
    if x == mf.right:
        return 0.0
    if ops is not None:
        ops.sub()
        ops.mul()
    return min(1.0, (mf.right - x) * mf.right_slope)


class ActivePair(NamedTuple):
    """The two adjacent curves active at an input, with their complementary degrees."""

    m: int
    m1: int
    mu_m: float
    mu_m1: float


@dataclass(frozen=True)
class FuzzyPartition:
    """Seven complementary triangles over the closed domain [domain_min, domain_max]."""

    domain_min: float
    domain_max: float
    curves: tuple[TriangularMf, ...]

    def __post_init__(self) -> None:
        """定義域・曲線数・頂点の昇順を検証"""
        if not self.domain_min < self.domain_max:
            raise InvalidDomainError(
                f"domain_min must be < domain_max, got ({self.domain_min}, {self.domain_max})"
            )
        if len(self.curves) != N_CURVES:
            raise ValueError(f"a partition has exactly {N_CURVES} curves, got {len(self.curves)}")
        vertices = self.vertices
        if any(a > b for a, b in zip(vertices, vertices[1:], strict=False)):
            raise UnsortedVerticesError(f"vertices must be non-decreasing: {list(vertices)}")

    @property
    def vertices(self) -> tuple[float, ...]:
        """7 曲線の頂点 (昇順)"""
        return tuple(c.vertex for c in self.curves)

    def curve(self, label: FuzzyLabel) -> TriangularMf:
        """ラベルに対応する曲線

        Args:
            label: 言語ラベル

        Returns:
            三角形メンバーシップ関数
        """
        return self.curves[label.index]

    def memberships(self, x: float) -> list[float]:
        """Degrees of all seven curves at `x` (at most two are nonzero)."""
        pair = active_pair(self, x)
        degrees = [0.0] * N_CURVES
        degrees[pair.m] = pair.mu_m
        degrees[pair.m1] = pair.mu_m1
        return degrees


def _check_domain(domain_min: float, domain_max: float) -> None:
    if not domain_min < domain_max:
        raise InvalidDomainError(
            f"domain_min must be < domain_max, got ({domain_min}, {domain_max})"
        )


def _build(vertices: Sequence[float], domain_min: float, domain_max: float) -> FuzzyPartition:
    last = N_CURVES - 1
    curves = []
    for k, v in enumerate(vertices):
        left = domain_min if k == 0 else vertices[k - 1]
        right = domain_max if k == last else vertices[k + 1]
        curves.append(
            TriangularMf(
                left=left,
                vertex=v,
                right=right,
                left_shoulder=k == 0,
                right_shoulder=k == last,
            )
        )
    return FuzzyPartition(domain_min=domain_min, domain_max=domain_max, curves=tuple(curves))


def uniform_vertices(domain_min: float, domain_max: float) -> list[float]:
    """Seven equally spaced points from domain_min to domain_max, ends exact."""
    _check_domain(domain_min, domain_max)
    span = domain_max - domain_min
    return [domain_min + span * k / (N_CURVES - 1) for k in range(N_CURVES)]


def uniform_partition(domain_min: float, domain_max: float) -> FuzzyPartition:
    """Partition with seven equally spaced vertices.

    Raises:
        InvalidDomainError: If domain_min >= domain_max.
    """
    return _build(uniform_vertices(domain_min, domain_max), domain_min, domain_max)


def rebuild_partition(
    vertices: Sequence[float], domain_min: float, domain_max: float
) -> FuzzyPartition:
    """Redraw the triangles around a learned vertex list.

    Interior curves take their neighbours' vertices as left/right ends; the first and last curves
    are clamped to the domain ends.

    Raises:
        InvalidDomainError: If domain_min >= domain_max.
        UnsortedVerticesError: If vertices are not non-decreasing.
        VertexOutOfDomainError: If a vertex lies outside the domain.
    """
    _check_domain(domain_min, domain_max)
    values = [float(v) for v in vertices]
    if len(values) != N_CURVES:
        raise ValueError(f"expected {N_CURVES} vertices, got {len(values)}")
    if any(a > b for a, b in zip(values, values[1:], strict=False)):
        raise UnsortedVerticesError(f"vertices must be non-decreasing: {values}")
    outside = [v for v in values if v < domain_min or v > domain_max]
    if outside:
        raise VertexOutOfDomainError(
            f"vertices {outside} lie outside [{domain_min}, {domain_max}]"
        )
    return _build(values, domain_min, domain_max)


def active_pair(p: FuzzyPartition, x: float, ops: OpCounter | None = None) -> ActivePair:
    """Find the adjacent pair (m, m+1) whose degrees at `x` sum to 1.

    At an interior vertex the right-hand pair is returned, with degrees (1, 0). Left of the
    first vertex the first curve saturates at 1; from the last vertex on, the last curve does.

    Raises:
        OutOfDomainError: If x lies outside [domain_min, domain_max].
    """
    if not (p.domain_min <= x <= p.domain_max):
        raise OutOfDomainError(f"x={x} lies outside [{p.domain_min}, {p.domain_max}]")

    vertices = p.vertices
    last = N_CURVES - 1
    if x >= vertices[last]:
        # the last curve saturates; a neighbour sharing its vertex does not share the point
        return ActivePair(last - 1, last, 0.0, eval_triangle(p.curves[last], x, ops))
    # rightmost index in 0..5 with vertex <= x, or 0 left of the first vertex
    m = max(bisect_right(vertices, x, hi=last) - 1, 0)

    curve_m = p.curves[m]
    curve_m1 = p.curves[m + 1]
    return ActivePair(
        m=m,
        m1=m + 1,
        mu_m=eval_triangle(curve_m, x, ops),
        mu_m1=eval_triangle(curve_m1, x, ops),
    )


def sample_partition(p: FuzzyPartition) -> list[tuple[FuzzyLabel, float, float, float]]:
    """Breakpoints (label, left, vertex, right) of every curve, for plotting."""
    return [
        (label, c.left, c.vertex, c.right)
        for label, c in zip(FuzzyLabel.ordered(), p.curves, strict=True)
    ]


# New Values columns of the published Mexican-hat experiment; the NL left end is the domain
# minimum (the published table prints 10.0 there).
PUBLISHED_NEW_VERTICES: tuple[float, ...] = (-10.0, -3.5, -0.2, 3.2, 6.5, 10.0, 10.0)
PUBLISHED_NEW_CURVES: dict[FuzzyLabel, tuple[float, float, float]] = {
    FuzzyLabel.NL: (-10.0, -10.0, -3.5),
    FuzzyLabel.NM: (-10.0, -3.5, -0.2),
    FuzzyLabel.NS: (-3.5, -0.2, 3.2),
    FuzzyLabel.ZE: (-0.2, 3.2, 6.5),
    FuzzyLabel.PS: (3.2, 6.5, 10.0),
    FuzzyLabel.PM: (6.5, 10.0, 10.0),
    FuzzyLabel.PL: (10.0, 10.0, 10.0),
}
