"""Winding-number indices of plane vector fields and index-sum verification.

Indices are computed as sampled winding numbers on small circles.  Fields
near a critical line {x = 0} come in two flavors: the honest field
(x*a(x,y), b(x,y)) and its rescaled frame coefficients (a, b).  Their
indices at a common zero differ exactly by the sign of the region the zero
sits in, which is what makes the signed index sum match the rescaled Euler
number.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .bgraph import BGraph, Coloring, sphere_equator_graph
from .errors import (
    NonConvergentError,
    ZeroOnContourError,
    ZeroOnCriticalSetError,
)
from .euler import b_euler_number

PlaneField = Callable[[float, float], Tuple[float, float]]

ZERO_TOLERANCE = 1e-12
MIN_SAMPLES = 64
MAX_SAMPLES = 1 << 16
MAX_STEP = math.pi / 2


@dataclass(frozen=True)
class BPlaneField:
    """Coefficients of a field x*a(x,y)*d/dx + b(x,y)*d/dy near the line x = 0."""

    a: Callable[[float, float], float]
    b: Callable[[float, float], float]

    def honest(self) -> PlaneField:
        """The underlying ordinary vector field (x*a, b)."""
        return lambda x, y: (x * self.a(x, y), self.b(x, y))

    def frame(self) -> PlaneField:
        """The coefficient pair (a, b) read in the rescaled frame."""
        return lambda x, y: (self.a(x, y), self.b(x, y))


@dataclass(frozen=True)
class IndexResult:
    index: int
    radius_used: float
    samples_used: int
    max_step_radians: float

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "radius_used": self.radius_used,
            "samples_used": self.samples_used,
            "max_step_radians": self.max_step_radians,
        }


def winding_index(field: PlaneField, center: Tuple[float, float], radius: float) -> IndexResult:
    """Degree of field/|field| on the circle of given center and radius.

    Sampling starts at 64 points and doubles until every consecutive angle
    step is below pi/2, capped at 2**16 points.  Angle increments are summed
    in fixed sample order, so results are reproducible bit for bit.

    Raises:
        ZeroOnContourError: |field| <= 1e-12 at some sample point.
        NonConvergentError: the cap is reached with steps still >= pi/2.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    cx, cy = center
    n = MIN_SAMPLES
    while True:
        angles = [2.0 * math.pi * k / n for k in range(n)]
        values = []
        for k, t in enumerate(angles):
            u, v = field(cx + radius * math.cos(t), cy + radius * math.sin(t))
            if math.hypot(u, v) <= ZERO_TOLERANCE:
                raise ZeroOnContourError(
                    f"field vanishes at sample {k}/{n} on the contour "
                    f"(center {center}, radius {radius})"
                )
            values.append(math.atan2(v, u))
        total = 0.0
        max_step = 0.0
        for k in range(n):
            d = values[(k + 1) % n] - values[k]
            while d <= -math.pi:
                d += 2.0 * math.pi
            while d > math.pi:
                d -= 2.0 * math.pi
            total += d
            max_step = max(max_step, abs(d))
        if max_step < MAX_STEP:
            return IndexResult(
                index=round(total / (2.0 * math.pi)),
                radius_used=radius,
                samples_used=n,
                max_step_radians=max_step,
            )
        if n >= MAX_SAMPLES:
            raise NonConvergentError(
                f"angle steps still reach {max_step:.3f} rad at {n} samples"
            )
        n *= 2


def b_frame_index(field: BPlaneField, center: Tuple[float, float], radius: float) -> IndexResult:
    """Winding index of the rescaled-frame coefficients (a, b)."""
    return winding_index(field.frame(), center, radius)


# ---------------------------------------------------------------------------
# named fields
# ---------------------------------------------------------------------------


def _sphere_height_chart(x: float, y: float) -> Tuple[float, float]:
    # height * (minus the height gradient) of the round sphere, written in a
    # stereographic chart; same formula in both charts by symmetry.
    s = x * x + y * y
    f = (1.0 - s) / (1.0 + s)
    return (f * x, f * y)


def named_field(name: str, delta: float = 0.0) -> PlaneField:
    """Look up a built-in plane field by name.

    Known names: x_delta (takes delta), radial, saddle, x0_degenerate,
    sphere_height_b.
    """
    if name == "x_delta":
        return lambda x, y: (x * (x - delta), y)
    if name == "radial":
        return lambda x, y: (x, y)
    if name == "saddle":
        return lambda x, y: (x, -y)
    if name == "x0_degenerate":
        return lambda x, y: (x * x, y)
    if name == "sphere_height_b":
        return _sphere_height_chart
    raise KeyError(f"unknown field {name!r}")


def named_b_field(name: str, delta: float = 0.0) -> BPlaneField:
    """Rescaled-frame version of a built-in field, where one exists."""
    if name == "x_delta":
        return BPlaneField(a=lambda x, y: x - delta, b=lambda x, y: y)
    if name == "radial":
        return BPlaneField(a=lambda x, y: 1.0, b=lambda x, y: y)
    if name == "saddle":
        return BPlaneField(a=lambda x, y: 1.0, b=lambda x, y: -y)
    if name == "x0_degenerate":
        return BPlaneField(a=lambda x, y: x, b=lambda x, y: y)
    raise KeyError(f"no rescaled frame for field {name!r}")


def default_center(name: str, delta: float = 0.0) -> Tuple[float, float]:
    """Zero location of a built-in field, used as the default contour center."""
    if name == "x_delta":
        return (delta, 0.0)
    return (0.0, 0.0)


# ---------------------------------------------------------------------------
# index-sum verification on the two-chart sphere
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChartZero:
    """A claimed zero of the field: chart name, chart point, region label."""

    chart: str
    point: Tuple[float, float]
    region: str


@dataclass(frozen=True)
class ZeroIndex:
    chart: str
    point: Tuple[float, float]
    region: str
    index: int

    def to_json_dict(self) -> dict:
        return {
            "chart": self.chart,
            "point": list(self.point),
            "region": self.region,
            "index": self.index,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing an index sum with the rescaled Euler number."""

    zeros: Tuple[ZeroIndex, ...]
    colored_sum: int
    b_euler: int
    unsigned_sum: int
    classical_euler: int
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "zeros": [z.to_json_dict() for z in self.zeros],
            "colored_sum": self.colored_sum,
            "b_euler": self.b_euler,
            "unsigned_sum": self.unsigned_sum,
            "classical_euler": self.classical_euler,
            "passed": self.passed,
        }


def verify_poincare_hopf(
    zeros: Sequence[ChartZero],
    g: BGraph,
    coloring: Coloring,
    fields: Mapping[str, PlaneField],
    radius: float = 0.1,
    critical_distance: Optional[Callable[[str, Tuple[float, float]], float]] = None,
) -> VerificationReport:
    """Check sum_p c(p) ind(p) == b-Euler number on caller-supplied zeros.

    Args:
        zeros: the complete zero list of the field, each tagged with the
            chart it is visible in and the region containing it.
        g: region graph of the underlying pair.
        coloring: proper sign coloring used to weight the indices.
        fields: chart name -> plane field giving the honest field there.
        radius: contour radius for every index computation.
        critical_distance: optional (chart, point) -> distance to the
            critical set in chart coordinates.  When given, any zero within
            `radius` of the critical set is rejected.

    Raises:
        ZeroOnCriticalSetError: a listed zero sits on or too near Z, where
            winding indices of the honest field are not defined.

    The pass flag records exact integer equality of the colored index sum
    with the rescaled Euler number; no tolerance is involved.
    """
    g.require_valid()
    results: List[ZeroIndex] = []
    for z in zeros:
        if critical_distance is not None:
            d = critical_distance(z.chart, z.point)
            if d <= radius:
                raise ZeroOnCriticalSetError(
                    f"zero {z.point} in chart {z.chart!r} is within {d:.3g} of the critical set"
                )
        res = winding_index(fields[z.chart], z.point, radius)
        results.append(ZeroIndex(z.chart, z.point, z.region, res.index))
    colored = sum(coloring[r.region] * r.index for r in results)
    unsigned = sum(r.index for r in results)
    be = b_euler_number(g, coloring)
    classical = sum(r.euler_char for r in g.regions)
    return VerificationReport(
        zeros=tuple(results),
        colored_sum=colored,
        b_euler=be,
        unsigned_sum=unsigned,
        classical_euler=classical,
        passed=(colored == be),
    )


def _sphere_critical_distance(chart: str, point: Tuple[float, float]) -> float:
    # the equator is the unit circle of both stereographic charts
    return abs(math.hypot(*point) - 1.0)


def sphere_height_example() -> dict:
    """Everything needed to verify the index sum on the round sphere.

    The field is the height function times its negated gradient: a section
    of the rescaled bundle along the equator, with honest zeros exactly at
    the poles.  Charts are the two stereographic projections; each pole is
    the origin of one chart.
    """
    g = sphere_equator_graph()
    fields = {"north": _sphere_height_chart, "south": _sphere_height_chart}
    zeros = (
        ChartZero("north", (0.0, 0.0), "B+"),
        ChartZero("south", (0.0, 0.0), "B-"),
    )
    return {
        "graph": g,
        "fields": fields,
        "zeros": zeros,
        "critical_distance": _sphere_critical_distance,
    }
