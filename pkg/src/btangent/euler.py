"""Euler numbers of the rescaled tangent bundle from region data alone.

In even ambient dimension the rescaled bundle's relative Euler number is the
coloring-weighted sum of region Euler characteristics; the classical Euler
characteristic is the unweighted sum.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bgraph import BGraph, Coloring
from .errors import (
    ImproperColoringError,
    NotColorableError,
    OddDimensionError,
    UnsupportedDimensionError,
)
from .obstructions import two_color


@dataclass(frozen=True)
class EulerReport:
    b_euler: int
    classical_euler: int
    coloring_used: Coloring

    def to_json_dict(self) -> dict:
        return {
            "b_euler": self.b_euler,
            "classical_euler": self.classical_euler,
            "coloring_used": self.coloring_used.to_json_dict(),
        }


def b_euler_number(g: BGraph, coloring: Coloring) -> int:
    """Signed region sum sum_U c(U) chi(U) for a proper coloring c.

    Raises:
        ImproperColoringError: coloring is not total or violates an edge.
        OddDimensionError: ambient dimension is odd (both Euler numbers
            vanish identically there; the sum would be meaningless).
    """
    g.require_valid()
    if g.ambient_dim % 2 != 0:
        raise OddDimensionError(
            f"b-Euler number needs even ambient dimension, got {g.ambient_dim}"
        )
    if not coloring.is_proper(g):
        raise ImproperColoringError("coloring is not a proper sign coloring of the graph")
    return sum(coloring[r.label] * r.euler_char for r in g.regions)


def classical_euler_number(g: BGraph) -> int:
    """Euler characteristic of the ambient surface as the plain region sum.

    Only ambient dimension 2 is supported: there the marked hypersurface is
    a union of circles, which contribute nothing, so the closure
    characteristics add up to chi(M) on the nose.

    Raises:
        UnsupportedDimensionError: ambient dimension differs from 2.
    """
    g.require_valid()
    if g.ambient_dim != 2:
        raise UnsupportedDimensionError(
            f"classical Euler number via region sums needs ambient_dim == 2, got {g.ambient_dim}"
        )
    return sum(r.euler_char for r in g.regions)


def euler_report(g: BGraph) -> EulerReport:
    """Both Euler numbers under the canonical coloring.

    Raises:
        NotColorableError: the graph admits no proper sign coloring, so the
            rescaled bundle has no well-defined relative Euler number.
        OddDimensionError: ambient dimension is odd.
    """
    g.require_valid()
    if g.ambient_dim % 2 != 0:
        raise OddDimensionError(
            f"Euler report needs even ambient dimension, got {g.ambient_dim}"
        )
    coloring = two_color(g)
    if coloring is None:
        raise NotColorableError("graph is not two-colorable; no global sign choice exists")
    return EulerReport(
        b_euler=b_euler_number(g, coloring),
        classical_euler=sum(r.euler_char for r in g.regions),
        coloring_used=coloring,
    )
