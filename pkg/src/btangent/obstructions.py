"""Existence tests for rescaled-tangent-bundle isomorphisms.

Whether the tangent bundle of a pair (M, Z) is isomorphic to its singular
variant is a property of the region graph alone: it holds exactly when the
graph admits a proper two-coloring by signs.  The same coloring question is
solved twice on purpose, once by breadth-first search and once as a GF(2)
linear system over the edge constraints, so each route checks the other.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from .bgraph import BGraph, Coloring, validate_graph
from .errors import InconsistentGluingError, NotOrientableError

PONTRJAGIN_NOTE = "2p(TM) = 2p(bTM) always"


class BmClass(Enum):
    """Which classical bundle a tangency-order-m rescaling is isomorphic to."""

    TANGENT_EQUIVALENT = "TangentEquivalent"
    B_TANGENT_EQUIVALENT = "BTangentEquivalent"


class EdgeVerdict(Enum):
    OBSTRUCTED = "Obstructed"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SignGluing:
    """Sign-level gluing data attached to the edges of a region graph.

    Each edge stores its two sides as (region label, sign) pairs; a loop edge
    records the same region twice.  The sign convention for the rescaled
    bundle forces the two signs on every edge to multiply to -1.
    """

    incidences: Mapping[str, Tuple[Tuple[str, int], Tuple[str, int]]]

    def __post_init__(self):
        object.__setattr__(
            self,
            "incidences",
            {k: (tuple(v[0]), tuple(v[1])) for k, v in dict(self.incidences).items()},
        )

    @classmethod
    def canonical(cls, g: BGraph) -> "SignGluing":
        """The standard gluing: +1 on side_a, -1 on side_b of every edge."""
        return cls({e.label: ((e.side_a, 1), (e.side_b, -1)) for e in g.edges})

    def check_against(self, g: BGraph) -> None:
        """Raise InconsistentGluingError unless this gluing decorates g."""
        want = {e.label: (e.side_a, e.side_b) for e in g.edges}
        if set(self.incidences) != set(want):
            raise InconsistentGluingError(
                f"edge labels {sorted(self.incidences)} do not match graph edges {sorted(want)}"
            )
        for label, ((ra, sa), (rb, sb)) in self.incidences.items():
            if sa not in (1, -1) or sb not in (1, -1):
                raise InconsistentGluingError(f"edge {label!r} carries a non-sign entry")
            if sorted((ra, rb)) != sorted(want[label]):
                raise InconsistentGluingError(
                    f"edge {label!r} joins {sorted((ra, rb))}, graph says {sorted(want[label])}"
                )
            if sa * sb != -1:
                raise InconsistentGluingError(
                    f"edge {label!r} has side signs with product {sa * sb}, need -1"
                )


@dataclass(frozen=True)
class ClassificationVerdict:
    """Bundle of equivalent answers for one region graph.

    All boolean fields agree by construction; they are reported separately
    because each phrases the same obstruction through a different invariant.
    """

    two_colorable: bool
    coloring: Optional[Coloring]
    line_bundle_trivial: bool
    sw_classes_equal: bool
    b_tangent_orientable: bool
    global_defining_function: bool
    ko_classes_equal: bool
    pontrjagin_note: str = PONTRJAGIN_NOTE

    def __post_init__(self):
        flags = {
            self.two_colorable,
            self.line_bundle_trivial,
            self.sw_classes_equal,
            self.b_tangent_orientable,
            self.global_defining_function,
            self.ko_classes_equal,
        }
        if len(flags) != 1:
            raise ValueError("equivalence verdict fields disagree")
        if self.two_colorable != (self.coloring is not None):
            raise ValueError("coloring presence must match the verdict")

    def to_json_dict(self) -> dict:
        return {
            "two_colorable": self.two_colorable,
            "coloring": None if self.coloring is None else self.coloring.to_json_dict(),
            "line_bundle_trivial": self.line_bundle_trivial,
            "sw_classes_equal": self.sw_classes_equal,
            "b_tangent_orientable": self.b_tangent_orientable,
            "global_defining_function": self.global_defining_function,
            "ko_classes_equal": self.ko_classes_equal,
            "pontrjagin_note": self.pontrjagin_note,
        }


def two_color(g: BGraph) -> Optional[Coloring]:
    """Proper sign coloring of the region graph, or None if none exists.

    Deterministic tie-break: in every connected component the
    lexicographically smallest region label receives +1.
    """
    g.require_valid()
    if any(e.is_loop for e in g.edges):
        return None
    adj: Dict[str, set] = {r.label: set() for r in g.regions}
    for e in g.edges:
        adj[e.side_a].add(e.side_b)
        adj[e.side_b].add(e.side_a)
    color: Dict[str, int] = {}
    for start in sorted(adj):
        if start in color:
            continue
        color[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in sorted(adj[u]):
                if w not in color:
                    color[w] = -color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return Coloring(color)


def _solve_gf2(a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """One solution of a x = b over GF(2) (free variables set to 0), or None."""
    a = a.copy() % 2
    b = b.copy() % 2
    rows, cols = a.shape
    pivot_col: List[int] = []
    r = 0
    for c in range(cols):
        pivots = np.nonzero(a[r:, c])[0]
        if len(pivots) == 0:
            continue
        p = r + pivots[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
            b[[r, p]] = b[[p, r]]
        hits = np.nonzero(a[:, c])[0]
        for h in hits:
            if h != r:
                a[h] ^= a[r]
                b[h] ^= b[r]
        pivot_col.append(c)
        r += 1
        if r == rows:
            break
    if np.any(b[r:] != 0):
        return None
    x = np.zeros(cols, dtype=np.uint8)
    for i, c in enumerate(pivot_col):
        x[c] = b[i]
    return x


def gauge_solvable(gluing: SignGluing, g: BGraph) -> Optional[Coloring]:
    """Solve the sign system of a gluing as GF(2) linear algebra.

    Each edge with side signs of product -1 demands opposite signs on its
    two regions.  Encoding -1 as the bit 1 turns this into one linear
    equation per edge; Gaussian elimination decides solvability.  The
    returned assignment is normalized so that, in every connected component
    of the graph, the smallest region label gets +1, matching two_color.

    Raises:
        InconsistentGluingError: the gluing does not decorate g.
    """
    g.require_valid()
    gluing.check_against(g)
    labels = sorted(g.region_labels())
    index = {lab: i for i, lab in enumerate(labels)}
    a = np.zeros((len(g.edges), len(labels)), dtype=np.uint8)
    b = np.zeros(len(g.edges), dtype=np.uint8)
    for row, e in enumerate(g.edges):
        (ra, sa), (rb, sb) = gluing.incidences[e.label]
        a[row, index[ra]] ^= 1
        a[row, index[rb]] ^= 1
        b[row] = 1 if sa * sb == -1 else 0
    x = _solve_gf2(a, b)
    if x is None:
        return None
    signs = {lab: (1 if x[index[lab]] == 0 else -1) for lab in labels}
    for comp in g.components():
        if signs[comp[0]] == -1:
            for lab in comp:
                signs[lab] = -signs[lab]
    return Coloring(signs)


def classify_bm(m: int) -> BmClass:
    """Classify the order-m rescaled tangent bundle up to isomorphism.

    Rescaling by an even power of a defining function can be gauged away
    entirely; an odd power reduces to the order-one case.
    """
    if m < 1:
        raise ValueError(f"tangency order must be >= 1, got {m}")
    return BmClass.TANGENT_EQUIVALENT if m % 2 == 0 else BmClass.B_TANGENT_EQUIVALENT


def equivalence_report(g: BGraph) -> ClassificationVerdict:
    """Evaluate the full ring of equivalent criteria on one graph.

    Raises:
        NotOrientableError: the ambient manifold is flagged non-orientable;
            the bundle-level reformulations assume orientability of M.
    """
    g.require_valid()
    if not g.orientable:
        raise NotOrientableError("equivalence_report requires an orientable ambient manifold")
    coloring = two_color(g)
    colorable = coloring is not None
    return ClassificationVerdict(
        two_colorable=colorable,
        coloring=coloring,
        line_bundle_trivial=colorable,
        sw_classes_equal=colorable,
        b_tangent_orientable=colorable,
        global_defining_function=colorable,
        ko_classes_equal=colorable,
    )


def circle_criterion(k: int) -> bool:
    """Isomorphism criterion for the circle with k marked points: k even."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return k % 2 == 0


def edge_obstruction(g: BGraph, dim_m: int, dim_f: int) -> EdgeVerdict:
    """Necessary-condition test for edge-rescaled bundles.

    The coloring obstruction applies only when dim_m - dim_f, the ambient
    dimension minus the typical fibre dimension, is odd.  In that case a
    non-colorable graph rules the isomorphism out; in every other case the
    test is silent (even codimension genuinely escapes: the circle fibered
    over itself inside the sphere admits an isomorphism despite Z).

    Raises:
        ValueError: unless 0 <= dim_f < dim_m.
    """
    g.require_valid()
    if not 0 <= dim_f < dim_m:
        raise ValueError(f"need 0 <= dim_f < dim_m, got dim_f={dim_f}, dim_m={dim_m}")
    if (dim_m - dim_f) % 2 == 1 and two_color(g) is None:
        return EdgeVerdict.OBSTRUCTED
    return EdgeVerdict.INCONCLUSIVE
