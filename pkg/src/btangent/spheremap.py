"""The reflection-valued gluing map on spheres and its degree.

Reflecting across the hyperplane orthogonal to q and applying the result to
the north pole defines a self-map of the unit sphere,

    q  |->  p_n - 2 <q, p_n> q.

Its degree decides whether the sign obstruction on the sphere can be undone:
the degree is 2 in even dimensions and 0 in odd ones, where the map is in
fact null-homotopic by an explicit construction through a cylinder model.
This module computes the degree two independent ways (a Monte Carlo change
of variables and preimage counting at a regular value) and evaluates the
null homotopy on grids.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    EvenDimensionError,
    NonTangentInputError,
    NonUnitInputError,
    OutOfRangeError,
    UnsupportedDimensionError,
)

UNIT_TOLERANCE = 1e-12
TANGENT_TOLERANCE = 1e-10


def north_pole(n: int) -> np.ndarray:
    p = np.zeros(n)
    p[-1] = 1.0
    return p


def _as_unit(q, name: str = "q") -> np.ndarray:
    q = np.asarray(q, dtype=float)
    if q.ndim != 1 or q.size < 2:
        raise NonUnitInputError(f"{name} must be a vector of dimension >= 2")
    dev = abs(np.linalg.norm(q) - 1.0)
    if dev > UNIT_TOLERANCE:
        raise NonUnitInputError(f"{name} is off the unit sphere by {dev:.3e}")
    return q


def reflection(q) -> np.ndarray:
    """Reflection across the hyperplane orthogonal to the unit vector q.

    Returns I - 2 q q^T: an involutive orthogonal matrix of determinant -1.
    """
    q = _as_unit(q)
    return np.eye(q.size) - 2.0 * np.outer(q, q)


def pole_map(q) -> np.ndarray:
    """Image of the north pole under reflection across q-perp."""
    q = _as_unit(q)
    return north_pole(q.size) - 2.0 * q[-1] * q


def pole_map_differential(q, v) -> np.ndarray:
    """Differential of pole_map at q applied to a tangent vector v.

    Raises:
        NonTangentInputError: v is not orthogonal to q (within 1e-10).
    """
    q = _as_unit(q)
    v = np.asarray(v, dtype=float)
    if abs(float(q @ v)) > TANGENT_TOLERANCE:
        raise NonTangentInputError(f"<q, v> = {float(q @ v):.3e} exceeds tangency tolerance")
    return -2.0 * v[-1] * q - 2.0 * q[-1] * v


def _tangent_frames(q: np.ndarray) -> np.ndarray:
    """Positively oriented orthonormal tangent frames for a batch of unit rows.

    Per row the standard basis vector most parallel to q is dropped, the
    rest are Gram-Schmidt orthonormalized against q in index order, and the
    last vector is flipped where needed so det[q | v_1 | ... | v_{n-1}] > 0.
    """
    m, n = q.shape
    drop = np.argmax(np.abs(q), axis=1)
    idx = np.broadcast_to(np.arange(n), (m, n))
    keep = idx[idx != drop[:, None]].reshape(m, n - 1)
    frames = np.zeros((m, n - 1, n))
    rows = np.arange(m)
    for j in range(n - 1):
        b = np.zeros((m, n))
        b[rows, keep[:, j]] = 1.0
        b -= np.sum(b * q, axis=1, keepdims=True) * q
        for i in range(j):
            v = frames[:, i, :]
            b -= np.sum(b * v, axis=1, keepdims=True) * v
        b /= np.linalg.norm(b, axis=1, keepdims=True)
        frames[:, j, :] = b
    mats = np.concatenate([q[:, None, :], frames], axis=1)
    neg = np.linalg.det(mats) < 0
    frames[neg, -1, :] *= -1.0
    return frames


def tangent_frame(q) -> np.ndarray:
    """Positively oriented orthonormal basis of the tangent space at q."""
    q = _as_unit(q)
    return _tangent_frames(q[None, :])[0]


def degree_integral(n: int, samples: int = 200_000, seed: int = 0) -> float:
    """Monte Carlo estimate of the mapping degree of pole_map on S^{n-1}.

    Averages the pulled-back volume density det[f(q) | df(v_1) | ... ] over
    uniform q with a positively oriented orthonormal tangent frame (v_i).
    Uses a counter-based generator and fixed-size chunks, so a given
    (n, samples, seed) always reproduces the same value.

    Raises:
        UnsupportedDimensionError: n outside 2..8.
        ValueError: fewer than 10**4 samples.
    """
    if not 2 <= n <= 8:
        raise UnsupportedDimensionError(f"degree_integral supports 2 <= n <= 8, got {n}")
    if samples < 10_000:
        raise ValueError(f"need at least 10**4 samples, got {samples}")
    rng = np.random.Generator(np.random.Philox(seed))
    chunk = 8192
    total = 0.0
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        q = rng.normal(size=(m, n))
        q /= np.linalg.norm(q, axis=1, keepdims=True)
        frames = _tangent_frames(q)
        t = q[:, -1]
        mu = -2.0 * t[:, None] * q
        mu[:, -1] += 1.0
        cols = (
            -2.0 * frames[:, :, -1][:, :, None] * q[:, None, :]
            - 2.0 * t[:, None, None] * frames
        )
        mats = np.concatenate([mu[:, None, :], cols], axis=1)
        total += float(np.sum(np.linalg.det(mats)))
        done += m
    return total / samples


def _confirm_preimage_isolation(
    n: int, cap_radius: float = 0.2, margin: float = 0.05, grid: int = 20_000
) -> None:
    """Desk-scale exhaustiveness check: no preimages of -p_n away from the poles.

    On a seeded dense sample outside polar caps of angular radius
    `cap_radius`, the image stays at least `margin` away from the south pole
    in inner-product terms; ascent refinement from the tightest samples must
    end inside a cap (or at the equatorial minimum, far from the value).
    """
    rng = np.random.Generator(np.random.Philox(2023))
    q = rng.normal(size=(grid, n))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    t = q[:, -1]
    outside = np.abs(t) < math.cos(cap_radius)
    gap = 2.0 * (1.0 - t[outside] ** 2)
    if gap.size and float(np.min(gap)) <= margin:
        raise RuntimeError("unexpected near-preimage of the south pole off the poles")
    tight = q[outside][np.argsort(gap)[:32]]
    for row in tight:
        p = row.copy()
        for _ in range(150):
            tt = p[-1]
            grad = 4.0 * tt * (north_pole(n) - tt * p)
            p = p + 0.5 * grad
            p /= np.linalg.norm(p)
        tt = p[-1]
        in_cap = abs(tt) >= math.cos(cap_radius)
        value_gap = 2.0 * (1.0 - tt * tt)
        if not in_cap and value_gap <= margin:
            raise RuntimeError("refinement found a candidate preimage off the poles")


def degree_preimage(n: int) -> int:
    """Degree of pole_map via preimage counting at the regular value -p_n.

    The only preimages are the two poles; a seeded grid sweep plus local
    refinement confirms no others.  At each pole the orientation sign is the
    sign of det[-p_n | df(v_1) | ... | df(v_{n-1})] for a positively
    oriented frame (v_i); tangent spaces at image and preimage are oriented
    by the same outward-normal-first convention, which is what makes the two
    pole contributions cancel in odd dimensions.

    Raises:
        UnsupportedDimensionError: n outside 2..8.
    """
    if not 2 <= n <= 8:
        raise UnsupportedDimensionError(f"degree_preimage supports 2 <= n <= 8, got {n}")
    south = -north_pole(n)
    deg = 0
    for q in (north_pole(n), -north_pole(n)):
        frame = tangent_frame(q)
        images = [pole_map_differential(q, v) for v in frame]
        d = float(np.linalg.det(np.column_stack([south] + images)))
        deg += 1 if d > 0 else -1
    _confirm_preimage_isolation(n)
    expected = 1 - (-1) ** (n - 1)
    if deg != expected:
        raise RuntimeError(f"orientation bookkeeping broke: got {deg}, parity says {expected}")
    return deg


# ---------------------------------------------------------------------------
# cylinder model and the odd-dimensional null homotopy
# ---------------------------------------------------------------------------


def cylinder_projection(v, x: float) -> np.ndarray:
    """Collapse map S^{n-2} x [-1, 1] -> S^{n-1}, lids to the poles."""
    v = _as_unit(v, "v")
    if not -1.0 <= x <= 1.0:
        raise OutOfRangeError(f"cylinder coordinate x = {x} outside [-1, 1]")
    r = math.sqrt(max(1.0 - x * x, 0.0))
    return np.append(r * v, x)


def cylinder_lift(v, x: float) -> Tuple[np.ndarray, float]:
    """Lift of pole_map through the cylinder collapse.

    Maps (v, x) to (-v, 1 - 2x^2) on the upper half and (v, 1 - 2x^2) on the
    lower; composing with the collapse on both sides recovers pole_map.  The
    jump at x = 0 disappears under the collapse because the x-image there is
    the north lid.

    Raises:
        NonUnitInputError: v is not a unit vector.
        OutOfRangeError: x outside [-1, 1].
    """
    v = _as_unit(v, "v")
    if not -1.0 <= x <= 1.0:
        raise OutOfRangeError(f"cylinder coordinate x = {x} outside [-1, 1]")
    y = 1.0 - 2.0 * x * x
    return ((-v, y) if x > 0 else (v.copy(), y))


@dataclass(frozen=True)
class CheckItem:
    name: str
    value: float
    tolerance: Optional[float]
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class CheckReport:
    name: str
    items: Tuple[CheckItem, ...]
    metrics: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "items": [i.to_json_dict() for i in self.items],
            "metrics": dict(sorted(self.metrics.items())),
        }


def _paired_rotation(v: np.ndarray, angle: np.ndarray) -> np.ndarray:
    """Simultaneous rotation by `angle` in the coordinate planes (0,1), (2,3), ...

    Needs even vector dimension; rotating every plane by pi gives -identity,
    which is why this connects the antipodal map to the identity.
    """
    d = v.shape[-1]
    if d % 2 != 0:
        raise ValueError("paired rotation needs even dimension")
    c = np.cos(angle)
    s = np.sin(angle)
    out = np.empty(np.broadcast_shapes(v.shape, c.shape + (d,)))
    even = v[..., 0::2]
    odd = v[..., 1::2]
    out[..., 0::2] = c[..., None] * even - s[..., None] * odd
    out[..., 1::2] = s[..., None] * even + c[..., None] * odd
    return out


def homotopy_endpoints(n: int, grid: int = 50) -> CheckReport:
    """Evaluate the odd-dimensional null homotopy of pole_map on a grid.

    The first half rotates the upper-half cylinder image of pole_map until
    the antipodal twist is undone; the second half slides everything down to
    the south pole.  Checked on a grid of (direction, height, time) samples:
    the time-0 slice reproduces pole_map to 1e-9, the time-1 slice is
    constantly the south pole to 1e-12, and every intermediate image is a
    unit vector to 1e-12.  The largest displacement between adjacent grid
    samples is reported as a metric, not asserted.

    Raises:
        EvenDimensionError: n is even (the degree is 2 there; no null
            homotopy exists).
        UnsupportedDimensionError: n outside 3..7.
    """
    if n % 2 == 0:
        raise EvenDimensionError(f"no null homotopy in even dimension n = {n}")
    if not 3 <= n <= 7:
        raise UnsupportedDimensionError(f"homotopy_endpoints supports odd 3 <= n <= 7, got {n}")
    if grid < 3:
        raise ValueError("grid must be >= 3")

    rng = np.random.Generator(np.random.Philox(0))
    vs = rng.normal(size=(grid, n - 1))
    vs /= np.linalg.norm(vs, axis=1, keepdims=True)
    xs = np.linspace(-1.0, 1.0, grid)
    ts = np.linspace(0.0, 1.0, grid)

    v4 = vs[:, None, None, :]                      # (V,1,1,n-1)
    x3 = xs[None, :, None]                         # (1,X,1)
    t3 = ts[None, None, :]                         # (1,1,T)

    s1 = np.clip(2.0 * t3, 0.0, 1.0)
    angle = math.pi * (1.0 - s1)                   # pi -> 0: antipodal to identity
    rotated = _paired_rotation(v4, np.broadcast_to(angle, (1, 1, grid)))
    first_dir = np.where((x3 > 0)[..., None], rotated, v4)
    y_first = np.broadcast_to(1.0 - 2.0 * x3 * x3, (1, grid, grid))

    s2 = np.clip(2.0 * t3 - 1.0, 0.0, 1.0)
    y_second = (1.0 - s2) * (1.0 - 2.0 * x3 * x3) - s2

    in_first = t3 <= 0.5
    y = np.where(in_first, y_first, y_second)
    direction = np.where(in_first[..., None], first_dir, np.broadcast_to(v4, first_dir.shape))
    radial = np.sqrt(np.clip(1.0 - y * y, 0.0, None))
    equatorial = radial[..., None] * direction
    h = np.concatenate(
        [equatorial, np.broadcast_to(y[..., None], equatorial.shape[:-1] + (1,))], axis=-1
    )

    start = h[:, :, 0, :]
    rad0 = np.sqrt(np.clip(1.0 - xs * xs, 0.0, None))
    base = np.concatenate(
        [rad0[None, :, None] * vs[:, None, :],
         np.broadcast_to(xs[None, :, None], (grid, grid, 1))],
        axis=-1,
    )
    tq = base[..., -1]
    mu = -2.0 * tq[..., None] * base
    mu[..., -1] += 1.0
    start_dev = float(np.max(np.linalg.norm(start - mu, axis=-1)))

    south = -north_pole(n)
    end_dev = float(np.max(np.linalg.norm(h[:, :, -1, :] - south, axis=-1)))
    norm_dev = float(np.max(np.abs(np.linalg.norm(h, axis=-1) - 1.0)))
    step_t = float(np.max(np.linalg.norm(np.diff(h, axis=2), axis=-1)))
    step_x = float(np.max(np.linalg.norm(np.diff(h, axis=1), axis=-1)))

    items = (
        CheckItem("time0_matches_pole_map", start_dev, 1e-9, start_dev <= 1e-9),
        CheckItem("time1_constant_south_pole", end_dev, 1e-12, end_dev <= 1e-12),
        CheckItem("images_unit_norm", norm_dev, 1e-12, norm_dev <= 1e-12),
    )
    return CheckReport(
        name=f"null_homotopy_n{n}",
        items=items,
        metrics={"max_adjacent_step": max(step_t, step_x), "grid": float(grid)},
    )


def edge_homotopy_matrix(t: float) -> np.ndarray:
    """Point on the rotation path joining -identity to identity in SO(2)."""
    c = math.cos(math.pi * t)
    s = math.sin(math.pi * t)
    return np.array([[-c, s], [-s, -c]])


def edge_homotopy_witness(steps: int = 1000) -> CheckReport:
    """Sampled witness that -identity and identity are connected in SO(2).

    This is the escape hatch for even-codimension edge structures: the sign
    flip of the gluing sits in the identity component, so no coloring
    obstruction can arise.  Checks endpoints and det == 1 along the path.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    ts = np.linspace(0.0, 1.0, steps)
    mats = np.stack([edge_homotopy_matrix(float(t)) for t in ts])
    dev0 = float(np.max(np.abs(mats[0] + np.eye(2))))
    dev1 = float(np.max(np.abs(mats[-1] - np.eye(2))))
    det_dev = float(np.max(np.abs(np.linalg.det(mats) - 1.0)))
    items = (
        CheckItem("starts_at_minus_identity", dev0, 1e-12, dev0 <= 1e-12),
        CheckItem("ends_at_identity", dev1, 1e-12, dev1 <= 1e-12),
        CheckItem("stays_in_rotation_group", det_dev, 1e-12, det_dev <= 1e-12),
    )
    return CheckReport(
        name="edge_rotation_path",
        items=items,
        metrics={"steps": float(steps)},
    )


# ---------------------------------------------------------------------------
# local trivialization consistency
# ---------------------------------------------------------------------------


def rotation_from_pole(y) -> np.ndarray:
    """Rotation in the plane spanned by the north pole and y sending pole to y.

    Acts as the identity on the orthogonal complement of that plane.  Not
    defined for y = -pole (the rotation plane is ambiguous there).
    """
    y = _as_unit(y, "y")
    n = y.size
    u = north_pole(n)
    c = float(y[-1])
    w = y - c * u
    s = float(np.linalg.norm(w))
    if s < 1e-13:
        if c > 0:
            return np.eye(n)
        raise ValueError("rotation to the antipode of the pole is not unique")
    w = w / s
    return (
        np.eye(n)
        + (c - 1.0) * (np.outer(u, u) + np.outer(w, w))
        + s * (np.outer(w, u) - np.outer(u, w))
    )


def local_trivialization_residual(q) -> float:
    """Consistency defect of the section-based trivialization on the upper band.

    For q with height strictly between 0 and 1/sqrt(2), the reflection at q
    factors as the pole-to-image rotation composed with the reflection at
    the normalized equatorial part of q.  Returns the max-abs deviation of
    that factorization; it should vanish to roundoff.
    """
    q = _as_unit(q)
    height = float(q[-1])
    if not 0.0 < height < 1.0 / math.sqrt(2.0):
        raise ValueError(f"q must lie strictly inside the upper band, height = {height}")
    qe = q.copy()
    qe[-1] = 0.0
    qe /= np.linalg.norm(qe)
    recon = rotation_from_pole(pole_map(q)) @ reflection(qe)
    return float(np.max(np.abs(reflection(q) - recon)))


@dataclass(frozen=True)
class SphereMapReport:
    """Side-by-side degree computations for one sphere dimension."""

    n: int
    degree_integral: float
    degree_preimage: int
    agreement: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "degree_integral": self.degree_integral,
            "degree_preimage": self.degree_preimage,
            "agreement": self.agreement,
        }


def sphere_map_report(n: int, samples: int = 200_000, seed: int = 0) -> SphereMapReport:
    di = degree_integral(n, samples=samples, seed=seed)
    dp = degree_preimage(n)
    return SphereMapReport(
        n=n, degree_integral=di, degree_preimage=dp, agreement=abs(di - dp) < 0.1
    )
