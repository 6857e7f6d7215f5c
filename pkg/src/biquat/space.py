"""The three-dimensional real subspace E3 of H(C) and its curve geometry.

E3 is spanned over R by i1 = e1 + e2 (the unit), i2 = a1 e1 + a2 e2 and
i3 = b1 e1 + b2 e2.  A point (x, y, z) embeds as

    zeta = xi1 e1 + xi2 e2,   xi_k = x + a_k y + b_k z.

Curves live in R^3 and are canonically materialized as polylines; arclength
(``mes``), equal-arclength subdivision and homotopy families operate on the
materialized polylines.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .algebra import Quaternion

__all__ = [
    "DegenerateGeneratorError",
    "GeneratorTriple",
    "DEFAULT_GENERATOR",
    "Point3",
    "Curve",
    "HomotopyFamily",
    "embed",
    "embed_xi",
    "check_independence",
    "component_bound_constant",
    "mes",
    "subdivide_by_arclength",
    "SubdivisionResult",
    "circle",
    "ellipse",
    "segment",
    "polygon",
    "wobbly_loop",
    "concat",
    "linear_homotopy",
]

INDEPENDENCE_TOL = 1e-10
CLOSED_TOL = 1e-12


class DegenerateGeneratorError(ValueError):
    """The generator parameters do not span a 3-dimensional real subspace."""


class Point3(NamedTuple):
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class GeneratorTriple:
    """Complex parameters (a1, a2, b1, b2) defining i2 and i3."""

    a1: complex
    a2: complex
    b1: complex
    b2: complex

    @cached_property
    def matrix(self) -> np.ndarray:
        """Real 4x3 matrix sending (x,y,z) to (Re xi1, Im xi1, Re xi2, Im xi2)."""
        a1, a2, b1, b2 = (complex(v) for v in (self.a1, self.a2, self.b1, self.b2))
        return np.array(
            [
                [1.0, a1.real, b1.real],
                [0.0, a1.imag, b1.imag],
                [1.0, a2.real, b2.real],
                [0.0, a2.imag, b2.imag],
            ]
        )

    @cached_property
    def smallest_singular_value(self) -> float:
        return float(np.linalg.svd(self.matrix, compute_uv=False)[-1])

    @property
    def is_valid(self) -> bool:
        return self.smallest_singular_value > INDEPENDENCE_TOL

    def require_valid(self) -> "GeneratorTriple":
        if not self.is_valid:
            raise DegenerateGeneratorError(
                "generators are linearly dependent over R "
                f"(smallest singular value {self.smallest_singular_value:.3e})"
            )
        return self


DEFAULT_GENERATOR = GeneratorTriple(a1=1j, a2=2j, b1=1 + 1j, b2=-1 + 1j)


def check_independence(gen: GeneratorTriple) -> tuple[bool, float]:
    """Whether i1, i2, i3 are R-independent, plus the diagnostic sigma_min."""
    return gen.is_valid, gen.smallest_singular_value


def embed_xi(gen: GeneratorTriple, x, y, z) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized (xi1, xi2) coordinates of points (x, y, z)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    xi1 = x + gen.a1 * y + gen.b1 * z
    xi2 = x + gen.a2 * y + gen.b2 * z
    return xi1, xi2


def embed(p, gen: GeneratorTriple) -> Quaternion:
    """The element zeta = x i1 + y i2 + z i3 of E3 as a Quaternion."""
    gen.require_valid()
    x, y, z = (float(v) for v in p)
    xi1, xi2 = embed_xi(gen, x, y, z)
    return Quaternion(complex(xi1), complex(xi2))


def component_bound_constant(gen: GeneratorTriple) -> float:
    """Smallest c with norm_e(zeta) <= c * sqrt(x^2+y^2+z^2) on all of E3.

    Equals the spectral norm of the embedding matrix.
    """
    gen.require_valid()
    return float(np.linalg.svd(gen.matrix, compute_uv=False)[0])


# --- curves ------------------------------------------------------------------


class Curve:
    """A rectifiable parametric curve t in [0,1] -> R^3.

    Three flavours share the interface: analytic (a sampled function),
    polyline (fixed ordered vertices, refined by splitting segments), and
    piecewise (concatenation of curves).  ``polyline(n)`` materializes the
    curve at resolution n as an (m+1, 3) vertex array with m >= n segments.
    """

    def __init__(self, kind: str, fn=None, vertices=None, pieces=None, closed=None):
        self._kind = kind
        self._fn = fn
        self._pieces = pieces
        if vertices is not None:
            vertices = np.array(vertices, dtype=float)
            if vertices.ndim != 2 or vertices.shape[1] != 3 or len(vertices) < 2:
                raise ValueError("polyline needs an (m+1, 3) vertex array with m >= 1")
        self._vertices = vertices
        if closed is None:
            a, b = self.point_at(0.0), self.point_at(1.0)
            closed = bool(np.linalg.norm(np.subtract(a, b)) <= CLOSED_TOL)
        self.closed = closed

    # constructors

    @classmethod
    def from_function(cls, fn: Callable, closed: bool | None = None) -> "Curve":
        """Analytic curve from fn(t) -> (x, y, z); fn may accept array t."""
        return cls("analytic", fn=fn, closed=closed)

    @classmethod
    def from_vertices(cls, vertices, closed: bool | None = None) -> "Curve":
        return cls("polyline", vertices=vertices, closed=closed)

    # evaluation

    def points_at(self, t) -> np.ndarray:
        """Points of the curve at parameters t (array), shape (len(t), 3)."""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        if self._kind == "analytic":
            out = np.array(self._fn(t), dtype=float)
            if out.shape == (3,) and len(t) == 1:
                out = out[None, :]
            elif out.shape == (3, len(t)):
                out = out.T
            return out
        if self._kind == "polyline":
            v = self._vertices
            m = len(v) - 1
            u = np.clip(t, 0.0, 1.0) * m
            j = np.minimum(u.astype(int), m - 1)
            w = (u - j)[:, None]
            return v[j] * (1.0 - w) + v[j + 1] * w
        # piecewise: pieces own equal-length t-subintervals weighted by length
        bounds = self._piece_bounds
        out = np.empty((len(t), 3))
        idx = np.minimum(np.searchsorted(bounds, t, side="right") - 1, len(self._pieces) - 1)
        idx = np.maximum(idx, 0)
        for k, piece in enumerate(self._pieces):
            sel = idx == k
            if not np.any(sel):
                continue
            lo, hi = bounds[k], bounds[k + 1]
            local = (t[sel] - lo) / (hi - lo)
            out[sel] = piece.points_at(local)
        return out

    def point_at(self, t: float) -> np.ndarray:
        return self.points_at([t])[0]

    @cached_property
    def _piece_bounds(self) -> np.ndarray:
        lengths = np.array([p.length_estimate() for p in self._pieces])
        total = lengths.sum()
        if total <= 0.0:
            frac = np.full(len(lengths), 1.0 / len(lengths))
        else:
            frac = lengths / total
        return np.concatenate([[0.0], np.cumsum(frac)])

    def length_estimate(self, n: int = 256) -> float:
        return polyline_length(self.polyline(n))

    # materialization

    def polyline(self, n: int) -> np.ndarray:
        """Vertices of the materialized polyline at resolution n."""
        if n < 1:
            raise ValueError("resolution must be >= 1")
        if self._kind == "analytic":
            return self.points_at(np.linspace(0.0, 1.0, n + 1))
        if self._kind == "polyline":
            return self._refined_vertices(n)
        parts = []
        lengths = np.array([max(p.length_estimate(), 1e-300) for p in self._pieces])
        total = lengths.sum()
        for k, piece in enumerate(self._pieces):
            nk = max(1, int(np.ceil(n * lengths[k] / total)))
            pts = piece.polyline(nk)
            parts.append(pts if k == 0 else pts[1:])
        return np.concatenate(parts, axis=0)

    def _refined_vertices(self, n: int) -> np.ndarray:
        v = self._vertices
        seg = np.diff(v, axis=0)
        lens = np.linalg.norm(seg, axis=1)
        total = lens.sum()
        if total == 0.0:
            return v.copy()
        parts = [v[:1]]
        for j in range(len(seg)):
            k = max(1, int(np.ceil(n * lens[j] / total)))
            w = np.linspace(0.0, 1.0, k + 1)[1:, None]
            parts.append(v[j] + w * seg[j])
        return np.concatenate(parts, axis=0)

    def reversed(self) -> "Curve":
        """Same trace, opposite orientation."""
        if self._kind == "analytic":
            fn = self._fn
            return Curve("analytic", fn=lambda t: fn(1.0 - np.asarray(t, dtype=float)), closed=self.closed)
        if self._kind == "polyline":
            return Curve("polyline", vertices=self._vertices[::-1], closed=self.closed)
        return Curve(
            "piecewise",
            pieces=[p.reversed() for p in reversed(self._pieces)],
            closed=self.closed,
        )


def polyline_length(vertices: np.ndarray) -> float:
    return float(np.linalg.norm(np.diff(vertices, axis=0), axis=1).sum())


def mes(curve: Curve, n: int = 4096) -> float:
    """Polyline arclength (linear Lebesgue measure) at resolution n."""
    return polyline_length(curve.polyline(n))


class SubdivisionResult(NamedTuple):
    points: np.ndarray  # (k+2, 3): arclengths 0, rho, ..., k*rho, L
    params: np.ndarray  # matching curve parameters in [0, 1]
    arc_count: int  # number of points strictly before closure (the paper-style n)
    total_length: float


def subdivide_by_arclength(curve: Curve, rho: float, n: int = 4096) -> SubdivisionResult:
    """Split a curve into arcs of arclength exactly rho (final arc <= rho).

    Points are interpolated on the materialized polyline, so consecutive
    arclength gaps equal rho up to float rounding.  Requires
    0 < rho < mes(curve)/2.
    """
    v = curve.polyline(n)
    seg = np.linalg.norm(np.diff(v, axis=0), axis=1)
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    length = float(cum[-1])
    if not 0.0 < rho < 0.5 * length:
        raise ValueError(f"rho must lie in (0, {0.5 * length}), got {rho}")
    k = int(np.ceil(length / rho)) - 1
    targets = np.concatenate([np.arange(k + 1) * rho, [length]])
    t_grid = np.linspace(0.0, 1.0, len(v))
    idx = np.clip(np.searchsorted(cum, targets, side="right") - 1, 0, len(seg) - 1)
    frac = (targets - cum[idx]) / np.where(seg[idx] > 0.0, seg[idx], 1.0)
    frac = np.clip(frac, 0.0, 1.0)
    points = v[idx] * (1.0 - frac)[:, None] + v[idx + 1] * frac[:, None]
    params = t_grid[idx] * (1.0 - frac) + t_grid[idx + 1] * frac
    return SubdivisionResult(points, params, k, length)


# --- homotopies ---------------------------------------------------------------


class HomotopyFamily:
    """A continuous deformation H(s, t) of a closed boundary curve to a point.

    H(0, .) is the boundary curve, H(1, .) the constant target point; level
    curves gamma^s fix s, transversals Gamma^t fix t.
    """

    def __init__(self, h: Callable, check: bool = True):
        self._h = h
        if check:
            t = np.linspace(0.0, 1.0, 17)
            top = self.points(1.0, t)
            if np.max(np.linalg.norm(top - top[0], axis=1)) > CLOSED_TOL:
                raise ValueError("H(1, t) must be constant in t")

    def points(self, s, t) -> np.ndarray:
        """Vectorized evaluation; s scalar with t array, or vice versa."""
        out = np.asarray(self._h(s, t), dtype=float)
        if out.ndim == 1:
            out = out[None, :]
        return out

    @property
    def target(self) -> np.ndarray:
        return self.points(1.0, 0.0)[0]

    def boundary_curve(self) -> Curve:
        return self.level_curve(0.0)

    def level_curve(self, s: float) -> Curve:
        if not 0.0 <= s <= 1.0:
            raise ValueError("s must lie in [0, 1]")
        return Curve.from_function(lambda t: self.points(s, t))

    def transversal_curve(self, t: float) -> Curve:
        if not 0.0 <= t <= 1.0:
            raise ValueError("t must lie in [0, 1]")
        return Curve.from_function(lambda s: self.points(np.asarray(s, dtype=float), t))


def linear_homotopy(curve: Curve, target) -> HomotopyFamily:
    """Straight-line shrink of a closed curve onto an interior target point."""
    target = np.asarray(target, dtype=float)
    if target.shape != (3,):
        raise ValueError("target must be a 3-vector")
    if not curve.closed:
        raise ValueError("homotopy boundary curve must be closed")

    def h(s, t):
        s_arr = np.asarray(s, dtype=float)
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        if s_arr.ndim == 0:
            base = curve.points_at(t_arr)
            return (1.0 - float(s_arr)) * base + float(s_arr) * target
        base = curve.points_at(np.full_like(s_arr, float(t)))
        return (1.0 - s_arr)[:, None] * base + s_arr[:, None] * target

    return HomotopyFamily(h, check=False)


# --- stock geometry -----------------------------------------------------------


def _plane_basis(normal) -> tuple[np.ndarray, np.ndarray]:
    # chosen so the default normal (0,0,1) yields u=(1,0,0), v=(0,1,0)
    nrm = np.asarray(normal, dtype=float)
    nrm = nrm / np.linalg.norm(nrm)
    helper = np.array([0.0, 1.0, 0.0]) if abs(nrm[2]) >= 0.9 else np.array([0.0, 0.0, 1.0])
    u = np.cross(helper, nrm)
    u /= np.linalg.norm(u)
    v = np.cross(nrm, u)
    return u, v


def circle(center=(0.0, 0.0, 0.0), radius: float = 1.0, normal=(0.0, 0.0, 1.0)) -> Curve:
    center = np.asarray(center, dtype=float)
    u, v = _plane_basis(normal)

    def fn(t):
        ang = 2.0 * np.pi * np.asarray(t, dtype=float)
        return center + radius * (np.cos(ang)[:, None] * u + np.sin(ang)[:, None] * v)

    return Curve.from_function(fn, closed=True)


def ellipse(
    center=(0.0, 0.0, 0.0),
    rx: float = 1.0,
    ry: float = 0.6,
    tilt: float = 0.0,
    normal=(0.0, 0.0, 1.0),
) -> Curve:
    """Ellipse with semi-axes rx, ry, rotated by ``tilt`` radians in its plane."""
    center = np.asarray(center, dtype=float)
    u, v = _plane_basis(normal)
    cu, su = np.cos(tilt), np.sin(tilt)
    ax = cu * u + su * v
    ay = -su * u + cu * v

    def fn(t):
        ang = 2.0 * np.pi * np.asarray(t, dtype=float)
        return center + rx * np.cos(ang)[:, None] * ax + ry * np.sin(ang)[:, None] * ay

    return Curve.from_function(fn, closed=True)


def segment(a, b) -> Curve:
    return Curve.from_vertices([a, b], closed=False)


def polygon(vertices, closed: bool = True) -> Curve:
    v = np.array(vertices, dtype=float)
    if closed and np.linalg.norm(v[0] - v[-1]) > CLOSED_TOL:
        v = np.concatenate([v, v[:1]], axis=0)
    return Curve.from_vertices(v, closed=closed)


def wobbly_loop(
    base_radius: float = 1.0,
    amplitude: float = 0.25,
    lobes: int = 3,
    z_amplitude: float = 0.3,
    z_lobes: int = 2,
) -> Curve:
    """Smooth closed unknotted loop with radial and vertical wobble."""

    def fn(t):
        ang = 2.0 * np.pi * np.asarray(t, dtype=float)
        r = base_radius + amplitude * np.cos(lobes * ang)
        return np.stack(
            [r * np.cos(ang), r * np.sin(ang), z_amplitude * np.sin(z_lobes * ang)],
            axis=-1,
        )

    return Curve.from_function(fn, closed=True)


def concat(pieces: Sequence[Curve], closed: bool | None = None) -> Curve:
    """Concatenation of curves; consecutive endpoints must coincide."""
    pieces = list(pieces)
    if len(pieces) < 1:
        raise ValueError("need at least one piece")
    for a, b in zip(pieces, pieces[1:]):
        if np.linalg.norm(a.point_at(1.0) - b.point_at(0.0)) > 1e-9:
            raise ValueError("consecutive pieces do not share endpoints")
    return Curve("piecewise", pieces=pieces, closed=closed)
