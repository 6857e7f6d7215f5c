"""Noncommutative curvilinear integrals over rectifiable curves.

Two placements exist because H(C) is noncommutative: the increment-left form
(paired with right-monogenic mappings) sums  dzeta_j * Psi(zeta_j*),  the
increment-right form (paired with left-monogenic mappings) sums
Psi(zeta_j*) * dzeta_j.  ``integrate_componentwise_oracle`` evaluates the same
integral through its expansion into twenty-four real line integrals of the
component functions U_k, V_k against dx, dy, dz, recombined with the basis
products e_k, i2 e_k, i3 e_k (or their mirror order); at identical
discretization the two routes agree to float precision by bilinearity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import Quaternion, mul_many
from .maps import EvaluationError, PoleProximityError
from .space import Curve, GeneratorTriple

__all__ = [
    "QuadratureSpec",
    "IntegralResult",
    "RefinementResult",
    "IntegrationEvaluationError",
    "DEFAULT_SCHEDULE",
    "integrate_right",
    "integrate_left",
    "integrate_componentwise_oracle",
    "refine_until",
]

DEFAULT_SCHEDULE: tuple[int, ...] = tuple(2**k for k in range(5, 21))


class IntegrationEvaluationError(EvaluationError):
    """Map evaluation failed at a quadrature node; carries the curve parameter."""

    def __init__(self, message: str, t: float):
        self.t = t
        super().__init__(f"{message} (curve parameter t ~ {t:.6g})")


@dataclass(frozen=True)
class QuadratureSpec:
    rule: str = "trapezoid"
    n: int = 1024
    schedule: tuple[int, ...] = field(default=DEFAULT_SCHEDULE)

    def __post_init__(self):
        if self.rule not in ("trapezoid", "left"):
            raise ValueError(f"rule must be 'trapezoid' or 'left', got {self.rule!r}")
        if self.n < 2:
            raise ValueError("segment count must be >= 2")
        if any(b <= a for a, b in zip(self.schedule, self.schedule[1:])):
            raise ValueError("refinement schedule must be strictly increasing")


@dataclass(frozen=True)
class IntegralResult:
    value: Quaternion
    n: int
    est_error: float


@dataclass(frozen=True)
class RefinementResult:
    value: Quaternion
    n: int
    est_error: float
    converged: bool
    rows: tuple[tuple[int, float, float], ...]  # (n, norm of value, diff to previous)

    def as_integral_result(self) -> IntegralResult:
        return IntegralResult(self.value, self.n, self.est_error)


def _node_values(curve: Curve, g, n: int):
    v = curve.polyline(n)
    try:
        vals = g.values(v[:, 0], v[:, 1], v[:, 2])
    except PoleProximityError as exc:
        t = exc.index / max(len(v) - 1, 1) if exc.index is not None else float("nan")
        raise IntegrationEvaluationError(str(exc), t) from exc
    return v, vals


def _increments(gen: GeneratorTriple, v: np.ndarray) -> np.ndarray:
    d = np.diff(v, axis=0)
    out = np.zeros((len(d), 4), dtype=np.complex128)
    out[:, 0] = d[:, 0] + gen.a1 * d[:, 1] + gen.b1 * d[:, 2]
    out[:, 1] = d[:, 0] + gen.a2 * d[:, 1] + gen.b2 * d[:, 2]
    return out


def _sample(vals: np.ndarray, rule: str) -> np.ndarray:
    if rule == "left":
        return vals[:-1]
    return 0.5 * (vals[:-1] + vals[1:])


def _integrate_product(curve: Curve, g, gen: GeneratorTriple, n: int, rule: str, side: str) -> Quaternion:
    v, vals = _node_values(curve, g, n)
    dz = _increments(gen, v)
    psi = _sample(vals, rule)
    if side == "right":
        terms = mul_many(dz, psi)  # increment on the left: dzeta * Psi
    elif side == "left":
        terms = mul_many(psi, dz)  # increment on the right: Psi * dzeta
    else:
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    # column-wise 1-D sums keep numpy's pairwise accumulation (axis-0 reduction
    # of a 2-D array is sequential and loses ~n*eps accuracy at large n)
    return Quaternion.from_array(np.array([terms[:, k].sum() for k in range(4)]))


def _with_error(curve: Curve, g, gen: GeneratorTriple, q: QuadratureSpec, side: str) -> IntegralResult:
    gen.require_valid()
    value = _integrate_product(curve, g, gen, q.n, q.rule, side)
    coarse = _integrate_product(curve, g, gen, max(q.n // 2, 2), q.rule, side)
    return IntegralResult(value, q.n, (value - coarse).norm_e())


def integrate_right(curve: Curve, g, gen: GeneratorTriple, q: QuadratureSpec) -> IntegralResult:
    """The integral with increments multiplying from the left: sum dzeta_j Psi_j*."""
    return _with_error(curve, g, gen, q, "right")


def integrate_left(curve: Curve, g, gen: GeneratorTriple, q: QuadratureSpec) -> IntegralResult:
    """The integral with increments multiplying from the right: sum Psi_j* dzeta_j."""
    return _with_error(curve, g, gen, q, "left")


def integrate_componentwise_oracle(
    curve: Curve, g, gen: GeneratorTriple, q: QuadratureSpec, side: str
) -> IntegralResult:
    """Same integral via real line integrals of U_k, V_k against dx, dy, dz."""
    gen.require_valid()
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    i2 = Quaternion(gen.a1, gen.a2)
    i3 = Quaternion(gen.b1, gen.b2)

    def assemble(n: int) -> Quaternion:
        v, vals = _node_values(curve, g, n)
        d = np.diff(v, axis=0)  # columns: dx, dy, dz
        samples = _sample(vals, q.rule)
        u = np.real(samples)
        w = np.imag(samples)
        total = Quaternion()
        for k, e_k in enumerate((Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1))):
            if side == "right":
                qx, qy, qz = e_k, i2 * e_k, i3 * e_k
            else:
                qx, qy, qz = e_k, e_k * i2, e_k * i3
            for axis, basis in ((0, qx), (1, qy), (2, qz)):
                iu = float(np.sum(u[:, k] * d[:, axis]))
                iv = float(np.sum(w[:, k] * d[:, axis]))
                total = total + (iu + 1j * iv) * basis
        return total

    value = assemble(q.n)
    coarse = assemble(max(q.n // 2, 2))
    return IntegralResult(value, q.n, (value - coarse).norm_e())


def refine_until(
    curve: Curve,
    g,
    gen: GeneratorTriple,
    side: str,
    tol: float,
    schedule=DEFAULT_SCHEDULE,
    rule: str = "trapezoid",
) -> RefinementResult:
    """Refine until successive integrals differ by less than tol in norm.

    Non-convergence is reported through the ``converged`` flag, not raised.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    gen.require_valid()
    rows: list[tuple[int, float, float]] = []
    prev: Quaternion | None = None
    value = Quaternion()
    n_used = 0
    diff = float("inf")
    converged = False
    for n in schedule:
        value = _integrate_product(curve, g, gen, int(n), rule, side)
        diff = (value - prev).norm_e() if prev is not None else float("nan")
        rows.append((int(n), value.norm_e(), diff))
        n_used = int(n)
        if prev is not None and diff < tol:
            converged = True
            break
        prev = value
    est = diff if rows and not np.isnan(rows[-1][2]) else float("inf")
    return RefinementResult(value, n_used, est, converged, tuple(rows))
