"""Monogenic mappings built from quadruples of holomorphic component functions.

A right-sided map evaluates as F1(xi1) e1 + F2(xi2) e2 + F3(xi1) e3 + F4(xi2) e4,
a left-sided map swaps the arguments of the e3/e4 components.  With this
arrangement the one-sided Gateaux difference quotient converges to h * Phi'
(right) or Phi' * h (left); the residual of either limit is computable
numerically via :func:`gateaux_residual`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .algebra import Quaternion, mul_many, norm_many
from .space import GeneratorTriple, embed_xi

__all__ = [
    "EvaluationError",
    "PoleProximityError",
    "Polynomial",
    "Exponential",
    "Rational",
    "HolomorphicFn",
    "ZERO_FN",
    "IDENTITY_FN",
    "MonogenicMap",
    "GenericMap",
    "gateaux_residual",
    "conj_xi1_control",
]

POLE_MARGIN = 1e-9


class EvaluationError(ValueError):
    """A component function could not be evaluated."""


class PoleProximityError(EvaluationError):
    """Evaluation requested within the safety margin of a declared pole."""

    def __init__(self, pole: complex, where: complex, index: int | None = None):
        self.pole = pole
        self.where = where
        self.index = index
        super().__init__(
            f"evaluation at {where} is within {POLE_MARGIN} of declared pole {pole}"
        )


@dataclass(frozen=True)
class Polynomial:
    """c0 + c1 w + ... + cd w^d with complex coefficients."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    def __call__(self, w):
        c = self.coeffs if self.coeffs else (0.0,)
        return np.polyval(np.array(c[::-1], dtype=np.complex128), np.asarray(w, dtype=np.complex128))

    def derivative(self) -> "Polynomial":
        d = tuple(k * c for k, c in enumerate(self.coeffs) if k > 0)
        return Polynomial(d if d else (0.0,))

    @property
    def poles(self) -> tuple[complex, ...]:
        return ()

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


@dataclass(frozen=True)
class Exponential:
    """scale * exp(rate * w)."""

    scale: complex
    rate: complex

    def __call__(self, w):
        return self.scale * np.exp(self.rate * np.asarray(w, dtype=np.complex128))

    def derivative(self) -> "Exponential":
        return Exponential(self.scale * self.rate, self.rate)

    @property
    def poles(self) -> tuple[complex, ...]:
        return ()

    @property
    def is_zero(self) -> bool:
        return self.scale == 0


@dataclass(frozen=True)
class Rational:
    """num(w)/den(w) with an explicit list of declared poles."""

    num: Polynomial
    den: Polynomial
    poles: tuple[complex, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "poles", tuple(complex(p) for p in self.poles))

    def __call__(self, w):
        w = np.asarray(w, dtype=np.complex128)
        self._check_poles(w)
        return self.num(w) / self.den(w)

    def _check_poles(self, w: np.ndarray) -> None:
        flat = np.atleast_1d(w).ravel()
        for p in self.poles:
            d = np.abs(flat - p)
            j = int(np.argmin(d))
            if d[j] < POLE_MARGIN:
                raise PoleProximityError(p, complex(flat[j]), index=j)

    def derivative(self) -> "Rational":
        n, d = self.num, self.den
        num = _poly_sub(_poly_mul(n.derivative(), d), _poly_mul(n, d.derivative()))
        return Rational(num, _poly_mul(d, d), self.poles)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero


HolomorphicFn = Union[Polynomial, Exponential, Rational]

ZERO_FN = Polynomial((0.0,))
IDENTITY_FN = Polynomial((0.0, 1.0))


def _poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    out = [0.0j] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return Polynomial(tuple(out))


def _poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    m = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0.0,) * (m - len(a.coeffs))
    cb = b.coeffs + (0.0,) * (m - len(b.coeffs))
    return Polynomial(tuple(x - y for x, y in zip(ca, cb)))


@dataclass(frozen=True)
class MonogenicMap:
    """A right- or left-G-monogenic mapping on E3."""

    side: str
    f1: HolomorphicFn
    f2: HolomorphicFn
    f3: HolomorphicFn
    f4: HolomorphicFn
    gen: GeneratorTriple

    def __post_init__(self):
        if self.side not in ("right", "left"):
            raise ValueError(f"side must be 'right' or 'left', got {self.side!r}")
        self.gen.require_valid()

    def _args(self, xi1, xi2):
        if self.side == "right":
            return xi1, xi2, xi1, xi2
        return xi1, xi2, xi2, xi1

    def values(self, x, y, z) -> np.ndarray:
        """e-basis coefficients at points (x, y, z); shape (m, 4) complex."""
        xi1, xi2 = embed_xi(self.gen, x, y, z)
        w1, w2, w3, w4 = self._args(xi1, xi2)
        return np.stack(
            [
                np.broadcast_to(self.f1(w1), np.shape(xi1)),
                np.broadcast_to(self.f2(w2), np.shape(xi2)),
                np.broadcast_to(self.f3(w3), np.shape(xi1)),
                np.broadcast_to(self.f4(w4), np.shape(xi1)),
            ],
            axis=-1,
        ).astype(np.complex128)

    def eval(self, p) -> Quaternion:
        x, y, z = (float(v) for v in p)
        return Quaternion.from_array(self.values(np.array([x]), np.array([y]), np.array([z]))[0])

    def derivative_map(self) -> "MonogenicMap":
        """The map whose values are the Gateaux derivative at each point."""
        return MonogenicMap(
            self.side,
            self.f1.derivative(),
            self.f2.derivative(),
            self.f3.derivative(),
            self.f4.derivative(),
            self.gen,
        )

    def derivative(self, p) -> Quaternion:
        return self.derivative_map().eval(p)

    def to_generic(self) -> "GenericMap":
        return GenericMap(self.values)


class GenericMap:
    """An arbitrary continuous mapping R^3 -> H(C).

    Wraps a vectorized function fn(x, y, z) -> (m, 4) complex e-coefficients.
    """

    def __init__(self, fn: Callable, name: str = ""):
        self._fn = fn
        self.name = name

    def values(self, x, y, z) -> np.ndarray:
        out = np.asarray(self._fn(np.asarray(x, float), np.asarray(y, float), np.asarray(z, float)))
        return out.astype(np.complex128)

    def eval(self, p) -> Quaternion:
        x, y, z = (float(v) for v in p)
        return Quaternion.from_array(self.values(np.array([x]), np.array([y]), np.array([z]))[0])

    def component_functions(self):
        """Samplers for the real parts U_k and imaginary parts V_k, k = 1..4."""

        def u_k(k):
            return lambda x, y, z: np.real(self.values(x, y, z)[..., k])

        def v_k(k):
            return lambda x, y, z: np.imag(self.values(x, y, z)[..., k])

        return [u_k(k) for k in range(4)], [v_k(k) for k in range(4)]


def conj_xi1_control(gen: GeneratorTriple) -> GenericMap:
    """Non-monogenic control map: complex conjugate of xi1 in the e1 slot."""

    def fn(x, y, z):
        xi1, _ = embed_xi(gen, x, y, z)
        out = np.zeros(np.shape(xi1) + (4,), dtype=np.complex128)
        out[..., 0] = np.conj(xi1)
        return out

    return GenericMap(fn, name="conj_xi1_e1")


def gateaux_residual(m: MonogenicMap, p, h, eps: float, form: str | None = None) -> float:
    """Norm of the one-sided difference-quotient residual at p in direction h.

    ``form`` selects where the increment multiplies the derivative ("right"
    places h on the left of Phi', "left" on the right); defaults to the map's
    own side.
    """
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    form = form or m.side
    if form not in ("right", "left"):
        raise ValueError(f"form must be 'right' or 'left', got {form!r}")
    p = np.asarray(p, dtype=float)
    h = np.asarray(h, dtype=float)
    x = np.array([p[0], p[0] + eps * h[0]])
    y = np.array([p[1], p[1] + eps * h[1]])
    z = np.array([p[2], p[2] + eps * h[2]])
    vals = m.values(x, y, z)
    quotient = (vals[1] - vals[0]) / eps
    deriv = m.derivative_map().values(x[:1], y[:1], z[:1])[0]
    eta1, eta2 = embed_xi(m.gen, h[0], h[1], h[2])
    h_q = np.array([eta1, eta2, 0.0, 0.0], dtype=np.complex128)
    if form == "right":
        expected = mul_many(h_q, deriv)
    else:
        expected = mul_many(deriv, h_q)
    return float(norm_many(quotient - expected))
