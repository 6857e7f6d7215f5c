"""Arithmetic in the complex quaternion algebra H(C).

The canonical internal representation is the idempotent basis {e1, e2, e3, e4}
with the sparse multiplication table

    e1*e1 = e1   e1*e3 = e3   e2*e2 = e2   e2*e4 = e4
    e3*e2 = e3   e3*e4 = e1   e4*e1 = e4   e4*e3 = e2

and every other basis product equal to zero.  The unit is e1 + e2.  The
classical {1, I, J, K} basis (I^2 = J^2 = K^2 = -1, IJ = -JI = K, JK = -KJ = I,
KI = -IK = J) is exposed as a view via :func:`to_ijk` / :func:`from_ijk` using
the idempotent decomposition

    e1 = (1 + iI)/2,  e2 = (1 - iI)/2,  e3 = (J + iK)/2,  e4 = (-J + iK)/2.

All values are immutable; every operation is a pure function of its inputs.
"""

from __future__ import annotations

import numbers

import numpy as np

__all__ = [
    "Quaternion",
    "E1",
    "E2",
    "E3",
    "E4",
    "one",
    "zero",
    "mul_many",
    "norm_many",
    "ijk_mul",
    "to_ijk",
    "from_ijk",
]


class Quaternion:
    """An element of H(C) stored as four complex e-basis coefficients."""

    __slots__ = ("_c",)

    def __init__(self, c1=0.0, c2=0.0, c3=0.0, c4=0.0):
        c = np.array([c1, c2, c3, c4], dtype=np.complex128)
        c.setflags(write=False)
        self._c = c

    @classmethod
    def from_array(cls, arr) -> "Quaternion":
        a = np.asarray(arr, dtype=np.complex128)
        if a.shape != (4,):
            raise ValueError(f"expected 4 coefficients, got shape {a.shape}")
        return cls(a[0], a[1], a[2], a[3])

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only (4,) complex array of e-basis coefficients."""
        return self._c

    @property
    def c1(self) -> complex:
        return complex(self._c[0])

    @property
    def c2(self) -> complex:
        return complex(self._c[1])

    @property
    def c3(self) -> complex:
        return complex(self._c[2])

    @property
    def c4(self) -> complex:
        return complex(self._c[3])

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion.from_array(self._c + other._c)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion.from_array(self._c - other._c)

    def __neg__(self):
        return Quaternion.from_array(-self._c)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion.from_array(_mul4(self._c, other._c))
        if isinstance(other, numbers.Number):
            return Quaternion.from_array(self._c * other)
        return NotImplemented

    def __rmul__(self, other):
        # complex scalars commute with everything in H(C)
        if isinstance(other, numbers.Number):
            return Quaternion.from_array(self._c * other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return bool(np.all(self._c == other._c))

    def __hash__(self):
        return hash(tuple(self._c.tolist()))

    def norm_e(self) -> float:
        """Euclidean norm over the eight real e-basis components."""
        return float(np.sqrt(np.sum(np.abs(self._c) ** 2)))

    def isclose(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return (self - other).norm_e() <= tol

    def reals(self) -> tuple[float, ...]:
        """The eight real numbers (Re c1, Im c1, ..., Re c4, Im c4)."""
        out = []
        for w in self._c:
            out.extend((float(w.real), float(w.imag)))
        return tuple(out)

    def __repr__(self):
        return "Quaternion({!r}, {!r}, {!r}, {!r})".format(*(complex(w) for w in self._c))


def _mul4(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    # bilinear extension of the 16-entry structure table
    return np.array(
        [
            p[0] * q[0] + p[2] * q[3],
            p[1] * q[1] + p[3] * q[2],
            p[0] * q[2] + p[2] * q[1],
            p[3] * q[0] + p[1] * q[3],
        ],
        dtype=np.complex128,
    )


def mul_many(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Row-wise quaternion product of two (..., 4) complex coefficient arrays."""
    p = np.asarray(p, dtype=np.complex128)
    q = np.asarray(q, dtype=np.complex128)
    out = np.empty(np.broadcast_shapes(p.shape, q.shape), dtype=np.complex128)
    out[..., 0] = p[..., 0] * q[..., 0] + p[..., 2] * q[..., 3]
    out[..., 1] = p[..., 1] * q[..., 1] + p[..., 3] * q[..., 2]
    out[..., 2] = p[..., 0] * q[..., 2] + p[..., 2] * q[..., 1]
    out[..., 3] = p[..., 3] * q[..., 0] + p[..., 1] * q[..., 3]
    return out


def norm_many(c: np.ndarray) -> np.ndarray:
    """Euclidean norms of rows of a (..., 4) complex coefficient array."""
    c = np.asarray(c, dtype=np.complex128)
    return np.sqrt(np.sum(np.abs(c) ** 2, axis=-1))


E1 = Quaternion(1.0)
E2 = Quaternion(0.0, 1.0)
E3 = Quaternion(0.0, 0.0, 1.0)
E4 = Quaternion(0.0, 0.0, 0.0, 1.0)

_ONE = Quaternion(1.0, 1.0)
_ZERO = Quaternion()


def one() -> Quaternion:
    """The two-sided unit e1 + e2."""
    return _ONE


def zero() -> Quaternion:
    return _ZERO


# --- {1, I, J, K} view ------------------------------------------------------

# columns: e-basis coefficients of 1, I, J, K
_IJK_TO_E = np.array(
    [
        [1.0, -1.0j, 0.0, 0.0],
        [1.0, 1.0j, 0.0, 0.0],
        [0.0, 0.0, 1.0, -1.0j],
        [0.0, 0.0, -1.0, -1.0j],
    ],
    dtype=np.complex128,
)
# rows: {1,I,J,K} coefficients of e1..e4
_E_TO_IJK = np.linalg.inv(_IJK_TO_E)


def to_ijk(q: Quaternion) -> np.ndarray:
    """Coefficients of q over {1, I, J, K} as a (4,) complex array."""
    return _E_TO_IJK @ q.coeffs


def from_ijk(w) -> Quaternion:
    """Quaternion from (w0, w1, w2, w3) coefficients over {1, I, J, K}."""
    w = np.asarray(w, dtype=np.complex128)
    if w.shape != (4,):
        raise ValueError(f"expected 4 coefficients, got shape {w.shape}")
    return Quaternion.from_array(_IJK_TO_E @ w)


def ijk_mul(u, v) -> np.ndarray:
    """Product of {1,I,J,K}-coefficient vectors under the I, J, K rules."""
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    return np.array(
        [
            u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3],
            u[0] * v[1] + u[1] * v[0] + u[2] * v[3] - u[3] * v[2],
            u[0] * v[2] - u[1] * v[3] + u[2] * v[0] + u[3] * v[1],
            u[0] * v[3] + u[1] * v[2] - u[2] * v[1] + u[3] * v[0],
        ],
        dtype=np.complex128,
    )
