"""Quaternion algebra.

Two layers live here. :class:`Quaternion` is an immutable value type used at
API boundaries; the ``q*`` array helpers (:func:`qmul`, :func:`qconj`, ...)
operate on float arrays whose last axis has length 4 and carry the
vectorized work done by the quadrature code.

Component order is always ``(w, x, y, z)`` for ``w + x i + y j + z k``.

>>> mul(QI, QJ)
Quaternion(w=0.0, x=0.0, y=0.0, z=1.0)
>>> str(qpow(Quaternion(1, 1, 0, 0), 2))
'0 + 2i + 0j + 0k'
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NearRealAxis, ParameterError

AXIS_EPS = 1e-12
UNIT_TOL = 1e-12


class Quaternion(NamedTuple):
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    # keep numpy scalars from broadcasting over the tuple fields
    __array_ufunc__ = None

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        a = np.asarray(a, dtype=float)
        if a.shape != (4,):
            raise ValueError(f"expected shape (4,), got {a.shape}")
        return cls(*(float(v) for v in a))

    @classmethod
    def real(cls, r: float) -> "Quaternion":
        return cls(float(r), 0.0, 0.0, 0.0)

    @property
    def scalar(self) -> float:
        return self.w

    @property
    def vector(self) -> "Quaternion":
        return Quaternion(0.0, self.x, self.y, self.z)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> "Quaternion":
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.conj() / n2

    def is_real(self, eps: float = 0.0) -> bool:
        return math.hypot(self.x, self.y, self.z) <= eps

    def __abs__(self) -> float:
        return math.hypot(self.w, self.x, self.y, self.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __pos__(self) -> "Quaternion":
        return self

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, numbers.Real):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (Quaternion, numbers.Real)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Real):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, numbers.Real):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # reals commute with everything
        if isinstance(other, numbers.Real):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def __str__(self) -> str:
        return f"{self.w:g} + {self.x:g}i + {self.y:g}j + {self.z:g}k"


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
ZERO = Quaternion()
QI = Quaternion(0.0, 1.0, 0.0, 0.0)
QJ = Quaternion(0.0, 0.0, 1.0, 0.0)
QK = Quaternion(0.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class ImaginaryUnit:
    """A unit pure quaternion; it squares to -1 and spans the slice ``R + R*axis``."""

    axis: Quaternion

    def __post_init__(self):
        a = Quaternion(*self.axis)
        object.__setattr__(self, "axis", a)
        if abs(a.w) > UNIT_TOL or abs(abs(a) - 1.0) > UNIT_TOL:
            raise ParameterError(f"not a unit pure quaternion: {a}")

    @classmethod
    def from_vector(cls, x: float, y: float, z: float) -> "ImaginaryUnit":
        n = math.hypot(x, y, z)
        if n == 0.0:
            raise ParameterError("zero vector has no direction")
        return cls(Quaternion(0.0, x / n, y / n, z / n))

    @classmethod
    def random(cls, rng: np.random.Generator) -> "ImaginaryUnit":
        v = rng.standard_normal(3)
        return cls.from_vector(*v)

    def perpendicular(self, rng: np.random.Generator | None = None) -> "ImaginaryUnit":
        """A unit orthogonal to this one; random when ``rng`` is given."""
        u = np.array(self.axis[1:])
        if rng is None:
            seed = np.eye(3)[int(np.argmin(np.abs(u)))]
        else:
            seed = rng.standard_normal(3)
        v = seed - np.dot(seed, u) * u
        return ImaginaryUnit.from_vector(*v)

    def __neg__(self) -> "ImaginaryUnit":
        return ImaginaryUnit(-self.axis)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.axis, dtype=dtype)


UNIT_I = ImaginaryUnit(QI)
UNIT_J = ImaginaryUnit(QJ)
UNIT_K = ImaginaryUnit(QK)


class SlicePoint(NamedTuple):
    """``x + y*unit`` with ``y >= 0``."""

    x: float
    y: float
    unit: ImaginaryUnit


def as_unit(u) -> ImaginaryUnit:
    if isinstance(u, ImaginaryUnit):
        return u
    return ImaginaryUnit(Quaternion(*u))


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product ``p q``."""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def conj(q: Quaternion) -> Quaternion:
    return Quaternion(*q).conj()


def modulus(q: Quaternion) -> float:
    return abs(Quaternion(*q))


def axis(q: Quaternion, eps: float = AXIS_EPS) -> ImaginaryUnit:
    """Normalized imaginary part of ``q``.

    Raises :class:`NearRealAxis` when ``|Im q| <= eps``; a real quaternion
    belongs to every slice, so the caller must pick one explicitly.
    """
    _, x, y, z = q
    n = math.hypot(x, y, z)
    if n <= eps:
        raise NearRealAxis(f"|Im q| = {n:.3g} <= {eps:g}; supply a slice explicitly")
    return ImaginaryUnit(Quaternion(0.0, x / n, y / n, z / n))


def to_slice(q: Quaternion, eps: float = AXIS_EPS) -> SlicePoint:
    w, x, y, z = q
    n = math.hypot(x, y, z)
    return SlicePoint(float(w), n, axis(q, eps))


def from_slice(s: SlicePoint) -> Quaternion:
    return s.x + s.y * s.unit.axis


def slice_coords(q: Quaternion, unit=None) -> tuple[complex, ImaginaryUnit]:
    """Return ``(u + iv, I)`` with ``q = u + vI``.

    For real ``q`` the unit defaults to ``unit`` (or ``i``); otherwise the
    canonical axis of ``q`` is used and ``v >= 0``.
    """
    w, x, y, z = q
    n = math.hypot(x, y, z)
    if n == 0.0:
        return complex(w, 0.0), as_unit(unit) if unit is not None else UNIT_I
    return complex(w, n), ImaginaryUnit(Quaternion(0.0, x / n, y / n, z / n))


def in_slice(c: complex, unit) -> Quaternion:
    """Map ``c = a + ib`` to ``a + b*unit``."""
    u = as_unit(unit).axis
    return c.real + c.imag * u


def qexp(q: Quaternion) -> Quaternion:
    """Quaternion exponential ``e^w (cos|v| + v/|v| sin|v|)``."""
    w, x, y, z = q
    n = math.hypot(x, y, z)
    ew = math.exp(w)
    if n == 0.0:
        return Quaternion(ew, 0.0, 0.0, 0.0)
    s = ew * math.sin(n) / n
    return Quaternion(ew * math.cos(n), s * x, s * y, s * z)


def qpow(q: Quaternion, n: int) -> Quaternion:
    """``q**n`` for integer ``n >= 0``; binary exponentiation above n = 4."""
    if n < 0:
        raise ParameterError("qpow needs n >= 0")
    q = Quaternion(*q)
    if n <= 4:
        out = ONE
        for _ in range(n):
            out = mul(out, q)
        return out
    out, base = ONE, q
    while n:
        if n & 1:
            out = mul(out, base)
        base = mul(base, base)
        n >>= 1
    return out


def random_quaternion(rng: np.random.Generator, scale: float = 1.0) -> Quaternion:
    return Quaternion(*(scale * rng.standard_normal(4)))


# --- array layer -----------------------------------------------------------

def qarray(q) -> np.ndarray:
    """Float array view of a quaternion or stack of quaternions (last axis 4)."""
    return np.asarray(q, dtype=float)


def qmul(a, b) -> np.ndarray:
    """Broadcast Hamilton product of ``(..., 4)`` arrays."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a1, b1, c1, d1 = np.moveaxis(a, -1, 0)
    a2, b2, c2, d2 = np.moveaxis(b, -1, 0)
    return np.stack([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ], axis=-1)


def qconj(a) -> np.ndarray:
    out = np.array(a, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out


def qabs(a) -> np.ndarray:
    return np.linalg.norm(np.asarray(a, dtype=float), axis=-1)


def qexp_array(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    n = np.linalg.norm(a[..., 1:], axis=-1)
    ew = np.exp(a[..., 0])
    with np.errstate(invalid="ignore", divide="ignore"):
        s = np.where(n > 0, np.sin(n) / np.where(n > 0, n, 1.0), 0.0)
    out = np.empty_like(a)
    out[..., 0] = ew * np.cos(n)
    out[..., 1:] = (ew * s)[..., None] * a[..., 1:]
    return out


def complex_to_slice(c, unit) -> np.ndarray:
    """Embed complex values ``a + ib`` as quaternions ``a + b*unit`` (shape ``c.shape + (4,)``)."""
    c = np.asarray(c)
    u = np.asarray(as_unit(unit).axis, dtype=float)
    out = np.multiply.outer(c.imag, u)
    out[..., 0] += c.real
    return out


def slice_left_mul(c, unit, a) -> np.ndarray:
    """Left product ``(Re c + Im c * unit) a`` for complex ``c`` and quaternion array ``a``."""
    c = np.asarray(c)
    a = np.asarray(a, dtype=float)
    ua = qmul(np.asarray(as_unit(unit).axis, dtype=float), a)
    return c.real[..., None] * a + c.imag[..., None] * ua
