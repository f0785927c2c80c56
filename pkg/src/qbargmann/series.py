"""Slice regular functions as power series with right quaternion coefficients.

``f(q) = sum_n q^n a_n``. Restricted to a slice ``C_I`` every ``q^n`` is a
slice-complex number, so evaluation on a whole batch of slice points reduces
to complex Vandermonde products; see :meth:`PowerSeries.eval_slice`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPerpendicular
from .quaternion import ImaginaryUnit, Quaternion, as_unit, mul, qmul, slice_coords

DEFAULT_DEGREE = 64
PERP_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Truncated series ``sum_{n <= N} q^n a_n``; ``coeffs`` has shape ``(N + 1, 4)``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float).reshape(-1, 4)
        if c.shape[0] == 0:
            c = np.zeros((1, 4))
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def monomial(cls, n: int, coeff=(1.0, 0.0, 0.0, 0.0)) -> "PowerSeries":
        c = np.zeros((n + 1, 4))
        c[n] = coeff
        return cls(c)

    @classmethod
    def random(cls, rng: np.random.Generator, degree: int, scale=1.0) -> "PowerSeries":
        """Gaussian coefficients; ``scale`` may be a per-degree array."""
        c = rng.standard_normal((degree + 1, 4)) * np.reshape(scale, (-1, 1))
        return cls(c)

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def __call__(self, q) -> Quaternion:
        return evaluate(self, q)

    def eval_slice(self, z, unit) -> np.ndarray:
        """Values at ``Re z + Im z * unit`` for complex ``z``; shape ``z.shape + (4,)``."""
        z = np.asarray(z, dtype=complex)
        V = np.power.outer(z.ravel(), np.arange(self.degree + 1))
        return self._from_powers(V, unit).reshape(z.shape + (4,))

    def _from_powers(self, V: np.ndarray, unit) -> np.ndarray:
        # sum_n (Re z^n + Im z^n I) a_n
        u = np.asarray(as_unit(unit).axis, dtype=float)
        A = self.coeffs
        return V.real @ A + V.imag @ qmul(u, A)

    def eval_many(self, q) -> np.ndarray:
        """Values at a stack of quaternions ``q`` of shape ``(..., 4)``."""
        q = np.asarray(q, dtype=float)
        flat = q.reshape(-1, 4)
        v = np.linalg.norm(flat[:, 1:], axis=1)
        z = flat[:, 0] + 1j * v
        ax = np.zeros_like(flat)
        nz = v > 0
        ax[nz, 1:] = flat[nz, 1:] / v[nz, None]
        V = np.power.outer(z, np.arange(self.degree + 1))
        out = V.real @ self.coeffs + qmul(ax, V.imag @ self.coeffs)
        return out.reshape(q.shape)

    def truncate(self, degree: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[: max(degree, 0) + 1])

    def tail_bound(self, q, degree: int) -> float:
        """``sum_{n > degree} |q|^n |a_n|``, bounding ``|f(q) - truncate(degree)(q)|``."""
        tail = self.coeffs[degree + 1:]
        if tail.shape[0] == 0:
            return 0.0
        r = abs(Quaternion(*q))
        n = np.arange(degree + 1, self.degree + 1)
        return float(np.sum(r ** n * np.linalg.norm(tail, axis=1)))

    def right_mul(self, q) -> "PowerSeries":
        return PowerSeries(qmul(self.coeffs, np.asarray(q, dtype=float)))

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = max(self.degree, other.degree) + 1
        c = np.zeros((n, 4))
        c[: self.degree + 1] += self.coeffs
        c[: other.degree + 1] += other.coeffs
        return PowerSeries(c)


def evaluate(f: PowerSeries, q) -> Quaternion:
    """Left-nested Horner: ``a_0 + q (a_1 + q (a_2 + ...))``."""
    q = Quaternion(*q)
    acc = Quaternion(*f.coeffs[-1])
    for a in f.coeffs[-2::-1]:
        acc = mul(q, acc) + Quaternion(*a)
    return acc


def _frame(I: ImaginaryUnit, J: ImaginaryUnit) -> np.ndarray:
    """Orthonormal rows ``1, I, J, IJ``."""
    u = np.asarray(I.axis, dtype=float)
    v = np.asarray(J.axis, dtype=float)
    return np.stack([np.array([1.0, 0.0, 0.0, 0.0]), u, v, qmul(u, v)])


@dataclass(frozen=True, eq=False)
class SplitPair:
    """``f_I(z) = F(z) + G(z) J`` with ``F``, ``G`` holomorphic on ``C_I``.

    ``F_coeffs`` and ``G_coeffs`` are complex arrays in the identification
    ``a + bI <-> a + ib``.
    """

    F_coeffs: np.ndarray
    G_coeffs: np.ndarray
    I: ImaginaryUnit
    J: ImaginaryUnit

    def frame(self) -> np.ndarray:
        return _frame(self.I, self.J)

    def eval(self, z) -> tuple[np.ndarray, np.ndarray]:
        z = np.asarray(z, dtype=complex)
        # np.polyval wants highest degree first
        return np.polyval(self.F_coeffs[::-1], z), np.polyval(self.G_coeffs[::-1], z)

    def combine(self, F, G) -> np.ndarray:
        """Quaternion values ``F + G J`` from slice-complex values."""
        E = self.frame()
        F = np.asarray(F)
        G = np.asarray(G)
        return (np.multiply.outer(F.real, E[0]) + np.multiply.outer(F.imag, E[1])
                + np.multiply.outer(G.real, E[2]) + np.multiply.outer(G.imag, E[3]))

    def reassemble(self) -> PowerSeries:
        return PowerSeries(self.combine(self.F_coeffs, self.G_coeffs))


def split(f: PowerSeries, I, J) -> SplitPair:
    """Splitting of ``f`` on ``C_I`` along a unit ``J`` orthogonal to ``I``."""
    I, J = as_unit(I), as_unit(J)
    dot = float(np.dot(I.axis, J.axis))
    if abs(dot) > PERP_TOL:
        raise NotPerpendicular(f"<I, J> = {dot:.3g}")
    comps = f.coeffs @ _frame(I, J).T  # coordinates in the frame 1, I, J, IJ
    F = comps[:, 0] + 1j * comps[:, 1]
    G = comps[:, 2] + 1j * comps[:, 3]
    return SplitPair(F, G, I, J)


def representation(fI_plus, fI_minus, I, J) -> Quaternion:
    """Value ``f(x + yJ)`` from ``f(x + yI)`` and ``f(x - yI)``.

    ``(1 - JI)/2 * f(x + yI) + (1 + JI)/2 * f(x - yI)``.
    """
    JI = mul(as_unit(J).axis, as_unit(I).axis)
    a = 0.5 * (1.0 - JI)
    b = 0.5 * (1.0 + JI)
    return mul(a, Quaternion(*fI_plus)) + mul(b, Quaternion(*fI_minus))


def extend(h, I, target) -> Quaternion:
    """Slice regular extension of ``h`` (holomorphic on ``C_I``) evaluated at ``target``.

    ``h`` takes a quaternion in ``C_I`` and returns a quaternion.
    """
    I = as_unit(I)
    c, J = slice_coords(Quaternion(*target), unit=I)
    x, y = c.real, c.imag
    hp = Quaternion(*h(x + y * I.axis))
    hm = Quaternion(*h(x - y * I.axis))
    JI = mul(J.axis, I.axis)
    return 0.5 * (hp + hm) + mul(0.5 * JI, hm - hp)
