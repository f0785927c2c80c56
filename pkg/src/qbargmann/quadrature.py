"""Quadrature rules for the real line and for a slice ``C_I``.

Real line: Gauss-Hermite after the substitution ``t = sqrt(rate) x``. A rule
exposes both the folded weights (for integrands written as
``exp(-rate x^2) p(x)`` with ``p`` supplied) and the unfolded ones (for a
plain integrand ``g(x)``).

Slice: polar coordinates, Gauss-Legendre in the radius on ``[0, R]`` with the
Gaussian ``exp(-nu r^2)`` and the Jacobian ``r`` folded into the radial
weights, and ``M`` equispaced angles (the trapezoid rule, exact for
trigonometric polynomials of degree below ``M``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.special import gammainccinv

from .errors import ParameterError, QuadratureUnderResolved

TAIL = 1e-18


@lru_cache(maxsize=32)
def _hermgauss(n: int):
    t, w = np.polynomial.hermite.hermgauss(n)
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w


@lru_cache(maxsize=32)
def _leggauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Gauss-Hermite rule for ``int_R g(x) dx`` scaled to the Gaussian ``exp(-rate x^2)``."""

    n_nodes: int
    rate: float
    nodes: np.ndarray = field(repr=False)
    gauss_weights: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @classmethod
    def gauss_hermite(cls, n_nodes: int = 128, rate: float = 1.0) -> "QuadratureRule":
        if n_nodes < 1:
            raise ParameterError("need at least one node")
        if rate <= 0:
            raise ParameterError(f"rate must be positive, got {rate}")
        t, w = _hermgauss(int(n_nodes))
        s = math.sqrt(rate)
        nodes = t / s
        gw = w / s
        # unfolded: w e^{t^2}, computed in the log domain
        uw = np.exp(np.log(w) + t * t) / s
        return cls(int(n_nodes), float(rate), nodes, gw, uw)

    @property
    def poly_exactness(self) -> int:
        """Highest polynomial degree ``p`` integrated exactly against the Gaussian."""
        return 2 * self.n_nodes - 1

    def integrate(self, values: np.ndarray) -> np.ndarray:
        """``int g dx`` from samples ``g(nodes)``; node axis first."""
        return np.tensordot(self.weights, values, axes=(0, 0))

    def integrate_folded(self, values: np.ndarray) -> np.ndarray:
        """``int exp(-rate x^2) p(x) dx`` from samples ``p(nodes)``; node axis first."""
        return np.tensordot(self.gauss_weights, values, axes=(0, 0))


def slice_radius(nu: float, degree: int, decay: float = 0.5) -> float:
    """Radius beyond which ``r^(2 degree) exp(-decay nu r^2)`` carries a relative mass below 1e-18."""
    t = gammainccinv(degree + 1.0, TAIL)
    return math.sqrt(t / (decay * nu))


@dataclass(frozen=True, eq=False)
class SliceQuadrature:
    """Polar rule on a slice for ``int_{C_I} g(q) exp(-nu |q|^2) dx dy``.

    ``degree`` is the largest power degree the radius was sized for; the
    default ``decay = 0.5`` leaves room for the inverse-transform kernel,
    whose integrand only decays like ``exp(-nu y^2 / 2)``.
    """

    nu: float
    radius: float
    degree: int
    radial_nodes: np.ndarray = field(repr=False)
    radial_weights: np.ndarray = field(repr=False)
    angular_count: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def build(cls, nu: float, radial_nodes: int = 96, angular_count: int = 256,
              degree: int = 64, decay: float = 0.5,
              radius: float | None = None) -> "SliceQuadrature":
        if nu <= 0:
            raise ParameterError(f"nu must be positive, got {nu}")
        if radial_nodes < 1 or angular_count < 1:
            raise ParameterError("node counts must be positive")
        R = slice_radius(nu, degree, decay) if radius is None else float(radius)
        x, w = _leggauss(int(radial_nodes))
        r = 0.5 * R * (x + 1.0)
        wr = 0.5 * R * w * r * np.exp(-nu * r * r)
        return cls(float(nu), R, int(degree), r, wr, int(angular_count))

    @property
    def n_radial(self) -> int:
        return len(self.radial_nodes)

    @property
    def radial_capacity(self) -> int:
        return 2 * self.n_radial - 1

    def check(self, degree: int, what: str = "integrand",
              trig_degree: int | None = None) -> None:
        """Raise unless the rule resolves a power series of the given degree.

        ``trig_degree`` (default ``degree``) sets the node-count requirement
        separately from the radius requirement.
        """
        td = degree if trig_degree is None else trig_degree
        problems = []
        if self.radial_capacity < 2 * td:
            problems.append(f"radial capacity {self.radial_capacity} < {2 * td}")
        if self.angular_count <= 2 * td:
            problems.append(f"angular count {self.angular_count} <= {2 * td}")
        if degree > self.degree:
            problems.append(f"radius sized for degree {self.degree} < {degree}")
        if problems:
            raise QuadratureUnderResolved(f"{what} of degree {degree}: " + "; ".join(problems))

    @property
    def points(self) -> np.ndarray:
        """Complex nodes ``r e^{i theta}``, flattened radius-major."""
        if "z" not in self._cache:
            theta = 2.0 * np.pi * np.arange(self.angular_count) / self.angular_count
            z = np.multiply.outer(self.radial_nodes, np.exp(1j * theta)).ravel()
            self._cache["z"] = z
        return self._cache["z"]

    @property
    def weights(self) -> np.ndarray:
        """Weights matching :attr:`points`; the Gaussian is already included."""
        if "w" not in self._cache:
            dth = 2.0 * np.pi / self.angular_count
            self._cache["w"] = np.repeat(self.radial_weights * dth, self.angular_count)
        return self._cache["w"]

    def powers(self, degree: int) -> np.ndarray:
        """Vandermonde matrix ``z^n`` at the nodes, shape ``(P, degree + 1)``."""
        V = self._cache.get("V")
        if V is None or V.shape[1] <= degree:
            z = self.points
            V = np.empty((z.size, degree + 1), dtype=complex)
            V[:, 0] = 1.0
            for n in range(1, degree + 1):
                V[:, n] = V[:, n - 1] * z
            self._cache["V"] = V
        return V[:, : degree + 1]

    def integrate(self, values: np.ndarray) -> np.ndarray:
        """Weighted sum over the node axis (first)."""
        return np.tensordot(self.weights, values, axes=(0, 0))
