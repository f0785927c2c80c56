"""Weighted Hermite functions and quaternion-valued expansions on the real line.

The weighted Hermite functions are

    h_n(x) = (-1)^n exp(nu x^2 / 2) d^n/dx^n exp(-nu x^2)
           = nu^(n/2) exp(-nu x^2 / 2) H_n(sqrt(nu) x)

with ``H_n`` the physicists' Hermite polynomials, and
``||h_n||^2 = 2^n nu^n n! sqrt(pi / nu)``. Expansions are stored against the
normalized functions ``psi_n = h_n / ||h_n||``, whose recurrence stays in
range for n up to about 10^3.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (MismatchedWeight, ParameterError, QuadratureUnderResolved,
                     TruncationWarning)
from .quadrature import QuadratureRule
from .quaternion import ONE, Quaternion, qabs, qconj, qexp, qmul


def _check_nu(nu: float) -> None:
    if not nu > 0:
        raise ParameterError(f"nu must be positive, got {nu}")


def hermite_h(n: int, x, nu: float):
    """``h_n(x)`` by the recurrence ``h_{k+1} = 2 nu x h_k - 2 nu k h_{k-1}``."""
    _check_nu(nu)
    x = np.asarray(x, dtype=float)
    g = np.exp(-0.5 * nu * x * x)
    prev, cur = np.zeros_like(x), g
    for k in range(n):
        prev, cur = cur, 2.0 * nu * x * cur - 2.0 * nu * k * prev
    return cur if cur.ndim else float(cur)


def hermite_norm_sq(n: int, nu: float) -> float:
    _check_nu(nu)
    return math.exp(n * math.log(2.0 * nu) + math.lgamma(n + 1) + 0.5 * math.log(math.pi / nu))


def psi_table(N: int, x, nu: float, gaussian: bool = True) -> np.ndarray:
    """``psi_0 .. psi_N`` at ``x``; shape ``(N + 1,) + x.shape``.

    With ``gaussian=False`` the common factor ``exp(-nu x^2 / 2)`` is left
    out, which turns the rows into polynomials for Gauss-Hermite folding.
    """
    _check_nu(nu)
    x = np.asarray(x, dtype=float)
    out = np.empty((N + 1,) + x.shape)
    p0 = (nu / math.pi) ** 0.25
    out[0] = p0 * np.exp(-0.5 * nu * x * x) if gaussian else p0
    if N >= 1:
        out[1] = math.sqrt(2.0 * nu) * x * out[0]
    for n in range(1, N):
        out[n + 1] = x * math.sqrt(2.0 * nu / (n + 1)) * out[n] - math.sqrt(n / (n + 1)) * out[n - 1]
    return out


def psi_n(n: int, x, nu: float):
    v = psi_table(n, x, nu)[n]
    return v if np.ndim(v) else float(v)


@dataclass(frozen=True, eq=False)
class HermiteExpansion:
    """``psi(x) = sum_n psi_n(x) c_n`` with quaternion coefficients ``c_n``.

    ``coeffs`` has shape ``(N + 1, 4)``.
    """

    nu: float
    coeffs: np.ndarray

    def __post_init__(self):
        _check_nu(self.nu)
        c = np.array(self.coeffs, dtype=float).reshape(-1, 4)
        if c.shape[0] == 0:
            c = np.zeros((1, 4))
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def basis(cls, n: int, nu: float, coeff: Quaternion = ONE) -> "HermiteExpansion":
        """``psi_n * coeff``."""
        c = np.zeros((n + 1, 4))
        c[n] = coeff
        return cls(nu, c)

    @classmethod
    def hermite(cls, n: int, nu: float, coeff: Quaternion = ONE) -> "HermiteExpansion":
        """The unnormalized ``h_n * coeff``."""
        c = np.zeros((n + 1, 4))
        c[n] = math.sqrt(hermite_norm_sq(n, nu)) * np.asarray(coeff, dtype=float)
        return cls(nu, c)

    @classmethod
    def random(cls, rng: np.random.Generator, degree: int, nu: float,
               normalize: bool = True) -> "HermiteExpansion":
        c = rng.standard_normal((degree + 1, 4))
        if normalize:
            c /= np.linalg.norm(c)
        return cls(nu, c)

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def __call__(self, x) -> np.ndarray:
        """Values at real ``x``; shape ``x.shape + (4,)``."""
        return np.tensordot(psi_table(self.degree, x, self.nu), self.coeffs, axes=(0, 0))

    def poly_part(self, x) -> np.ndarray:
        """``psi(x) exp(nu x^2 / 2)``, the polynomial factor."""
        return np.tensordot(psi_table(self.degree, x, self.nu, gaussian=False),
                            self.coeffs, axes=(0, 0))

    def right_mul(self, q: Quaternion) -> "HermiteExpansion":
        return HermiteExpansion(self.nu, qmul(self.coeffs, np.asarray(q, dtype=float)))

    def left_mul(self, q: Quaternion) -> "HermiteExpansion":
        return HermiteExpansion(self.nu, qmul(np.asarray(q, dtype=float), self.coeffs))

    def __add__(self, other: "HermiteExpansion") -> "HermiteExpansion":
        if not isinstance(other, HermiteExpansion):
            return NotImplemented
        if other.nu != self.nu:
            raise MismatchedWeight(f"nu {self.nu} != {other.nu}")
        n = max(self.degree, other.degree) + 1
        c = np.zeros((n, 4))
        c[: self.degree + 1] += self.coeffs
        c[: other.degree + 1] += other.coeffs
        return HermiteExpansion(self.nu, c)


@dataclass(frozen=True)
class SampledFunction:
    """A quaternion-valued function of a real variable.

    ``evaluator`` maps a float array of shape ``S`` to an array of shape
    ``S + (4,)``; ``support_hint`` is the half-width of the effective support.
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    support_hint: float = 10.0

    def __call__(self, x) -> np.ndarray:
        return np.asarray(self.evaluator(np.asarray(x, dtype=float)), dtype=float)


def l2_inner(phi: HermiteExpansion, psi: HermiteExpansion) -> Quaternion:
    """``<phi, psi> = int conj(psi) phi dx = sum_n conj(b_n) a_n``."""
    if phi.nu != psi.nu:
        raise MismatchedWeight(f"nu {phi.nu} != {psi.nu}")
    m = min(phi.degree, psi.degree) + 1
    s = qmul(qconj(psi.coeffs[:m]), phi.coeffs[:m]).sum(axis=0)
    return Quaternion.from_array(s)


def l2_inner_quadrature(phi, psi, rule: QuadratureRule) -> Quaternion:
    """``int conj(psi) phi dx`` by quadrature on callables."""
    x = rule.nodes
    return Quaternion.from_array(rule.integrate(qmul(qconj(psi(x)), phi(x))))


def l2_norm_quadrature(psi, rule: QuadratureRule) -> float:
    v = psi(rule.nodes)
    return math.sqrt(float(rule.integrate(qabs(v) ** 2)))


def project(f, nu: float, N: int, rule: QuadratureRule,
            tail_tol: float = 1e-8) -> HermiteExpansion:
    """Coefficients ``c_n = int psi_n f dx`` for ``n <= N`` by quadrature.

    Warns with :class:`TruncationWarning` when ``f`` has more than
    ``tail_tol`` (relative) of its energy outside the first ``N + 1`` modes.
    """
    _check_nu(nu)
    if rule.n_nodes < 2 * N:
        raise QuadratureUnderResolved(
            f"projection to degree {N} needs >= {2 * N} nodes, rule has {rule.n_nodes}")
    x = rule.nodes
    fx = np.asarray(f(x), dtype=float)
    P = psi_table(N, x, nu)
    c = np.einsum("k,nk,kc->nc", rule.weights, P, fx)
    energy = float(rule.integrate(qabs(fx) ** 2))
    captured = float(np.sum(c * c))
    if energy > 0 and (energy - captured) / energy > tail_tol:
        warnings.warn(
            f"projection to degree {N} misses {(energy - captured) / energy:.3g} "
            "of the energy", TruncationWarning, stacklevel=2)
    return HermiteExpansion(nu, c)


def gaussian_integral(a: float, b: Quaternion) -> Quaternion:
    """``int_R exp(-a x^2 + b x) dx = sqrt(pi / a) exp(b^2 / (4a))``.

    ``b`` is any quaternion; it always lies in one slice, where the identity
    is the complex one.
    """
    if not a > 0:
        raise ParameterError(f"a must be positive, got {a}")
    b = Quaternion(*b)
    return math.sqrt(math.pi / a) * qexp((b * b) / (4.0 * a))
