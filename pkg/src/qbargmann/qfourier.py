"""Left one-dimensional quaternionic Fourier transform and its link to B.

``F_I(psi)(x) = int_R exp(I x y) psi(y) dy``, the exponential multiplying
from the left. Two identities tie it to the Segal-Bargmann transform::

    B(psi)(I x / (sqrt(2) nu)) = (nu/pi)^(3/4) exp(x^2 / (4 nu)) F_I(exp(-nu y^2/2) psi)(x)
    B F_I B^{-1}(f)(x) = sqrt(2 pi) f(I x)        (nu = 1, real x)

The ``check_*`` functions evaluate both sides along independent paths and
return them unreduced.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ParameterError, QuadratureUnderResolved
from .fock import FockElement, kernel_degree
from .hermite import HermiteExpansion, SampledFunction
from .quadrature import QuadratureRule
from .quaternion import Quaternion, as_unit, qmul
from .transform import bargmann_coeff, bargmann_quadrature, inverse_coeff


def _need_nodes(degree: int, x_max: float, rate: float) -> int:
    # exp(i x y) with y = t / sqrt(rate): frequency c = x / sqrt(rate), tail mean c^2 / 4
    c = x_max / math.sqrt(rate)
    return (degree + 2 * kernel_degree(0.25 * c * c) + 2) // 2


def qft(psi, I, x, rule: QuadratureRule, check: bool = True):
    """``int exp(I x y) psi(y) dy`` by Gauss-Hermite quadrature.

    A :class:`HermiteExpansion` is folded exactly when ``rule.rate`` equals
    ``psi.nu / 2``; any other input is sampled at the nodes. Returns a
    quaternion for scalar ``x``, else ``x.shape + (4,)``. ``check=False``
    skips the resolution guard, for callers that discard the far nodes anyway.
    """
    I = as_unit(I)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    x_max = float(np.max(np.abs(xs))) if xs.size else 0.0
    is_exp = isinstance(psi, HermiteExpansion)
    need = _need_nodes(psi.degree if is_exp else 0, x_max, rule.rate)
    if check and rule.n_nodes < need:
        raise QuadratureUnderResolved(
            f"F_I at |x| = {x_max:.3g}: need {need} nodes, rule has {rule.n_nodes}")
    y = rule.nodes
    if is_exp and rule.rate == 0.5 * psi.nu:
        vals, w = psi.poly_part(y), rule.gauss_weights
    else:
        vals, w = np.asarray(psi(y), dtype=float), rule.weights
    Ivals = qmul(np.asarray(I.axis, dtype=float), vals)
    phase = np.multiply.outer(xs, y)
    out = (np.cos(phase) * w) @ vals + (np.sin(phase) * w) @ Ivals
    if np.ndim(x) == 0:
        return Quaternion.from_array(out[0])
    return out.reshape(np.shape(x) + (4,))


def _damped(psi, nu: float) -> SampledFunction:
    def g(y):
        y = np.asarray(y, dtype=float)
        return np.exp(-0.5 * nu * y * y)[..., None] * np.asarray(psi(y), dtype=float)
    return SampledFunction(g)


def check_intertwine(psi, I, x: float, nu: float,
                     rule: QuadratureRule) -> tuple[Quaternion, Quaternion]:
    """Both sides of ``B(psi)(Ix/(sqrt(2) nu)) = (nu/pi)^(3/4) e^{x^2/(4nu)} F_I(e^{-nu y^2/2} psi)(x)``.

    The left side uses the coefficient map for expansions (Gauss-Hermite for
    other callables); the right side is always a direct Fourier quadrature.
    """
    I = as_unit(I)
    q = (x / (math.sqrt(2.0) * nu)) * I.axis
    if isinstance(psi, HermiteExpansion):
        lhs = bargmann_coeff(psi)(q)
    else:
        lhs = bargmann_quadrature(psi, q, nu, rule)
    rhs = (nu / math.pi) ** 0.75 * math.exp(x * x / (4.0 * nu)) * qft(_damped(psi, nu), I, x, rule)
    return lhs, rhs


def check_diag(f: FockElement, I, x: float,
               rule: QuadratureRule) -> tuple[Quaternion, Quaternion]:
    """Both sides of ``B F_I B^{-1}(f)(x) = sqrt(2 pi) f(Ix)`` at real ``x`` (nu = 1).

    The left side composes the coefficient inverse, a Fourier quadrature at
    rate 1/2 for each outer node, and a Gauss-Hermite forward transform with
    ``rule`` (rate 1).
    """
    if f.nu != 1.0:
        raise ParameterError(f"the diagonalization identity holds for nu = 1, got {f.nu}")
    I = as_unit(I)
    psi = inverse_coeff(f)
    inner = QuadratureRule.gauss_hermite(rule.n_nodes, 0.5)
    # outer nodes beyond |y| ~ 8 carry weight below e^-60, so the inner guard
    # (sized for the largest node) is waived there
    transformed = SampledFunction(lambda y: qft(psi, I, y, inner, check=False))
    lhs = bargmann_quadrature(transformed, Quaternion.real(x), 1.0, rule)
    rhs = math.sqrt(2.0 * math.pi) * f(x * I.axis)
    return lhs, rhs
