"""The quaternionic Segal-Bargmann transform and its inverse.

Forward:  B(psi)(q) = int_R A(q; x) psi(x) dx with

    A(q; x) = (nu/pi)^(3/4) exp(-nu/2 (q^2 + x^2) + nu sqrt(2) q x).

For real ``x`` the exponent lies in the slice of ``q``, so every kernel value
is a slice-complex number and multiplies ``psi`` from the left.

In coordinates, B sends the orthonormal ``psi_n`` to ``e_n / ||e_n||``; the
coefficient maps :func:`bargmann_coeff` / :func:`inverse_coeff` are exact and
the quadrature maps check them independently.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import MismatchedWeight, ParameterError, QuadratureUnderResolved
from .fock import FockElement, kernel_degree, monomial_norms
from .hermite import HermiteExpansion, psi_table
from .quadrature import QuadratureRule, SliceQuadrature
from .quaternion import Quaternion, as_unit, complex_to_slice, qabs, qmul, slice_coords
from .series import PowerSeries

CHUNK = 2048


def _check_nu(nu: float) -> None:
    if not nu > 0:
        raise ParameterError(f"nu must be positive, got {nu}")


def _exponent(z, x, nu: float, with_x2: bool = True):
    """``-nu/2 (z^2 + x^2) + nu sqrt(2) z x`` for complex ``z`` (rows) and real ``x`` (columns)."""
    z = np.asarray(z, dtype=complex)
    x = np.asarray(x, dtype=float)
    if z.ndim:
        z = z[..., None]
    e = -0.5 * nu * z * z + nu * math.sqrt(2.0) * z * x
    if with_x2:
        e = e - 0.5 * nu * x * x
    return e


def kernel_A(q, x, nu: float):
    """``A(q; x)``; a :class:`Quaternion` for scalar ``x``, else shape ``x.shape + (4,)``."""
    _check_nu(nu)
    c, unit = slice_coords(Quaternion(*q))
    val = (nu / math.pi) ** 0.75 * np.exp(_exponent(c, x, nu))
    out = complex_to_slice(val, unit)
    return Quaternion.from_array(out) if np.ndim(x) == 0 else out


def generating_partial_sum(q, x: float, nu: float, N: int) -> Quaternion:
    """``sum_{n <= N} psi_n(x) e_n(q) / ||e_n||``."""
    _check_nu(nu)
    c = psi_table(N, x, nu) / monomial_norms(N, nu)
    coeffs = np.zeros((N + 1, 4))
    coeffs[:, 0] = c
    return PowerSeries(coeffs)(q)


def bargmann_coeff(psi: HermiteExpansion) -> FockElement:
    """Fock coefficients ``a_n = c_n / ||e_n||`` of ``B(psi)``."""
    a = psi.coeffs / monomial_norms(psi.degree, psi.nu)[:, None]
    return FockElement(PowerSeries(a), psi.nu)


def inverse_coeff(f: FockElement) -> HermiteExpansion:
    """Normalized Hermite coefficients ``c_n = a_n ||e_n||`` of ``B^{-1}(f)``."""
    return HermiteExpansion(f.nu, f.normalized_coeffs())


def required_nodes(degree: int, q_max: float, nu: float) -> int:
    """Gauss-Hermite nodes needed for ``psi`` of the given degree against ``A(q; .)``, ``|q| <= q_max``.

    The folded integrand is ``exp(-t^2) exp(c t) p(t)`` with ``|c| = sqrt(2 nu) |q|``;
    the Taylor tail of ``exp(c t)`` weighted by the Gaussian is Poisson-like in
    ``m/2`` with mean ``c^2 / 4 = nu |q|^2 / 2``.
    """
    m = degree + 2 * kernel_degree(0.5 * nu * q_max * q_max)
    return (m + 2) // 2


def _as_points(q) -> tuple[np.ndarray, bool]:
    if isinstance(q, Quaternion):
        return np.asarray(q, dtype=float)[None, :], True
    a = np.asarray(q, dtype=float)
    if a.shape == (4,):
        return a[None, :], True
    return a.reshape(-1, 4), False


def _decompose(points: np.ndarray):
    v = np.linalg.norm(points[:, 1:], axis=1)
    z = points[:, 0] + 1j * v
    ax = np.zeros_like(points)
    nz = v > 0
    ax[nz, 1:] = points[nz, 1:] / v[nz, None]
    return z, ax


def bargmann_quadrature(psi, q, nu: float, rule: QuadratureRule, check: bool = True):
    """``int A(q; x) psi(x) dx`` by Gauss-Hermite quadrature.

    ``psi`` is a :class:`HermiteExpansion` or any callable returning
    quaternion values. ``q`` is a quaternion or an array of shape ``(..., 4)``.
    ``check=False`` skips the resolution guard; callers that damp far points
    (as the inverse slice integral does) may accept the cruder values there.
    """
    _check_nu(nu)
    points, scalar = _as_points(q)
    q_max = float(np.max(qabs(points))) if points.size else 0.0
    deg = psi.degree if isinstance(psi, HermiteExpansion) else 0
    need = required_nodes(deg, q_max, nu)
    if check and rule.n_nodes < need:
        raise QuadratureUnderResolved(
            f"B at |q| = {q_max:.3g}, degree {deg}: need {need} nodes, rule has {rule.n_nodes}")
    if isinstance(psi, HermiteExpansion) and psi.nu != nu:
        raise MismatchedWeight(f"expansion has nu = {psi.nu}, transform uses {nu}")
    x = rule.nodes
    folded = isinstance(psi, HermiteExpansion) and rule.rate == nu
    if folded:
        vals = psi.poly_part(x)
        w = rule.gauss_weights
    else:
        vals = np.asarray(psi(x), dtype=float)
        w = rule.weights
    pref = (nu / math.pi) ** 0.75
    z, ax = _decompose(points)
    out = np.empty_like(points)
    for s in range(0, len(z), CHUNK):
        Kc = pref * np.exp(_exponent(z[s:s + CHUNK], x, nu, with_x2=not folded)) * w
        re = Kc.real @ vals
        im = Kc.imag @ vals
        out[s:s + CHUNK] = re + qmul(ax[s:s + CHUNK], im)
    if scalar:
        return Quaternion.from_array(out[0])
    return out.reshape(np.shape(q))


def bargmann_norm_quadrature(psi, nu: float, I, rule: QuadratureRule,
                             slice_rule: SliceQuadrature) -> float:
    """``||B psi||`` with both integrals done by quadrature: Gauss-Hermite for
    ``B psi`` at the slice nodes, then the polar slice rule for the norm."""
    if slice_rule.nu != nu:
        raise MismatchedWeight(f"slice rule built for nu = {slice_rule.nu}")
    pts = complex_to_slice(slice_rule.points, as_unit(I))
    vals = bargmann_quadrature(psi, pts, nu, rule)
    return math.sqrt(float(slice_rule.integrate(np.einsum("pc,pc->p", vals, vals))))


def kernel_norm_quadrature(q, nu: float, rule: QuadratureRule) -> float:
    """``||A_q||`` in L^2(R) by Gauss-Hermite quadrature of ``|A(q; x)|^2``."""
    _check_nu(nu)
    if rule.rate != nu:
        raise MismatchedWeight(f"rule rate {rule.rate} != nu {nu}")
    c, _ = slice_coords(Quaternion(*q))
    x = rule.nodes
    # |A|^2 exp(nu x^2) = (nu/pi)^(3/2) exp(2 Re(exponent without x^2))
    e = _exponent(c, x, nu, with_x2=False)
    val = (nu / math.pi) ** 1.5 * np.exp(2.0 * e.real)
    return math.sqrt(float(rule.integrate_folded(val)))


def inverse_quadrature(f, x, I, nu: float, rule: SliceQuadrature):
    """``(nu/pi)^(3/4) int_{C_I} exp(-nu/2 (conj(q)^2 + x^2) + nu sqrt(2) conj(q) x) f(q) exp(-nu|q|^2) dx dy``.

    ``f`` is a :class:`FockElement` or a callable on quaternion arrays of
    shape ``(P, 4)``. Returns a quaternion for scalar ``x``, else ``x.shape + (4,)``.
    """
    _check_nu(nu)
    if rule.nu != nu:
        raise MismatchedWeight(f"slice rule built for nu = {rule.nu}, transform uses {nu}")
    I = as_unit(I)
    if isinstance(f, FockElement):
        if f.nu != nu:
            raise MismatchedWeight(f"element has nu = {f.nu}, transform uses {nu}")
        rule.check(f.effective_degree(), "inverse integrand", trig_degree=f.degree)
        F = f.series._from_powers(rule.powers(f.degree), I)
    else:
        F = np.asarray(f(complex_to_slice(rule.points, I)), dtype=float)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    IF = qmul(np.asarray(I.axis, dtype=float), F)
    pref = (nu / math.pi) ** 0.75
    zbar = np.conj(rule.points)
    out = np.zeros(xs.shape + (4,))
    w = rule.weights
    for s in range(0, len(zbar), CHUNK):
        k = pref * np.exp(_exponent(zbar[s:s + CHUNK], xs, nu)) * w[s:s + CHUNK, None]
        out += k.real.T @ F[s:s + CHUNK] + k.imag.T @ IF[s:s + CHUNK]
    if np.ndim(x) == 0:
        return Quaternion.from_array(out[0])
    return out.reshape(np.shape(x) + (4,))
