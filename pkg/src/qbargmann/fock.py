"""The slice hyperholomorphic Bargmann-Fock space.

Elements are entire slice regular functions ``f(q) = sum q^n a_n`` with
finite norm

    ||f||^2 = int_{C_I} |f_I(q)|^2 exp(-nu |q|^2) dx dy
            = (pi / nu) sum_n n! / nu^n |a_n|^2 .

The coefficient formula is the canonical path here; the slice integrals are
computed by :class:`~qbargmann.quadrature.SliceQuadrature` and serve as the
independent check, on any slice ``I``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import MismatchedWeight, ParameterError
from .quadrature import SliceQuadrature
from .quaternion import ONE, Quaternion, as_unit, qconj, qmul
from .series import PowerSeries, evaluate

KERNEL_CAP = 512
TERM_RTOL = 1e-16


def _check_nu(nu: float) -> None:
    if not nu > 0:
        raise ParameterError(f"nu must be positive, got {nu}")


def monomial_norms(N: int, nu: float) -> np.ndarray:
    """``||e_n|| = sqrt(pi n! / nu^(n+1))`` for ``n = 0..N``, via log-gamma."""
    _check_nu(nu)
    n = np.arange(N + 1)
    return np.exp(0.5 * (math.log(math.pi) + gammaln(n + 1) - (n + 1) * math.log(nu)))


def monomial_inner(m: int, n: int, nu: float) -> float:
    """``<e_m, e_n> = pi m! / nu^(m+1)`` when ``m == n``, else 0."""
    _check_nu(nu)
    if m != n:
        return 0.0
    return math.exp(math.log(math.pi) + math.lgamma(m + 1) - (m + 1) * math.log(nu))


@dataclass(frozen=True, eq=False)
class FockElement:
    series: PowerSeries
    nu: float

    def __post_init__(self):
        _check_nu(self.nu)
        if not isinstance(self.series, PowerSeries):
            object.__setattr__(self, "series", PowerSeries(self.series))

    @classmethod
    def from_coeffs(cls, coeffs, nu: float) -> "FockElement":
        return cls(PowerSeries(coeffs), nu)

    @classmethod
    def monomial(cls, n: int, nu: float, coeff: Quaternion = ONE) -> "FockElement":
        return cls(PowerSeries.monomial(n, coeff), nu)

    @classmethod
    def random(cls, rng: np.random.Generator, degree: int, nu: float,
               normalize: bool = True) -> "FockElement":
        """Random element whose orthonormal-basis coordinates are Gaussian."""
        c = rng.standard_normal((degree + 1, 4))
        if normalize:
            c /= np.linalg.norm(c)
        return cls(PowerSeries(c / monomial_norms(degree, nu)[:, None]), nu)

    @property
    def coeffs(self) -> np.ndarray:
        return self.series.coeffs

    @property
    def degree(self) -> int:
        return self.series.degree

    def normalized_coeffs(self) -> np.ndarray:
        """Coordinates against the orthonormal basis ``e_n / ||e_n||``."""
        return self.coeffs * monomial_norms(self.degree, self.nu)[:, None]

    def effective_degree(self, rtol: float = 1e-17) -> int:
        """Largest ``n`` whose basis coordinate exceeds ``rtol`` times the norm."""
        mags = np.linalg.norm(self.normalized_coeffs(), axis=1)
        big = np.nonzero(mags > rtol * max(float(np.linalg.norm(mags)), 1e-300))[0]
        return int(big[-1]) if big.size else 0

    def norm(self) -> float:
        return float(np.linalg.norm(self.normalized_coeffs()))

    def __call__(self, q) -> Quaternion:
        return evaluate(self.series, q)

    def right_mul(self, q) -> "FockElement":
        return FockElement(self.series.right_mul(q), self.nu)

    def __add__(self, other: "FockElement") -> "FockElement":
        if not isinstance(other, FockElement):
            return NotImplemented
        if other.nu != self.nu:
            raise MismatchedWeight(f"nu {self.nu} != {other.nu}")
        return FockElement(self.series + other.series, self.nu)


def fock_inner(f: FockElement, g: FockElement) -> Quaternion:
    """``<f, g> = (pi/nu) sum n!/nu^n conj(b_n) a_n``; right-linear in ``f``."""
    if f.nu != g.nu:
        raise MismatchedWeight(f"nu {f.nu} != {g.nu}")
    m = min(f.degree, g.degree) + 1
    a = f.normalized_coeffs()[:m]
    b = g.normalized_coeffs()[:m]
    return Quaternion.from_array(qmul(qconj(b), a).sum(axis=0))


def fock_norm(f: FockElement) -> float:
    return f.norm()


def _slice_values(f: FockElement, unit, rule: SliceQuadrature) -> np.ndarray:
    return f.series._from_powers(rule.powers(f.degree), unit)


def _check_rule(rule: SliceQuadrature, nu: float, *elements: FockElement) -> None:
    if rule.nu != nu:
        raise MismatchedWeight(f"rule built for nu = {rule.nu}, element has nu = {nu}")
    # radius sized by the coefficients that matter, node counts by the full degree
    rule.check(max(e.effective_degree() for e in elements), "slice integrand",
               trig_degree=max(e.degree for e in elements))


def fock_inner_quadrature(f: FockElement, g: FockElement, I,
                          rule: SliceQuadrature) -> Quaternion:
    """``int_{C_I} conj(g_I) f_I exp(-nu|q|^2) dx dy`` by slice quadrature."""
    if f.nu != g.nu:
        raise MismatchedWeight(f"nu {f.nu} != {g.nu}")
    _check_rule(rule, f.nu, f, g)
    I = as_unit(I)
    F = _slice_values(f, I, rule)
    G = _slice_values(g, I, rule)
    return Quaternion.from_array(rule.integrate(qmul(qconj(G), F)))


def fock_norm_quadrature(f: FockElement, I, rule: SliceQuadrature) -> float:
    """Squared norm ``int_{C_I} |f_I|^2 exp(-nu|q|^2) dx dy`` by slice quadrature."""
    _check_rule(rule, f.nu, f)
    F = _slice_values(f, as_unit(I), rule)
    return float(rule.integrate(np.einsum("pc,pc->p", F, F)))


def kernel_degree(t: float) -> int:
    """Truncation index for ``sum t^n / n!``: first ``n > t`` whose term drops
    below ``TERM_RTOL`` times the partial sum; capped at ``KERNEL_CAP``."""
    if t <= 0:
        return 0
    log_t = math.log(t)
    log_acc = 0.0  # log of the running sum, starts at term 0 = 1
    for n in range(1, KERNEL_CAP + 1):
        log_term = n * log_t - math.lgamma(n + 1)
        log_acc = np.logaddexp(log_acc, log_term)
        if n > t and log_term < math.log(TERM_RTOL) + log_acc:
            return n
    return KERNEL_CAP


def _scaled_powers(q: Quaternion, nu: float, N: int) -> np.ndarray:
    """Rows ``(sqrt(nu) q)^n / sqrt(n!)`` for ``n = 0..N``."""
    s = math.sqrt(nu) * np.asarray(q, dtype=float)
    out = np.empty((N + 1, 4))
    out[0] = (1.0, 0.0, 0.0, 0.0)
    for n in range(1, N + 1):
        out[n] = qmul(out[n - 1], s) / math.sqrt(n)
    return out


def reproducing_kernel(p, q, nu: float) -> Quaternion:
    """``K(p, q) = (nu/pi) sum nu^n p^n conj(q)^n / n!``, products kept in that order."""
    _check_nu(nu)
    p, q = Quaternion(*p), Quaternion(*q)
    N = kernel_degree(nu * abs(p) * abs(q))
    P = _scaled_powers(p, nu, N)
    Q = _scaled_powers(q.conj(), nu, N)
    return Quaternion.from_array((nu / math.pi) * qmul(P, Q).sum(axis=0))


def kernel_section(q, nu: float, degree: int | None = None,
                   reach: float | None = None) -> FockElement:
    """``K_q = K(., q)`` as a truncated element with coefficients
    ``(nu/pi) nu^n conj(q)^n / n!``.

    Without ``degree``, the truncation is chosen so the series is accurate
    for ``|p| <= reach`` (default ``|q|``).
    """
    _check_nu(nu)
    q = Quaternion(*q)
    if degree is None:
        r = abs(q) if reach is None else reach
        degree = kernel_degree(nu * r * abs(q))
    Q = _scaled_powers(q.conj(), nu, degree)
    n = np.arange(degree + 1)
    scale = (nu / math.pi) * np.exp(0.5 * (n * math.log(nu) - gammaln(n + 1)))
    return FockElement(PowerSeries(Q * scale[:, None]), nu)


def reproduce(f: FockElement, q, I, rule: SliceQuadrature) -> Quaternion:
    """``int_{C_I} conj(K(p, q)) f_I(p) exp(-nu|p|^2) dx dy`` by slice quadrature.

    Kernel terms past ``deg f`` are orthogonal to ``f``, so the section is cut
    there (or earlier, where it is negligible over the whole rule).
    """
    q = Quaternion(*q)
    degree = min(f.degree, kernel_degree(f.nu * rule.radius * abs(q)))
    K = kernel_section(q, f.nu, degree=degree)
    return fock_inner_quadrature(f, K, I, rule)


def point_eval_bound(q, nu: float, norm_f: float) -> float:
    """``sqrt(nu/pi) exp(nu |q|^2 / 2) ||f||``."""
    _check_nu(nu)
    if norm_f < 0:
        raise ParameterError("norm must be nonnegative")
    return math.sqrt(nu / math.pi) * math.exp(0.5 * nu * Quaternion(*q).norm_sq()) * norm_f
