"""Identity and property suites behind ``qbargmann verify``.

Every check reduces to one nonnegative residual compared against a
tolerance. Suites draw randomness from ``default_rng([seed, crc32(name)])``,
so a report depends only on the configuration, never on suite order or the
clock (``runtime_ms`` is recorded only when timing is requested).
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import time
import zlib
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .errors import ConfigError, QBargmannError
from .fock import (FockElement, fock_inner, fock_inner_quadrature, fock_norm_quadrature,
                   kernel_degree, kernel_section, monomial_inner, point_eval_bound, reproduce,
                   reproducing_kernel)
from .hermite import (HermiteExpansion, SampledFunction, hermite_h, hermite_norm_sq,
                      l2_inner_quadrature, l2_norm_quadrature, project)
from .qfourier import check_diag, check_intertwine, qft
from .quadrature import QuadratureRule, SliceQuadrature
from .quaternion import (ImaginaryUnit, Quaternion, as_unit, complex_to_slice, mul,
                         qabs, qconj, qexp, qmul, qpow)
from .series import PowerSeries, extend, representation, split
from .transform import (bargmann_coeff, bargmann_norm_quadrature, bargmann_quadrature,
                        generating_partial_sum, inverse_coeff, inverse_quadrature,
                        kernel_A, kernel_norm_quadrature)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    nu: float = 1.0
    trunc: int = 32
    gh_nodes: int = 128
    radial_nodes: int = 96
    angular_count: int = 256
    seed: int = 0
    tolerances: dict = field(default_factory=dict)

    def validate(self) -> "RunConfig":
        for name in ("nu", "trunc", "gh_nodes", "radial_nodes", "angular_count"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ConfigError(f"{name} must be positive, got {v!r}")
        if self.seed < 0:
            raise ConfigError(f"seed must be nonnegative, got {self.seed}")
        known = {c.name for s in SUITES for c in s.checks}
        for k, v in self.tolerances.items():
            if k not in known:
                raise ConfigError(f"unknown suite {k!r} in tolerance overrides")
            if not (math.isfinite(v) and v >= 0):
                raise ConfigError(f"tolerance for {k} must be >= 0, got {v}")
        return self

    def to_dict(self) -> dict:
        d = asdict(self)
        d["tolerances"] = dict(sorted(self.tolerances.items()))
        return d


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    tolerance: float


@dataclass(frozen=True)
class Suite:
    fn: Callable[["Context"], dict]
    checks: tuple[Check, ...]


@dataclass
class Entry:
    name: str
    anchor: str
    residual: float | None
    tolerance: float
    status: str
    runtime_ms: float


@dataclass
class VerificationReport:
    config: RunConfig
    entries: list[Entry]

    @property
    def passed(self) -> int:
        return sum(e.status == "pass" for e in self.entries)

    @property
    def failed(self) -> int:
        return len(self.entries) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def entry(self, name: str) -> Entry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "entries": [asdict(e) for e in self.entries],
            "summary": {"passed": self.passed, "failed": self.failed},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "anchor", "residual", "tolerance", "status", "runtime_ms"])
        for e in self.entries:
            w.writerow([e.name, e.anchor, "" if e.residual is None else repr(e.residual),
                        repr(e.tolerance), e.status, repr(e.runtime_ms)])
        return buf.getvalue()

    def to_table(self) -> str:
        rows = [(e.name, "-" if e.residual is None else f"{e.residual:.3e}",
                 f"{e.tolerance:.1e}", e.status.upper(), f"{e.runtime_ms:.0f}")
                for e in self.entries]
        head = ("check", "residual", "tol", "status", "ms")
        widths = [max(len(r[i]) for r in rows + [head]) for i in range(5)]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        lines = [fmt.format(*head), fmt.format(*("-" * w for w in widths))]
        lines += [fmt.format(*r) for r in rows]
        c = self.config
        lines.append("")
        lines.append(f"nu={c.nu} trunc={c.trunc} gh_nodes={c.gh_nodes} "
                     f"radial_nodes={c.radial_nodes} angular={c.angular_count} seed={c.seed}")
        lines.append(f"{self.passed} passed, {self.failed} failed")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "table") -> str:
        return {"table": self.to_table, "json": self.to_json, "csv": self.to_csv}[fmt]()


class Context:
    """Shared rules for one run plus the per-suite generator."""

    def __init__(self, config: RunConfig, rules: dict | None = None):
        self.config = config
        self.rng = np.random.default_rng(config.seed)
        self._rules = {} if rules is None else rules

    @property
    def nus(self) -> tuple[float, float, float]:
        nu = self.config.nu
        return (0.5 * nu, nu, 2.0 * nu)

    def gh(self, rate: float) -> QuadratureRule:
        key = ("gh", rate)
        if key not in self._rules:
            self._rules[key] = QuadratureRule.gauss_hermite(self.config.gh_nodes, rate)
        return self._rules[key]

    def slice_rule(self, nu: float, degree: int = 64, decay: float = 0.5) -> SliceQuadrature:
        key = ("slice", nu, degree, decay)
        if key not in self._rules:
            self._rules[key] = SliceQuadrature.build(
                nu, self.config.radial_nodes, self.config.angular_count, degree, decay)
        return self._rules[key]

    def unit(self) -> ImaginaryUnit:
        return ImaginaryUnit.random(self.rng)

    def quaternion(self, max_modulus: float) -> Quaternion:
        v = self.rng.standard_normal(4)
        r = max_modulus * self.rng.uniform() ** 0.25
        return Quaternion(*(r * v / np.linalg.norm(v)))


SUITES: list[Suite] = []


def suite(*checks: tuple[str, str, float]):
    def register(fn):
        SUITES.append(Suite(fn, tuple(Check(*c) for c in checks)))
        return fn
    return register


def _rel(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1e-300)))


def _qdist(p, q) -> float:
    return float(np.linalg.norm(np.asarray(p, dtype=float) - np.asarray(q, dtype=float)))


# --- quaternion_core --------------------------------------------------------

@suite(("quaternion_algebra", "|pq| = |p||q|, conj(pq) = conj(q)conj(p), u^2 = -1", 1e-12))
def _quaternion_algebra(ctx: Context) -> dict:
    P = ctx.rng.standard_normal((10_000, 4))
    Q = ctx.rng.standard_normal((10_000, 4))
    worst = 0.0
    for p, q in zip(P, Q):
        p, q = Quaternion(*p), Quaternion(*q)
        pq = mul(p, q)
        worst = max(worst, abs(abs(pq) - abs(p) * abs(q)) / (abs(p) * abs(q)))
        worst = max(worst, _qdist(pq.conj(), mul(q.conj(), p.conj())) / abs(pq))
    PQ = qmul(P, Q)
    worst = max(worst, _rel(qabs(PQ), qabs(P) * qabs(Q)))
    for _ in range(1000):
        u = ctx.unit().axis
        worst = max(worst, _qdist(mul(u, u), Quaternion(-1.0)))
    return {"quaternion_algebra": worst}


@suite(("quaternion_power", "q^n by binary exponentiation = n-fold product", 1e-10))
def _quaternion_power(ctx: Context) -> dict:
    worst = 0.0
    for _ in range(100):
        q = ctx.quaternion(2.0)
        acc = Quaternion(1.0)
        for n in range(65):
            worst = max(worst, _qdist(qpow(q, n), acc) / max(abs(acc), 1e-300))
            acc = mul(acc, q)
    return {"quaternion_power": worst}


@suite(("quaternion_exp", "exp restricted to C_I = complex exp", 1e-13))
def _quaternion_exp(ctx: Context) -> dict:
    worst = 0.0
    for _ in range(1000):
        I = ctx.unit()
        z = complex(*ctx.rng.uniform(-3, 3, 2))
        ref = complex_to_slice(np.exp(z), I)
        got = qexp(z.real + z.imag * I.axis)
        worst = max(worst, _qdist(got, ref) / abs(np.exp(z)))
    return {"quaternion_exp": worst}


# --- hermite_basis ----------------------------------------------------------

@suite(("hermite_recurrence", "h_n = nu^(n/2) e^(-nu x^2/2) H_n(sqrt(nu) x)", 1e-11))
def _hermite_recurrence(ctx: Context) -> dict:
    worst = 0.0
    x = np.linspace(-4, 4, 161)
    for nu in ctx.nus:
        for n in range(7):
            c = np.zeros(n + 1)
            c[n] = 1.0
            ref = nu ** (n / 2) * np.exp(-0.5 * nu * x * x) * np.polynomial.hermite.hermval(
                math.sqrt(nu) * x, c)
            got = hermite_h(n, x, nu)
            worst = max(worst, float(np.max(np.abs(got - ref)) / np.max(np.abs(ref))))
    return {"hermite_recurrence": worst}


@suite(("hermite_norms", "||h_n||^2 = 2^n nu^n n! (pi/nu)^(1/2)", 1e-9),
       ("hermite_orthogonality", "<h_m, h_n> = 0 for m != n", 1e-8))
def _hermite_norms(ctx: Context) -> dict:
    norm_err = orth_err = 0.0
    for nu in ctx.nus:
        rule = ctx.gh(nu)
        H = np.stack([hermite_h(n, rule.nodes, nu) for n in range(21)])
        G = (H * rule.weights) @ H.T
        exact = np.array([hermite_norm_sq(n, nu) for n in range(21)])
        norm_err = max(norm_err, _rel(np.diag(G), exact))
        off = G / np.sqrt(np.outer(exact, exact))
        np.fill_diagonal(off, 0.0)
        orth_err = max(orth_err, float(np.max(np.abs(off))))
    return {"hermite_norms": norm_err, "hermite_orthogonality": orth_err}


@suite(("parseval", "sum |c_n|^2 = int |psi|^2 dx", 1e-8))
def _parseval(ctx: Context) -> dict:
    worst = 0.0
    for nu in ctx.nus:
        rule = ctx.gh(nu)
        for _ in range(30):
            psi = HermiteExpansion.random(ctx.rng, 16, nu, normalize=False)
            worst = max(worst, abs(l2_norm_quadrature(psi, rule) ** 2 / psi.norm() ** 2 - 1))
    return {"parseval": worst}


@suite(("projection_roundtrip", "c_n = int psi_n f dx recovers a finite expansion", 1e-10))
def _projection(ctx: Context) -> dict:
    N = ctx.config.trunc
    worst = 0.0
    for nu in ctx.nus:
        psi = HermiteExpansion.random(ctx.rng, N, nu)
        got = project(psi, nu, N, ctx.gh(nu))
        worst = max(worst, float(np.max(np.abs(got.coeffs - psi.coeffs))))
    return {"projection_roundtrip": worst}


# --- slice_series -----------------------------------------------------------

@suite(("splitting", "f_I = F + G J, |f_I|^2 = |F|^2 + |G|^2", 1e-10))
def _splitting(ctx: Context) -> dict:
    worst = 0.0
    for _ in range(50):
        f = PowerSeries.random(ctx.rng, 12)
        I = ctx.unit()
        J = I.perpendicular(ctx.rng)
        sp = split(f, I, J)
        worst = max(worst, float(np.max(np.abs(sp.reassemble().coeffs - f.coeffs))))
        z = ctx.rng.uniform(-1.5, 1.5, 100) + 1j * ctx.rng.uniform(-1.5, 1.5, 100)
        F, G = sp.eval(z)
        fz = f.eval_slice(z, I)
        mod2 = np.sum(fz * fz, axis=-1)
        worst = max(worst, _rel(np.abs(F) ** 2 + np.abs(G) ** 2, mod2))
        worst = max(worst, float(np.max(qabs(sp.combine(F, G) - fz) / (1 + qabs(fz)))))
    return {"splitting": worst}


@suite(("representation", "f(x+yJ) = (1-JI)/2 f(x+yI) + (1+JI)/2 f(x-yI)", 1e-10),
       ("extension", "ext(f|C_I) = f", 1e-10))
def _representation(ctx: Context) -> dict:
    rep = ext = 0.0
    for _ in range(5):
        f = PowerSeries.random(ctx.rng, 12)
        I, J = ctx.unit(), ctx.unit()
        for _ in range(100):
            x, y = ctx.rng.uniform(-1.5, 1.5, 2)
            direct = f(x + y * J.axis)
            got = representation(f(x + y * I.axis), f(x - y * I.axis), I, J)
            rep = max(rep, _qdist(got, direct) / (1 + abs(direct)))
            target = ctx.quaternion(2.0)
            ref = f(target)
            ext = max(ext, _qdist(extend(f, I, target), ref) / (1 + abs(ref)))
    return {"representation": rep, "extension": ext}


@suite(("slice_holomorphy", "(d/dx + I d/dy) f_I = 0 for coefficients in C_I (finite differences)", 1e-6))
def _slice_holomorphy(ctx: Context) -> dict:
    worst = 0.0
    h = 1e-5
    for _ in range(20):
        I = ctx.unit()
        c = ctx.rng.standard_normal((13, 2)) @ np.array([[1.0, 0, 0, 0], list(I.axis)])
        f = PowerSeries(c)
        # unit disk: the O(h^2 f''') difference error stays well below tolerance
        z = np.sqrt(ctx.rng.uniform(0, 1, 50)) * np.exp(2j * np.pi * ctx.rng.uniform(0, 1, 50))
        dx = (f.eval_slice(z + h, I) - f.eval_slice(z - h, I)) / (2 * h)
        dy = (f.eval_slice(z + 1j * h, I) - f.eval_slice(z - 1j * h, I)) / (2 * h)
        dbar = 0.5 * (dx + qmul(np.asarray(I.axis, dtype=float), dy))
        worst = max(worst, float(np.max(qabs(dbar))))
    return {"slice_holomorphy": worst}


# --- fock_space -------------------------------------------------------------

@suite(("monomial_norms", "<e_m, e_n> = pi m! / nu^(m+1) delta_mn", 1e-9))
def _monomial_norms(ctx: Context) -> dict:
    worst = 0.0
    for nu in ctx.nus:
        rule = ctx.slice_rule(nu)
        I = ctx.unit()
        for n in range(21):
            e = FockElement.monomial(n, nu)
            worst = max(worst, abs(fock_norm_quadrature(e, I, rule) / monomial_inner(n, n, nu) - 1))
        e3, e5 = FockElement.monomial(3, nu), FockElement.monomial(5, nu)
        cross = abs(fock_inner_quadrature(e3, e5, I, rule))
        worst = max(worst, cross / math.sqrt(monomial_inner(3, 3, nu) * monomial_inner(5, 5, nu)))
    return {"monomial_norms": worst}


@suite(("slice_independence", "||f||_I = ||f||_J (any two slices)", 1e-8),
       ("slice_independence_bound", "||f||_I / 2 <= ||f||_J <= 2 ||f||_I (violations)", 0.0))
def _slice_independence(ctx: Context) -> dict:
    eq = 0.0
    violations = 0
    for k in range(200):
        nu = ctx.nus[k % 3]
        rule = ctx.slice_rule(nu)
        f = FockElement.random(ctx.rng, int(ctx.rng.integers(0, 17)), nu)
        exact = fock_inner(f, f).w
        for _ in range(5):
            I, J = ctx.unit(), ctx.unit()
            nI = fock_norm_quadrature(f, I, rule)
            nJ = fock_norm_quadrature(f, J, rule)
            eq = max(eq, abs(nI / exact - 1), abs(nJ / exact - 1))
            a, b = math.sqrt(nI), math.sqrt(nJ)
            if not (0.5 * a <= b <= 2.0 * a):
                violations += 1
    return {"slice_independence": eq, "slice_independence_bound": float(violations)}


@suite(("reproducing", "f(q) = int conj(K(p,q)) f_I(p) e^(-nu|p|^2) dp", 1e-7),
       ("kernel_gram", "<K_q, K_q'> = K(q', q)", 1e-7))
def _reproducing(ctx: Context) -> dict:
    rep = gram = 0.0
    grid = np.linspace(-1.05, 1.05, 5)
    for nu in ctx.nus:
        rule = ctx.slice_rule(nu)
        f = FockElement.random(ctx.rng, 16, nu)
        for _ in range(2):
            I_q = ctx.unit()  # slice holding the evaluation points
            I = ctx.unit()  # slice carrying the integral
            for x in grid:
                for y in grid:
                    q = x + y * I_q.axis
                    ref = f(q)
                    rep = max(rep, _qdist(reproduce(f, q, I, rule), ref) / (1 + abs(ref)))
        for _ in range(5):
            q, qq = ctx.quaternion(1.5), ctx.quaternion(1.5)
            N = kernel_degree(nu * max(abs(q), abs(qq)) ** 2)
            Kq, Kqq = kernel_section(q, nu, degree=N), kernel_section(qq, nu, degree=N)
            ref = reproducing_kernel(qq, q, nu)
            got = fock_inner_quadrature(Kq, Kqq, ctx.unit(), rule)
            gram = max(gram, _qdist(got, ref) / max(1.0, abs(ref)))
    return {"reproducing": rep, "kernel_gram": gram}


@suite(("kernel_symmetry", "conj(K(p,q)) = K(q,p)", 1e-12))
def _kernel_symmetry(ctx: Context) -> dict:
    worst = 0.0
    for k in range(1000):
        nu = ctx.nus[k % 3]
        p, q = ctx.quaternion(1.0), ctx.quaternion(1.0)
        worst = max(worst, _qdist(reproducing_kernel(p, q, nu).conj(), reproducing_kernel(q, p, nu)))
    return {"kernel_symmetry": worst}


@suite(("kernel_norms", "||A_q|| = (nu/pi)^(1/2) e^(nu|q|^2/2) = ||K_q||", 1e-8))
def _kernel_norms(ctx: Context) -> dict:
    worst = 0.0
    for nu in ctx.nus:
        rule, srule = ctx.gh(nu), ctx.slice_rule(nu)
        for _ in range(10):
            q = ctx.quaternion(1.5)
            closed = math.sqrt(nu / math.pi) * math.exp(0.5 * nu * q.norm_sq())
            diag = math.sqrt(reproducing_kernel(q, q, nu).w)
            Kq = kernel_section(q, nu)
            slice_norm = math.sqrt(fock_norm_quadrature(Kq, ctx.unit(), srule))
            a_norm = kernel_norm_quadrature(q, nu, rule)
            worst = max(worst, *(abs(v / closed - 1) for v in (diag, slice_norm, a_norm)))
    return {"kernel_norms": worst}


@suite(("point_eval_bound", "|f(q)| <= (nu/pi)^(1/2) e^(nu|q|^2/2) ||f|| (violations)", 0.0),
       ("transform_bound", "|B psi(q)| <= (nu/pi)^(1/2) e^(nu|q|^2/2) ||psi|| (violations)", 0.0))
def _bounds(ctx: Context) -> dict:
    fv = tv = 0
    slack = 1.0 + 1e-12  # rounding on the tight kernel case
    for k in range(100):
        nu = ctx.nus[k % 3]
        qs = np.array([ctx.quaternion(3.0) for _ in range(100)])
        bound = np.array([point_eval_bound(q, nu, 1.0) for q in qs])
        if k % 10 == 0:
            f = kernel_section(qs[0], nu, degree=80)
        else:
            f = FockElement.random(ctx.rng, int(ctx.rng.integers(0, 25)), nu)
        fv += int(np.sum(qabs(f.series.eval_many(qs)) > slack * bound * f.norm()))
        psi = HermiteExpansion.random(ctx.rng, int(ctx.rng.integers(0, 25)), nu, normalize=False)
        Bpsi = bargmann_coeff(psi)
        tv += int(np.sum(qabs(Bpsi.series.eval_many(qs)) > slack * bound * psi.norm()))
    return {"point_eval_bound": float(fv), "transform_bound": float(tv)}


# --- bargmann_transform -----------------------------------------------------

@suite(("generating_function", "A(q;x) = sum psi_n(x) e_n(q) / ||e_n||", 1e-10))
def _generating(ctx: Context) -> dict:
    worst = 0.0
    nu = ctx.config.nu
    for _ in range(100):
        q = ctx.quaternion(1.0)
        x = float(ctx.rng.uniform(-2, 2))
        worst = max(worst, _qdist(generating_partial_sum(q, x, nu, 40), kernel_A(q, x, nu)))
    return {"generating_function": worst}


@suite(("hermite_action", "B(h_n)(q) = (nu/pi)^(1/4) 2^(n/2) nu^n q^n", 1e-8))
def _hermite_action(ctx: Context) -> dict:
    worst = 0.0
    for nu in ctx.nus:
        rule = ctx.gh(nu)
        for n in range(13):
            h = HermiteExpansion.hermite(n, nu)
            for _ in range(25):
                v = ctx.rng.standard_normal(4)
                q = Quaternion(*(ctx.rng.uniform(1.0, 1.5) * v / np.linalg.norm(v)))
                ref = (nu / math.pi) ** 0.25 * 2 ** (n / 2) * nu ** n * qpow(q, n)
                got = bargmann_quadrature(h, q, nu, rule)
                worst = max(worst, _qdist(got, ref) / abs(ref))
    return {"hermite_action": worst}


@suite(("isometry_coeff", "||B psi|| = ||psi|| (coefficient path)", 1e-12),
       ("basis_orthogonality", "<B psi_n, B psi_m> = 0 for n != m", 1e-12))
def _isometry_coeff(ctx: Context) -> dict:
    N = ctx.config.trunc
    worst = 0.0
    for k in range(500):
        psi = HermiteExpansion.random(ctx.rng, N, ctx.nus[k % 3], normalize=False)
        worst = max(worst, abs(math.sqrt(fock_inner(*[bargmann_coeff(psi)] * 2).w) / psi.norm() - 1))
    orth = 0.0
    nu = ctx.config.nu
    rule = ctx.slice_rule(nu)
    I = ctx.unit()
    B = [bargmann_coeff(HermiteExpansion.basis(n, nu)) for n in range(13)]
    for n in range(13):
        for m in range(n):
            orth = max(orth, abs(fock_inner_quadrature(B[n], B[m], I, rule)))
    return {"isometry_coeff": worst, "basis_orthogonality": orth}


@suite(("isometry_quadrature", "||B psi|| = ||psi|| (quadrature path)", 1e-7))
def _isometry_quadrature(ctx: Context) -> dict:
    worst = 0.0
    for nu in ctx.nus:
        rule = ctx.gh(nu)
        srule = ctx.slice_rule(nu, degree=24, decay=1.0)
        for _ in range(4):
            psi = HermiteExpansion.random(ctx.rng, 12, nu)
            lhs = bargmann_norm_quadrature(psi, nu, ctx.unit(), rule, srule)
            rhs = l2_norm_quadrature(psi, rule)
            worst = max(worst, abs(lhs / rhs - 1))
    return {"isometry_quadrature": worst}


@suite(("transform_pairing", "B psi(q) = <psi, conj(A_q)>", 1e-8))
def _pairing(ctx: Context) -> dict:
    worst = 0.0
    for nu in ctx.nus:
        rule = ctx.gh(nu)
        for _ in range(10):
            psi = HermiteExpansion.random(ctx.rng, 12, nu)
            q = ctx.quaternion(1.5)
            conjA = SampledFunction(lambda x, q=q, nu=nu: qconj(kernel_A(q, np.asarray(x), nu)))
            got = l2_inner_quadrature(psi, conjA, rule)
            ref = bargmann_coeff(psi)(q)
            worst = max(worst, _qdist(got, ref) / (1 + abs(ref)))
    return {"transform_pairing": worst}


@suite(("inverse_quadrature", "B^-1 f(x) as a slice integral = series inverse", 1e-7))
def _inverse_quadrature(ctx: Context) -> dict:
    worst = 0.0
    x = np.linspace(-3, 3, 25)
    for nu in ctx.nus:
        rule = ctx.slice_rule(nu)
        f = FockElement.random(ctx.rng, 16, nu)
        ref = inverse_coeff(f)(x)
        for _ in range(3):
            got = inverse_quadrature(f, x, ctx.unit(), nu, rule)
            worst = max(worst, float(np.max(qabs(got - ref))) / max(1.0, float(np.max(qabs(ref)))))
    return {"inverse_quadrature": worst}


@suite(("inverse_roundtrip", "B^-1 B = id, B B^-1 = id (coefficients)", 1e-12))
def _inverse_roundtrip(ctx: Context) -> dict:
    N = ctx.config.trunc
    worst = 0.0
    for k in range(100):
        nu = ctx.nus[k % 3]
        psi = HermiteExpansion.random(ctx.rng, N, nu)
        back = inverse_coeff(bargmann_coeff(psi))
        worst = max(worst, float(np.max(np.abs(back.coeffs - psi.coeffs))) / psi.norm())
        f = FockElement.random(ctx.rng, N, nu)
        again = bargmann_coeff(inverse_coeff(f))
        rel = np.abs(again.coeffs - f.coeffs) / np.maximum(np.abs(f.coeffs), 1e-300)
        worst = max(worst, float(np.max(rel)))
    return {"inverse_roundtrip": worst}


@suite(("double_transform", "B~(B psi) = psi through both integral representations", 1e-7))
def _double_transform(ctx: Context) -> dict:
    worst = 0.0
    x = np.linspace(-3, 3, 13)
    for nu in ctx.nus:
        rule = ctx.gh(nu)
        srule = ctx.slice_rule(nu, degree=24)

        def forward(pts, psi=None, nu=nu, rule=rule):
            return bargmann_quadrature(psi, pts, nu, rule, check=False)

        psi = HermiteExpansion.random(ctx.rng, 8, nu)
        got = inverse_quadrature(lambda p: forward(p, psi), x, ctx.unit(), nu, srule)
        worst = max(worst, float(np.max(qabs(got - psi(x)))))
    return {"double_transform": worst}


# --- qfourier ---------------------------------------------------------------

@suite(("fourier_eigen", "F_I(h_n) = sqrt(2 pi) I^n h_n (nu = 1)", 1e-6))
def _fourier_eigen(ctx: Context) -> dict:
    worst = 0.0
    rule = ctx.gh(0.5)
    x = np.linspace(-3, 3, 61)
    for _ in range(3):
        I = ctx.unit()
        for n in range(11):
            got = qft(HermiteExpansion.hermite(n, 1.0), I, x, rule)
            In = np.asarray(qpow(I.axis, n))
            ref = math.sqrt(2 * math.pi) * np.multiply.outer(hermite_h(n, x, 1.0), In)
            worst = max(worst, float(np.max(qabs(got - ref)) / np.max(qabs(ref))))
    return {"fourier_eigen": worst}


@suite(("intertwine", "B psi(Ix/(sqrt2 nu)) = (nu/pi)^(3/4) e^(x^2/4nu) F_I(e^(-nu y^2/2) psi)(x)", 1e-6))
def _intertwine(ctx: Context) -> dict:
    worst = 0.0
    for k in range(50):
        nu = ctx.nus[k % 3]
        psi = HermiteExpansion.random(ctx.rng, int(ctx.rng.integers(0, 11)), nu)
        arg = psi if k % 2 == 0 else SampledFunction(psi)
        x = float(ctx.rng.uniform(-2, 2))
        lhs, rhs = check_intertwine(arg, ctx.unit(), x, nu, ctx.gh(nu))
        worst = max(worst, _qdist(lhs, rhs))
    return {"intertwine": worst}


@suite(("diagonalization", "B F_I B^-1 f(x) = sqrt(2 pi) f(Ix) (nu = 1)", 1e-6),
       ("diagonal_monomials", "B F_I B^-1 e_n(x) = sqrt(2 pi) (Ix)^n", 1e-6))
def _diagonalization(ctx: Context) -> dict:
    rule = ctx.gh(1.0)
    worst = 0.0
    for _ in range(50):
        f = FockElement.random(ctx.rng, int(ctx.rng.integers(0, 9)), 1.0)
        lhs, rhs = check_diag(f, ctx.unit(), float(ctx.rng.uniform(-2, 2)), rule)
        worst = max(worst, _qdist(lhs, rhs))
    mono = 0.0
    for n in range(9):
        for _ in range(3):
            I = ctx.unit()
            x = float(ctx.rng.uniform(-2, 2))
            lhs, _ = check_diag(FockElement.monomial(n, 1.0), I, x, rule)
            mono = max(mono, _qdist(lhs, math.sqrt(2 * math.pi) * qpow(x * I.axis, n)))
    return {"diagonalization": worst, "diagonal_monomials": mono}


# --- driver -----------------------------------------------------------------

def suite_names() -> list[str]:
    return [c.name for s in SUITES for c in s.checks]


def run_verification(config: RunConfig | None = None, only=None,
                     timing: bool = False) -> VerificationReport:
    config = (config or RunConfig()).validate()
    selected = set(only) if only else None
    if selected is not None:
        unknown = selected - set(suite_names())
        if unknown:
            raise ConfigError(f"unknown suites: {', '.join(sorted(unknown))}")
    rules: dict = {}
    entries = []
    for s in SUITES:
        if selected is not None and not selected & {c.name for c in s.checks}:
            continue
        ctx = Context(config, rules)
        ctx.rng = np.random.default_rng([config.seed, zlib.crc32(s.checks[0].name.encode())])
        t0 = time.perf_counter()
        try:
            residuals = s.fn(ctx)
        except QBargmannError as exc:
            log.warning("%s: %s", s.checks[0].name, exc)
            residuals = {}
        ms = (time.perf_counter() - t0) * 1e3 if timing else 0.0
        for c in s.checks:
            if selected is not None and c.name not in selected:
                continue
            tol = float(config.tolerances.get(c.name, c.tolerance))
            r = residuals.get(c.name)
            ok = r is not None and math.isfinite(r) and r <= tol
            entries.append(Entry(c.name, c.anchor, None if r is None else float(r), tol,
                                 "pass" if ok else "fail", round(ms, 3)))
    return VerificationReport(config, entries)
