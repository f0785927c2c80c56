import math

import numpy as np
import pytest

from qbargmann.errors import MismatchedWeight, ParameterError, QuadratureUnderResolved
from qbargmann.fock import (FockElement, fock_inner, fock_inner_quadrature, fock_norm,
                            fock_norm_quadrature, kernel_degree, kernel_section, monomial_inner,
                            monomial_norms, point_eval_bound, reproduce, reproducing_kernel)
from qbargmann.quadrature import SliceQuadrature, slice_radius
from qbargmann.quaternion import (QI, QJ, QK, ImaginaryUnit, Quaternion, UNIT_I, UNIT_J, mul,
                                  qexp, qpow)
from qbargmann.series import PowerSeries

from conftest import qclose

NUS = (0.5, 1.0, 2.0)


@pytest.fixture(scope="module")
def rules():
    return {nu: SliceQuadrature.build(nu) for nu in NUS}


def test_monomial_inner_examples():
    assert monomial_inner(2, 2, 1.0) == pytest.approx(2 * math.pi, rel=1e-15)
    assert monomial_inner(1, 2, 0.7) == 0.0
    assert monomial_inner(0, 0, 2.0) == pytest.approx(math.pi / 2, rel=1e-15)
    with pytest.raises(ParameterError):
        monomial_inner(0, 0, 0.0)


def test_monomial_norms_large_n_no_overflow():
    n = monomial_norms(120, 0.5)
    assert np.all(np.isfinite(n))
    assert n[120] ** 2 == pytest.approx(math.pi * math.factorial(120) * 2.0 ** 121, rel=1e-12)


def test_fock_inner_examples():
    e2 = FockElement.monomial(2, 1.0)
    assert fock_inner(e2, e2).w == pytest.approx(2 * math.pi, rel=1e-15)
    got = fock_inner(FockElement.monomial(0, 1.0, QI), FockElement.monomial(0, 1.0, QJ))
    assert qclose(got, math.pi * QK, 1e-14)


def test_fock_inner_properties(rng):
    f = FockElement.random(rng, 8, 1.3, normalize=False)
    g = FockElement.random(rng, 5, 1.3, normalize=False)
    q = Quaternion(*rng.standard_normal(4))
    assert qclose(fock_inner(f, g).conj(), fock_inner(g, f), 1e-13)
    assert qclose(fock_inner(f.right_mul(q), g), mul(fock_inner(f, g), q), 1e-12)
    ff = fock_inner(f, f)
    assert ff.w > 0 and abs(ff.x) + abs(ff.y) + abs(ff.z) < 1e-14 * ff.w
    a = f.coeffs
    closed = math.pi / 1.3 * sum(math.factorial(n) / 1.3 ** n * np.dot(a[n], a[n]) for n in range(9))
    assert ff.w == pytest.approx(closed, rel=1e-13)
    assert fock_norm(f) == pytest.approx(math.sqrt(closed), rel=1e-13)
    with pytest.raises(MismatchedWeight):
        fock_inner(f, FockElement.monomial(0, 1.0))


def test_norm_quadrature_examples(rules):
    for nu in NUS:
        e0 = FockElement.monomial(0, nu)
        assert fock_norm_quadrature(e0, UNIT_J, rules[nu]) == pytest.approx(math.pi / nu, rel=1e-13)
    e1j = FockElement.monomial(1, 1.0, QJ)
    assert fock_norm_quadrature(e1j, UNIT_I, rules[1.0]) == pytest.approx(math.pi, rel=1e-13)


@pytest.mark.parametrize("nu", NUS)
def test_monomial_norms_by_quadrature(nu, rules, rng):
    I = ImaginaryUnit.random(rng)
    for n in range(21):
        got = fock_norm_quadrature(FockElement.monomial(n, nu), I, rules[nu])
        assert got == pytest.approx(monomial_inner(n, n, nu), rel=1e-9)


def test_slice_independence(rules, rng):
    for k in range(12):
        nu = NUS[k % 3]
        f = FockElement.random(rng, 16, nu)
        exact = fock_inner(f, f).w
        I, J = ImaginaryUnit.random(rng), ImaginaryUnit.random(rng)
        nI = fock_norm_quadrature(f, I, rules[nu])
        nJ = fock_norm_quadrature(f, J, rules[nu])
        assert nI == pytest.approx(exact, rel=1e-8) and nJ == pytest.approx(exact, rel=1e-8)
        assert 0.25 <= nJ / nI <= 4.0


def test_inner_quadrature_matches_coefficients(rules, rng):
    f = FockElement.random(rng, 10, 2.0)
    g = FockElement.random(rng, 7, 2.0)
    got = fock_inner_quadrature(f, g, ImaginaryUnit.random(rng), rules[2.0])
    assert qclose(got, fock_inner(f, g), 1e-12)


def test_quadrature_guards():
    coarse = SliceQuadrature.build(1.0, radial_nodes=8, angular_count=16, degree=10)
    with pytest.raises(QuadratureUnderResolved):
        fock_norm_quadrature(FockElement.monomial(9, 1.0), UNIT_I, coarse)
    with pytest.raises(QuadratureUnderResolved):
        fock_norm_quadrature(FockElement.monomial(5, 1.0), UNIT_I, SliceQuadrature.build(1.0, degree=3))
    with pytest.raises(MismatchedWeight):
        fock_norm_quadrature(FockElement.monomial(1, 2.0), UNIT_I, coarse)


def test_slice_rule_integrates_gaussian_moments():
    rule = SliceQuadrature.build(1.7)
    z = rule.points
    for n in range(0, 30, 7):
        exact = math.pi * math.factorial(n) / 1.7 ** (n + 1)
        assert float(rule.integrate(np.abs(z) ** (2 * n))) == pytest.approx(exact, rel=1e-12)
    for k in (1, 5, 20):
        assert abs(rule.integrate(z ** k)) < 1e-13 * float(rule.integrate(np.abs(z) ** k))
    assert slice_radius(1.0, 64) > slice_radius(1.0, 10)


def test_kernel_examples(rng):
    nu = 0.8
    p = Quaternion(*rng.standard_normal(4))
    assert qclose(reproducing_kernel(p, Quaternion(), nu), Quaternion(nu / math.pi), 1e-15)
    q = Quaternion(0.3, -0.4, 0.9, 0.2)
    assert reproducing_kernel(q, q, nu).w == pytest.approx(nu / math.pi * math.exp(nu * q.norm_sq()), rel=1e-14)
    I = ImaginaryUnit.random(rng)
    p, q = 0.4 + 0.9 * I.axis, -0.7 + 0.3 * I.axis
    ref = nu / math.pi * qexp(nu * mul(p, q.conj()))
    assert qclose(reproducing_kernel(p, q, nu), ref, 1e-14)


def test_kernel_noncommuting_order():
    # p^n conj(q)^n, not conj(q)^n p^n
    p, q, nu = Quaternion(0, 1.0), Quaternion(0, 0, 1.0), 1.0
    ref = Quaternion()
    for n in range(40):
        ref = ref + mul(qpow(p, n), qpow(q.conj(), n)) * (nu ** n / math.factorial(n))
    assert qclose(reproducing_kernel(p, q, nu), nu / math.pi * ref, 1e-14)


def test_kernel_symmetry(rng):
    for _ in range(200):
        p, q = Quaternion(*rng.uniform(-0.5, 0.5, 4)), Quaternion(*rng.uniform(-0.5, 0.5, 4))
        assert qclose(reproducing_kernel(p, q, 1.0).conj(), reproducing_kernel(q, p, 1.0), 1e-12)
    for _ in range(200):
        p, q = Quaternion(*rng.standard_normal(4)), Quaternion(*rng.standard_normal(4))
        K = reproducing_kernel(q, p, 1.0)
        assert qclose(reproducing_kernel(p, q, 1.0).conj(), K, 1e-12 * max(1.0, abs(K)))


def test_kernel_degree():
    assert kernel_degree(0.0) == 0
    n = kernel_degree(10.0)
    assert n > 10
    assert 10.0 ** n / math.factorial(n) < 1e-16 * math.exp(10.0)
    assert kernel_degree(1e6) == 512


def test_reproduce_examples(rules):
    rule = rules[1.0]
    assert qclose(reproduce(FockElement.monomial(0, 1.0), Quaternion(0.3, 1, -0.2, 0.5), UNIT_I, rule),
                  Quaternion(1.0), 1e-12)
    q = Quaternion(0.5, 0, 0.5)
    got = reproduce(FockElement.monomial(3, 1.0), q, UNIT_I, rule)
    assert qclose(got, qpow(q, 3), 1e-12)


def test_reproducing_property(rules, rng):
    for nu in NUS:
        f = FockElement.random(rng, 16, nu)
        for _ in range(5):
            q = Quaternion(*rng.uniform(-1, 1, 4))
            ref = f(q)
            got = reproduce(f, q, ImaginaryUnit.random(rng), rules[nu])
            assert qclose(got, ref, 1e-7 * (1 + abs(ref)))


def test_kernel_gram(rules, rng):
    nu = 1.0
    q, qq = Quaternion(0.4, 0.7, -0.3, 0.5), Quaternion(-0.6, 0.1, 0.8, 0.2)
    N = kernel_degree(nu * 1.5 ** 2)
    got = fock_inner_quadrature(kernel_section(q, nu, degree=N), kernel_section(qq, nu, degree=N),
                                ImaginaryUnit.random(rng), rules[nu])
    assert qclose(got, reproducing_kernel(qq, q, nu), 1e-10)


def test_kernel_section_norm(rules, rng):
    for nu in NUS:
        q = Quaternion(*rng.uniform(-0.7, 0.7, 4))
        Kq = kernel_section(q, nu)
        closed = nu / math.pi * math.exp(nu * q.norm_sq())
        assert fock_inner(Kq, Kq).w == pytest.approx(closed, rel=1e-13)
        assert fock_norm_quadrature(Kq, ImaginaryUnit.random(rng), rules[nu]) == pytest.approx(closed, rel=1e-10)


def test_point_eval_bound(rng):
    assert point_eval_bound(Quaternion(), math.pi, 1.0) == 1.0
    e0 = FockElement.monomial(0, 1.0)
    for _ in range(50):
        q = Quaternion(*rng.uniform(-2, 2, 4))
        assert abs(e0(q)) <= point_eval_bound(q, 1.0, e0.norm())
        f = FockElement.random(rng, 12, 1.0)
        assert abs(f(q)) <= point_eval_bound(q, 1.0, f.norm())
    radii = [point_eval_bound(Quaternion(r), 1.0, 1.0) for r in np.linspace(0, 3, 10)]
    assert all(a < b for a, b in zip(radii, radii[1:]))
    with pytest.raises(ParameterError):
        point_eval_bound(Quaternion(), 1.0, -1.0)


def test_effective_degree():
    c = np.zeros((30, 4))
    c[:5, 0] = 1.0
    assert FockElement(PowerSeries(c), 1.0).effective_degree() == 4
