import math

import numpy as np
import pytest
from scipy import integrate

from qbargmann.errors import ParameterError, QuadratureUnderResolved
from qbargmann.fock import FockElement
from qbargmann.hermite import HermiteExpansion, SampledFunction, hermite_h
from qbargmann.quadrature import QuadratureRule
from qbargmann.quaternion import (ImaginaryUnit, Quaternion, UNIT_J, mul, qmul, qpow)
from qbargmann.qfourier import check_diag, check_intertwine, qft

from conftest import qclose

RT2PI = math.sqrt(2 * math.pi)


@pytest.fixture(scope="module")
def half():
    return QuadratureRule.gauss_hermite(128, 0.5)


def gaussian():
    return SampledFunction(lambda y: np.multiply.outer(np.exp(-0.5 * np.asarray(y) ** 2), [1.0, 0, 0, 0]))


def test_gaussian_is_fixed(half, rng):
    I = ImaginaryUnit.random(rng)
    x = np.linspace(-3, 3, 13)
    got = qft(gaussian(), I, x, half)
    assert np.allclose(got[:, 0], RT2PI * np.exp(-x * x / 2), atol=1e-13)
    assert np.allclose(got[:, 1:], 0, atol=1e-13)


def test_eigenrelation(half, rng):
    x = np.linspace(-3, 3, 31)
    for _ in range(3):
        I = ImaginaryUnit.random(rng)
        for n in range(11):
            got = qft(HermiteExpansion.hermite(n, 1.0), I, x, half)
            ref = RT2PI * np.multiply.outer(hermite_h(n, x, 1.0), np.asarray(qpow(I.axis, n)))
            assert np.max(np.abs(got - ref)) <= 1e-7 * np.max(np.abs(ref))


def test_against_adaptive_quadrature(half, rng):
    psi = HermiteExpansion.random(rng, 5, 0.9)
    I = ImaginaryUnit.random(rng)
    x = 1.1
    cos_part = [integrate.quad(lambda y: math.cos(x * y) * psi(y)[c], -np.inf, np.inf, epsabs=1e-13)[0] for c in range(4)]
    sin_part = [integrate.quad(lambda y: math.sin(x * y) * psi(y)[c], -np.inf, np.inf, epsabs=1e-13)[0] for c in range(4)]
    ref = np.asarray(cos_part) + qmul(np.asarray(I.axis), np.asarray(sin_part))
    rule = QuadratureRule.gauss_hermite(128, 0.45)
    assert qclose(qft(psi, I, x, rule), ref, 1e-10)
    assert qclose(qft(SampledFunction(psi), I, x, half), ref, 1e-10)


def test_real_input_stays_in_slice(half, rng):
    I = ImaginaryUnit.random(rng)
    v = qft(HermiteExpansion.hermite(3, 1.0), I, 0.7, half)
    assert np.linalg.norm(np.cross(np.asarray(v)[1:], np.asarray(I.axis)[1:])) < 1e-13


def test_right_and_left_constants(half, rng):
    psi = HermiteExpansion.random(rng, 6, 1.0)
    I = ImaginaryUnit.random(rng)
    c = Quaternion(*rng.standard_normal(4))
    x = 0.9
    assert qclose(qft(psi.right_mul(c), I, x, half), mul(qft(psi, I, x, half), c), 1e-12)
    # left constants pass through only when they commute with the kernel, i.e. lie in C_I
    cI = 0.4 - 1.3 * I.axis
    assert qclose(qft(psi.left_mul(cI), I, x, half), mul(cI, qft(psi, I, x, half)), 1e-12)
    J = I.perpendicular(rng)
    lhs, rhs = qft(psi.left_mul(J.axis), I, x, half), mul(J.axis, qft(psi, I, x, half))
    assert not qclose(lhs, rhs, 1e-3)


def test_resolution_guard(rng):
    coarse = QuadratureRule.gauss_hermite(16, 0.5)
    with pytest.raises(QuadratureUnderResolved):
        qft(HermiteExpansion.hermite(2, 1.0), ImaginaryUnit.random(rng), 20.0, coarse)


def test_intertwine_examples(rng):
    for nu in (0.5, 1.0, 2.0):
        rule = QuadratureRule.gauss_hermite(128, nu)
        lhs, rhs = check_intertwine(HermiteExpansion.hermite(0, nu), ImaginaryUnit.random(rng), 0.0, nu, rule)
        assert qclose(lhs, Quaternion((nu / math.pi) ** 0.25), 1e-14)
        assert qclose(rhs, lhs, 1e-13)
    rule = QuadratureRule.gauss_hermite(128, 1.0)
    lhs, rhs = check_intertwine(HermiteExpansion.basis(1, 1.0), UNIT_J, float(rng.uniform(-2, 2)), 1.0, rule)
    assert qclose(lhs, rhs, 1e-7)
    I = ImaginaryUnit(Quaternion(0, 1, 0, 1) / math.sqrt(2))
    psi = HermiteExpansion.random(rng, 8, 1.0)
    lhs, rhs = check_intertwine(psi, I, 1.3, 1.0, rule)
    assert qclose(lhs, rhs, 1e-7)
    lhs, rhs = check_intertwine(SampledFunction(psi), I, 1.3, 1.0, rule)
    assert qclose(lhs, rhs, 1e-7)


def test_diag_examples(rng):
    rule = QuadratureRule.gauss_hermite(128, 1.0)
    I = ImaginaryUnit.random(rng)
    x = 1.4
    lhs, rhs = check_diag(FockElement.monomial(0, 1.0), I, x, rule)
    assert qclose(lhs, Quaternion(RT2PI), 1e-12) and qclose(rhs, Quaternion(RT2PI), 1e-15)
    lhs, _ = check_diag(FockElement.monomial(1, 1.0), I, x, rule)
    assert qclose(lhs, RT2PI * x * I.axis, 1e-12)
    lhs, _ = check_diag(FockElement.monomial(2, 1.0), I, x, rule)
    assert qclose(lhs, Quaternion(-RT2PI * x * x), 1e-12)
    with pytest.raises(ParameterError):
        check_diag(FockElement.monomial(0, 2.0), I, x, rule)


def test_diag_random(rng):
    rule = QuadratureRule.gauss_hermite(128, 1.0)
    for _ in range(10):
        f = FockElement.random(rng, 8, 1.0)
        lhs, rhs = check_diag(f, ImaginaryUnit.random(rng), float(rng.uniform(-2, 2)), rule)
        assert qclose(lhs, rhs, 1e-6)
