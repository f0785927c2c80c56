# %% [markdown]
# Link with the left quaternionic Fourier transform
#
# F_I(psi)(x) = int exp(I x y) psi(y) dy. On the imaginary axis of a slice
# the Segal-Bargmann transform is a damped Fourier transform, and at nu = 1
# conjugating F_I by B turns it into the substitution f(x) -> sqrt(2 pi) f(Ix).

# %%
import math

import numpy as np

from qbargmann import (FockElement, HermiteExpansion, ImaginaryUnit, QuadratureRule,
                       check_diag, check_intertwine, qft)
from qbargmann.hermite import hermite_h
from qbargmann.quaternion import qpow

rng = np.random.default_rng(5)
I = ImaginaryUnit.random(rng)
half = QuadratureRule.gauss_hermite(128, 0.5)

# %% [markdown]
# Hermite functions are eigenfunctions: F_I(h_n) = sqrt(2 pi) I^n h_n.

# %%
x = np.linspace(-2, 2, 5)
for n in range(4):
    got = qft(HermiteExpansion.hermite(n, 1.0), I, x, half)
    ref = math.sqrt(2 * math.pi) * np.multiply.outer(hermite_h(n, x, 1.0), np.asarray(qpow(I.axis, n)))
    print(n, np.max(np.abs(got - ref)))

# %%
for nu in (0.5, 1.0, 2.0):
    psi = HermiteExpansion.random(rng, 8, nu)
    lhs, rhs = check_intertwine(psi, I, 1.2, nu, QuadratureRule.gauss_hermite(128, nu))
    print(f"nu={nu}: B side {np.round(np.asarray(lhs), 12)}  Fourier side {np.round(np.asarray(rhs), 12)}")

# %%
f = FockElement.random(rng, 6, 1.0)
lhs, rhs = check_diag(f, I, -0.9, QuadratureRule.gauss_hermite(128, 1.0))
print("B F_I B^-1 f (x):", np.asarray(lhs))
print("sqrt(2pi) f(Ix) :", np.asarray(rhs))
