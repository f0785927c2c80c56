# %% [markdown]
# The transform
#
# B sends a quaternion-valued function on the line to a slice regular
# function, by integrating against the Gaussian kernel A(q; x). In
# coordinates it maps the normalized Hermite functions to the normalized
# monomials, so it is unitary. Both routes are shown.

# %%
import numpy as np

from qbargmann import (HermiteExpansion, ImaginaryUnit, QuadratureRule, Quaternion,
                       SliceQuadrature, bargmann_coeff, bargmann_norm_quadrature,
                       bargmann_quadrature, inverse_coeff, inverse_quadrature)
from qbargmann.quaternion import qpow

rng = np.random.default_rng(11)
nu = 1.0
gh = QuadratureRule.gauss_hermite(128, nu)

# %% [markdown]
# Hermite functions go to monomials: B(h_n)(q) = (nu/pi)^(1/4) 2^(n/2) nu^n q^n.

# %%
q = Quaternion(0.6, 0.5, -0.4, 0.3)
for n in (0, 3, 7):
    got = bargmann_quadrature(HermiteExpansion.hermite(n, nu), q, nu, gh)
    ref = (nu / np.pi) ** 0.25 * 2 ** (n / 2) * nu ** n * qpow(q, n)
    print(f"n={n}: quadrature {np.round(np.asarray(got), 10)}  closed {np.round(np.asarray(ref), 10)}")

# %%
psi = HermiteExpansion.random(rng, 12, nu)
f = bargmann_coeff(psi)
print("||psi||              :", psi.norm())
print("||B psi|| coefficient:", f.norm())
srule = SliceQuadrature.build(nu, degree=24, decay=1.0)
print("||B psi|| quadrature :", bargmann_norm_quadrature(psi, nu, ImaginaryUnit.random(rng), gh, srule))

# %% [markdown]
# The inverse as a slice integral gives back psi on any slice.

# %%
x = np.linspace(-2, 2, 5)
back = inverse_quadrature(f, x, ImaginaryUnit.random(rng), nu, SliceQuadrature.build(nu))
print(np.max(np.abs(back - psi(x))))
print(np.max(np.abs(inverse_coeff(f).coeffs - psi.coeffs)))
