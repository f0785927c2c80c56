# %% [markdown]
# The slice Fock space
#
# Elements are power series f(q) = sum q^n a_n with right quaternion
# coefficients. The norm can be read off the coefficients, or integrated
# against exp(-nu |q|^2) over any single slice. The two agree, and which
# slice is used does not matter.

# %%
import math

import numpy as np

from qbargmann import (FockElement, ImaginaryUnit, Quaternion, SliceQuadrature, fock_inner,
                       fock_norm_quadrature, kernel_section, monomial_inner, reproduce,
                       reproducing_kernel)

rng = np.random.default_rng(3)
nu = 1.0
rule = SliceQuadrature.build(nu)
print(rule)

# %%
for n in range(0, 13, 3):
    e = FockElement.monomial(n, nu)
    print(f"n={n:2d}  pi n!/nu^(n+1) = {monomial_inner(n, n, nu):14.6f}   "
          f"slice quadrature = {fock_norm_quadrature(e, ImaginaryUnit.random(rng), rule):14.6f}")

# %%
f = FockElement.random(rng, 12, nu)
print("coefficient norm^2:", fock_inner(f, f).w)
for _ in range(4):
    I = ImaginaryUnit.random(rng)
    print("  slice", np.round(np.asarray(I.axis)[1:], 3), "->", fock_norm_quadrature(f, I, rule))

# %% [markdown]
# The kernel K(p, q) reproduces point values, and its diagonal is
# (nu/pi) exp(nu |q|^2).

# %%
q = Quaternion(0.4, -0.3, 0.8, 0.1)
print("f(q)          :", f(q))
print("<f, K_q> slice:", reproduce(f, q, ImaginaryUnit.random(rng), rule))
print("K(q,q)        :", reproducing_kernel(q, q, nu).w, " closed:", nu / math.pi * math.exp(nu * q.norm_sq()))
Kq = kernel_section(q, nu)
print("||K_q||^2     :", fock_inner(Kq, Kq).w)
