# %% [markdown]
# Quaternions and slices
#
# Every non-real quaternion sits in exactly one complex plane C_I = R + R I,
# where I is a unit imaginary quaternion. Inside a slice the algebra is just
# complex arithmetic; across slices it is not commutative.

# %%
import numpy as np

from qbargmann import Quaternion, ImaginaryUnit, QI, QJ, qexp, qpow, to_slice, from_slice
from qbargmann.quaternion import mul, complex_to_slice

rng = np.random.default_rng(7)

# %%
print("ij =", mul(QI, QJ), "   ji =", mul(QJ, QI))

q = Quaternion(1.0, 2.0, -2.0, 1.0)
s = to_slice(q)
print("q =", q)
print("slice point: x =", s.x, " y =", s.y, " I =", s.unit.axis)
print("rebuilt:", from_slice(s))

# %% [markdown]
# Inside C_I the exponential and powers agree with their complex versions.

# %%
I = ImaginaryUnit.random(rng)
z = 0.3 + 1.7j
qz = z.real + z.imag * I.axis
print("qexp  :", np.asarray(qexp(qz)))
print("cexp  :", complex_to_slice(np.exp(z), I))
print("q^7   :", np.asarray(qpow(qz, 7)))
print("z^7   :", complex_to_slice(z ** 7, I))

# %% [markdown]
# Off a common slice, products of exponentials are not exponentials of sums.

# %%
a, b = 0.8 * QI, 0.8 * QJ
print("e^a e^b :", mul(qexp(a), qexp(b)))
print("e^(a+b) :", qexp(a + b))
