"""Quaternionic Segal-Bargmann transform between L^2(R, H) and the slice Fock space."""

from .errors import (ConfigError, MismatchedWeight, NearRealAxis, NotPerpendicular,
                     ParameterError, ParseError, QBargmannError, QuadratureUnderResolved,
                     TruncationWarning)
from .quaternion import (ONE, QI, QJ, QK, UNIT_I, UNIT_J, UNIT_K, ZERO, ImaginaryUnit,
                         Quaternion, SlicePoint, from_slice, in_slice, qexp, qpow, to_slice)
from .quadrature import QuadratureRule, SliceQuadrature
from .hermite import (HermiteExpansion, SampledFunction, gaussian_integral, hermite_h,
                      hermite_norm_sq, l2_inner, l2_inner_quadrature, l2_norm_quadrature,
                      project, psi_n)
from .series import PowerSeries, SplitPair, extend, representation, split
from .fock import (FockElement, fock_inner, fock_inner_quadrature, fock_norm,
                   fock_norm_quadrature, kernel_section, monomial_inner, monomial_norms,
                   point_eval_bound, reproduce, reproducing_kernel)
from .transform import (bargmann_coeff, bargmann_norm_quadrature, bargmann_quadrature,
                        generating_partial_sum, inverse_coeff, inverse_quadrature, kernel_A,
                        kernel_norm_quadrature)
from .qfourier import check_diag, check_intertwine, qft
from .csvio import read_coefficients, write_coefficients
from .verify import RunConfig, VerificationReport, run_verification

__version__ = "0.1.0"
