"""Numerical double zeta-functions, their generalized Dirichlet series, and
residual checks of their functional equations."""

from .classical_zetas import (hurwitz_zeta, lerch_phi, periodic_L, riemann_zeta,
                              sequence_L)
from .coefficients import (Constant, CuspForm, CuspFormSequence, Delta, Exponential,
                           LinearCombination, Periodic, characters, delta_form,
                           delta_sequence, dirichlet_character, finite_fourier, gauss_sum,
                           parity, ramanujan_tau)
from .core import (ConvergenceError, DomainError, DzetaError, EvalPoint, PoleError,
                   RefusedError, SeriesValue)
from .double_series import (DoubleSeriesParams, L2_direct, convergence_region,
                            decompose_periodic, double_L_direct)
from .fe_engine import (FEReport, F0_pm, F_pm, H_pm, HyperplaneSpec, L2_value, g_func,
                        thm4_residual, thm5_rhs, thm6_rhs, verify, xi_func)
from .special_functions import gamma, psi

__version__ = "0.1.0"
