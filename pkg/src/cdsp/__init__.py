"""Exact-arithmetic deciders for the Cauchy dual subnormality problem of
torally expansive toral 3-isometric weighted 2-shifts, together with the
underlying Hausdorff moment machinery for reciprocals of bi-degree (2,1)
and (2,2) polynomials, a brute-force complete-monotonicity oracle, and
numerical verification of the representing measures."""

from .deciders import (BiDeg21Params, BiDeg22Params, Check, DecisionTrace,
                       Quadratic1D, check_bideg21_necessary,
                       check_discriminant_profile, decide_bideg21_cm,
                       decide_bideg22_cm, decide_quadratic_reciprocal_cm,
                       line_restriction_sequence)
from .errors import (CdspError, ConstructionError, DegenerateDensityError,
                     DimensionError, NumericalBudgetError, ParameterError,
                     PreconditionError, SchemaError, WrongCaseError)
from .measures import (Factorization22, KernelValue, MomentCheck, factorize22,
                       kernel_eval, verify_moment_integral, weight21_eval,
                       weight22_line_eval)
from .nets import (CmVerdict, CmWitness, MultiIndex2, Net2, check_cm_1d,
                   check_complete_monotone, forward_difference,
                   net_from_function)
from .quadext import QuadExtScalar
from .shifts import (MomentPolynomial, RhoSet, ShiftWeights,
                     cauchy_dual_weights, check_torally_expansive,
                     dual_moment_net, gamma_from_rho, is_coordinate_2_isometry,
                     moment_net, moments_from_weights, rho_from_gamma,
                     shift_weights, verify_toral_m_isometry)
from .subnormality import (CdspDecision, CrossValidationReport, cross_validate,
                           decide_cdsp)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
