"""Numerical toolkit for Epstein zeta functions, toral periods over unit
lattices, class-group L-values, and explicit non-vanishing bounds."""

from .epstein import (CompletedValue, CuspBound, EvalConfig, cusp_lower_bound,
                      epstein_completed, epstein_direct,
                      functional_equation_residual, residue_check)
from .lattice import (LatticeBasis, MinimaReport, NormSpec, ball_volume,
                      determinant, dual_basis, dual_lambda1_inequality_check,
                      enumerate_vectors, lambda1, successive_minima,
                      unit_log_norm)
from .number_field import (BinaryQuadraticForm, IdealClassData,
                           NumberFieldData, ideal_lattice,
                           is_fundamental_discriminant, load_field,
                           quadratic_field, validate_field)
from .periods import (CharacterTable, NonvanishingCount, PeriodResult,
                      QuadratureSpec, class_group_dft, exp_E, hecke_period,
                      hecke_trick_check, log_E, nonvanishing_count_bound,
                      partial_zeta_completed, torus_translate)
from .bounds import (BoundConstants, NonvanishingReport, constant_A1,
                     constants_A0_B0, convexity_bound, sup_slice_volume,
                     theorem1_bound, trivial_class_lower_bound)
from .special_functions import erfc, f_term, gamma, upper_incomplete_gamma

__version__ = "0.1.0"
