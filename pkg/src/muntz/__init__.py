"""Numerical diagnostics for Müntz spaces of ``L2([0, 1])``.

Monomials ``t**lam`` are studied through the transform that sends them to
Szegő kernels of the Hardy space of the right half-plane, where Gram
matrices become Cauchy matrices and projections become model-space kernels.
"""
from .basis import (BasisDiagnostics, aob_sandwich_check, carleson_deltas,
                    density_partial_sums, lacunarity_profile, projection_riesz_condition,
                    stability_R, thinness_trend, volberg_necessity_gap)
from .dictionary import (boundary_norm, dictionary_eval_closed, dictionary_eval_quadrature,
                         isometry_gap)
from .errors import *  # noqa: F401,F403
from .exponents import (ExponentSequence, as_exponents, check_halfplane, generate_sequence,
                        transform_from_halfplane, transform_to_halfplane, validate_exponents)
from .gram import (HermitianGram, MuntzCombination, combo_norm, distance_to_span,
                   frame_bounds, kernel_gram, monomial_gram, normalized_kernel_gram,
                   normalized_monomial_gram, solve_gram)
from .inequality import (dirichlet_condition, dirichlet_equivalence, dirichlet_gram,
                         markov_newman_check, markov_newman_constant,
                         markov_newman_real_constant)
from .kernels import (BlaschkeSet, blaschke_factor, blaschke_product, model_kernel,
                      szego_kernel, tail_product)
from .projection import (biorthogonal_coeffs, project_onto_muntz, projection_gram,
                         projection_norm, reconstruction_curve, summation_partial)
from .report import AnalysisReport

__version__ = '0.1.0'
