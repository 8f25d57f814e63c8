"""seriesum: exact and certified-numeric evaluation of series of rational terms.

Evaluates sum_{k>=1} Q(k)/P(k) (P given in factored form) through four
mutually checking routes: exact closed forms for the product families, a
polygamma formula on the partial-fraction table, tanh-sinh quadrature of
the integral representation, and exact brute-force partial sums with
certified tail bounds. Also covers the reciprocal-product families summed
over the number of factors.
"""

from .exact_arith import Rational, binomial, factorial, multifactorial
from .polynomials import NEG_INF, Polynomial, degree, expand_factored
from .partial_fractions import (
    FactoredRational,
    PartialFractionDecomposition,
    decompose,
    decompose_andreoli,
    recombine,
)
from .special_functions import (
    MAX_POLYGAMMA_ORDER,
    DomainError,
    beta,
    digamma,
    gamma,
    log_beta,
    polygamma,
)
from .quadrature import (
    DEFAULT_TOLERANCE,
    QuadratureError,
    QuadratureResult,
    integrate_unit_interval,
)
from .series_engine import (
    AndreoliFamily,
    ArithmeticFamily,
    ConclusionOverK,
    ConclusionOverN,
    EvalResult,
    EvaluationError,
    GeneralRational,
    OverNFamily,
    SeriesSpec,
    StepFamily,
    closed_form_andreoli,
    closed_form_arithmetic,
    closed_form_polygamma,
    closed_form_step,
    conclusion_eval,
    evaluate,
    integral_eval,
    match_closed_form,
    over_n_eval,
    over_n_integral,
)
from .oracle import (
    FeynmanCheck,
    StrideTwoReport,
    TailBound,
    feynman_identity_check,
    feynman_stride2_check,
    partial_sum,
    partial_sum_float,
    tail_bound,
)
from .dsl import ParseError, parse, pretty

__version__ = "0.1.0"

__all__ = [
    "AndreoliFamily",
    "ArithmeticFamily",
    "ConclusionOverK",
    "ConclusionOverN",
    "DEFAULT_TOLERANCE",
    "DomainError",
    "EvalResult",
    "EvaluationError",
    "FactoredRational",
    "FeynmanCheck",
    "GeneralRational",
    "MAX_POLYGAMMA_ORDER",
    "NEG_INF",
    "OverNFamily",
    "ParseError",
    "PartialFractionDecomposition",
    "Polynomial",
    "QuadratureError",
    "QuadratureResult",
    "Rational",
    "SeriesSpec",
    "StepFamily",
    "StrideTwoReport",
    "TailBound",
    "beta",
    "binomial",
    "closed_form_andreoli",
    "closed_form_arithmetic",
    "closed_form_polygamma",
    "closed_form_step",
    "conclusion_eval",
    "decompose",
    "decompose_andreoli",
    "degree",
    "digamma",
    "evaluate",
    "expand_factored",
    "factorial",
    "feynman_identity_check",
    "feynman_stride2_check",
    "gamma",
    "integral_eval",
    "integrate_unit_interval",
    "log_beta",
    "match_closed_form",
    "multifactorial",
    "over_n_eval",
    "over_n_integral",
    "parse",
    "partial_sum",
    "partial_sum_float",
    "polygamma",
    "pretty",
    "recombine",
    "tail_bound",
]
