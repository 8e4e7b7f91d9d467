"""frobkit: exact computation of generalized Frobenius numbers.

Everything is integer arithmetic: representation counts come from a
dynamic-programming denumerant table, the generalized Frobenius numbers
g*_s / g_s and the count n*_s come from residue-class minima, and the CLI
wraps it all in deterministic JSON/CSV/text reports (optionally with
rendered figures).
"""

__version__ = "0.1.0"

from .denumerant import (
    DEFAULT_ENUM_CAP,
    DenumerantTable,
    Representation,
    denumerant,
    denumerant_table,
    enumerate_representations,
)
from .errors import (
    CapExceededError,
    FrobkitError,
    IntegerOverflowError,
    InternalInvariantError,
    InvalidInputError,
    NonPositiveError,
    NotCoprimeError,
    NotPairwiseCoprimeError,
    ResourceExceededError,
    SearchCeilingExceededError,
    TooFewGeneratorsError,
)
from .family import (
    DEFAULT_MAX_T,
    ProductFamily,
    StepReport,
    build_family,
    canonical_representations,
    expected_count,
    family_g0,
    pair_gs_closed_form,
    progression_value,
    verify_step,
)
from .generators import (
    Generators,
    ReductionStep,
    gcd_all,
    is_pairwise_coprime,
    reduce_step,
    validate,
)
from .sfrobenius import (
    FrobeniusReport,
    SAperyTable,
    apery_table,
    default_search_ceiling,
    frobenius_report,
    g_exact,
    g_star,
    g_star_via_reduction,
    n_star,
    n_star_via_reduction,
)

__all__ = [
    "__version__",
    # generators
    "Generators",
    "ReductionStep",
    "gcd_all",
    "validate",
    "is_pairwise_coprime",
    "reduce_step",
    # denumerant
    "Representation",
    "DenumerantTable",
    "DEFAULT_ENUM_CAP",
    "denumerant",
    "denumerant_table",
    "enumerate_representations",
    # s-Frobenius
    "SAperyTable",
    "FrobeniusReport",
    "apery_table",
    "default_search_ceiling",
    "g_star",
    "g_exact",
    "n_star",
    "frobenius_report",
    "g_star_via_reduction",
    "n_star_via_reduction",
    # family
    "ProductFamily",
    "StepReport",
    "DEFAULT_MAX_T",
    "build_family",
    "family_g0",
    "progression_value",
    "expected_count",
    "canonical_representations",
    "verify_step",
    "pair_gs_closed_form",
    # errors
    "FrobkitError",
    "InvalidInputError",
    "TooFewGeneratorsError",
    "NonPositiveError",
    "NotCoprimeError",
    "NotPairwiseCoprimeError",
    "IntegerOverflowError",
    "ResourceExceededError",
    "CapExceededError",
    "SearchCeilingExceededError",
    "InternalInvariantError",
]
