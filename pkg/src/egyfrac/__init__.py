"""Exact arithmetic for generalized Sylvester sequences, the constants
governing their doubly-exponential growth, and Egyptian-fraction
decompositions of 1/n whose growth score provably beats the canonical one.

Everything is computed in exact integer/rational arithmetic; real
constants only ever appear as certified rational enclosures.
"""

from ._backend import (
    available_backends,
    backend_name,
    set_backend,
    use_backend,
)
from .constants import (
    Ordering,
    ScoreExpr,
    c_bounds,
    c_value,
    cleared_base,
    score_compare,
    score_enclosure,
    score_normalize,
)
from .decomposition import (
    ComparisonSequenceSpec,
    GreedyExpansion,
    TailDecomposition,
    canonicalize,
    comparison_sequence,
    from_json_dict,
    greedy_expand,
    is_sylvester,
    make_tail,
    residual_integrality_check,
    score,
    shift_reduce,
    theorem_check,
    verify_comparison_equation,
    verify_l_inequality,
    witness,
)
from .errors import (
    DecompositionError,
    DigitBudgetError,
    EgyfracError,
    MassMismatchError,
    MonotonicityError,
    RefinementLimitError,
)
from .exact import (
    RationalInterval,
    isqrt_ceil,
    isqrt_floor,
    pow2_root_bounds,
    rat_pow2,
    truncate_decimal,
)
from .lemmas import (
    ComparisonInstance,
    FuzzReport,
    check_equation_hypothesis,
    check_inequality_hypothesis,
    check_prefix_product_lemma,
    conclusion_holds,
    extend_equation_sequence,
    fuzz_comparison,
    fuzz_prefix_product,
)
from .sylvester import (
    DEFAULT_DIGIT_BUDGET,
    clear_terms_cache,
    digit_budget,
    set_digit_budget,
    term,
    terms,
    verify_product,
    verify_shift,
    verify_telescoping,
)

__version__ = "0.1.0"

__all__ = [
    "ComparisonInstance",
    "ComparisonSequenceSpec",
    "DecompositionError",
    "DEFAULT_DIGIT_BUDGET",
    "DigitBudgetError",
    "EgyfracError",
    "FuzzReport",
    "GreedyExpansion",
    "MassMismatchError",
    "MonotonicityError",
    "Ordering",
    "RationalInterval",
    "RefinementLimitError",
    "ScoreExpr",
    "TailDecomposition",
    "available_backends",
    "backend_name",
    "c_bounds",
    "c_value",
    "canonicalize",
    "check_equation_hypothesis",
    "check_inequality_hypothesis",
    "check_prefix_product_lemma",
    "clear_terms_cache",
    "cleared_base",
    "comparison_sequence",
    "conclusion_holds",
    "digit_budget",
    "extend_equation_sequence",
    "from_json_dict",
    "fuzz_comparison",
    "fuzz_prefix_product",
    "greedy_expand",
    "is_sylvester",
    "isqrt_ceil",
    "isqrt_floor",
    "make_tail",
    "pow2_root_bounds",
    "rat_pow2",
    "residual_integrality_check",
    "score",
    "score_compare",
    "score_enclosure",
    "score_normalize",
    "set_backend",
    "set_digit_budget",
    "shift_reduce",
    "term",
    "terms",
    "theorem_check",
    "truncate_decimal",
    "use_backend",
    "verify_comparison_equation",
    "verify_l_inequality",
    "verify_product",
    "verify_shift",
    "verify_telescoping",
    "witness",
]
