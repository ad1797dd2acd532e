"""
Segmentation engine.

Framework-free algorithms: membership degrees, symbols, the prefix
structure, the SC-Heuristic, fuzzy string matching, global decomposition
by dynamic programming and the brute-force oracles. Positions are 1-indexed.
"""

from django_fuzzy_segmentation.engine.global_seg import (
    Decomposition,
    DpTables,
    GlobalProblem,
    decompose,
    gs_extract,
    gs_memoization,
    sigma,
)
from django_fuzzy_segmentation.engine.local_seg import (
    Pattern,
    Segmentation,
    SingleOccurrence,
    adversarial_instance,
    sc_heuristic,
)
from django_fuzzy_segmentation.engine.matching import (
    FuzzyPattern,
    MatchPosition,
    as_segmentation_pattern,
    fuzzy_string_matching,
    naive_match,
)
from django_fuzzy_segmentation.engine.measure import (
    ONE,
    ZERO,
    Accumulator,
    Degree,
    Ordering,
    accumulate,
    compare,
    degree_from_ratio,
    format_degree,
    parse_degree,
)
from django_fuzzy_segmentation.engine.oracle import (
    DEFAULT_ENUMERATION_CAP,
    best_decomposition,
    check_decomposition,
    check_valid,
    enumerate_decompositions,
    enumerate_match_positions,
    enumerate_segmentations,
)
from django_fuzzy_segmentation.engine.prefix import (
    PrefixStructure,
    Segment,
    brute_borders,
    brute_prefix_function,
    extend,
    prefix_function_trace,
    reduce,
    structure_from_pieces,
)
from django_fuzzy_segmentation.engine.stats import RunStats
from django_fuzzy_segmentation.engine.symbols import (
    Alphabet,
    CharTable,
    Evaluator,
    MaxRun,
    RelativeCount,
    SymbolSpec,
    degree_of,
    eval_extend_left,
    eval_extend_right,
    eval_init,
    increment,
    look_ahead,
)

__all__ = [
    # measure
    "Degree",
    "ZERO",
    "ONE",
    "Ordering",
    "Accumulator",
    "degree_from_ratio",
    "parse_degree",
    "format_degree",
    "compare",
    "accumulate",
    # symbols
    "Alphabet",
    "SymbolSpec",
    "RelativeCount",
    "MaxRun",
    "CharTable",
    "Evaluator",
    "eval_init",
    "eval_extend_right",
    "eval_extend_left",
    "degree_of",
    "look_ahead",
    "increment",
    # prefix
    "Segment",
    "PrefixStructure",
    "reduce",
    "extend",
    "brute_prefix_function",
    "brute_borders",
    "prefix_function_trace",
    "structure_from_pieces",
    # local segmentation
    "Pattern",
    "Segmentation",
    "SingleOccurrence",
    "sc_heuristic",
    "adversarial_instance",
    # matching
    "FuzzyPattern",
    "MatchPosition",
    "fuzzy_string_matching",
    "naive_match",
    "as_segmentation_pattern",
    # global segmentation
    "GlobalProblem",
    "DpTables",
    "Decomposition",
    "gs_memoization",
    "gs_extract",
    "sigma",
    "decompose",
    # oracle
    "DEFAULT_ENUMERATION_CAP",
    "enumerate_segmentations",
    "enumerate_match_positions",
    "enumerate_decompositions",
    "best_decomposition",
    "check_valid",
    "check_decomposition",
    # instrumentation
    "RunStats",
]
