"""Derangements, increasing trees with a marked rank-1 vertex, and the
recursive bijection between them, plus exhaustive verification oracles."""

from .bijection import (
    CaseTag,
    Relabeling,
    case2a_restructure,
    classify_derangement,
    classify_tree,
    forward,
    forward_with_case,
    inverse,
)
from .cycles import CycleDecomposition, parse_cycles
from .enumeration import (
    DEFAULT_SIZE_LIMIT,
    HARD_SIZE_LIMIT,
    CaseCountReport,
    RankCountRow,
    RankRecurrenceRow,
    VerificationReport,
    case_counts,
    count_rank_k,
    gen_derangements,
    gen_increasing_trees,
    gen_marked_trees,
    rank_count_table,
    recurrence_check,
    verify_bijection,
)
from .errors import DomainError, FormatError, InternalInvariantError, VerificationLimitError
from .render import to_dot
from .trees import (
    IncreasingTree,
    MarkedTree,
    PermWord,
    format_word,
    parse_tree_text,
    parse_word,
)

__version__ = "0.1.0"

__all__ = [
    "CaseTag",
    "CaseCountReport",
    "CycleDecomposition",
    "DEFAULT_SIZE_LIMIT",
    "DomainError",
    "FormatError",
    "HARD_SIZE_LIMIT",
    "IncreasingTree",
    "InternalInvariantError",
    "MarkedTree",
    "PermWord",
    "RankCountRow",
    "RankRecurrenceRow",
    "Relabeling",
    "VerificationLimitError",
    "VerificationReport",
    "case2a_restructure",
    "case_counts",
    "classify_derangement",
    "classify_tree",
    "count_rank_k",
    "format_word",
    "forward",
    "forward_with_case",
    "gen_derangements",
    "gen_increasing_trees",
    "gen_marked_trees",
    "inverse",
    "parse_cycles",
    "parse_tree_text",
    "parse_word",
    "rank_count_table",
    "recurrence_check",
    "to_dot",
    "verify_bijection",
]
