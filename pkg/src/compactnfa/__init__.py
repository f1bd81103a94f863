"""Compact acyclic NFAs for word storage, built one word at a time.

The automaton keeps a single source and a single sink; each stored word is
the label sequence of a source to sink path. Insertion attaches the word as
a fresh chain and then merges away every state whose in or out fan
duplicates another state's, which keeps the automaton compact without ever
rebuilding it. Verification can confirm compactness by the cheap fan
comparison or by full path language comparison, and a minimal DFA of the
same words serves as the size baseline.
"""

from .automaton import (
    Automaton,
    AutomatonError,
    CycleError,
    EmptyWordError,
    FanEntry,
    ProtectedStateError,
    Transition,
    UnknownStateError,
)
from .bench import (
    CSV_HEADER,
    GrowthRecord,
    VerificationFailure,
    growth_run,
    growth_slopes,
    loglog_slope,
    records_to_csv,
    write_csv,
)
from .dfa import (
    Dfa,
    SizeComparison,
    build_minimal_dfa,
    build_trie,
    compare_sizes,
    determinize,
    minimize,
    to_single_sink,
)
from .fileformat import FormatError, dumps, load, loads, save
from .insertion import (
    InsertReport,
    InternalInvariantError,
    MarkedPath,
    attach_word,
    build_lexicon,
    insert_word,
    invariant_checks_run,
    reset_invariant_counter,
    sinkward_pass,
    sourceward_pass,
)
from .verify import (
    DOWN_EQUIVALENT,
    DOWN_SIMILAR,
    UP_EQUIVALENT,
    UP_SIMILAR,
    CompactnessReport,
    Witness,
    check_compact_by_equivalence,
    check_compact_by_similarity,
    down_equivalent,
    down_similar,
    equivalence_propagates,
    left_languages,
    right_languages,
    up_equivalent,
    up_similar,
)
from .wordlist import ORDERS, WordList, apply_order, read_word_file

__version__ = "0.1.0"

__all__ = [
    "Automaton",
    "AutomatonError",
    "CSV_HEADER",
    "CompactnessReport",
    "CycleError",
    "DOWN_EQUIVALENT",
    "DOWN_SIMILAR",
    "Dfa",
    "EmptyWordError",
    "FanEntry",
    "FormatError",
    "GrowthRecord",
    "InsertReport",
    "InternalInvariantError",
    "MarkedPath",
    "ORDERS",
    "ProtectedStateError",
    "SizeComparison",
    "Transition",
    "UP_EQUIVALENT",
    "UP_SIMILAR",
    "UnknownStateError",
    "VerificationFailure",
    "Witness",
    "WordList",
    "apply_order",
    "attach_word",
    "build_lexicon",
    "build_minimal_dfa",
    "build_trie",
    "check_compact_by_equivalence",
    "check_compact_by_similarity",
    "compare_sizes",
    "determinize",
    "down_equivalent",
    "down_similar",
    "dumps",
    "equivalence_propagates",
    "growth_run",
    "growth_slopes",
    "insert_word",
    "invariant_checks_run",
    "left_languages",
    "load",
    "loads",
    "loglog_slope",
    "minimize",
    "read_word_file",
    "records_to_csv",
    "reset_invariant_counter",
    "right_languages",
    "save",
    "sinkward_pass",
    "sourceward_pass",
    "to_single_sink",
    "up_equivalent",
    "up_similar",
    "write_csv",
]
