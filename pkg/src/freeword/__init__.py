"""Word calculus for free groups over a concrete generator alphabet.

Words are tuples of signed generators.  The package computes normal
forms and group operations, represents complete reduction sequences and
the elementary moves between them (swaps and overlap switches), reroutes
sequences with explicit move chains, and ships a brute-force oracle that
checks the advertised properties exhaustively on small words.
"""

from .core import (
    EMPTY,
    NEGATIVE,
    POSITIVE,
    SignedGenerator,
    Word,
    concat,
    find_redexes,
    invert,
    is_redex_at,
    parse_word,
    render_word,
    signed,
)
from .errors import (
    CapExceeded,
    FreewordError,
    IncompleteReduction,
    IndexOutOfRange,
    InvalidRedex,
    NoOverlap,
    NotIndependent,
    ParseError,
    WordMismatch,
)
from .group import abelianize, cons, eq, inv, is_normal, mul, normal_form
from .moves import (
    LEFT,
    OVERLAP_LEFT,
    OVERLAP_RIGHT,
    RIGHT,
    SWAP,
    Move,
    MoveChain,
    applicable_moves,
    apply_chain,
    apply_move,
    overlap_switch,
    parse_chain,
    parse_move,
    render_chain,
    swap,
)
from .oracle import (
    DEFAULT_CAP,
    CorpusReport,
    MoveGraph,
    TransformFailure,
    TransformReport,
    all_words,
    build_move_graph,
    check_connected,
    check_corpus,
    check_transform_chain,
    check_triviality_witness,
    enumerate_sequences,
    random_reducible_word,
    signed_alphabet,
)
from .reduction import (
    ReductionSequence,
    apply_step,
    parse_steps,
    render_steps,
    run_sequence,
    step_of_index,
    validate_sequence,
    word_before_step,
)
from .transform import drop_redex, extend_reduction, front_reduction, transform_to

__version__ = "0.1.0"

__all__ = [
    "EMPTY", "NEGATIVE", "POSITIVE", "SignedGenerator", "Word",
    "concat", "find_redexes", "invert", "is_redex_at", "parse_word",
    "render_word", "signed",
    "CapExceeded", "FreewordError", "IncompleteReduction", "IndexOutOfRange",
    "InvalidRedex", "NoOverlap", "NotIndependent", "ParseError", "WordMismatch",
    "abelianize", "cons", "eq", "inv", "is_normal", "mul", "normal_form",
    "LEFT", "OVERLAP_LEFT", "OVERLAP_RIGHT", "RIGHT", "SWAP",
    "Move", "MoveChain", "applicable_moves", "apply_chain", "apply_move",
    "overlap_switch", "parse_chain", "parse_move", "render_chain", "swap",
    "DEFAULT_CAP", "CorpusReport", "MoveGraph", "TransformFailure",
    "TransformReport", "all_words", "build_move_graph", "check_connected",
    "check_corpus", "check_transform_chain", "check_triviality_witness",
    "enumerate_sequences", "random_reducible_word", "signed_alphabet",
    "ReductionSequence", "apply_step", "parse_steps", "render_steps",
    "run_sequence", "step_of_index", "validate_sequence", "word_before_step",
    "drop_redex", "extend_reduction", "front_reduction", "transform_to",
]
