"""Weave braids into woven form, code tight words, verify minimal webs.

The package splits into thin layers:

- :mod:`braidloom.words`: braid words, the free-group action, equality
- :mod:`braidloom.combing`: pure-braid bands and combing
- :mod:`braidloom.weaving`: the weaving conjugation and woven braids
- :mod:`braidloom.moves`: conjugation and (de)stabilization moves
- :mod:`braidloom.codec`: tight words, step sequences, integer codes
- :mod:`braidloom.polynomials`: sparse Laurent polynomial arithmetic
- :mod:`braidloom.invariants`: Jones and HOMFLY oracles for closures
- :mod:`braidloom.tables`: the embedded 84-knot minimal-web table
- :mod:`braidloom.cli`: the ``braidloom`` command
"""

from .codec import (
    StepCode,
    code_int,
    encode_word,
    is_alternating,
    step_code,
    steps_from_int,
    steps_mirrored,
    steps_rotated,
    symmetry_class,
    tight_word,
    word_from_code,
    word_from_steps,
)
from .combing import (
    Band,
    BandWord,
    PureFactorization,
    band_text,
    cascade,
    comb,
    is_cascade_element,
    parse_bands,
)
from .invariants import (
    closure_components,
    homfly,
    homfly_mirrored,
    jones_from_homfly,
    jones_via_bracket,
    mfw_bound,
    writhe,
)
from .limits import ResourceLimitError
from .moves import (
    MoveRecord,
    conjugation_move,
    destabilization_move,
    lift_bands,
    stabilization_move,
)
from .polynomials import OneVarLaurent, TwoVarLaurent
from .tables import (
    KnotRow,
    MinimalityReport,
    RowReport,
    VerifyReport,
    WebEntry,
    enumerate_webs,
    load_table,
    minimality_check,
    verify_row,
    verify_table,
)
from .weaving import WovenBraid, is_woven, weave, woven_from_word
from .words import (
    BraidWord,
    Permutation,
    TypeVector,
    braids_equal,
    free_reduce,
    mirror,
    parse_word,
    rotate,
    strand_permutation,
    word_text,
)

__version__ = "0.1.0"

__all__ = [
    "Band",
    "BandWord",
    "BraidWord",
    "KnotRow",
    "MinimalityReport",
    "MoveRecord",
    "OneVarLaurent",
    "Permutation",
    "PureFactorization",
    "ResourceLimitError",
    "RowReport",
    "StepCode",
    "TwoVarLaurent",
    "TypeVector",
    "VerifyReport",
    "WebEntry",
    "WovenBraid",
    "band_text",
    "braids_equal",
    "cascade",
    "closure_components",
    "code_int",
    "comb",
    "conjugation_move",
    "destabilization_move",
    "encode_word",
    "enumerate_webs",
    "free_reduce",
    "homfly",
    "homfly_mirrored",
    "is_alternating",
    "is_cascade_element",
    "is_woven",
    "jones_from_homfly",
    "jones_via_bracket",
    "lift_bands",
    "load_table",
    "mfw_bound",
    "minimality_check",
    "mirror",
    "parse_bands",
    "parse_word",
    "rotate",
    "stabilization_move",
    "step_code",
    "steps_from_int",
    "steps_mirrored",
    "steps_rotated",
    "strand_permutation",
    "symmetry_class",
    "tight_word",
    "verify_row",
    "verify_table",
    "weave",
    "word_from_code",
    "word_from_steps",
    "word_text",
    "writhe",
    "__version__",
]
