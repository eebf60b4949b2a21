from .analysis import (
    Finite,
    GroupOrder,
    GroupReport,
    InfiniteCertified,
    Unknown,
    abelianization,
    analyze,
    exponent_matrix,
)
from .coset import DEFAULT_MAX_COSETS, CosetTable, Enumeration, todd_coxeter
from .tietze import tietze_simplify
from .words import (
    Presentation,
    PresentationError,
    Word,
    canonical_relator,
    commutator,
    format_word,
    inverse,
    parse_presentation,
    parse_word,
    power,
    reduce_word,
    word,
)

__all__ = [
    "CosetTable",
    "DEFAULT_MAX_COSETS",
    "Enumeration",
    "Finite",
    "GroupOrder",
    "GroupReport",
    "InfiniteCertified",
    "Presentation",
    "PresentationError",
    "Unknown",
    "Word",
    "abelianization",
    "analyze",
    "canonical_relator",
    "commutator",
    "exponent_matrix",
    "format_word",
    "inverse",
    "parse_presentation",
    "parse_word",
    "power",
    "reduce_word",
    "tietze_simplify",
    "todd_coxeter",
    "word",
]
