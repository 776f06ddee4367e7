"""French surface realization: templates, lexicons, stitching strategies."""

from .french import format_date_fr, format_ordinal_fr
from .realize import (
    PartialCase,
    order_convictions,
    realize_case,
    realize_decisions,
    realize_party,
    realize_plea,
    realize_sentence,
    remaining_custody,
    sentence_signature,
    stitch_charge,
)
from .rules import PREPOSITIONS, RuleTable, fill_pattern, load_preposition_lexicon, load_rule_table
from .stitch import LexiconStitcher, MaskedModelStitcher, StitchStrategy, heuristic_preposition, normalize_title

__all__ = [
    "PREPOSITIONS",
    "LexiconStitcher",
    "MaskedModelStitcher",
    "PartialCase",
    "RuleTable",
    "StitchStrategy",
    "fill_pattern",
    "format_date_fr",
    "format_ordinal_fr",
    "heuristic_preposition",
    "load_preposition_lexicon",
    "load_rule_table",
    "normalize_title",
    "order_convictions",
    "realize_case",
    "realize_decisions",
    "realize_party",
    "realize_plea",
    "realize_sentence",
    "remaining_custody",
    "sentence_signature",
    "stitch_charge",
]
