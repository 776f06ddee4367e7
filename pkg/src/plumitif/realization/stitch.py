"""Strategies that pick the preposition joining "est accusé" to a charge title.

The default strategy is a curated lexicon with a grammar-heuristic fallback.
A masked-language-model can be plugged in through MaskedModelStitcher by
injecting any callable that completes a masked sentence; no model ships with
the package.
"""

from __future__ import annotations

from typing import Callable, Protocol

from ..errors import StitchStrategyFailure
from .french import starts_with_vowel_sound
from .rules import PREPOSITIONS

MASK_TOKEN = "<mask>"

# Title heads that would clash with "accusé de" (de défaut de...), so the
# natural joining preposition is "pour".
_POUR_HEADS = frozenset({"défaut", "omission", "bris", "refus", "manquement", "non-respect", "port"})


def normalize_title(title: str) -> str:
    return " ".join(title.lower().split())


def heuristic_preposition(title: str) -> str:
    """Grammar fallback: "avoir ..." joins with de/d'; de-headed nouns take pour."""
    t = normalize_title(title)
    if t.startswith("avoir "):
        return "de"
    head = t.split(" ", 1)[0] if t else ""
    if head in _POUR_HEADS:
        return "pour"
    return "de"


class StitchStrategy(Protocol):
    """Contract: (template with a mask slot, charge title) -> preposition."""

    identifier: str

    def predict(self, masked_template: str, title: str) -> str: ...


class LexiconStitcher:
    """Default strategy: curated lexicon lookup, then the grammar heuristic."""

    def __init__(self, lexicon: dict[str, str], use_heuristic: bool = True):
        self.lexicon = lexicon
        self.use_heuristic = use_heuristic
        self.identifier = "lexicon+heuristic" if use_heuristic else "lexicon"

    def predict(self, masked_template: str, title: str) -> str:
        key = normalize_title(title)
        if key in self.lexicon:
            return self.lexicon[key]
        if self.use_heuristic:
            return heuristic_preposition(title)
        raise StitchStrategyFailure(f"title not in lexicon: {title!r}")


class MaskedModelStitcher:
    """Adapter for an external masked-token predictor.

    fill_fn receives the full masked sentence (e.g. "John Doe est accusé
    <mask> vol.") and returns its best token for the mask position. Any
    answer outside the closed preposition set signals inability.
    """

    def __init__(self, fill_fn: Callable[[str], str], identifier: str = "masked-model"):
        self.fill_fn = fill_fn
        self.identifier = identifier

    def predict(self, masked_template: str, title: str) -> str:
        sentence = masked_template.replace("{article}", f"{MASK_TOKEN} {title}")
        token = self.fill_fn(sentence).strip().lower()
        if token in ("d", "d'"):
            token = "de"
        if token not in PREPOSITIONS:
            raise StitchStrategyFailure(f"model answered {token!r}, outside the closed set")
        return token
