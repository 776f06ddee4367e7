"""Load and validate the generation rule table and lexicons.

The table (data/rule_table.json, regenerable via tools/build_rule_table.py)
carries 66 rules: 1 party, 1 stitch, 2 pleas, 12 decisions and 50 sentence
combinations. Rules are data reviewed by a domain reader, not code; this
module only checks their internal consistency and fills their patterns.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..errors import GenerationError, RuleTableError

_SLOT = re.compile(r"\{(\w+)\}")
_OPTIONAL_GROUP = re.compile(r"\[([^\[\]]*)\]")

PREPOSITIONS = ("pour", "de", "d'", "du", "des")


def fill_pattern(pattern: str, values: dict[str, str | None]) -> str:
    """Fill {slot} placeholders; [bracketed groups] drop when a slot inside is absent."""

    def resolve_group(match: re.Match) -> str:
        group = match.group(1)
        for slot in _SLOT.findall(group):
            if values.get(slot) is None:
                return ""
        return group

    text = _OPTIONAL_GROUP.sub(resolve_group, pattern)
    for slot in _SLOT.findall(text):
        if values.get(slot) is None:
            raise GenerationError(f"missing value for required slot {slot!r}")
        text = text.replace("{" + slot + "}", values[slot])
    return text


def pattern_slots(pattern: str) -> set[str]:
    return set(_SLOT.findall(pattern))


def _check_entry(entry: dict, category: str) -> None:
    for key in ("id", "category", "slots"):
        if key not in entry:
            raise RuleTableError(f"{category} rule missing {key!r}: {entry}")
    if "pattern" in entry:
        found = pattern_slots(entry["pattern"])
        declared = set(entry["slots"])
        if found != declared:
            raise RuleTableError(
                f"rule {entry['id']}: pattern slots {sorted(found)} != declared {sorted(declared)}"
            )


@dataclass(frozen=True)
class RuleTable:
    party: dict
    stitch: dict
    pleas: dict[str, dict]        # plea value -> rule
    decisions: dict[str, dict]    # decision code -> rule
    sentences: dict[str, dict]    # combination signature -> rule

    @property
    def total_rules(self) -> int:
        return 2 + len(self.pleas) + len(self.decisions) + len(self.sentences)

    def decision_phrase(self, code: str) -> str | None:
        rule = self.decisions.get(code)
        return rule["phrase"] if rule else None


def load_rule_table(path: str | Path | None = None) -> RuleTable:
    if path is None:
        raw = json.loads(resources.files("plumitif.data").joinpath("rule_table.json").read_text("utf-8"))
    else:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))

    for category in ("party", "stitch", "plea", "decision", "sentence"):
        if category not in raw or not isinstance(raw[category], list):
            raise RuleTableError(f"table missing category {category!r}")
        for entry in raw[category]:
            _check_entry(entry, category)

    if len(raw["party"]) != 1 or len(raw["stitch"]) != 1:
        raise RuleTableError("expected exactly one party rule and one stitch rule")
    if len(raw["plea"]) + len(raw["decision"]) != 14:
        raise RuleTableError("plea + decision rules must total 14")
    if len(raw["sentence"]) != 50:
        raise RuleTableError("sentence rules must total 50")

    pleas = {r["plea"]: r for r in raw["plea"]}
    decisions = {r["code"]: r for r in raw["decision"]}
    if len(decisions) != len(raw["decision"]):
        raise RuleTableError("duplicate decision codes")
    phrases = [r["phrase"] for r in raw["decision"]]
    if len(set(phrases)) != len(phrases):
        raise RuleTableError("decision phrases must be pairwise distinct (one-to-one mapping)")

    sentences = {r["signature"]: r for r in raw["sentence"]}
    if len(sentences) != len(raw["sentence"]):
        raise RuleTableError("duplicate sentence signatures")

    return RuleTable(
        party=raw["party"][0],
        stitch=raw["stitch"][0],
        pleas=pleas,
        decisions=decisions,
        sentences=sentences,
    )


def load_preposition_lexicon(path: str | Path | None = None) -> dict[str, str]:
    """Charge-title -> preposition map; keys lowercase, accents preserved."""
    if path is None:
        raw = json.loads(
            resources.files("plumitif.data").joinpath("preposition_lexicon.json").read_text("utf-8")
        )
    else:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    lexicon = {}
    for title, prep in raw.items():
        if prep not in PREPOSITIONS:
            raise RuleTableError(f"preposition {prep!r} for {title!r} outside the closed set")
        key = " ".join(title.lower().split())
        if key in lexicon:
            raise RuleTableError(f"duplicate lexicon title {key!r}")
        lexicon[key] = prep
    return lexicon
