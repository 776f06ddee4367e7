"""Deterministic pattern tagger behind the pluggable tagger interface.

Docket parts are regular enough that line-anchored regular expressions
recover the nine entity types. Rules live in a versioned JSON file
(data/tagger_rules.json): label, pattern, applicable segment kinds,
priority. On overlapping candidates the higher priority wins, ties broken
by longer match then earlier start.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Protocol

from ..models import Entity, EntityLabel, Segment, SegmentKind


class TaggerStrategy(Protocol):
    """Contract shared by the pattern tagger and any learned replacement."""

    identifier: str

    def tag(self, segment: Segment) -> list[Entity]: ...


@dataclass(frozen=True)
class PatternRule:
    label: EntityLabel
    pattern: re.Pattern
    segment_kinds: frozenset[SegmentKind]
    priority: int
    rule_id: str

    def applies_to(self, kind: SegmentKind) -> bool:
        return kind in self.segment_kinds


def load_pattern_rules(path: str | Path | None = None) -> list[PatternRule]:
    if path is None:
        raw = json.loads(resources.files("plumitif.data").joinpath("tagger_rules.json").read_text("utf-8"))
    else:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    rules = []
    for entry in raw["rules"]:
        rules.append(
            PatternRule(
                label=EntityLabel(entry["label"]),
                pattern=re.compile(entry["pattern"]),
                segment_kinds=frozenset(SegmentKind(k) for k in entry["segments"]),
                priority=int(entry["priority"]),
                rule_id=entry["id"],
            )
        )
    return rules


def _candidates(rule: PatternRule, text: str):
    for match in rule.pattern.finditer(text):
        group = 1 if rule.pattern.groups else 0
        start, end = match.span(group)
        if start == -1:
            continue
        surface = match.group(group)
        # Trim surrounding whitespace so block captures end at real content.
        stripped = surface.strip()
        if not stripped:
            continue
        start += len(surface) - len(surface.lstrip())
        end = start + len(stripped)
        yield start, end, stripped


class PatternTagger:
    """Default TaggerStrategy: applies the rule file to one segment at a time."""

    def __init__(self, rules: list[PatternRule] | None = None):
        self.rules = rules if rules is not None else load_pattern_rules()
        self.identifier = "pattern-tagger"

    def tag(self, segment: Segment) -> list[Entity]:
        found: list[tuple[int, int, int, EntityLabel]] = []
        for rule in self.rules:
            if not rule.applies_to(segment.kind):
                continue
            for start, end, _ in _candidates(rule, segment.text):
                found.append((rule.priority, start, end, rule.label))

        # Overlap resolution: priority desc, then longer match, then earlier start.
        found.sort(key=lambda c: (-c[0], -(c[2] - c[1]), c[1]))
        taken: list[tuple[int, int, EntityLabel]] = []
        for _, start, end, label in found:
            if any(start < t_end and t_start < end for t_start, t_end, _ in taken):
                continue
            taken.append((start, end, label))

        taken.sort(key=lambda t: t[0])
        return [
            Entity(label=label, start=start, end=end, surface=segment.text[start:end])
            for start, end, label in taken
        ]
