"""Entity extraction and normalization into the case view."""

from __future__ import annotations

from ..models import Entity, Segment, validate_entities
from .normalize import normalize, parse_docket_date, parse_law_citation, parse_sentence_block
from .patterns import PatternRule, PatternTagger, TaggerStrategy, load_pattern_rules
from .scoring import EntityScores, LabelCounts, collect_counts, metrics_from_counts, score_entities


def extract_entities(segment: Segment, tagger: TaggerStrategy) -> list[Entity]:
    """Run the tagger and enforce the output contract (in-bounds, sorted, disjoint)."""
    entities = tagger.tag(segment)
    problems = validate_entities(segment, entities)
    if problems:
        raise ValueError(f"tagger {tagger.identifier!r} broke the entity contract: {problems}")
    return entities


__all__ = [
    "EntityScores",
    "LabelCounts",
    "PatternRule",
    "PatternTagger",
    "TaggerStrategy",
    "collect_counts",
    "extract_entities",
    "load_pattern_rules",
    "metrics_from_counts",
    "normalize",
    "parse_docket_date",
    "parse_law_citation",
    "parse_sentence_block",
    "score_entities",
]
