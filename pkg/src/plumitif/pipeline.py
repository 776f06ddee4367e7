"""End-to-end composition: segment -> extract -> normalize -> realize.

The pipeline never persists its input and degrades per part: a missing
marker or an unassemblable field turns into an extraction-error status for
that part only, a rule-coverage failure into a generation-error status,
and every other part still realizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .criminal_code import ProvisionStore
from .corpus.generator import default_store
from .errors import InputError, InputTooLargeError
from .extractor import PatternTagger, TaggerStrategy, extract_entities, normalize
from .models import RawPlumitif, SegmentKind, Summary
from .realization import LexiconStitcher, RuleTable, StitchStrategy, load_preposition_lexicon, load_rule_table, realize_case
from .segmenter import MarkerTable, segment_document

DEFAULT_MAX_INPUT_BYTES = 64 * 1024

_MISSING_PART_MESSAGE = "part marker not found in document"


@dataclass
class Components:
    """Immutable-after-startup configuration bundle the pipeline runs on."""

    markers: MarkerTable = field(default_factory=MarkerTable)
    tagger: TaggerStrategy = field(default_factory=PatternTagger)
    store: ProvisionStore = field(default_factory=default_store)
    table: RuleTable = field(default_factory=load_rule_table)
    stitcher: StitchStrategy = field(default_factory=lambda: LexiconStitcher(load_preposition_lexicon()))
    max_input_bytes: int = DEFAULT_MAX_INPUT_BYTES


def summarize(raw: str, components: Components | None = None) -> Summary:
    """Turn one pasted docket into a Summary with a per-part report."""
    comps = components or Components()
    size = len(raw.encode("utf-8"))
    if size > comps.max_input_bytes:
        raise InputTooLargeError(size, comps.max_input_bytes)
    text = raw.replace("\r\n", "\n").replace("\r", "\n")
    doc = RawPlumitif(text=text)  # raises InputError when empty/binary

    segmentation = segment_document(doc, comps.markers, require_all=False)
    tagged = {}
    for segment in segmentation.segments:
        tagged[segment.kind] = (segment, extract_entities(segment, comps.tagger))

    partial = normalize(tagged)
    for kind in segmentation.missing():
        if kind is SegmentKind.ACCUSED:
            partial.accused_issue = _MISSING_PART_MESSAGE
        elif kind is SegmentKind.PLAINTIFF:
            partial.plaintiff_issue = _MISSING_PART_MESSAGE
        else:
            partial.charges_part_issue = _MISSING_PART_MESSAGE

    return realize_case(partial, comps.store, comps.table, comps.stitcher)


def summary_as_text(summary: Summary) -> str:
    """Plain-text rendering of a summary for the CLI."""
    blocks = []
    if summary.accused_paragraph:
        blocks.append(summary.accused_paragraph)
    if summary.plaintiff_paragraph:
        blocks.append(summary.plaintiff_paragraph)
    for paragraph in summary.charge_paragraphs:
        if paragraph:
            blocks.append(paragraph)
    failures = [
        f"[{name}: {part.status.value}{' - ' + part.message if part.message else ''}]"
        for name, part in summary.report.parts()
        if part.status.value != "ok"
    ]
    blocks.extend(failures)
    return "\n\n".join(blocks) if blocks else "[aucune partie réalisée]"
