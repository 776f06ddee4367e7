"""Split a raw docket into its accused, plaintiff and charges parts.

Docket structure is regular enough that marker strings at line starts
(e.g. "ACC." opening the accused block) locate each part exactly. Markers
are configuration, not code: districts print different headings, so the
table is loadable from a JSON file mapping marker -> part kind.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import AmbiguousMarkersError, DuplicateMarkerError, MissingPartError
from .models import RawPlumitif, Segment, SegmentKind

DEFAULT_MARKERS = (
    ("ACC.", SegmentKind.ACCUSED),
    ("PLG.", SegmentKind.PLAINTIFF),
    ("CHEFS:", SegmentKind.CHARGES),
)


@dataclass(frozen=True)
class MarkerTable:
    """Ordered (marker string, part kind) pairs; matching is line-start, case-sensitive."""

    entries: tuple[tuple[str, SegmentKind], ...] = DEFAULT_MARKERS

    def __post_init__(self):
        markers = [m for m, _ in self.entries]
        if len(set(markers)) != len(markers):
            raise ValueError("marker strings must be unique")
        kinds = {k for _, k in self.entries}
        missing = [k.value for k in SegmentKind if k not in kinds]
        if missing:
            raise ValueError(f"no marker configured for part(s): {', '.join(missing)}")

    @classmethod
    def from_file(cls, path: str | Path) -> "MarkerTable":
        """Load from a JSON object of marker -> kind, e.g. {"ACC.": "accused"}."""
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(tuple((marker, SegmentKind(kind)) for marker, kind in raw.items()))


@dataclass(frozen=True)
class Segmentation:
    """Segments in document order plus the case-number header preceding them."""

    header: str
    segments: tuple[Segment, ...]

    def get(self, kind: SegmentKind) -> Segment | None:
        for seg in self.segments:
            if seg.kind is kind:
                return seg
        return None

    def missing(self) -> list[SegmentKind]:
        found = {seg.kind for seg in self.segments}
        return [k for k in SegmentKind if k not in found]


def _line_starts(text: str) -> list[int]:
    starts = [0]
    for i, ch in enumerate(text):
        if ch == "\n" and i + 1 < len(text):
            starts.append(i + 1)
    return starts


def segment_document(
    doc: RawPlumitif,
    markers: MarkerTable | None = None,
    *,
    require_all: bool = True,
) -> Segmentation:
    """Locate marker lines and slice the document into parts.

    Each part runs from its marker line to the character before the next
    marker line (or end of document), so the slices partition everything
    from the first marker onward; text before the first marker is returned
    as the header. With require_all=False, absent parts are simply not
    returned, which lets the pipeline degrade per part instead of failing
    the whole document.
    """
    table = markers or MarkerTable()
    text = doc.text

    hits: list[tuple[int, SegmentKind, str]] = []
    for start in _line_starts(text):
        matched = [(m, k) for m, k in table.entries if text.startswith(m, start)]
        if not matched:
            continue
        if len({k for _, k in matched}) > 1:
            raise AmbiguousMarkersError(start, [m for m, _ in matched])
        marker, kind = matched[0]
        hits.append((start, kind, marker))

    seen: dict[SegmentKind, int] = {}
    for offset, kind, _ in hits:
        if kind in seen:
            raise DuplicateMarkerError(kind, offset)
        seen[kind] = offset

    if require_all:
        for kind in SegmentKind:
            if kind not in seen:
                raise MissingPartError(kind)

    segments = []
    for i, (start, kind, _) in enumerate(hits):
        end = hits[i + 1][0] if i + 1 < len(hits) else len(text)
        segments.append(Segment(kind=kind, start=start, end=end, text=text[start:end]))

    header = text[: hits[0][0]] if hits else text
    return Segmentation(header=header, segments=tuple(segments))
