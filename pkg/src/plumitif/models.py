"""Domain types shared by every pipeline stage.

Pure data: frozen dataclasses and closed enumerations, no I/O. Cross-object
invariants are checked by :func:`validate_case`, which reports violations as
data instead of raising, so that malformed-but-constructible records can be
diagnosed. Canonical JSON (de)serialization lives in :mod:`plumitif.serialize`.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from datetime import date
from decimal import Decimal
from enum import Enum

from .errors import InputError

_PROVISION_TOKEN = re.compile(r"^\d+(\.\d+)*$")


class SegmentKind(Enum):
    ACCUSED = "accused"
    PLAINTIFF = "plaintiff"
    CHARGES = "charges"


class EntityLabel(Enum):
    """The nine entity types extracted from a docket part."""

    ADDRESS = "Address"
    CHARGE = "Charge"
    DATE = "Date"
    DECISION = "Decision"
    LAW = "Law"
    ORGANISATION = "Organisation"
    PERSON = "Person"
    PLEA = "Plea"
    SENTENCE = "Sentence"


class PartyRole(Enum):
    ACCUSED = "accused"
    PLAINTIFF = "plaintiff"


class PleaCode(Enum):
    GUILTY = "guilty"
    NOT_GUILTY = "not_guilty"


class ConvictionKind(Enum):
    """Conviction categories, in their fixed realization order."""

    PENALTY = "penalty"
    FINE_OR_FEE = "fine_or_fee"
    COMMUNITY_WORK = "community_work"
    OTHER = "other"
    PROBATION = "probation"
    SURCHARGE = "surcharge"


class ConvictionDetail(Enum):
    CUSTODY = "custody"
    PRETRIAL_GRANTED = "pretrial_granted"
    INFLICTED = "inflicted"
    SUPERVISED = "supervised"
    UNSUPERVISED = "unsupervised"
    NONE = "none"


class DurationUnit(Enum):
    HOURS = "hours"
    DAYS = "days"
    MONTHS = "months"
    YEARS = "years"


class PartStatus(Enum):
    OK = "ok"
    EXTRACTION_ERROR = "extraction_error"
    GENERATION_ERROR = "generation_error"


@dataclass(frozen=True)
class RawPlumitif:
    """A raw docket as pasted by the user. UTF-8 text, accents preserved."""

    text: str
    source_district: str | None = None

    def __post_init__(self):
        if not self.text.strip():
            raise InputError("document text is empty")
        for ch in self.text:
            if unicodedata.category(ch) == "Cc" and ch not in ("\n", "\t"):
                raise InputError(f"control character {ch!r} in document text")


@dataclass(frozen=True)
class Segment:
    """One of the three docket parts; offsets index into the owning document."""

    kind: SegmentKind
    start: int
    end: int
    text: str


@dataclass(frozen=True)
class Entity:
    """A labeled character span; offsets index into the owning segment's text."""

    label: EntityLabel
    start: int
    end: int
    surface: str


def validate_segments(doc: RawPlumitif, segments: list[Segment] | tuple[Segment, ...]) -> list[str]:
    """Check segment spans against their document; returns violations."""
    problems = []
    for seg in segments:
        if not (0 <= seg.start <= seg.end <= len(doc.text)):
            problems.append(f"{seg.kind.value}: span ({seg.start}, {seg.end}) out of bounds")
        elif doc.text[seg.start : seg.end] != seg.text:
            problems.append(f"{seg.kind.value}: text does not equal the document slice")
    return problems


def validate_entities(segment: Segment, entities: list[Entity] | tuple[Entity, ...]) -> list[str]:
    """Check span bounds, surface faithfulness, ordering and disjointness."""
    problems = []
    prev_end = -1
    prev_start = -1
    for ent in entities:
        tag = f"{ent.label.value}@{ent.start}"
        if not (0 <= ent.start < ent.end <= len(segment.text)):
            problems.append(f"{tag}: span out of segment bounds")
            continue
        if segment.text[ent.start : ent.end] != ent.surface:
            problems.append(f"{tag}: surface does not equal the segment slice")
        if ent.start < prev_start:
            problems.append(f"{tag}: entities not sorted by start offset")
        if ent.start < prev_end:
            problems.append(f"{tag}: overlaps previous entity")
        prev_start, prev_end = ent.start, max(prev_end, ent.end)
    return problems


@dataclass(frozen=True)
class Duration:
    quantity: Decimal
    unit: DurationUnit


@dataclass(frozen=True)
class Money:
    value: Decimal
    currency: str = "$"


@dataclass(frozen=True)
class PartyRecord:
    role: PartyRole
    name: str = ""
    birth_date: date | None = None
    address: str | None = None
    lawyer: str | None = None
    infraction_date: date | None = None
    organisation: str | None = None

    @property
    def identity(self) -> str:
        return self.name or (self.organisation or "")


@dataclass(frozen=True)
class LawCitation:
    """A docket reference into the criminal code, e.g. art. 145 (3) a)."""

    act: str
    provision: str
    paragraph: str | None = None
    subparagraph: str | None = None
    # Parsed and kept for forward compatibility; never realized.
    secondary_provision: str | None = None


@dataclass(frozen=True)
class DecisionRecord:
    code: str
    date: date
    charge_index: int

    def __post_init__(self):
        object.__setattr__(self, "code", self.code.strip().lower())


@dataclass(frozen=True)
class Conviction:
    kind: ConvictionKind
    duration: Duration | None = None
    amount: Money | None = None
    delay: Duration | None = None
    detail: ConvictionDetail = ConvictionDetail.NONE


@dataclass(frozen=True)
class SentenceRecord:
    convictions: tuple[Conviction, ...]
    raw_text: str
    # Penalty lines matching no conviction pattern; they block realization
    # so that no conviction is ever dropped silently.
    unparsed_lines: tuple[str, ...] = ()


@dataclass(frozen=True)
class ChargeRecord:
    index: int
    law_citation: LawCitation
    plea: PleaCode | None = None
    decisions: tuple[DecisionRecord, ...] = ()
    sentence: SentenceRecord | None = None


@dataclass(frozen=True)
class CaseRecord:
    accused: PartyRecord
    plaintiff: PartyRecord
    charges: tuple[ChargeRecord, ...]


@dataclass
class PartialCase:
    """Per-part extraction outcome: a record where available, an issue where not.

    The strict CaseRecord requires both parties; the pipeline keeps going
    when a part fails extraction, so downstream stages consume this view.
    """

    accused: PartyRecord | None = None
    plaintiff: PartyRecord | None = None
    charges: tuple[ChargeRecord | None, ...] = ()
    accused_issue: str | None = None
    plaintiff_issue: str | None = None
    charges_part_issue: str | None = None
    charge_issues: dict[int, str] = field(default_factory=dict)

    @classmethod
    def from_case(cls, case: "CaseRecord") -> "PartialCase":
        return cls(accused=case.accused, plaintiff=case.plaintiff, charges=case.charges)

    def to_case_record(self) -> "CaseRecord":
        if self.accused is None or self.plaintiff is None or any(c is None for c in self.charges):
            issues = [i for i in (self.accused_issue, self.plaintiff_issue, self.charges_part_issue) if i]
            issues.extend(self.charge_issues.values())
            raise ValueError(f"extraction incomplete: {'; '.join(issues) or 'missing parts'}")
        return CaseRecord(accused=self.accused, plaintiff=self.plaintiff, charges=tuple(self.charges))


@dataclass(frozen=True)
class ChargeCitationRef:
    """Provision reference attached to a summary, for statute drill-down."""

    charge_index: int
    provision: str
    paragraph: str | None = None
    subparagraph: str | None = None


@dataclass(frozen=True)
class PartReport:
    status: PartStatus
    message: str | None = None


@dataclass(frozen=True)
class GenerationReport:
    """Per-part outcome used to compute extraction/generation error rates."""

    accused: PartReport
    plaintiff: PartReport
    charges_part: PartReport
    charges: tuple[PartReport, ...] = ()

    def parts(self) -> list[tuple[str, PartReport]]:
        named = [
            ("accused", self.accused),
            ("plaintiff", self.plaintiff),
            ("charges", self.charges_part),
        ]
        named.extend((f"charge {i + 1}", part) for i, part in enumerate(self.charges))
        return named

    @property
    def has_extraction_error(self) -> bool:
        return any(p.status is PartStatus.EXTRACTION_ERROR for _, p in self.parts())

    @property
    def has_generation_error(self) -> bool:
        return any(p.status is PartStatus.GENERATION_ERROR for _, p in self.parts())


_PLACEHOLDER = re.compile(r"[<{][^<>{}]*[>}]")


@dataclass(frozen=True)
class Summary:
    accused_paragraph: str | None
    plaintiff_paragraph: str | None
    charge_paragraphs: tuple[str | None, ...]
    report: GenerationReport
    citations: tuple[ChargeCitationRef, ...] = ()

    def __post_init__(self):
        for text in (self.accused_paragraph, self.plaintiff_paragraph, *self.charge_paragraphs):
            if text is not None and _PLACEHOLDER.search(text):
                raise ValueError(f"unresolved placeholder in paragraph: {text!r}")


_KIND_FIELDS = {
    ConvictionKind.SURCHARGE: "delay",
    ConvictionKind.PROBATION: "duration",
}


def _check_conviction(c: Conviction, where: str, problems: list[str]) -> None:
    for label in ("duration", "delay"):
        value: Duration | None = getattr(c, label)
        if value is not None and value.quantity <= 0:
            problems.append(f"{where}: {label} must be strictly positive")
    if c.amount is not None and c.amount.value <= 0:
        problems.append(f"{where}: amount must be strictly positive")
    required = _KIND_FIELDS.get(c.kind)
    if required and getattr(c, required) is None:
        problems.append(f"{where}: kind {c.kind.value} requires {required}")


def validate_case(case: CaseRecord) -> list[str]:
    """Collect every invariant violation in the record; empty list means ok."""
    problems: list[str] = []

    if case.accused.role is not PartyRole.ACCUSED:
        problems.append("accused: role must be accused")
    if case.plaintiff.role is not PartyRole.PLAINTIFF:
        problems.append("plaintiff: role must be plaintiff")
    if not case.accused.name.strip():
        problems.append("accused: name non-empty")
    if not case.plaintiff.identity.strip():
        problems.append("plaintiff: needs a name or an organisation")

    indices = [c.index for c in case.charges]
    if len(set(indices)) != len(indices):
        problems.append("charges: duplicate charge indices")
    if indices and sorted(indices) != list(range(1, len(indices) + 1)):
        problems.append("charges: non-contiguous charge indices")

    for charge in case.charges:
        where = f"charge {charge.index}"
        if charge.index < 1:
            problems.append(f"{where}: index must be >= 1")
        cit = charge.law_citation
        if not cit.act.strip():
            problems.append(f"{where}: citation act is empty")
        if not _PROVISION_TOKEN.match(cit.provision):
            problems.append(f"{where}: provision {cit.provision!r} is not a digits[.digits] token")
        for dec in charge.decisions:
            if dec.charge_index != charge.index:
                problems.append(f"{where}: decision dated {dec.date} addresses charge {dec.charge_index}")
        if charge.sentence is not None:
            s = charge.sentence
            if not s.convictions and s.raw_text.strip():
                problems.append(f"{where}: sentence has raw text but no convictions")
            for pos, conviction in enumerate(s.convictions, start=1):
                _check_conviction(conviction, f"{where} conviction {pos}", problems)

    return problems
