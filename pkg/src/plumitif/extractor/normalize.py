"""Assemble extracted entities into the normalized case view.

Entities carry label and span only; which record field they fill follows
from the docket line they sit on (e.g. a Date on the "NE LE:" line is the
birth date). Required fields that cannot be assembled become per-part
issues in the PartialCase, the extraction-error trigger for the report.
"""

from __future__ import annotations

import re
from datetime import date
from decimal import Decimal
from typing import Mapping, Sequence

from ..models import (
    ChargeRecord,
    Conviction,
    ConvictionDetail,
    ConvictionKind,
    DecisionRecord,
    Duration,
    DurationUnit,
    Entity,
    EntityLabel,
    LawCitation,
    Money,
    PartialCase,
    PartyRecord,
    PartyRole,
    PleaCode,
    Segment,
    SegmentKind,
    SentenceRecord,
)
from ..realization.french import title_case_name

_STRICT_DATE = re.compile(r"^(\d{2})/(\d{2})/(\d{4})$")


def parse_docket_date(token: str) -> date:
    """Strict day-first DD/MM/YYYY; two-digit years and pivoted orders rejected."""
    m = _STRICT_DATE.match(token.strip())
    if not m:
        raise ValueError(f"not a DD/MM/YYYY date: {token!r}")
    day, month, year = (int(g) for g in m.groups())
    return date(year, month, day)


def _line_bounds(text: str, offset: int) -> tuple[int, int]:
    start = text.rfind("\n", 0, offset) + 1
    end = text.find("\n", offset)
    return start, len(text) if end == -1 else end


def _line_prefix(segment: Segment, entity: Entity) -> str:
    start, _ = _line_bounds(segment.text, entity.start)
    return segment.text[start : entity.start]


def _same_line(segment: Segment, a: Entity, b: Entity) -> bool:
    return _line_bounds(segment.text, a.start) == _line_bounds(segment.text, b.start)


def _normalize_party(
    role: PartyRole, seg: Segment, entities: Sequence[Entity]
) -> tuple[PartyRecord | None, str | None]:
    name = None
    lawyer = None
    organisation = None
    birth = None
    infraction = None
    address = None

    for ent in entities:
        prefix = _line_prefix(seg, ent)
        if ent.label is EntityLabel.PERSON:
            if prefix.startswith("AV."):
                lawyer = title_case_name(ent.surface)
            elif name is None:
                name = title_case_name(ent.surface)
        elif ent.label is EntityLabel.ORGANISATION:
            organisation = ent.surface
        elif ent.label is EntityLabel.ADDRESS:
            address = ent.surface
        elif ent.label is EntityLabel.DATE:
            try:
                value = parse_docket_date(ent.surface)
            except ValueError:
                return None, f"unparseable date {ent.surface!r}"
            if prefix.startswith("NE LE"):
                birth = value
            elif prefix.startswith("INF."):
                infraction = value

    if role is PartyRole.ACCUSED and name is None:
        return None, "no identity (accused name not found)"
    if role is PartyRole.PLAINTIFF and name is None and organisation is None:
        return None, "no identity (neither person nor organisation found)"

    return (
        PartyRecord(
            role=role,
            name=name or "",
            birth_date=birth,
            address=address,
            lawyer=lawyer,
            infraction_date=infraction,
            organisation=organisation,
        ),
        None,
    )


_CITATION = re.compile(
    r"^ART\. (\d+(?:\.\d+)?)(?: \((\d+)\))?(?: ([a-z])\))?(?: \+ ART\. (\d+(?:\.\d+)?))? C\.CR\.$"
)


def parse_law_citation(surface: str) -> LawCitation:
    m = _CITATION.match(surface.strip())
    if not m:
        raise ValueError(f"unreadable law citation: {surface!r}")
    provision, paragraph, subparagraph, secondary = m.groups()
    return LawCitation(
        act="C.CR.",
        provision=provision,
        paragraph=f"({paragraph})" if paragraph else None,
        subparagraph=f"{subparagraph})" if subparagraph else None,
        secondary_provision=secondary,
    )


def _quantity(token: str) -> Decimal:
    token = token.strip().replace(",", ".")
    if " " in token and "/" in token:  # e.g. "1 1/2"
        whole, frac = token.split(" ", 1)
        num, den = frac.split("/")
        return Decimal(whole) + Decimal(num) / Decimal(den)
    return Decimal(token)


_PENALTY_DETAILS = {
    "PROV": ConvictionDetail.CUSTODY,
    "ACC": ConvictionDetail.PRETRIAL_GRANTED,
    "INF": ConvictionDetail.INFLICTED,
}

_UNITS = {"JRS": DurationUnit.DAYS, "MS": DurationUnit.MONTHS, "AN": DurationUnit.YEARS,
          "ANS": DurationUnit.YEARS, "HS": DurationUnit.HOURS}

_LINE_EMPR = re.compile(r"^EMPR (PROV|ACC|INF) (\d+) JRS$")
_LINE_FINE = re.compile(r"^AMENDE (\d+) \$(?: DEL (\d+) JRS)?$")
_LINE_WORK = re.compile(r"^TC (\d+) HS(?: DEL (\d+) MS)?$")
_LINE_WORK_PROB = re.compile(r"^TC (\d+) HS DEL (\d+) MS/SUIVI PROB ([\d ,./]+?) (ANS?)$")
_LINE_PROBATION = re.compile(r"^PROBATION DE\s+([\d ,./]+?) (ANS?|MS|JRS)(?: (SANS SURV\.|SURV\.))?$")
_LINE_PROB_CUSTODY = re.compile(r"^PROBATION DPAC:([\d.,]+)MS/EMPR:([\d.,]+)M$")
_LINE_SURCHARGE = re.compile(r"^SURAMENDE(?: (\d+) \$)? DEL (\d+) JRS$")
_LINE_OTHER = re.compile(r"^AUTRE ORDONNANCE$")

_PROBATION_DETAILS = {"SANS SURV.": ConvictionDetail.UNSUPERVISED, "SURV.": ConvictionDetail.SUPERVISED}


def _parse_conviction_line(line: str) -> list[Conviction] | None:
    if m := _LINE_EMPR.match(line):
        return [
            Conviction(
                kind=ConvictionKind.PENALTY,
                detail=_PENALTY_DETAILS[m.group(1)],
                duration=Duration(Decimal(m.group(2)), DurationUnit.DAYS),
            )
        ]
    if m := _LINE_FINE.match(line):
        delay = Duration(Decimal(m.group(2)), DurationUnit.DAYS) if m.group(2) else None
        return [Conviction(kind=ConvictionKind.FINE_OR_FEE, amount=Money(Decimal(m.group(1))), delay=delay)]
    if m := _LINE_WORK_PROB.match(line):
        return [
            Conviction(
                kind=ConvictionKind.COMMUNITY_WORK,
                duration=Duration(Decimal(m.group(1)), DurationUnit.HOURS),
                delay=Duration(Decimal(m.group(2)), DurationUnit.MONTHS),
            ),
            Conviction(
                kind=ConvictionKind.PROBATION,
                duration=Duration(_quantity(m.group(3)), DurationUnit.YEARS),
                detail=ConvictionDetail.SUPERVISED,
            ),
        ]
    if m := _LINE_WORK.match(line):
        delay = Duration(Decimal(m.group(2)), DurationUnit.MONTHS) if m.group(2) else None
        return [
            Conviction(
                kind=ConvictionKind.COMMUNITY_WORK,
                duration=Duration(Decimal(m.group(1)), DurationUnit.HOURS),
                delay=delay,
            )
        ]
    if m := _LINE_PROB_CUSTODY.match(line):
        return [
            Conviction(
                kind=ConvictionKind.PROBATION,
                duration=Duration(_quantity(m.group(1)), DurationUnit.MONTHS),
            ),
            Conviction(
                kind=ConvictionKind.PENALTY,
                detail=ConvictionDetail.INFLICTED,
                duration=Duration(_quantity(m.group(2)), DurationUnit.MONTHS),
            ),
        ]
    if m := _LINE_PROBATION.match(line):
        detail = _PROBATION_DETAILS.get(m.group(3) or "", ConvictionDetail.NONE)
        return [
            Conviction(
                kind=ConvictionKind.PROBATION,
                duration=Duration(_quantity(m.group(1)), _UNITS[m.group(2)]),
                detail=detail,
            )
        ]
    if m := _LINE_SURCHARGE.match(line):
        amount = Money(Decimal(m.group(1))) if m.group(1) else None
        return [
            Conviction(
                kind=ConvictionKind.SURCHARGE,
                amount=amount,
                delay=Duration(Decimal(m.group(2)), DurationUnit.DAYS),
            )
        ]
    if _LINE_OTHER.match(line):
        return [Conviction(kind=ConvictionKind.OTHER)]
    return None


def parse_sentence_block(text: str) -> tuple[tuple[Conviction, ...], tuple[str, ...]]:
    """Parse penalty lines into convictions; lines matching no rule are kept aside."""
    convictions: list[Conviction] = []
    unparsed: list[str] = []
    for raw_line in text.splitlines():
        line = " ".join(raw_line.split())
        if not line:
            continue
        parsed = _parse_conviction_line(line)
        if parsed is None:
            unparsed.append(line)
        else:
            convictions.extend(parsed)
    return tuple(convictions), tuple(unparsed)


_CHEF_ANCHOR = re.compile(r"(?m)^CHEF (\d{3})\b")


def _normalize_charges(
    seg: Segment, entities: Sequence[Entity]
) -> tuple[tuple[ChargeRecord | None, ...], dict[int, str]]:
    anchors = [(int(m.group(1)), m.start()) for m in _CHEF_ANCHOR.finditer(seg.text)]
    charges: list[ChargeRecord | None] = []
    issues: dict[int, str] = {}

    for i, (declared_index, start) in enumerate(anchors):
        end = anchors[i + 1][1] if i + 1 < len(anchors) else len(seg.text)
        block = [e for e in entities if start <= e.start < end]
        position = i + 1

        def fail(reason: str):
            charges.append(None)
            issues[position] = reason

        law = next((e for e in block if e.label is EntityLabel.LAW), None)
        if law is None:
            fail("no law citation")
            continue
        try:
            citation = parse_law_citation(law.surface)
        except ValueError as exc:
            fail(str(exc))
            continue

        plea = None
        plea_entity = next((e for e in block if e.label is EntityLabel.PLEA), None)
        if plea_entity is not None:
            plea = PleaCode.GUILTY if plea_entity.surface == "COUPABLE" else PleaCode.NOT_GUILTY

        decisions = []
        decision_problem = None
        for ent in block:
            if ent.label is not EntityLabel.DECISION:
                continue
            date_entity = next(
                (d for d in block if d.label is EntityLabel.DATE and _same_line(seg, d, ent)), None
            )
            if date_entity is None:
                decision_problem = f"decision {ent.surface!r} has no date"
                break
            try:
                when = parse_docket_date(date_entity.surface)
            except ValueError as exc:
                decision_problem = str(exc)
                break
            decisions.append(DecisionRecord(code=ent.surface, date=when, charge_index=declared_index))
        if decision_problem:
            fail(decision_problem)
            continue

        sentence = None
        sentence_entity = next((e for e in block if e.label is EntityLabel.SENTENCE), None)
        if sentence_entity is not None:
            convictions, unparsed = parse_sentence_block(sentence_entity.surface)
            if not convictions:
                fail("penalty block is unreadable")
                continue
            sentence = SentenceRecord(
                convictions=convictions, raw_text=sentence_entity.surface, unparsed_lines=unparsed
            )

        charges.append(
            ChargeRecord(
                index=declared_index,
                law_citation=citation,
                plea=plea,
                decisions=tuple(decisions),
                sentence=sentence,
            )
        )

    return tuple(charges), issues


def normalize(
    tagged: Mapping[SegmentKind, tuple[Segment, Sequence[Entity]]],
) -> PartialCase:
    """Fill the normalized view from per-segment entities; issues mark EE parts."""
    partial = PartialCase()

    if SegmentKind.ACCUSED in tagged:
        partial.accused, partial.accused_issue = _normalize_party(
            PartyRole.ACCUSED, *tagged[SegmentKind.ACCUSED]
        )
    else:
        partial.accused_issue = "accused part missing from document"

    if SegmentKind.PLAINTIFF in tagged:
        partial.plaintiff, partial.plaintiff_issue = _normalize_party(
            PartyRole.PLAINTIFF, *tagged[SegmentKind.PLAINTIFF]
        )
    else:
        partial.plaintiff_issue = "plaintiff part missing from document"

    if SegmentKind.CHARGES in tagged:
        partial.charges, partial.charge_issues = _normalize_charges(*tagged[SegmentKind.CHARGES])
    else:
        partial.charges_part_issue = "charges part missing from document"

    return partial
