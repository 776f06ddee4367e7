"""Canonical JSON forms for CaseRecord, Summary and GenerationReport.

Schema notes (see docs/formats.md for the full reference):
- field names mirror the dataclass fields, in English;
- dates are ISO "YYYY-MM-DD" strings;
- decimal quantities are serialized as strings so values like "8.5"
  round-trip exactly;
- canonical text is UTF-8, keys sorted, compact separators. Equal records
  produce byte-identical canonical documents.
"""

from __future__ import annotations

import json
from datetime import date
from decimal import Decimal
from typing import Any

from .models import (
    CaseRecord,
    ChargeCitationRef,
    ChargeRecord,
    Conviction,
    ConvictionDetail,
    ConvictionKind,
    DecisionRecord,
    Duration,
    DurationUnit,
    GenerationReport,
    LawCitation,
    Money,
    PartReport,
    PartStatus,
    PartyRecord,
    PartyRole,
    PleaCode,
    SentenceRecord,
    Summary,
)


def to_canonical_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def _opt_date(d: date | None) -> str | None:
    return d.isoformat() if d is not None else None


def _parse_date(value: str | None) -> date | None:
    return date.fromisoformat(value) if value is not None else None


def _duration_to_dict(d: Duration | None) -> dict[str, str] | None:
    if d is None:
        return None
    return {"quantity": str(d.quantity), "unit": d.unit.value}


def _duration_from_dict(d: dict[str, str] | None) -> Duration | None:
    if d is None:
        return None
    return Duration(Decimal(d["quantity"]), DurationUnit(d["unit"]))


def party_to_dict(p: PartyRecord) -> dict[str, Any]:
    return {
        "role": p.role.value,
        "name": p.name,
        "birth_date": _opt_date(p.birth_date),
        "address": p.address,
        "lawyer": p.lawyer,
        "infraction_date": _opt_date(p.infraction_date),
        "organisation": p.organisation,
    }


def party_from_dict(d: dict[str, Any]) -> PartyRecord:
    return PartyRecord(
        role=PartyRole(d["role"]),
        name=d.get("name", ""),
        birth_date=_parse_date(d.get("birth_date")),
        address=d.get("address"),
        lawyer=d.get("lawyer"),
        infraction_date=_parse_date(d.get("infraction_date")),
        organisation=d.get("organisation"),
    )


def _conviction_to_dict(c: Conviction) -> dict[str, Any]:
    return {
        "kind": c.kind.value,
        "duration": _duration_to_dict(c.duration),
        "amount": {"value": str(c.amount.value), "currency": c.amount.currency} if c.amount else None,
        "delay": _duration_to_dict(c.delay),
        "detail": c.detail.value,
    }


def _conviction_from_dict(d: dict[str, Any]) -> Conviction:
    amount = d.get("amount")
    return Conviction(
        kind=ConvictionKind(d["kind"]),
        duration=_duration_from_dict(d.get("duration")),
        amount=Money(Decimal(amount["value"]), amount.get("currency", "$")) if amount else None,
        delay=_duration_from_dict(d.get("delay")),
        detail=ConvictionDetail(d.get("detail", "none")),
    )


def charge_to_dict(c: ChargeRecord) -> dict[str, Any]:
    return {
        "index": c.index,
        "law_citation": {
            "act": c.law_citation.act,
            "provision": c.law_citation.provision,
            "paragraph": c.law_citation.paragraph,
            "subparagraph": c.law_citation.subparagraph,
            "secondary_provision": c.law_citation.secondary_provision,
        },
        "plea": c.plea.value if c.plea else None,
        "decisions": [
            {"code": d.code, "date": d.date.isoformat(), "charge_index": d.charge_index}
            for d in c.decisions
        ],
        "sentence": (
            {
                "convictions": [_conviction_to_dict(x) for x in c.sentence.convictions],
                "raw_text": c.sentence.raw_text,
                "unparsed_lines": list(c.sentence.unparsed_lines),
            }
            if c.sentence
            else None
        ),
    }


def charge_from_dict(d: dict[str, Any]) -> ChargeRecord:
    cit = d["law_citation"]
    sentence = d.get("sentence")
    return ChargeRecord(
        index=d["index"],
        law_citation=LawCitation(
            act=cit["act"],
            provision=cit["provision"],
            paragraph=cit.get("paragraph"),
            subparagraph=cit.get("subparagraph"),
            secondary_provision=cit.get("secondary_provision"),
        ),
        plea=PleaCode(d["plea"]) if d.get("plea") else None,
        decisions=tuple(
            DecisionRecord(x["code"], date.fromisoformat(x["date"]), x["charge_index"])
            for x in d.get("decisions", [])
        ),
        sentence=(
            SentenceRecord(
                convictions=tuple(_conviction_from_dict(x) for x in sentence["convictions"]),
                raw_text=sentence["raw_text"],
                unparsed_lines=tuple(sentence.get("unparsed_lines", [])),
            )
            if sentence
            else None
        ),
    )


def case_to_dict(case: CaseRecord) -> dict[str, Any]:
    return {
        "accused": party_to_dict(case.accused),
        "plaintiff": party_to_dict(case.plaintiff),
        "charges": [charge_to_dict(c) for c in case.charges],
    }


def case_from_dict(d: dict[str, Any]) -> CaseRecord:
    return CaseRecord(
        accused=party_from_dict(d["accused"]),
        plaintiff=party_from_dict(d["plaintiff"]),
        charges=tuple(charge_from_dict(c) for c in d["charges"]),
    )


def _part_to_dict(p: PartReport) -> dict[str, Any]:
    return {"status": p.status.value, "message": p.message}


def _part_from_dict(d: dict[str, Any]) -> PartReport:
    return PartReport(PartStatus(d["status"]), d.get("message"))


def report_to_dict(r: GenerationReport) -> dict[str, Any]:
    return {
        "accused": _part_to_dict(r.accused),
        "plaintiff": _part_to_dict(r.plaintiff),
        "charges_part": _part_to_dict(r.charges_part),
        "charges": [_part_to_dict(p) for p in r.charges],
    }


def report_from_dict(d: dict[str, Any]) -> GenerationReport:
    return GenerationReport(
        accused=_part_from_dict(d["accused"]),
        plaintiff=_part_from_dict(d["plaintiff"]),
        charges_part=_part_from_dict(d["charges_part"]),
        charges=tuple(_part_from_dict(p) for p in d.get("charges", [])),
    )


def summary_to_dict(s: Summary) -> dict[str, Any]:
    return {
        "accused_paragraph": s.accused_paragraph,
        "plaintiff_paragraph": s.plaintiff_paragraph,
        "charge_paragraphs": list(s.charge_paragraphs),
        "citations": [
            {
                "charge_index": c.charge_index,
                "provision": c.provision,
                "paragraph": c.paragraph,
                "subparagraph": c.subparagraph,
            }
            for c in s.citations
        ],
        "report": report_to_dict(s.report),
    }


def summary_from_dict(d: dict[str, Any]) -> Summary:
    return Summary(
        accused_paragraph=d.get("accused_paragraph"),
        plaintiff_paragraph=d.get("plaintiff_paragraph"),
        charge_paragraphs=tuple(d.get("charge_paragraphs", [])),
        report=report_from_dict(d["report"]),
        citations=tuple(
            ChargeCitationRef(
                charge_index=c["charge_index"],
                provision=c["provision"],
                paragraph=c.get("paragraph"),
                subparagraph=c.get("subparagraph"),
            )
            for c in d.get("citations", [])
        ),
    )
