"""Turn normalized records into French prose paragraphs.

Every value that appears in the output is rendered from the record or the
provision store; templates contribute only fixed text. Failures never
produce improvised prose: they surface as GenerationError subclasses that
realize_case captures per part in the report.
"""

from __future__ import annotations

from decimal import Decimal

from ..criminal_code import ProvisionStore, lookup
from ..errors import (
    EdgeCaseError,
    GenerationError,
    NoRuleError,
    ProvisionNotFoundError,
    StitchStrategyFailure,
    UnknownCodeError,
)
from ..models import (
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
    PartialCase,
    PartReport,
    PartStatus,
    PartyRecord,
    PartyRole,
    PleaCode,
    SentenceRecord,
    Summary,
)
from .french import (
    attach_preposition,
    format_date_fr,
    format_ordinal_fr,
    lower_first,
    render_amount,
    render_duration,
)
from .rules import RuleTable, fill_pattern
from .stitch import StitchStrategy

# Strategy failure must not erase a charge: fall back to a grammatically
# imperfect but faithful sentence and note the fallback in the report.
FALLBACK_PREPOSITION = "pour"

_KIND_ORDER = {
    ConvictionKind.PENALTY: 0,
    ConvictionKind.FINE_OR_FEE: 1,
    ConvictionKind.COMMUNITY_WORK: 2,
    ConvictionKind.OTHER: 3,
    ConvictionKind.PROBATION: 4,
    ConvictionKind.SURCHARGE: 5,
}

_PENALTY_LETTERS = {
    ConvictionDetail.CUSTODY: "C",
    ConvictionDetail.PRETRIAL_GRANTED: "A",
    ConvictionDetail.INFLICTED: "I",
}

_FLAG_LETTERS = {
    ConvictionKind.FINE_OR_FEE: "F",
    ConvictionKind.COMMUNITY_WORK: "W",
    ConvictionKind.OTHER: "O",
    ConvictionKind.PROBATION: "B",
    ConvictionKind.SURCHARGE: "S",
}


def realize_party(party: PartyRecord, table: RuleTable) -> str:
    """Fill the party rule; absent optional fields shrink the paragraph."""
    rule = table.party["roles"]
    if party.role is PartyRole.ACCUSED:
        pieces = rule["accused"]
        name = party.name.strip()
        if not name:
            raise GenerationError("accused has no name")
        appositive = []
        if party.birth_date is not None:
            appositive.append(fill_pattern(pieces["birth"], {"birth_date": format_date_fr(party.birth_date)}))
        if party.address:
            appositive.append(fill_pattern(pieces["address"], {"address": party.address}))
        if party.infraction_date is not None:
            tail = fill_pattern(pieces["committed"], {"infraction_date": format_date_fr(party.infraction_date)})
        else:
            tail = pieces["no_infraction"]
        if appositive:
            text = f"{name}, {' '.join(appositive)}, {tail}."
        else:
            text = f"{name} {tail}."
        if party.lawyer:
            text += " " + fill_pattern(pieces["lawyer"], {"lawyer": party.lawyer})
        return text

    pieces = rule["plaintiff"]
    identity = party.identity.strip()
    if not identity:
        raise GenerationError("plaintiff has no name or organisation")
    text = fill_pattern(pieces["base"], {"identity": identity})
    if party.lawyer:
        text += " " + fill_pattern(pieces["lawyer"], {"lawyer": party.lawyer})
    return text


def stitch_charge(
    accused_name: str,
    citation: LawCitation,
    store: ProvisionStore,
    strategy: StitchStrategy,
    table: RuleTable,
    warnings: list[str] | None = None,
) -> str:
    """Realize "<accused> est accusé <prep> <provision title>."."""
    result = lookup(store, citation)  # ProvisionNotFoundError propagates to the caller
    title = lower_first(result.provision.title)
    masked = fill_pattern(table.stitch["pattern"], {"accused": accused_name, "article": "{article}"})
    try:
        preposition = strategy.predict(masked, title)
    except StitchStrategyFailure as exc:
        preposition = FALLBACK_PREPOSITION
        if warnings is not None:
            warnings.append(f"stitch fallback '{FALLBACK_PREPOSITION}': {exc}")
    article = attach_preposition(preposition, title)
    return fill_pattern(table.stitch["pattern"], {"accused": accused_name, "article": article})


def realize_plea(plea: PleaCode | None, table: RuleTable) -> str:
    """One fixed clause per plea value; no plea realizes as an empty clause."""
    if plea is None:
        return ""
    return table.pleas[plea.value]["clause"]


def realize_plea_sentence(plea: PleaCode, charge_index: int, table: RuleTable) -> str:
    rule = table.pleas[plea.value]
    return fill_pattern(rule["pattern"], {"ordinal": format_ordinal_fr(charge_index)})


def realize_decisions(decisions: list[DecisionRecord] | tuple[DecisionRecord, ...], table: RuleTable) -> str:
    """One sentence per decision, in order, each from its one-to-one rule."""
    sentences = []
    for decision in decisions:
        rule = table.decisions.get(decision.code)
        if rule is None:
            raise UnknownCodeError(decision.code)
        sentences.append(
            fill_pattern(
                rule["pattern"],
                {"ordinal": format_ordinal_fr(decision.charge_index), "date": format_date_fr(decision.date)},
            )
        )
    return " ".join(sentences)


def order_convictions(convictions) -> list[Conviction]:
    """Stable sort into the fixed kind order (penalty first, surcharge last)."""
    return sorted(convictions, key=lambda c: _KIND_ORDER[c.kind])


def remaining_custody(inflicted_days: int, granted_days: int) -> int:
    """Days left to serve once pre-trial credit is applied."""
    if inflicted_days < 0 or granted_days < 0:
        raise ValueError("durations must be non-negative")
    if granted_days > inflicted_days:
        raise EdgeCaseError(
            f"pre-trial credit ({granted_days} days) exceeds the penalty ({inflicted_days} days)"
        )
    return inflicted_days - granted_days


def sentence_signature(convictions) -> str:
    """Canonical combination key, e.g. "P:CAI+B+S"; duplicates make it unmatchable."""
    penalty_letters = []
    flags = []
    for conviction in order_convictions(convictions):
        if conviction.kind is ConvictionKind.PENALTY:
            letter = _PENALTY_LETTERS.get(conviction.detail)
            penalty_letters.append(letter or "?")
        else:
            flags.append(_FLAG_LETTERS[conviction.kind])
    parts = []
    if penalty_letters:
        parts.append("P:" + "".join(sorted(penalty_letters, key="CAI?".index)))
    parts.extend(sorted(flags, key="FWOBS".index))
    return "+".join(parts)


def _int_days(duration: Duration | None) -> int | None:
    if duration is None or duration.unit is not DurationUnit.DAYS:
        return None
    if duration.quantity != duration.quantity.to_integral_value():
        return None
    return int(duration.quantity)


_PROBATION_TYPES = {
    ConvictionDetail.SUPERVISED: "avec surveillance",
    ConvictionDetail.UNSUPERVISED: "sans surveillance",
}


def _sentence_slot_values(convictions: list[Conviction]) -> dict[str, str | None]:
    values: dict[str, str | None] = {}
    penalty: dict[ConvictionDetail, Conviction] = {}
    for c in convictions:
        if c.kind is ConvictionKind.PENALTY:
            penalty[c.detail] = c
        elif c.kind is ConvictionKind.FINE_OR_FEE:
            values["fine_amount"] = render_amount(c.amount) if c.amount else None
            values["fine_delay"] = render_duration(c.delay) if c.delay else None
        elif c.kind is ConvictionKind.COMMUNITY_WORK:
            values["work_duration"] = render_duration(c.duration) if c.duration else None
            values["work_delay"] = render_duration(c.delay) if c.delay else None
        elif c.kind is ConvictionKind.PROBATION:
            values["probation_duration"] = render_duration(c.duration) if c.duration else None
            values["probation_type"] = _PROBATION_TYPES.get(c.detail)
        elif c.kind is ConvictionKind.SURCHARGE:
            values["surcharge_delay"] = render_duration(c.delay) if c.delay else None

    for detail, slot in ((ConvictionDetail.CUSTODY, "custody"),
                         (ConvictionDetail.PRETRIAL_GRANTED, "granted"),
                         (ConvictionDetail.INFLICTED, "inflicted")):
        if detail in penalty:
            duration = penalty[detail].duration
            values[slot] = render_duration(duration) if duration else None

    if ConvictionDetail.PRETRIAL_GRANTED in penalty and ConvictionDetail.INFLICTED in penalty:
        inflicted = _int_days(penalty[ConvictionDetail.INFLICTED].duration)
        granted = _int_days(penalty[ConvictionDetail.PRETRIAL_GRANTED].duration)
        if inflicted is None or granted is None:
            raise EdgeCaseError("remaining custody needs whole-day inflicted and granted durations")
        remaining = remaining_custody(inflicted, granted)
        values["remaining"] = render_duration(Duration(Decimal(remaining), DurationUnit.DAYS))
    return values


def realize_sentence(sentence: SentenceRecord, table: RuleTable) -> str:
    """Fill the single merged template matching the conviction combination."""
    if sentence.unparsed_lines:
        raise NoRuleError(f"unrecognized penalty line(s): {'; '.join(sentence.unparsed_lines)}")
    ordered = order_convictions(sentence.convictions)
    signature = sentence_signature(ordered)
    rule = table.sentences.get(signature)
    if rule is None:
        raise NoRuleError(signature)
    return fill_pattern(rule["pattern"], _sentence_slot_values(ordered))


def _realize_charge(
    charge: ChargeRecord,
    accused_name: str,
    store: ProvisionStore,
    table: RuleTable,
    strategy: StitchStrategy,
) -> tuple[str, list[str]]:
    warnings: list[str] = []
    sentences = [stitch_charge(accused_name, charge.law_citation, store, strategy, table, warnings)]
    if charge.plea is not None:
        sentences.append(realize_plea_sentence(charge.plea, charge.index, table))
    if charge.decisions:
        sentences.append(realize_decisions(charge.decisions, table))
    if charge.sentence is not None and charge.sentence.raw_text.strip():
        sentences.append(realize_sentence(charge.sentence, table))
    return " ".join(sentences), warnings


def realize_case(
    case: CaseRecord | PartialCase,
    store: ProvisionStore,
    table: RuleTable,
    strategy: StitchStrategy,
) -> Summary:
    """Realize every part, degrading per part: one failure never hides the rest."""
    partial = PartialCase.from_case(case) if isinstance(case, CaseRecord) else case

    if partial.accused is None:
        accused_text = None
        accused_report = PartReport(PartStatus.EXTRACTION_ERROR, partial.accused_issue or "accused not extracted")
    else:
        try:
            accused_text = realize_party(partial.accused, table)
            accused_report = PartReport(PartStatus.OK)
        except GenerationError as exc:
            accused_text = None
            accused_report = PartReport(PartStatus.GENERATION_ERROR, str(exc))

    if partial.plaintiff is None:
        plaintiff_text = None
        plaintiff_report = PartReport(PartStatus.EXTRACTION_ERROR, partial.plaintiff_issue or "plaintiff not extracted")
    else:
        try:
            plaintiff_text = realize_party(partial.plaintiff, table)
            plaintiff_report = PartReport(PartStatus.OK)
        except GenerationError as exc:
            plaintiff_text = None
            plaintiff_report = PartReport(PartStatus.GENERATION_ERROR, str(exc))

    accused_name = partial.accused.name.strip() if partial.accused else "L'accusé"

    charge_texts: list[str | None] = []
    charge_reports: list[PartReport] = []
    citations: list[ChargeCitationRef] = []
    for position, charge in enumerate(partial.charges, start=1):
        if charge is None:
            charge_texts.append(None)
            charge_reports.append(
                PartReport(PartStatus.EXTRACTION_ERROR, partial.charge_issues.get(position, "charge not extracted"))
            )
            continue
        citations.append(
            ChargeCitationRef(
                charge_index=charge.index,
                provision=charge.law_citation.provision,
                paragraph=charge.law_citation.paragraph,
                subparagraph=charge.law_citation.subparagraph,
            )
        )
        try:
            text, warnings = _realize_charge(charge, accused_name, store, table, strategy)
            charge_texts.append(text)
            charge_reports.append(PartReport(PartStatus.OK, "; ".join(warnings) or None))
        except (ProvisionNotFoundError, GenerationError) as exc:
            charge_texts.append(None)
            charge_reports.append(PartReport(PartStatus.GENERATION_ERROR, str(exc)))

    if partial.charges_part_issue is not None:
        charges_part = PartReport(PartStatus.EXTRACTION_ERROR, partial.charges_part_issue)
    elif not partial.charges:
        charges_part = PartReport(PartStatus.OK, "no charges in the docket")
    else:
        charges_part = PartReport(PartStatus.OK)

    report = GenerationReport(
        accused=accused_report,
        plaintiff=plaintiff_report,
        charges_part=charges_part,
        charges=tuple(charge_reports),
    )
    return Summary(
        accused_paragraph=accused_text,
        plaintiff_paragraph=plaintiff_text,
        charge_paragraphs=tuple(charge_texts),
        report=report,
        citations=tuple(citations),
    )
