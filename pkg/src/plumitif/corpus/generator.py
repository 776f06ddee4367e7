"""Seeded synthetic docket generator with gold annotations.

Documents follow the docket layout conventions (line markers, abbreviated
fields, DD/MM/YYYY dates). Records are sampled first, rendered to text
with exact offset tracking, and the gold case is re-derived through the
same conviction grammar the extractor uses, so gold segments, entities and
case stay mutually consistent by construction. All values come from
fictional pools; nothing here is real personal data.
"""

from __future__ import annotations

import json
import random
import unicodedata
from dataclasses import dataclass
from datetime import date
from decimal import Decimal
from importlib import resources

from ..criminal_code import ProvisionStore, import_json
from ..extractor.normalize import parse_sentence_block
from ..models import (
    CaseRecord,
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
    PartyRecord,
    PartyRole,
    PleaCode,
    RawPlumitif,
    Segment,
    SegmentKind,
    SentenceRecord,
)
from ..realization.french import title_case_name
from .profiles import DistrictProfile

FIGURE_EDGE_LINES = (
    "PROBATION DE  2 ANS SURV.",
    "PROBATION DPAC:8.5MS/EMPR:6.5M",
    "TC 75 HS DEL 12 MS/SUIVI PROB 1 1/2 AN",
)

_DECISION_CODES = (
    "COUPABLE", "NON-COUPABLE", "ARRET", "N-RESP.TR.MENT", "ACQUITTE", "RETRAIT",
    "REJET", "LIBERATION", "ANNULATION", "SUSPENSION", "PRESCRIPTION", "DESSAISISSEMENT",
)


def _load_pools() -> dict:
    return json.loads(resources.files("plumitif.data").joinpath("pools.json").read_text("utf-8"))


def default_store() -> ProvisionStore:
    text = resources.files("plumitif.data").joinpath("ccc_fixture.json").read_text("utf-8")
    return import_json(text, source="package fixture")


@dataclass(frozen=True)
class GoldPlumitif:
    """A synthetic docket with its gold segmentation, entities and case."""

    district: str
    raw: RawPlumitif
    header: str
    gold_segments: tuple[Segment, ...]
    gold_entities: dict[SegmentKind, tuple[Entity, ...]]
    gold_case: CaseRecord


class OracleTagger:
    """Perfect tagger backed by one document's gold annotation."""

    identifier = "oracle"

    def __init__(self, gold: GoldPlumitif):
        self.gold = gold

    def tag(self, segment: Segment) -> list[Entity]:
        return list(self.gold.gold_entities.get(segment.kind, ()))


class _DocBuilder:
    """Accumulates lines while recording segment starts and entity spans."""

    def __init__(self):
        self.chunks: list[str] = []
        self.pos = 0
        self.marks: list[tuple[SegmentKind, int]] = []
        self.entities: list[tuple[SegmentKind, EntityLabel, int, int, str]] = []
        self._segment: SegmentKind | None = None

    def begin_part(self, kind: SegmentKind):
        self.marks.append((kind, self.pos))
        self._segment = kind

    def _append(self, text: str):
        self.chunks.append(text)
        self.pos += len(text)

    def line(self, *pieces: str | tuple[str, EntityLabel]):
        for piece in pieces:
            if isinstance(piece, tuple):
                text, label = piece
                self.entities.append((self._segment, label, self.pos, self.pos + len(text), text))
                self._append(text)
            else:
                self._append(piece)
        self._append("\n")

    def block_entity(self, label: EntityLabel, lines: tuple[str, ...]):
        start = self.pos
        for text in lines:
            self.line(text)
        end = self.pos - 1  # exclude the trailing newline
        self.entities.append((self._segment, label, start, end, "\n".join(lines)))

    def build(self, district: str) -> tuple[RawPlumitif, str, tuple[Segment, ...], dict]:
        text = "".join(self.chunks)
        raw = RawPlumitif(text=text, source_district=district)
        header = text[: self.marks[0][1]] if self.marks else text
        segments = []
        for i, (kind, start) in enumerate(self.marks):
            end = self.marks[i + 1][1] if i + 1 < len(self.marks) else len(text)
            segments.append(Segment(kind=kind, start=start, end=end, text=text[start:end]))
        by_kind: dict[SegmentKind, list[Entity]] = {s.kind: [] for s in segments}
        seg_start = {s.kind: s.start for s in segments}
        for kind, label, start, end, surface in self.entities:
            rel = start - seg_start[kind]
            by_kind[kind].append(Entity(label=label, start=rel, end=rel + (end - start), surface=surface))
        gold_entities = {kind: tuple(sorted(ents, key=lambda e: e.start)) for kind, ents in by_kind.items()}
        return raw, header, tuple(segments), gold_entities


def _strip_accents(text: str) -> str:
    return "".join(c for c in unicodedata.normalize("NFD", text) if unicodedata.category(c) != "Mn")


def _fmt_date(d: date) -> str:
    return f"{d.day:02d}/{d.month:02d}/{d.year}"


def _rand_date(rng: random.Random, first_year: int, last_year: int) -> date:
    return date(rng.randint(first_year, last_year), rng.randint(1, 12), rng.randint(1, 28))


def _person(rng: random.Random, pools: dict) -> str:
    return f"{rng.choice(pools['surnames'])}, {rng.choice(pools['given_names'])}"


def _address(rng: random.Random, pools: dict) -> str:
    number = rng.randint(1, 9999)
    street = rng.choice(pools["streets"])
    letters = pools["postal_letters"]
    postal = "".join(
        rng.choice(letters) if i % 2 == 0 else str(rng.randint(0, 9)) for i in range(6)
    )
    return f"{number} {street} QC {postal}"


def _sample_citation(rng: random.Random, store: ProvisionStore) -> LawCitation:
    numbers = sorted(n for n, p in store.provisions.items() if not p.repealed)
    number = rng.choice(numbers)
    provision = store.provisions[number]
    paragraph = None
    subparagraph = None
    if provision.paragraphs and rng.random() < 0.5:
        paragraph = rng.choice(sorted(provision.paragraphs))
        subs = provision.paragraphs[paragraph].subparagraphs
        if subs and rng.random() < 0.5:
            subparagraph = rng.choice(sorted(subs))
    secondary = rng.choice(numbers) if rng.random() < 0.1 else None
    return LawCitation(
        act="C.CR.",
        provision=number,
        paragraph=paragraph,
        subparagraph=subparagraph,
        secondary_provision=secondary,
    )


def _citation_text(citation: LawCitation) -> str:
    parts = ["ART.", citation.provision]
    if citation.paragraph:
        parts.append(citation.paragraph)
    if citation.subparagraph:
        parts.append(citation.subparagraph)
    if citation.secondary_provision:
        parts.extend(["+", "ART.", citation.secondary_provision])
    parts.append("C.CR.")
    return " ".join(parts)


def render_conviction_lines(convictions: tuple[Conviction, ...]) -> list[str]:
    """Docket lines for sampled convictions; exact inverse of the line grammar."""
    lines = []
    for c in convictions:
        if c.kind is ConvictionKind.PENALTY:
            token = {
                ConvictionDetail.CUSTODY: "PROV",
                ConvictionDetail.PRETRIAL_GRANTED: "ACC",
                ConvictionDetail.INFLICTED: "INF",
            }[c.detail]
            lines.append(f"EMPR {token} {c.duration.quantity} JRS")
        elif c.kind is ConvictionKind.FINE_OR_FEE:
            line = f"AMENDE {c.amount.value} $"
            if c.delay:
                line += f" DEL {c.delay.quantity} JRS"
            lines.append(line)
        elif c.kind is ConvictionKind.COMMUNITY_WORK:
            line = f"TC {c.duration.quantity} HS"
            if c.delay:
                line += f" DEL {c.delay.quantity} MS"
            lines.append(line)
        elif c.kind is ConvictionKind.OTHER:
            lines.append("AUTRE ORDONNANCE")
        elif c.kind is ConvictionKind.PROBATION:
            unit = {DurationUnit.YEARS: "ANS" if c.duration.quantity != 1 else "AN",
                    DurationUnit.MONTHS: "MS", DurationUnit.DAYS: "JRS"}[c.duration.unit]
            line = f"PROBATION DE {c.duration.quantity} {unit}"
            if c.detail is ConvictionDetail.UNSUPERVISED:
                line += " SANS SURV."
            elif c.detail is ConvictionDetail.SUPERVISED:
                line += " SURV."
            lines.append(line)
        elif c.kind is ConvictionKind.SURCHARGE:
            line = "SURAMENDE"
            if c.amount:
                line += f" {c.amount.value} $"
            line += f" DEL {c.delay.quantity} JRS"
            lines.append(line)
    return lines


def _sample_convictions(rng: random.Random, signature: str) -> tuple[Conviction, ...]:
    convictions: list[Conviction] = []
    parts = signature.split("+")
    penalty = parts[0][2:] if parts and parts[0].startswith("P:") else ""
    flags = parts[1:] if penalty else parts

    if penalty:
        inflicted = rng.randint(10, 60)
        granted = rng.randint(1, max(1, inflicted - 1))
        custody = rng.randint(granted, 90)
        letters = {
            "C": (ConvictionDetail.CUSTODY, custody),
            "A": (ConvictionDetail.PRETRIAL_GRANTED, granted),
            "I": (ConvictionDetail.INFLICTED, inflicted),
        }
        for letter in "CAI":
            if letter in penalty:
                detail, days = letters[letter]
                convictions.append(
                    Conviction(
                        kind=ConvictionKind.PENALTY,
                        detail=detail,
                        duration=Duration(Decimal(days), DurationUnit.DAYS),
                    )
                )
    for flag in flags:
        if flag == "F":
            delay = (
                Duration(Decimal(rng.choice((30, 60, 90))), DurationUnit.DAYS)
                if rng.random() < 0.6
                else None
            )
            convictions.append(
                Conviction(
                    kind=ConvictionKind.FINE_OR_FEE,
                    amount=Money(Decimal(rng.randrange(100, 2001, 50))),
                    delay=delay,
                )
            )
        elif flag == "W":
            delay = (
                Duration(Decimal(rng.choice((6, 12, 18))), DurationUnit.MONTHS)
                if rng.random() < 0.7
                else None
            )
            convictions.append(
                Conviction(
                    kind=ConvictionKind.COMMUNITY_WORK,
                    duration=Duration(Decimal(rng.randrange(25, 241, 5)), DurationUnit.HOURS),
                    delay=delay,
                )
            )
        elif flag == "O":
            convictions.append(Conviction(kind=ConvictionKind.OTHER))
        elif flag == "B":
            if rng.random() < 0.7:
                duration = Duration(Decimal(rng.choice((1, 2, 3))), DurationUnit.YEARS)
            else:
                duration = Duration(Decimal(rng.choice((6, 12, 18))), DurationUnit.MONTHS)
            detail = rng.choice(
                (ConvictionDetail.UNSUPERVISED, ConvictionDetail.SUPERVISED, ConvictionDetail.NONE)
            )
            convictions.append(Conviction(kind=ConvictionKind.PROBATION, duration=duration, detail=detail))
        elif flag == "S":
            amount = Money(Decimal(rng.choice((100, 200)))) if rng.random() < 0.2 else None
            convictions.append(
                Conviction(
                    kind=ConvictionKind.SURCHARGE,
                    amount=amount,
                    delay=Duration(Decimal(rng.choice((30, 45, 60, 90))), DurationUnit.DAYS),
                )
            )
    return tuple(convictions)


def _edge_case_lines(rng: random.Random) -> tuple[str, ...]:
    flavor = rng.choice(("figure", "credit_exceeds", "uncovered"))
    if flavor == "figure":
        return FIGURE_EDGE_LINES
    if flavor == "credit_exceeds":
        inflicted = rng.randint(5, 20)
        granted = inflicted + rng.randint(1, 15)
        custody = granted + rng.randint(0, 10)
        return (
            f"EMPR PROV {custody} JRS",
            f"EMPR ACC {granted} JRS",
            f"EMPR INF {inflicted} JRS",
        )
    if rng.random() < 0.5:
        return (f"EMPR PROV {rng.randint(5, 40)} JRS",)
    return ("AUTRE ORDONNANCE", f"TC {rng.randrange(25, 241, 5)} HS")


def _weighted_choice(rng: random.Random, mix: tuple[tuple[str, float], ...]) -> str:
    total = sum(w for _, w in mix)
    roll = rng.random() * total
    acc = 0.0
    for sig, w in mix:
        acc += w
        if roll < acc:
            return sig
    return mix[-1][0]


def synthesize(
    profile: DistrictProfile,
    seed: int,
    n: int,
    store: ProvisionStore | None = None,
) -> list[GoldPlumitif]:
    """Deterministically generate n gold-annotated dockets for one district."""
    if n < 1:
        raise ValueError("n must be >= 1")
    store = store or default_store()
    pools = _load_pools()
    rng = random.Random(f"{profile.name}:{seed}")
    documents = []
    for _ in range(n):
        documents.append(_one_document(rng, profile, pools, store))
    return documents


def _one_document(
    rng: random.Random, profile: DistrictProfile, pools: dict, store: ProvisionStore
) -> GoldPlumitif:
    b = _DocBuilder()
    case_no = f"{rng.randint(100, 799)}-01-{rng.randint(0, 999999):06d}-{rng.randint(150, 229)}"
    b.line(f"NO DOSSIER: {case_no}")

    # Accused block
    b.begin_part(SegmentKind.ACCUSED)
    accused_name = _person(rng, pools)
    b.line("ACC. ", (accused_name, EntityLabel.PERSON))
    birth = _rand_date(rng, 1950, 2003) if rng.random() < 0.95 else None
    if birth:
        b.line("NE LE: ", (_fmt_date(birth), EntityLabel.DATE))
    address = _address(rng, pools) if rng.random() < 0.9 else None
    if address:
        b.line("ADR. ", (address, EntityLabel.ADDRESS))
    accused_lawyer = _person(rng, pools) if rng.random() < 0.8 else None
    if accused_lawyer:
        b.line("AV. ME ", (accused_lawyer, EntityLabel.PERSON))
    infraction = _rand_date(rng, 2018, 2021) if rng.random() < 0.9 else None
    if infraction:
        b.line("INF. ", (_fmt_date(infraction), EntityLabel.DATE))

    # Plaintiff block
    b.begin_part(SegmentKind.PLAINTIFF)
    plaintiff_org = None
    plaintiff_name = None
    if rng.random() < profile.organisation_plaintiff_rate:
        if rng.random() < profile.unrecognized_organisation_rate:
            plaintiff_org = rng.choice(pools["organisations_exotic"])
        else:
            plaintiff_org = rng.choice(pools["organisations_recognized"])
        b.line("PLG. ", (plaintiff_org, EntityLabel.ORGANISATION))
    else:
        plaintiff_name = _person(rng, pools)
        b.line("PLG. ", (plaintiff_name, EntityLabel.PERSON))
    plaintiff_lawyer = _person(rng, pools) if rng.random() < 0.4 else None
    if plaintiff_lawyer:
        b.line("AV. ME ", (plaintiff_lawyer, EntityLabel.PERSON))

    # Charges block
    b.begin_part(SegmentKind.CHARGES)
    b.line("CHEFS:")
    lo, hi = profile.charge_count_range
    n_charges = rng.randint(lo, hi)
    edge_doc = rng.random() < profile.edge_case_rate
    edge_charge = rng.randint(1, n_charges) if edge_doc else 0

    charges = []
    for index in range(1, n_charges + 1):
        citation = _sample_citation(rng, store)
        title = store.provisions[citation.provision].title
        description = _strip_accents(title).upper() if rng.random() < 0.6 else None
        if description:
            b.line(f"CHEF {index:03d} ", (description, EntityLabel.CHARGE), " ",
                   (_citation_text(citation), EntityLabel.LAW))
        else:
            b.line(f"CHEF {index:03d} ", (_citation_text(citation), EntityLabel.LAW))

        plea = None
        if rng.random() < 0.8:
            plea = rng.choice((PleaCode.GUILTY, PleaCode.NOT_GUILTY))
            plea_token = "COUPABLE" if plea is PleaCode.GUILTY else "NON COUPABLE"
            b.line("PLAID. ", (plea_token, EntityLabel.PLEA), " ",
                   (_fmt_date(_rand_date(rng, 2019, 2022)), EntityLabel.DATE))

        decisions = []
        if rng.random() < 0.9:
            for _ in range(rng.choice((1, 1, 1, 2))):
                code = rng.choice(_DECISION_CODES)
                when = _rand_date(rng, 2019, 2022)
                b.line("DEC. ", (code, EntityLabel.DECISION), " ",
                       (_fmt_date(when), EntityLabel.DATE))
                decisions.append(DecisionRecord(code=code, date=when, charge_index=index))

        sentence = None
        needs_sentence = rng.random() < 0.75 or index == edge_charge
        if needs_sentence:
            if index == edge_charge:
                lines = _edge_case_lines(rng)
            else:
                signature = _weighted_choice(rng, profile.conviction_mix)
                lines = tuple(render_conviction_lines(_sample_convictions(rng, signature)))
            b.line("PEINE:")
            b.block_entity(EntityLabel.SENTENCE, lines)
            block_text = "\n".join(lines)
            convictions, unparsed = parse_sentence_block(block_text)
            sentence = SentenceRecord(convictions=convictions, raw_text=block_text, unparsed_lines=unparsed)

        charges.append(
            ChargeRecord(
                index=index,
                law_citation=citation,
                plea=plea,
                decisions=tuple(decisions),
                sentence=sentence,
            )
        )

    raw, header, segments, gold_entities = b.build(profile.name)
    gold_case = CaseRecord(
        accused=PartyRecord(
            role=PartyRole.ACCUSED,
            name=title_case_name(accused_name),
            birth_date=birth,
            address=address,
            lawyer=title_case_name(accused_lawyer) if accused_lawyer else None,
            infraction_date=infraction,
        ),
        plaintiff=PartyRecord(
            role=PartyRole.PLAINTIFF,
            name=title_case_name(plaintiff_name) if plaintiff_name else "",
            lawyer=title_case_name(plaintiff_lawyer) if plaintiff_lawyer else None,
            organisation=plaintiff_org,
        ),
        charges=tuple(charges),
    )
    return GoldPlumitif(
        district=profile.name,
        raw=raw,
        header=header,
        gold_segments=segments,
        gold_entities=gold_entities,
        gold_case=gold_case,
    )
