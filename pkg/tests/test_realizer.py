from datetime import date
from decimal import Decimal

import pytest
from hypothesis import given, strategies as st

from conftest import ACCUSED_PARAGRAPH, DECISION_SENTENCE_1, DECISION_SENTENCE_2, SENTENCE_PARAGRAPH, STITCH_SENTENCE
from plumitif.corpus import FIGURE_EDGE_LINES
from plumitif.errors import (
    EdgeCaseError,
    GenerationError,
    NoRuleError,
    ProvisionNotFoundError,
    UnknownCodeError,
)
from plumitif.extractor import parse_sentence_block
from plumitif.models import (
    CaseRecord,
    ChargeRecord,
    Conviction,
    ConvictionDetail,
    ConvictionKind,
    DecisionRecord,
    Duration,
    DurationUnit,
    LawCitation,
    Money,
    PartialCase,
    PartStatus,
    PartyRecord,
    PartyRole,
    PleaCode,
    SentenceRecord,
)
from plumitif.realization import (
    LexiconStitcher,
    format_date_fr,
    format_ordinal_fr,
    load_preposition_lexicon,
    load_rule_table,
    order_convictions,
    realize_case,
    realize_decisions,
    realize_party,
    realize_plea,
    realize_sentence,
    remaining_custody,
    sentence_signature,
    stitch_charge,
)


@pytest.fixture(scope="module")
def table():
    return load_rule_table()


@pytest.fixture(scope="module")
def stitcher():
    return LexiconStitcher(load_preposition_lexicon())


def duration(q, unit=DurationUnit.DAYS):
    return Duration(Decimal(q), unit)


def five_conviction_record() -> SentenceRecord:
    convictions = (
        Conviction(kind=ConvictionKind.SURCHARGE, delay=duration(45)),
        Conviction(kind=ConvictionKind.PENALTY, detail=ConvictionDetail.CUSTODY, duration=duration(39)),
        Conviction(kind=ConvictionKind.PENALTY, detail=ConvictionDetail.PRETRIAL_GRANTED, duration=duration(9)),
        Conviction(kind=ConvictionKind.PENALTY, detail=ConvictionDetail.INFLICTED, duration=duration(30)),
        Conviction(
            kind=ConvictionKind.PROBATION,
            duration=duration(2, DurationUnit.YEARS),
            detail=ConvictionDetail.UNSUPERVISED,
        ),
    )
    return SentenceRecord(convictions=convictions, raw_text="PEINE (fixture)")


class TestFrenchFormatting:
    def test_first_of_january(self):
        assert format_date_fr(date(1979, 1, 1)) == "1er janvier 1979"

    def test_first_of_december(self):
        assert format_date_fr(date(2019, 12, 1)) == "1er décembre 2019"

    def test_cardinal_day(self):
        assert format_date_fr(date(2020, 3, 15)) == "15 mars 2020"

    def test_ordinals(self):
        assert format_ordinal_fr(1) == "1er"
        assert format_ordinal_fr(2) == "2e"
        assert format_ordinal_fr(7) == "7e"

    def test_ordinal_rejects_zero(self):
        with pytest.raises(ValueError):
            format_ordinal_fr(0)

    @given(st.dates(min_value=date(1900, 1, 1), max_value=date(2100, 12, 31)))
    def test_date_property(self, d):
        text = format_date_fr(d)
        day, month, year = text.split(" ")
        assert day == ("1er" if d.day == 1 else str(d.day))
        assert year == str(d.year)
        assert month.islower()


class TestRealizeParty:
    def test_reference_accused_paragraph(self, table):
        record = PartyRecord(
            role=PartyRole.ACCUSED,
            name="John Doe",
            birth_date=date(1979, 1, 1),
            address="1 de l'étang QC G1G1G1",
            lawyer="Jane Doe",
            infraction_date=date(2019, 12, 1),
        )
        assert realize_party(record, table) == ACCUSED_PARAGRAPH

    def test_name_only_shortest_variant(self, table):
        record = PartyRecord(role=PartyRole.ACCUSED, name="Luc Roy")
        text = realize_party(record, table)
        assert text == "Luc Roy est l'accusé dans ce dossier."

    def test_birth_without_address(self, table):
        record = PartyRecord(role=PartyRole.ACCUSED, name="Luc Roy",
                             birth_date=date(1980, 3, 2), infraction_date=date(2020, 5, 4))
        assert realize_party(record, table) == (
            "Luc Roy, né le 2 mars 1980, a commis une infraction le 4 mai 2020."
        )

    def test_organisation_plaintiff_variant(self, table):
        record = PartyRecord(role=PartyRole.PLAINTIFF, organisation="VILLE DE GRANBY")
        assert realize_party(record, table) == "La plainte a été déposée par VILLE DE GRANBY."

    def test_plaintiff_with_lawyer(self, table):
        record = PartyRecord(role=PartyRole.PLAINTIFF, name="Alice Tremblay", lawyer="Marc Roy")
        text = realize_party(record, table)
        assert text.startswith("La plainte a été déposée par Alice Tremblay.")
        assert "représentée par Me Marc Roy." in text

    def test_nameless_accused_fails(self, table):
        with pytest.raises(GenerationError):
            realize_party(PartyRecord(role=PartyRole.ACCUSED, name=""), table)


class TestStitchCharge:
    def test_reference_stitch_example(self, table, store, stitcher):
        citation = LawCitation(act="C.CR.", provision="733.1")
        text = stitch_charge("John Doe", citation, store, stitcher, table)
        assert text == STITCH_SENTENCE

    def test_elision_before_vowel_initial_title(self, table, store, stitcher):
        citation = LawCitation(act="C.CR.", provision="346")  # Extorsion
        text = stitch_charge("Luc Roy", citation, store, stitcher, table)
        assert text == "Luc Roy est accusé d'extorsion."

    def test_h_mute_title_elides(self, table, store, stitcher):
        citation = LawCitation(act="C.CR.", provision="236")  # Homicide involontaire coupable
        text = stitch_charge("Luc Roy", citation, store, stitcher, table)
        assert text.startswith("Luc Roy est accusé d'homicide")

    def test_h_aspirated_title_does_not_elide(self, table, store, stitcher):
        citation = LawCitation(act="C.CR.", provision="264")  # Harcèlement criminel
        text = stitch_charge("Luc Roy", citation, store, stitcher, table)
        assert text == "Luc Roy est accusé de harcèlement criminel."

    def test_missing_provision_propagates(self, table, store, stitcher):
        with pytest.raises(ProvisionNotFoundError):
            stitch_charge("Luc Roy", LawCitation(act="C.CR.", provision="9999"), store, stitcher, table)

    def test_strategy_failure_falls_back_with_warning(self, table, store):
        strict = LexiconStitcher({}, use_heuristic=False)
        warnings = []
        text = stitch_charge("Luc Roy", LawCitation(act="C.CR.", provision="322"), store, strict, table, warnings)
        assert text == "Luc Roy est accusé pour vol."
        assert warnings and "fallback" in warnings[0]


class TestRealizeDecisions:
    def test_reference_decision_pair(self, table):
        decisions = [
            DecisionRecord(code="arret", date=date(2020, 1, 1), charge_index=1),
            DecisionRecord(code="n-resp.tr.ment", date=date(2020, 1, 1), charge_index=2),
        ]
        assert realize_decisions(decisions, table) == f"{DECISION_SENTENCE_1} {DECISION_SENTENCE_2}"

    def test_unknown_code(self, table):
        with pytest.raises(UnknownCodeError):
            realize_decisions([DecisionRecord(code="zzz-inconnu", date=date(2020, 1, 1), charge_index=1)], table)

    def test_mapping_is_one_to_one(self, table):
        assert len(table.decisions) == 12
        phrases = [rule["phrase"] for rule in table.decisions.values()]
        assert len(set(phrases)) == 12


class TestRealizePlea:
    def test_guilty_clause(self, table):
        assert realize_plea(PleaCode.GUILTY, table) == "un plaidoyer de culpabilité"

    def test_not_guilty_clause(self, table):
        assert realize_plea(PleaCode.NOT_GUILTY, table) == "un plaidoyer de non-culpabilité"

    def test_absent_plea_is_empty_clause(self, table):
        assert realize_plea(None, table) == ""


class TestOrderConvictions:
    def test_fixed_kind_order(self):
        mixed = [
            Conviction(kind=ConvictionKind.SURCHARGE, delay=duration(45)),
            Conviction(kind=ConvictionKind.PROBATION, duration=duration(2, DurationUnit.YEARS)),
            Conviction(kind=ConvictionKind.PENALTY, detail=ConvictionDetail.INFLICTED, duration=duration(30)),
        ]
        kinds = [c.kind for c in order_convictions(mixed)]
        assert kinds == [ConvictionKind.PENALTY, ConvictionKind.PROBATION, ConvictionKind.SURCHARGE]

    def test_empty(self):
        assert order_convictions([]) == []

    def test_stability_within_a_kind(self):
        first = Conviction(kind=ConvictionKind.FINE_OR_FEE, amount=Money(Decimal(100)))
        second = Conviction(kind=ConvictionKind.FINE_OR_FEE, amount=Money(Decimal(200)))
        assert order_convictions([first, second]) == [first, second]

    @given(st.permutations([ConvictionKind.PENALTY, ConvictionKind.FINE_OR_FEE, ConvictionKind.COMMUNITY_WORK,
                            ConvictionKind.OTHER, ConvictionKind.PROBATION, ConvictionKind.SURCHARGE]))
    def test_always_sorted(self, kinds):
        order = [ConvictionKind.PENALTY, ConvictionKind.FINE_OR_FEE, ConvictionKind.COMMUNITY_WORK,
                 ConvictionKind.OTHER, ConvictionKind.PROBATION, ConvictionKind.SURCHARGE]
        out = order_convictions([Conviction(kind=k) for k in kinds])
        assert [c.kind for c in out] == sorted(kinds, key=order.index)


class TestRemainingCustody:
    def test_reference_arithmetic(self):
        assert remaining_custody(30, 9) == 21

    def test_zero_credit(self):
        assert remaining_custody(30, 0) == 30

    def test_credit_exceeding_penalty_is_an_edge_case(self):
        with pytest.raises(EdgeCaseError):
            remaining_custody(10, 15)


class TestRealizeSentence:
    def test_reference_five_conviction_paragraph(self, table):
        assert realize_sentence(five_conviction_record(), table) == SENTENCE_PARAGRAPH

    def test_single_fine(self, table):
        record = SentenceRecord(
            convictions=(Conviction(kind=ConvictionKind.FINE_OR_FEE, amount=Money(Decimal(500))),),
            raw_text="AMENDE 500 $",
        )
        assert realize_sentence(record, table) == "L'accusé doit payer une amende de 500 $."

    def test_fine_with_delay_optional_group(self, table):
        record = SentenceRecord(
            convictions=(Conviction(kind=ConvictionKind.FINE_OR_FEE, amount=Money(Decimal(500)),
                                    delay=duration(30)),),
            raw_text="AMENDE 500 $ DEL 30 JRS",
        )
        assert realize_sentence(record, table) == (
            "L'accusé doit payer une amende de 500 $ dans un délais de 30 jours."
        )

    def test_figure_style_combination_has_no_rule(self, table):
        convictions, unparsed = parse_sentence_block("\n".join(FIGURE_EDGE_LINES))
        record = SentenceRecord(convictions=convictions, raw_text="\n".join(FIGURE_EDGE_LINES),
                                unparsed_lines=unparsed)
        with pytest.raises(NoRuleError):
            realize_sentence(record, table)

    def test_unparsed_lines_block_realization(self, table):
        record = SentenceRecord(
            convictions=(Conviction(kind=ConvictionKind.OTHER),),
            raw_text="AUTRE ORDONNANCE\nLIGNE INCONNUE",
            unparsed_lines=("LIGNE INCONNUE",),
        )
        with pytest.raises(NoRuleError):
            realize_sentence(record, table)

    def test_signature_uniqueness_no_cascade(self, table):
        record = five_conviction_record()
        signature = sentence_signature(record.convictions)
        assert signature == "P:CAI+B+S"
        matches = [s for s in table.sentences if s == signature]
        assert len(matches) == 1

    def test_rule_accounting(self, table):
        assert len(table.pleas) + len(table.decisions) == 14
        assert len(table.sentences) == 50
        assert table.total_rules == 66


def make_case(charges):
    return CaseRecord(
        accused=PartyRecord(role=PartyRole.ACCUSED, name="Luc Roy"),
        plaintiff=PartyRecord(role=PartyRole.PLAINTIFF, organisation="DPCP"),
        charges=tuple(charges),
    )


class TestRealizeCase:
    def test_well_formed_case_all_parts_ok(self, table, store, stitcher):
        case = make_case([
            ChargeRecord(index=1, law_citation=LawCitation(act="C.CR.", provision="266"),
                         plea=PleaCode.GUILTY,
                         decisions=(DecisionRecord(code="coupable", date=date(2021, 2, 3), charge_index=1),),
                         sentence=five_conviction_record()),
        ])
        summary = realize_case(case, store, table, stitcher)
        assert all(p.status is PartStatus.OK for _, p in summary.report.parts())
        assert summary.citations[0].provision == "266"

    def test_unresolvable_plaintiff_degrades_only_that_part(self, table, store, stitcher):
        partial = PartialCase(
            accused=PartyRecord(role=PartyRole.ACCUSED, name="Luc Roy"),
            plaintiff=None,
            plaintiff_issue="no identity",
            charges=(ChargeRecord(index=1, law_citation=LawCitation(act="C.CR.", provision="266")),),
        )
        summary = realize_case(partial, store, table, stitcher)
        assert summary.report.plaintiff.status is PartStatus.EXTRACTION_ERROR
        assert summary.report.accused.status is PartStatus.OK
        assert summary.report.charges[0].status is PartStatus.OK
        assert summary.plaintiff_paragraph is None

    def test_figure_style_sentence_degrades_only_its_charge(self, table, store, stitcher):
        convictions, unparsed = parse_sentence_block("\n".join(FIGURE_EDGE_LINES))
        bad_sentence = SentenceRecord(convictions=convictions, raw_text="\n".join(FIGURE_EDGE_LINES),
                                      unparsed_lines=unparsed)
        case = make_case([
            ChargeRecord(index=1, law_citation=LawCitation(act="C.CR.", provision="266"),
                         sentence=bad_sentence),
            ChargeRecord(index=2, law_citation=LawCitation(act="C.CR.", provision="344")),
        ])
        summary = realize_case(case, store, table, stitcher)
        assert summary.report.charges[0].status is PartStatus.GENERATION_ERROR
        assert summary.report.charges[1].status is PartStatus.OK
        assert summary.report.accused.status is PartStatus.OK
        assert summary.charge_paragraphs[0] is None
        assert summary.charge_paragraphs[1] is not None

    def test_unknown_citation_is_generation_error_not_fabrication(self, table, store, stitcher):
        case = make_case([
            ChargeRecord(index=1, law_citation=LawCitation(act="C.CR.", provision="9999")),
        ])
        summary = realize_case(case, store, table, stitcher)
        assert summary.report.charges[0].status is PartStatus.GENERATION_ERROR
        assert summary.charge_paragraphs[0] is None

    def test_determinism_byte_identical(self, table, store, stitcher):
        case = make_case([
            ChargeRecord(index=1, law_citation=LawCitation(act="C.CR.", provision="733.1"),
                         sentence=five_conviction_record()),
        ])
        first = realize_case(case, store, table, stitcher)
        second = realize_case(case, store, table, stitcher)
        assert first == second
