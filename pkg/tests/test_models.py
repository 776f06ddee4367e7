import json
from datetime import date
from decimal import Decimal

import pytest
from hypothesis import given, strategies as st

from plumitif import serialize
from plumitif.corpus import DEFAULT_PROFILES, synthesize
from plumitif.errors import InputError
from plumitif.models import (
    CaseRecord,
    ChargeRecord,
    Conviction,
    ConvictionDetail,
    ConvictionKind,
    DecisionRecord,
    Duration,
    DurationUnit,
    EntityLabel,
    LawCitation,
    PartyRecord,
    PartyRole,
    RawPlumitif,
    SentenceRecord,
    Summary,
    GenerationReport,
    PartReport,
    PartStatus,
    validate_case,
)


def charge(index, provision="266", **kwargs):
    return ChargeRecord(index=index, law_citation=LawCitation(act="C.CR.", provision=provision), **kwargs)


def case_with(indices):
    return CaseRecord(
        accused=PartyRecord(role=PartyRole.ACCUSED, name="Luc Roy"),
        plaintiff=PartyRecord(role=PartyRole.PLAINTIFF, organisation="DPCP"),
        charges=tuple(charge(i) for i in indices),
    )


class TestRawPlumitif:
    def test_rejects_empty_text(self):
        with pytest.raises(InputError):
            RawPlumitif(text="   \n ")

    def test_rejects_control_characters(self):
        with pytest.raises(InputError):
            RawPlumitif(text="ACC. ROY\x00")

    def test_keeps_accented_french(self):
        doc = RawPlumitif(text="ADR. 1 de l'étang\n")
        assert "étang" in doc.text


class TestEnumerations:
    def test_entity_label_has_exactly_nine_members(self):
        assert len(EntityLabel) == 9
        assert {l.value for l in EntityLabel} == {
            "Address", "Charge", "Date", "Decision", "Law", "Organisation", "Person", "Plea", "Sentence",
        }

    def test_conviction_kind_has_exactly_six_members(self):
        assert len(ConvictionKind) == 6


class TestValidateCase:
    def test_contiguous_charges_ok(self):
        assert validate_case(case_with([1, 2, 3])) == []

    def test_non_contiguous_charges_reported(self):
        problems = validate_case(case_with([1, 3]))
        assert any("non-contiguous" in p for p in problems)

    def test_empty_accused_name_reported(self):
        case = CaseRecord(
            accused=PartyRecord(role=PartyRole.ACCUSED, name="  "),
            plaintiff=PartyRecord(role=PartyRole.PLAINTIFF, organisation="DPCP"),
            charges=(charge(1),),
        )
        assert any("name non-empty" in p for p in validate_case(case))

    def test_all_violations_reported_not_just_first(self):
        case = CaseRecord(
            accused=PartyRecord(role=PartyRole.ACCUSED, name=""),
            plaintiff=PartyRecord(role=PartyRole.PLAINTIFF),
            charges=(charge(1), charge(4)),
        )
        problems = validate_case(case)
        assert len(problems) >= 3

    def test_surcharge_without_delay_reported(self):
        bad = charge(1, sentence=SentenceRecord(
            convictions=(Conviction(kind=ConvictionKind.SURCHARGE),), raw_text="SURAMENDE"))
        case = case_with([1])
        case = CaseRecord(accused=case.accused, plaintiff=case.plaintiff, charges=(bad,))
        assert any("requires delay" in p for p in validate_case(case))

    def test_probation_without_duration_reported(self):
        bad = charge(1, sentence=SentenceRecord(
            convictions=(Conviction(kind=ConvictionKind.PROBATION),), raw_text="PROBATION"))
        case = case_with([1])
        case = CaseRecord(accused=case.accused, plaintiff=case.plaintiff, charges=(bad,))
        assert any("requires duration" in p for p in validate_case(case))

    def test_non_positive_duration_reported(self):
        bad = charge(1, sentence=SentenceRecord(
            convictions=(Conviction(
                kind=ConvictionKind.PROBATION,
                duration=Duration(Decimal(0), DurationUnit.YEARS)),),
            raw_text="PROBATION DE 0 ANS"))
        case = case_with([1])
        case = CaseRecord(accused=case.accused, plaintiff=case.plaintiff, charges=(bad,))
        assert any("strictly positive" in p for p in validate_case(case))

    def test_sentence_with_text_but_no_convictions_reported(self):
        bad = charge(1, sentence=SentenceRecord(convictions=(), raw_text="QUELQUE CHOSE"))
        case = case_with([1])
        case = CaseRecord(accused=case.accused, plaintiff=case.plaintiff, charges=(bad,))
        assert any("no convictions" in p for p in validate_case(case))


class TestDecisionRecord:
    def test_code_is_lowercased_and_trimmed(self):
        record = DecisionRecord(code="  ARRET ", date=date(2020, 1, 1), charge_index=1)
        assert record.code == "arret"


class TestSummaryInvariants:
    def _report(self):
        ok = PartReport(PartStatus.OK)
        return GenerationReport(accused=ok, plaintiff=ok, charges_part=ok, charges=(ok,))

    def test_rejects_unresolved_placeholder(self):
        with pytest.raises(ValueError):
            Summary(
                accused_paragraph="Un {name} non rempli.",
                plaintiff_paragraph=None,
                charge_paragraphs=(),
                report=self._report(),
            )

    def test_rejects_angle_bracket_placeholder(self):
        with pytest.raises(ValueError):
            Summary(
                accused_paragraph="Un <Accusé> non rempli.",
                plaintiff_paragraph=None,
                charge_paragraphs=(),
                report=self._report(),
            )


class TestSerialization:
    def test_validated_case_round_trips_canonically(self):
        case = case_with([1, 2])
        assert validate_case(case) == []
        payload = serialize.case_to_dict(case)
        again = serialize.case_from_dict(json.loads(json.dumps(payload)))
        assert again == case
        assert serialize.to_canonical_json(serialize.case_to_dict(again)) == serialize.to_canonical_json(payload)

    @given(st.integers(min_value=0, max_value=2**32 - 1))
    def test_generated_cases_round_trip(self, seed):
        doc = synthesize(DEFAULT_PROFILES[0], seed=seed, n=1)[0]
        payload = serialize.case_to_dict(doc.gold_case)
        assert serialize.case_from_dict(json.loads(json.dumps(payload, ensure_ascii=False))) == doc.gold_case

    def test_fractional_quantities_round_trip_exactly(self):
        sentence = SentenceRecord(
            convictions=(
                Conviction(
                    kind=ConvictionKind.PROBATION,
                    duration=Duration(Decimal("8.5"), DurationUnit.MONTHS),
                ),
            ),
            raw_text="PROBATION DPAC:8.5MS",
        )
        record = charge(1, sentence=sentence)
        case = CaseRecord(
            accused=PartyRecord(role=PartyRole.ACCUSED, name="Luc Roy"),
            plaintiff=PartyRecord(role=PartyRole.PLAINTIFF, organisation="DPCP"),
            charges=(record,),
        )
        payload = json.loads(json.dumps(serialize.case_to_dict(case), ensure_ascii=False))
        again = serialize.case_from_dict(payload)
        assert again.charges[0].sentence.convictions[0].duration.quantity == Decimal("8.5")
        assert again == case

    def test_summary_round_trips(self):
        ok = PartReport(PartStatus.OK)
        bad = PartReport(PartStatus.GENERATION_ERROR, "no rule")
        summary = Summary(
            accused_paragraph="Luc Roy est l'accusé dans ce dossier.",
            plaintiff_paragraph=None,
            charge_paragraphs=("Phrase.", None),
            report=GenerationReport(accused=ok, plaintiff=bad, charges_part=ok, charges=(ok, bad)),
        )
        payload = serialize.summary_to_dict(summary)
        assert serialize.summary_from_dict(json.loads(json.dumps(payload, ensure_ascii=False))) == summary
