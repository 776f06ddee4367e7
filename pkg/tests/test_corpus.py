import dataclasses
import re

import pytest

from plumitif.corpus import (
    DEFAULT_PROFILES,
    DistrictProfile,
    OracleTagger,
    evaluate_error_rates,
    evaluate_extraction,
    format_rate,
    synthesize,
)
from plumitif.errors import EmptyCorpusError
from plumitif.extractor import PatternTagger, extract_entities, normalize
from plumitif.models import (
    EntityLabel,
    RawPlumitif,
    validate_case,
    validate_entities,
    validate_segments,
)
from plumitif.pipeline import summarize
from plumitif.segmenter import segment_document


def clean_profile(name="Témoin", **kwargs):
    return DistrictProfile(name=name, organisation_plaintiff_rate=0.6, **kwargs)


def _with_text(doc, text):
    return dataclasses.replace(doc, raw=RawPlumitif(text=text, source_district=doc.district))


def _break_plaintiff(text: str) -> str:
    # A value neither the person nor the organisation rule can read.
    return re.sub(r"(?m)^PLG\. .*$", "PLG. 0-ENTITE-INCONNUE", text, count=1)


def _append_uncovered_penalty(text: str) -> str:
    # Custody alone has no generation rule; appending it to the last charge
    # forces a NoRule generation error (possibly via an interior PEINE: line).
    return text + "PEINE:\nEMPR PROV 10 JRS\n"


class TestSynthesize:
    def test_deterministic_for_profile_and_seed(self):
        profile = clean_profile()
        first = synthesize(profile, seed=7, n=5)
        second = synthesize(profile, seed=7, n=5)
        assert [d.raw.text for d in first] == [d.raw.text for d in second]
        assert [d.gold_case for d in first] == [d.gold_case for d in second]

    def test_different_seeds_differ(self):
        profile = clean_profile()
        assert synthesize(profile, seed=1, n=3)[0].raw.text != synthesize(profile, seed=2, n=3)[0].raw.text

    def test_edge_rate_one_injects_everywhere(self):
        profile = clean_profile(edge_case_rate=1.0)
        for doc in synthesize(profile, seed=5, n=10):
            summary = summarize(doc.raw.text)
            assert summary.report.has_generation_error, "injected edge case must surface as GE"

    def test_organisation_rate_one_makes_every_plaintiff_an_organisation(self):
        profile = DistrictProfile(name="Orgues", organisation_plaintiff_rate=1.0)
        for doc in synthesize(profile, seed=5, n=10):
            assert doc.gold_case.plaintiff.organisation

    def test_rejects_non_positive_n(self):
        with pytest.raises(ValueError):
            synthesize(clean_profile(), seed=1, n=0)

    def test_profile_rejects_out_of_range_rates(self):
        with pytest.raises(ValueError):
            DistrictProfile(name="X", edge_case_rate=1.5)
        with pytest.raises(ValueError):
            DistrictProfile(name="X", charge_count_range=(3, 1))

    def test_gold_artifacts_mutually_consistent(self, small_corpus):
        for doc in small_corpus:
            assert validate_segments(doc.raw, doc.gold_segments) == []
            for segment in doc.gold_segments:
                assert validate_entities(segment, doc.gold_entities[segment.kind]) == []
            assert validate_case(doc.gold_case) == []

    def test_gold_case_derivable_from_gold_entities(self, small_corpus):
        for doc in small_corpus:
            oracle = OracleTagger(doc)
            segments = segment_document(doc.raw).segments
            tagged = {s.kind: (s, extract_entities(s, oracle)) for s in segments}
            assert normalize(tagged).to_case_record() == doc.gold_case


class TestEvaluateExtraction:
    def test_oracle_tagger_scores_one(self, small_corpus):
        class CorpusOracle:
            identifier = "oracle-corpus"

            def __init__(self, docs):
                self.by_text = {}
                for doc in docs:
                    for segment in doc.gold_segments:
                        self.by_text[segment.text] = list(doc.gold_entities[segment.kind])

            def tag(self, segment):
                return self.by_text[segment.text]

        report = evaluate_extraction(small_corpus, CorpusOracle(small_corpus))
        assert report.scores.macro_f1 == 1.0

    def test_corrupted_person_span_lowers_only_person(self, small_corpus):
        class ShiftedPerson(PatternTagger):
            def tag(self, segment):
                out = []
                for e in super().tag(segment):
                    if e.label is EntityLabel.PERSON:
                        out.append(type(e)(e.label, e.start, e.end - 1, e.surface[:-1]))
                    else:
                        out.append(e)
                return out

        baseline = evaluate_extraction(small_corpus, PatternTagger())
        corrupted = evaluate_extraction(small_corpus, ShiftedPerson())
        assert corrupted.scores.per_label[EntityLabel.PERSON].f1 == 0.0
        for label in (EntityLabel.DATE, EntityLabel.LAW, EntityLabel.SENTENCE):
            assert corrupted.scores.per_label[label].f1 == baseline.scores.per_label[label].f1

    def test_occurrences_reported_per_label(self, small_corpus):
        report = evaluate_extraction(small_corpus, PatternTagger())
        assert report.scores.per_label[EntityLabel.DATE].occurrences > 0

    def test_empty_corpus_rejected(self):
        with pytest.raises(EmptyCorpusError):
            evaluate_extraction([], PatternTagger())


class TestEvaluateErrorRates:
    def test_clean_corpus_scores_zero(self):
        profile = clean_profile(name="Propre")
        corpus = synthesize(profile, seed=3, n=12)
        report = evaluate_error_rates(corpus, summarize)
        row = report.districts[0]
        assert (row.ee_count, row.ge_count) == (0, 0)
        assert format_rate(row.ee_rate) == "0.0%"
        assert format_rate(row.ge_rate) == "0.0%"

    def test_hand_computed_rate_one_in_fifteen(self):
        # One plaintiff failure and one uncovered sentence injected at known
        # positions among 15 documents: both rates must be exactly 1/15,
        # formatted to one decimal as 6.7%.
        corpus = synthesize(clean_profile(name="Quinze"), seed=9, n=15)
        docs = list(corpus)
        docs[3] = _with_text(docs[3], _break_plaintiff(docs[3].raw.text))
        docs[7] = _with_text(docs[7], _append_uncovered_penalty(docs[7].raw.text))

        report = evaluate_error_rates(docs, summarize)
        row = report.districts[0]
        assert row.documents == 15
        assert (row.ee_count, row.ge_count) == (1, 1)
        assert format_rate(row.ee_rate) == "6.7%"
        assert format_rate(row.ge_rate) == "6.7%"

    def test_document_with_both_error_kinds_counts_once_in_each(self):
        doc = synthesize(clean_profile(name="Double"), seed=4, n=1)[0]
        text = _append_uncovered_penalty(_break_plaintiff(doc.raw.text))
        summary = summarize(text)
        assert summary.report.has_extraction_error and summary.report.has_generation_error

        report = evaluate_error_rates([_with_text(doc, text)], summarize)
        assert report.districts[0].ee_count == 1
        assert report.districts[0].ge_count == 1

    def test_rates_bounded(self, small_corpus):
        report = evaluate_error_rates(small_corpus, summarize)
        for row in report.districts:
            assert 0.0 <= row.ee_rate <= 1.0
            assert 0.0 <= row.ge_rate <= 1.0

    def test_average_pools_documents(self):
        a = synthesize(clean_profile(name="A"), seed=1, n=5)
        b = synthesize(clean_profile(name="B", edge_case_rate=1.0), seed=1, n=5)
        report = evaluate_error_rates([*a, *b], summarize)
        assert report.documents == 10
        assert report.average_ge_rate == pytest.approx(0.5)

    def test_empty_corpus_rejected(self):
        with pytest.raises(EmptyCorpusError):
            evaluate_error_rates([], summarize)
