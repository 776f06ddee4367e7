import pytest

from conftest import ACCUSED_PARAGRAPH, DECISION_SENTENCE_1, DECISION_SENTENCE_2, GOLDEN_DOCKET, SENTENCE_PARAGRAPH, STITCH_SENTENCE
from plumitif.errors import InputError, InputTooLargeError
from plumitif.models import PartStatus
from plumitif.pipeline import Components, summarize, summary_as_text


class TestSummarize:
    def test_golden_docket_realizes_all_parts(self, components):
        summary = summarize(GOLDEN_DOCKET, components)
        assert summary.accused_paragraph == ACCUSED_PARAGRAPH
        assert summary.plaintiff_paragraph == "La plainte a été déposée par DPCP."
        assert summary.charge_paragraphs[0] == f"{STITCH_SENTENCE} {DECISION_SENTENCE_1} {SENTENCE_PARAGRAPH}"
        second = summary.charge_paragraphs[1]
        assert second.endswith(DECISION_SENTENCE_2)
        assert all(p.status is PartStatus.OK for _, p in summary.report.parts())

    def test_citations_carried_for_drilldown(self, components):
        summary = summarize(GOLDEN_DOCKET, components)
        assert [c.provision for c in summary.citations] == ["733.1", "264.1"]

    def test_missing_plaintiff_marker_is_extraction_error(self, components):
        docket = "\n".join(l for l in GOLDEN_DOCKET.splitlines() if not l.startswith("PLG.")) + "\n"
        summary = summarize(docket, components)
        assert summary.report.plaintiff.status is PartStatus.EXTRACTION_ERROR
        assert summary.report.accused.status is PartStatus.OK
        assert summary.plaintiff_paragraph is None

    def test_missing_charges_marker_is_extraction_error(self, components):
        docket = "ACC. ROY, LUC\nPLG. DPCP\n"
        summary = summarize(docket, components)
        assert summary.report.charges_part.status is PartStatus.EXTRACTION_ERROR

    def test_empty_input_rejected(self, components):
        with pytest.raises(InputError):
            summarize("   ", components)

    def test_oversize_input_rejected(self, components):
        with pytest.raises(InputTooLargeError):
            summarize("x" * (components.max_input_bytes + 1), components)

    def test_windows_line_endings_normalized(self, components):
        summary = summarize(GOLDEN_DOCKET.replace("\n", "\r\n"), components)
        assert summary.accused_paragraph == ACCUSED_PARAGRAPH

    def test_determinism_byte_identical(self, components):
        from plumitif.serialize import summary_to_dict, to_canonical_json

        first = to_canonical_json(summary_to_dict(summarize(GOLDEN_DOCKET, components)))
        second = to_canonical_json(summary_to_dict(summarize(GOLDEN_DOCKET, components)))
        assert first == second

    def test_text_rendering_mentions_failures(self, components):
        docket = "ACC. ROY, LUC\nPLG. 0-INCONNU\nCHEFS:\nCHEF 001 ART. 266 C.CR.\n"
        text = summary_as_text(summarize(docket, components))
        assert "Luc Roy" in text
        assert "extraction_error" in text


class TestComponents:
    def test_input_cap_configurable(self):
        comps = Components(max_input_bytes=10)
        with pytest.raises(InputTooLargeError):
            summarize("ACC. ROY, LUC\n" * 10, comps)
