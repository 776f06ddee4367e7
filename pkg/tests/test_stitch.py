import pytest

from plumitif.errors import StitchStrategyFailure
from plumitif.realization import (
    PREPOSITIONS,
    LexiconStitcher,
    MaskedModelStitcher,
    heuristic_preposition,
    load_preposition_lexicon,
    normalize_title,
)
from plumitif.realization.french import elide_preposition

MASKED = "{accused} est accusé {article}."


@pytest.fixture(scope="module")
def default_strategy():
    return LexiconStitcher(load_preposition_lexicon())


def surface_for(strategy, title):
    return elide_preposition(strategy.predict(MASKED, title), title)


class TestLexicon:
    def test_values_stay_in_closed_set(self):
        lexicon = load_preposition_lexicon()
        assert set(lexicon.values()) <= set(PREPOSITIONS)

    def test_keys_are_normalized(self):
        lexicon = load_preposition_lexicon()
        assert all(k == normalize_title(k) for k in lexicon)

    def test_reference_title_maps_to_pour(self, default_strategy):
        assert default_strategy.predict(MASKED, "défaut de se conformer à une ordonnance") == "pour"


class TestHeuristic:
    def test_avoir_head_takes_de(self):
        assert heuristic_preposition("avoir proféré des menaces") == "de"

    def test_defaut_head_takes_pour(self):
        assert heuristic_preposition("défaut de comparaître") == "pour"

    def test_noun_head_takes_de(self):
        assert heuristic_preposition("trafic de stupéfiants") == "de"


class TestStrategyContract:
    def test_lexicon_miss_without_heuristic_signals_inability(self):
        strict = LexiconStitcher({}, use_heuristic=False)
        with pytest.raises(StitchStrategyFailure):
            strict.predict(MASKED, "trouble de la paix")

    def test_masked_model_adapter_accepts_closed_set_answer(self):
        model = MaskedModelStitcher(lambda sentence: "pour")
        assert model.predict(MASKED, "vol qualifié") == "pour"

    def test_masked_model_adapter_normalizes_elided_token(self):
        model = MaskedModelStitcher(lambda sentence: "d'")
        assert model.predict(MASKED, "extorsion") == "de"

    def test_masked_model_adapter_rejects_open_vocabulary(self):
        model = MaskedModelStitcher(lambda sentence: "coupable")
        with pytest.raises(StitchStrategyFailure):
            model.predict(MASKED, "vol qualifié")

    def test_masked_model_adapter_sees_mask_and_title(self):
        seen = {}

        def fill(sentence):
            seen["sentence"] = sentence
            return "de"

        MaskedModelStitcher(fill).predict(MASKED, "vol qualifié")
        assert "<mask>" in seen["sentence"] and "vol qualifié" in seen["sentence"]


class TestCuratedAccuracy:
    def test_accuracy_at_least_the_84_percent_bar(self, default_strategy, stitch_gold):
        assert len(stitch_gold) >= 100
        hits = sum(
            1 for entry in stitch_gold
            if surface_for(default_strategy, entry["title"]) == entry["preposition"]
        )
        accuracy = hits / len(stitch_gold)
        assert accuracy >= 0.84, f"default stitch accuracy {accuracy:.3f} below the 84% bar"

    def test_heuristic_tail_is_actually_exercised(self, default_strategy, stitch_gold):
        lexicon = load_preposition_lexicon()
        outside = [e for e in stitch_gold if normalize_title(e["title"]) not in lexicon]
        assert outside, "curated set must include titles the lexicon does not cover"
