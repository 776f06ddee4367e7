"""Corpus-level evaluation: entity metrics and per-district EE/GE rates.

Error counting is per text: a document counts once toward the extraction
rate if any part carries an extraction error, and once toward the
generation rate if any part carries a generation error. The average row
pools documents across districts (total erring documents / total documents).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..errors import EmptyCorpusError
from ..extractor import TaggerStrategy
from ..extractor.scoring import EntityScores, LabelCounts, collect_counts, metrics_from_counts
from ..models import EntityLabel, Summary
from .generator import GoldPlumitif


def format_rate(rate: float) -> str:
    """One-decimal percentage, e.g. 1/15 -> "6.7%"."""
    return f"{rate * 100:.1f}%"


@dataclass(frozen=True)
class ExtractionReport:
    documents: int
    segments: int
    scores: EntityScores

    def to_dict(self) -> dict:
        return {
            "documents": self.documents,
            "segments": self.segments,
            "macro_precision": self.scores.macro_precision,
            "macro_recall": self.scores.macro_recall,
            "macro_f1": self.scores.macro_f1,
            "labels": {
                label.value: {
                    "precision": m.precision,
                    "recall": m.recall,
                    "f1": m.f1,
                    "occurrences": m.occurrences,
                }
                for label, m in sorted(self.scores.per_label.items(), key=lambda kv: kv[0].value)
            },
        }


def evaluate_extraction(corpus: Sequence[GoldPlumitif], tagger: TaggerStrategy) -> ExtractionReport:
    """Score the tagger against gold spans over every segment of the corpus."""
    if not corpus:
        raise EmptyCorpusError("no documents to evaluate")
    counts: dict[EntityLabel, LabelCounts] = {}
    segments = 0
    for doc in corpus:
        for segment in doc.gold_segments:
            gold = doc.gold_entities.get(segment.kind, ())
            predicted = tagger.tag(segment)
            collect_counts(gold, predicted, into=counts)
            segments += 1
    return ExtractionReport(documents=len(corpus), segments=segments, scores=metrics_from_counts(counts))


@dataclass(frozen=True)
class DistrictErrorRates:
    district: str
    documents: int
    ee_count: int
    ge_count: int

    @property
    def ee_rate(self) -> float:
        return self.ee_count / self.documents if self.documents else 0.0

    @property
    def ge_rate(self) -> float:
        return self.ge_count / self.documents if self.documents else 0.0

    def to_dict(self) -> dict:
        return {
            "district": self.district,
            "documents": self.documents,
            "ee_count": self.ee_count,
            "ge_count": self.ge_count,
            "ee_rate": format_rate(self.ee_rate),
            "ge_rate": format_rate(self.ge_rate),
        }


@dataclass(frozen=True)
class ErrorRateReport:
    districts: tuple[DistrictErrorRates, ...]

    @property
    def documents(self) -> int:
        return sum(d.documents for d in self.districts)

    @property
    def average_ee_rate(self) -> float:
        total = self.documents
        return sum(d.ee_count for d in self.districts) / total if total else 0.0

    @property
    def average_ge_rate(self) -> float:
        total = self.documents
        return sum(d.ge_count for d in self.districts) / total if total else 0.0

    def to_dict(self) -> dict:
        return {
            "districts": [d.to_dict() for d in self.districts],
            "average": {
                "documents": self.documents,
                "ee_rate": format_rate(self.average_ee_rate),
                "ge_rate": format_rate(self.average_ge_rate),
            },
        }


def evaluate_error_rates(
    corpus: Sequence[GoldPlumitif], pipeline: Callable[[str], Summary]
) -> ErrorRateReport:
    """Run the pipeline over every document and count erring documents per district."""
    if not corpus:
        raise EmptyCorpusError("no documents to evaluate")
    per_district: dict[str, list[int]] = {}
    for doc in corpus:
        summary = pipeline(doc.raw.text)
        bucket = per_district.setdefault(doc.district, [0, 0, 0])
        bucket[0] += 1
        if summary.report.has_extraction_error:
            bucket[1] += 1
        if summary.report.has_generation_error:
            bucket[2] += 1
    districts = tuple(
        DistrictErrorRates(district=d, documents=n, ee_count=ee, ge_count=ge)
        for d, (n, ee, ge) in sorted(per_district.items())
    )
    return ErrorRateReport(districts=districts)
