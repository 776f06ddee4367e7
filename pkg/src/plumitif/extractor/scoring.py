"""Entity-level scoring: exact span and label, or the prediction is wrong."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..models import Entity, EntityLabel


@dataclass
class LabelCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0
    occurrences: int = 0  # gold entities of this label


@dataclass(frozen=True)
class LabelMetrics:
    precision: float
    recall: float
    f1: float
    occurrences: int


@dataclass(frozen=True)
class EntityScores:
    per_label: dict[EntityLabel, LabelMetrics]
    macro_precision: float
    macro_recall: float
    macro_f1: float


def collect_counts(
    gold: Sequence[Entity],
    predicted: Sequence[Entity],
    into: dict[EntityLabel, LabelCounts] | None = None,
) -> dict[EntityLabel, LabelCounts]:
    """Accumulate exact-match tp/fp/fn per label; reusable across a corpus."""
    counts = into if into is not None else {}
    gold_set = {(e.start, e.end, e.label) for e in gold}
    pred_set = {(e.start, e.end, e.label) for e in predicted}
    for start, end, label in gold_set | pred_set:
        bucket = counts.setdefault(label, LabelCounts())
        in_gold = (start, end, label) in gold_set
        in_pred = (start, end, label) in pred_set
        if in_gold and in_pred:
            bucket.tp += 1
        elif in_pred:
            bucket.fp += 1
        else:
            bucket.fn += 1
        if in_gold:
            bucket.occurrences += 1
    return counts


def metrics_from_counts(counts: dict[EntityLabel, LabelCounts]) -> EntityScores:
    """Per-label precision/recall/F1 plus macro averages over labels present in gold."""
    per_label: dict[EntityLabel, LabelMetrics] = {}
    gold_labels = []
    for label, c in counts.items():
        precision = c.tp / (c.tp + c.fp) if (c.tp + c.fp) else 0.0
        recall = c.tp / (c.tp + c.fn) if (c.tp + c.fn) else 0.0
        f1 = 2 * precision * recall / (precision + recall) if (precision + recall) else 0.0
        per_label[label] = LabelMetrics(precision, recall, f1, c.occurrences)
        if c.occurrences:
            gold_labels.append(label)

    def macro(metric: str) -> float:
        if not gold_labels:
            return 0.0
        return sum(getattr(per_label[l], metric) for l in gold_labels) / len(gold_labels)

    return EntityScores(
        per_label=per_label,
        macro_precision=macro("precision"),
        macro_recall=macro("recall"),
        macro_f1=macro("f1"),
    )


def score_entities(gold: Sequence[Entity], predicted: Sequence[Entity]) -> EntityScores:
    """Score one segment's predictions against its gold annotation."""
    return metrics_from_counts(collect_counts(gold, predicted))
