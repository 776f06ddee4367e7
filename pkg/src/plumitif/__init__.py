"""plumitif: turn raw Quebec criminal-court dockets into intelligible French summaries.

Pipeline: segment the docket into its accused/plaintiff/charges parts,
extract entities into a normalized case view, then realize French prose
grounded in a parsed Criminal Code provision store.
"""

from .models import (
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
    GenerationReport,
    LawCitation,
    Money,
    PartialCase,
    PartReport,
    PartStatus,
    PartyRecord,
    PartyRole,
    PleaCode,
    RawPlumitif,
    Segment,
    SegmentKind,
    SentenceRecord,
    Summary,
    validate_case,
)
from .pipeline import Components, summarize

__version__ = "0.1.0"

__all__ = [
    "CaseRecord",
    "ChargeRecord",
    "Components",
    "Conviction",
    "ConvictionDetail",
    "ConvictionKind",
    "DecisionRecord",
    "Duration",
    "DurationUnit",
    "Entity",
    "EntityLabel",
    "GenerationReport",
    "LawCitation",
    "Money",
    "PartReport",
    "PartStatus",
    "PartialCase",
    "PartyRecord",
    "PartyRole",
    "PleaCode",
    "RawPlumitif",
    "Segment",
    "SegmentKind",
    "SentenceRecord",
    "Summary",
    "summarize",
    "validate_case",
    "__version__",
]
