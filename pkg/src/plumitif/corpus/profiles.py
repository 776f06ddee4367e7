"""District profiles: distribution knobs for the synthetic corpus.

Profiles recreate the qualitative structure of district difficulty
(organisation-heavy plaintiffs, conviction diversity, edge-case density)
without claiming any real district's numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

# Conviction-combination signatures the default rule table covers, with
# sampling weights. Signatures: P:<custody/granted/inflicted letters> then
# F=fine, W=community work, B=probation, S=surcharge.
STANDARD_MIX: tuple[tuple[str, float], ...] = (
    ("P:I", 0.18),
    ("P:I+S", 0.12),
    ("P:I+B", 0.10),
    ("P:CAI+B+S", 0.10),
    ("P:CAI", 0.06),
    ("F", 0.16),
    ("F+S", 0.10),
    ("B", 0.06),
    ("W", 0.05),
    ("F+W", 0.04),
    ("P:I+F+B+S", 0.03),
)

DIVERSE_MIX: tuple[tuple[str, float], ...] = STANDARD_MIX + (
    ("P:CAI+F+W+B+S", 0.04),
    ("P:AI", 0.04),
    ("P:CI", 0.03),
    ("W+B+S", 0.03),
    ("O", 0.02),
)


@dataclass(frozen=True)
class DistrictProfile:
    name: str
    organisation_plaintiff_rate: float = 0.7
    # Share of organisation plaintiffs whose name carries no legal-entity
    # marker the default tagger knows; these drive extraction errors.
    unrecognized_organisation_rate: float = 0.0
    conviction_mix: tuple[tuple[str, float], ...] = STANDARD_MIX
    charge_count_range: tuple[int, int] = (1, 3)
    edge_case_rate: float = 0.0

    def __post_init__(self):
        for label in ("organisation_plaintiff_rate", "unrecognized_organisation_rate", "edge_case_rate"):
            value = getattr(self, label)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{label} must be in [0, 1], got {value}")
        lo, hi = self.charge_count_range
        if not (1 <= lo <= hi):
            raise ValueError(f"charge_count_range must be a non-empty range, got {self.charge_count_range}")
        if not self.conviction_mix:
            raise ValueError("conviction_mix must not be empty")

    @classmethod
    def from_dict(cls, raw: dict) -> "DistrictProfile":
        return cls(
            name=raw["name"],
            organisation_plaintiff_rate=raw.get("organisation_plaintiff_rate", 0.7),
            unrecognized_organisation_rate=raw.get("unrecognized_organisation_rate", 0.0),
            conviction_mix=tuple(
                (str(sig), float(w)) for sig, w in raw.get("conviction_mix", STANDARD_MIX)
            ),
            charge_count_range=tuple(raw.get("charge_count_range", (1, 3))),
            edge_case_rate=raw.get("edge_case_rate", 0.0),
        )


DEFAULT_PROFILES: tuple[DistrictProfile, ...] = (
    DistrictProfile("Chicoutimi", organisation_plaintiff_rate=0.6),
    DistrictProfile("Gatineau", organisation_plaintiff_rate=0.6, unrecognized_organisation_rate=0.10,
                    edge_case_rate=0.07),
    DistrictProfile("Granby", organisation_plaintiff_rate=0.9, unrecognized_organisation_rate=0.37,
                    edge_case_rate=0.06),
    DistrictProfile("Longueuil", organisation_plaintiff_rate=0.7, unrecognized_organisation_rate=0.09),
    DistrictProfile("Montréal", organisation_plaintiff_rate=0.7, unrecognized_organisation_rate=0.20,
                    conviction_mix=DIVERSE_MIX, charge_count_range=(1, 4), edge_case_rate=0.09),
    DistrictProfile("Québec", organisation_plaintiff_rate=0.6),
    DistrictProfile("Sherbrooke", organisation_plaintiff_rate=0.9, unrecognized_organisation_rate=0.28,
                    conviction_mix=DIVERSE_MIX, edge_case_rate=0.08),
    DistrictProfile("Trois-Rivières", organisation_plaintiff_rate=0.8, unrecognized_organisation_rate=0.19),
)


def load_profiles(path: str | Path) -> tuple[DistrictProfile, ...]:
    """Profiles file: {"districts": [{...}, ...]} or a single profile object."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(raw, dict) and "districts" in raw:
        return tuple(DistrictProfile.from_dict(d) for d in raw["districts"])
    return (DistrictProfile.from_dict(raw),)
