"""Configuration loading: CLI flags > environment variables > config file.

Every table (markers, tagger rules, rule table, preposition lexicon,
provision store) defaults to the packaged data and can be overridden with
a JSON config file of paths. Tables load once at startup and stay
immutable afterwards.

Environment variables:
  PLUMITIF_CONFIG  path to the config file
  PLUMITIF_STORE   path to a provision-store JSON (overrides the config file)
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .criminal_code import load_store
from .extractor import PatternTagger, load_pattern_rules
from .pipeline import DEFAULT_MAX_INPUT_BYTES, Components
from .realization import LexiconStitcher, load_preposition_lexicon, load_rule_table
from .segmenter import MarkerTable

ENV_CONFIG = "PLUMITIF_CONFIG"
ENV_STORE = "PLUMITIF_STORE"


def build_components(
    config_path: str | Path | None = None,
    store_path: str | Path | None = None,
    max_input_bytes: int | None = None,
) -> Components:
    """Assemble pipeline components honoring the precedence order."""
    path = config_path or os.environ.get(ENV_CONFIG)
    file_config: dict = {}
    base = Path(".")
    if path:
        p = Path(path)
        file_config = json.loads(p.read_text(encoding="utf-8"))
        base = p.parent

    def resolve(key: str) -> Path | None:
        value = file_config.get(key)
        if value is None:
            return None
        value = Path(value)
        return value if value.is_absolute() else base / value

    store_override = store_path or os.environ.get(ENV_STORE) or resolve("store")

    markers_path = resolve("markers")
    rules_path = resolve("tagger_rules")
    table_path = resolve("rule_table")
    lexicon_path = resolve("preposition_lexicon")

    components = Components(
        markers=MarkerTable.from_file(markers_path) if markers_path else MarkerTable(),
        tagger=PatternTagger(load_pattern_rules(rules_path) if rules_path else None),
        table=load_rule_table(table_path),
        stitcher=LexiconStitcher(load_preposition_lexicon(lexicon_path)),
        max_input_bytes=(
            max_input_bytes
            if max_input_bytes is not None
            else int(file_config.get("max_input_bytes", DEFAULT_MAX_INPUT_BYTES))
        ),
    )
    if store_override:
        components.store = load_store(store_override)
    return components
