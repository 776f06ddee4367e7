#!/usr/bin/env python3
"""Regenerate frontend/tests/fixtures/*.json from the live service code.

The web client's tests assert against real service responses; run this
after changing anything that affects the Summary JSON. From the repo root:

    python tools/export_frontend_fixtures.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from fastapi.testclient import TestClient

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "frontend" / "tests" / "fixtures"
sys.path.insert(0, str(ROOT / "tests"))

from conftest import GOLDEN_DOCKET  # noqa: E402

from plumitif.service import create_app  # noqa: E402


def main() -> None:
    client = TestClient(create_app())
    FIXTURES.mkdir(parents=True, exist_ok=True)

    summary = client.post("/summarize", json={"text": GOLDEN_DOCKET})
    assert summary.status_code == 200, summary.text
    (FIXTURES / "summary_response.json").write_text(
        json.dumps(summary.json(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )

    failed = client.post("/summarize", json={"text": "ACC. ROY, LUC\nPLG. 0-INCONNU\nCHEFS:\n"})
    assert failed.status_code == 200, failed.text
    (FIXTURES / "summary_partial_response.json").write_text(
        json.dumps(failed.json(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )

    provision = client.get("/provision/733.1")
    assert provision.status_code == 200
    (FIXTURES / "provision_733_1.json").write_text(
        json.dumps(provision.json(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )

    repealed = client.get("/provision/179")
    assert repealed.status_code == 200
    (FIXTURES / "provision_179.json").write_text(
        json.dumps(repealed.json(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )

    (FIXTURES / "golden_docket.json").write_text(
        json.dumps({"text": GOLDEN_DOCKET}, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()
