import json
from pathlib import Path

import pytest

from plumitif.corpus import DEFAULT_PROFILES, default_store, synthesize
from plumitif.pipeline import Components

DATA = Path(__file__).parent / "data"

# Composite docket exercising a full accused record, two decision codes
# and the five-conviction penalty in one document.
GOLDEN_DOCKET = """NO DOSSIER: 500-01-012345-190
ACC. DOE, JOHN
NE LE: 01/01/1979
ADR. 1 de l'étang QC G1G1G1
AV. ME DOE, JANE
INF. 01/12/2019
PLG. DPCP
CHEFS:
CHEF 001 ART. 733.1 C.CR.
DEC. ARRET 01/01/2020
PEINE:
EMPR PROV 39 JRS
EMPR ACC 9 JRS
EMPR INF 30 JRS
PROBATION DE 2 ANS SANS SURV.
SURAMENDE DEL 45 JRS
CHEF 002 ART. 264.1 C.CR.
DEC. N-RESP.TR.MENT 01/01/2020
"""

ACCUSED_PARAGRAPH = (
    "John Doe, né le 1er janvier 1979 habitant au 1 de l'étang QC G1G1G1, "
    "a commis une infraction le 1er décembre 2019. L'accusé est représenté par Me Jane Doe."
)

DECISION_SENTENCE_1 = (
    "Pour le 1er chef d'accusation, le Tribunal prononce un arrêt de procédure le 1er janvier 2020."
)
DECISION_SENTENCE_2 = (
    "Pour le 2e chef d'accusation, le Tribunal prononce un verdict de non-responsabilité "
    "criminelle pour cause de troubles mentaux le 1er janvier 2020."
)

SENTENCE_PARAGRAPH = (
    "L'accusé est condamné à une peine d'emprisonnement totale de 30 jours. "
    "Il a déjà passé 39 jours sous garde avant son procès. "
    "Une période de 9 jours de détention provisoire lui a été accordée. "
    "Il lui reste donc à purger 21 jours de manière continue. "
    "Il fait également l'objet d'une ordonnance de probation de 2 ans sans surveillance. "
    "Le paiement des frais de justice et de la suramende compensatoire qui sera versé dans un "
    "fond pour venir en aide aux victimes d'actes criminel doit être payé dans un délais de 45 jours."
)

STITCH_SENTENCE = "John Doe est accusé pour défaut de se conformer à une ordonnance."


@pytest.fixture(scope="session")
def components():
    return Components()


@pytest.fixture(scope="session")
def store():
    return default_store()


@pytest.fixture(scope="session")
def small_corpus():
    docs = []
    for profile in DEFAULT_PROFILES:
        docs.extend(synthesize(profile, seed=11, n=10))
    return docs


@pytest.fixture(scope="session")
def stitch_gold():
    return json.loads((DATA / "stitch_titles.json").read_text(encoding="utf-8"))["titles"]
