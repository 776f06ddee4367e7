#!/usr/bin/env python3
"""Regenerate src/plumitif/data/rule_table.json.

The table has 66 rules: 1 party rule, 1 charge-stitch rule, 2 plea rules,
12 decision rules and 50 sentence-combination rules. Sentence rules are
pre-merged templates, one per supported conviction-combination signature,
assembled here from clause texts so the shipped data stays internally
consistent. Run from the repo root:

    python tools/build_rule_table.py
"""

from __future__ import annotations

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "plumitif" / "data" / "rule_table.json"

PARTY_RULE = {
    "id": "party",
    "category": "party",
    "slots": ["name", "birth_date", "address", "infraction_date", "lawyer", "identity"],
    "applicability": {"field": "role"},
    "roles": {
        "accused": {
            "birth": "né le {birth_date}",
            "address": "habitant au {address}",
            "committed": "a commis une infraction le {infraction_date}",
            "no_infraction": "est l'accusé dans ce dossier",
            "lawyer": "L'accusé est représenté par Me {lawyer}.",
        },
        "plaintiff": {
            "base": "La plainte a été déposée par {identity}.",
            "lawyer": "La partie plaignante est représentée par Me {lawyer}.",
        },
    },
}

STITCH_RULE = {
    "id": "stitch",
    "category": "stitch",
    "slots": ["accused", "article"],
    "pattern": "{accused} est accusé {article}.",
    "applicability": {"field": "law_citation"},
}

PLEA_RULES = [
    {
        "id": "plea-guilty",
        "category": "plea",
        "plea": "guilty",
        "clause": "un plaidoyer de culpabilité",
        "slots": ["ordinal"],
        "pattern": "Pour le {ordinal} chef d'accusation, l'accusé a enregistré un plaidoyer de culpabilité.",
        "applicability": {"field": "plea", "equals": "guilty"},
    },
    {
        "id": "plea-not-guilty",
        "category": "plea",
        "plea": "not_guilty",
        "clause": "un plaidoyer de non-culpabilité",
        "slots": ["ordinal"],
        "pattern": "Pour le {ordinal} chef d'accusation, l'accusé a enregistré un plaidoyer de non-culpabilité.",
        "applicability": {"field": "plea", "equals": "not_guilty"},
    },
]

# Guilty/not-guilty plus the technical situations seen on dockets
# (e.g. "arret", a stay of proceedings); the set is district
# configuration, edit as needed.
DECISION_PHRASES = {
    "coupable": "un verdict de culpabilité",
    "non-coupable": "un verdict de non-culpabilité",
    "arret": "un arrêt de procédure",
    "n-resp.tr.ment": "un verdict de non-responsabilité criminelle pour cause de troubles mentaux",
    "acquitte": "un acquittement",
    "retrait": "le retrait du chef d'accusation",
    "rejet": "le rejet de la poursuite",
    "liberation": "une libération de l'accusé",
    "annulation": "l'annulation des procédures",
    "suspension": "une suspension conditionnelle des procédures",
    "prescription": "la prescription du recours",
    "dessaisissement": "le dessaisissement du tribunal",
}


def decision_rules() -> list[dict]:
    rules = []
    for code, phrase in DECISION_PHRASES.items():
        rules.append(
            {
                "id": f"decision-{code}",
                "category": "decision",
                "code": code,
                "phrase": phrase,
                "slots": ["ordinal", "date"],
                "pattern": f"Pour le {{ordinal}} chef d'accusation, le Tribunal prononce {phrase} le {{date}}.",
                "applicability": {"field": "decision.code", "equals": code},
            }
        )
    return rules


# Clause texts per conviction component. "first" opens the paragraph,
# "follow" continues it. Components render in the fixed kind order.
CLAUSES = {
    "I": {
        "first": "L'accusé est condamné à une peine d'emprisonnement totale de {inflicted}.",
        "follow": "L'accusé est condamné à une peine d'emprisonnement totale de {inflicted}.",
        "slots": ["inflicted"],
    },
    "C": {
        "first": "Il a déjà passé {custody} sous garde avant son procès.",
        "follow": "Il a déjà passé {custody} sous garde avant son procès.",
        "slots": ["custody"],
    },
    "A": {
        "first": "Une période de {granted} de détention provisoire lui a été accordée.",
        "follow": "Une période de {granted} de détention provisoire lui a été accordée.",
        "slots": ["granted"],
    },
    "R": {
        "first": "Il lui reste donc à purger {remaining} de manière continue.",
        "follow": "Il lui reste donc à purger {remaining} de manière continue.",
        "slots": ["remaining"],
    },
    "F": {
        "first": "L'accusé doit payer une amende de {fine_amount}[ dans un délais de {fine_delay}].",
        "follow": "Il doit également payer une amende de {fine_amount}[ dans un délais de {fine_delay}].",
        "slots": ["fine_amount", "fine_delay"],
    },
    "W": {
        "first": "L'accusé doit effectuer {work_duration} de travaux communautaires[ dans un délais de {work_delay}].",
        "follow": "Il doit aussi effectuer {work_duration} de travaux communautaires[ dans un délais de {work_delay}].",
        "slots": ["work_duration", "work_delay"],
    },
    "O": {
        "first": "L'accusé fait l'objet d'une autre ordonnance de la cour.",
        "follow": "Il fait également l'objet d'une autre ordonnance de la cour.",
        "slots": [],
    },
    "B": {
        "first": "L'accusé fait l'objet d'une ordonnance de probation de {probation_duration}[ {probation_type}].",
        "follow": "Il fait également l'objet d'une ordonnance de probation de {probation_duration}[ {probation_type}].",
        "slots": ["probation_duration", "probation_type"],
    },
    "S": {
        "first": (
            "Le paiement des frais de justice et de la suramende compensatoire qui sera versé dans un "
            "fond pour venir en aide aux victimes d'actes criminel doit être payé dans un délais de {surcharge_delay}."
        ),
        "follow": (
            "Le paiement des frais de justice et de la suramende compensatoire qui sera versé dans un "
            "fond pour venir en aide aux victimes d'actes criminel doit être payé dans un délais de {surcharge_delay}."
        ),
        "slots": ["surcharge_delay"],
    },
}


def components_for(penalty: str | None, flags: tuple[str, ...]) -> list[str]:
    parts: list[str] = []
    if penalty:
        parts.append("I") if "I" in penalty else None
        if "C" in penalty:
            parts.append("C")
        if "A" in penalty:
            parts.append("A")
        if "A" in penalty and "I" in penalty:
            parts.append("R")
    parts.extend(flags)
    return parts


def signature_of(penalty: str | None, flags: tuple[str, ...]) -> str:
    parts = ([f"P:{penalty}"] if penalty else []) + list(flags)
    return "+".join(parts)


def sentence_rule(penalty: str | None, flags: tuple[str, ...]) -> dict:
    components = components_for(penalty, flags)
    pieces = []
    slots: list[str] = []
    for i, comp in enumerate(components):
        clause = CLAUSES[comp]
        pieces.append(clause["first"] if i == 0 else clause["follow"])
        slots.extend(s for s in clause["slots"] if s not in slots)
    signature = signature_of(penalty, flags)
    return {
        "id": f"sentence-{signature}",
        "category": "sentence",
        "signature": signature,
        "slots": slots,
        "pattern": " ".join(pieces),
        "applicability": {"field": "sentence.signature", "equals": signature},
    }


def sentence_rules() -> list[dict]:
    flag_subsets = []
    for mask in range(16):
        subset = tuple(f for bit, f in enumerate(("F", "W", "B", "S")) if mask & (1 << bit))
        flag_subsets.append(subset)

    rules = []
    for penalty in ("I", "CAI"):
        for subset in flag_subsets:
            rules.append(sentence_rule(penalty, subset))
    for subset in flag_subsets:
        if subset:
            rules.append(sentence_rule(None, subset))
    rules.append(sentence_rule("CI", ()))
    rules.append(sentence_rule("AI", ()))
    rules.append(sentence_rule(None, ("O",)))
    return rules


def main() -> None:
    table = {
        "version": 1,
        "party": [PARTY_RULE],
        "stitch": [STITCH_RULE],
        "plea": PLEA_RULES,
        "decision": decision_rules(),
        "sentence": sentence_rules(),
    }
    counts = {k: len(v) for k, v in table.items() if isinstance(v, list)}
    total = sum(counts.values())
    assert counts["plea"] + counts["decision"] == 14, counts
    assert counts["sentence"] == 50, counts
    assert total == 66, (counts, total)
    OUT.write_text(json.dumps(table, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {OUT} ({total} rules: {counts})")


if __name__ == "__main__":
    main()
