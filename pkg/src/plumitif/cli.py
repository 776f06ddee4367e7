"""Command-line interface.

Subcommands:
  summarize   read a raw docket (file or stdin) and print its summary
  serve       run the HTTP JSON service
  parse-ccc   parse consolidation HTML into the provision-store JSON
  synthesize  generate a gold-annotated synthetic corpus
  evaluate    run extraction + error-rate evaluation over a corpus directory
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize
from .config import build_components
from .corpus import (
    DEFAULT_PROFILES,
    GoldPlumitif,
    evaluate_error_rates,
    evaluate_extraction,
    load_profiles,
    synthesize as synthesize_corpus,
)
from .criminal_code import export_json, parse_ccc_html
from .errors import PlumitifError
from .models import Entity, EntityLabel, RawPlumitif, Segment, SegmentKind
from .pipeline import summarize, summary_as_text


def _gold_to_dict(doc: GoldPlumitif) -> dict:
    return {
        "district": doc.district,
        "header": doc.header,
        "segments": [
            {"kind": s.kind.value, "start": s.start, "end": s.end} for s in doc.gold_segments
        ],
        "entities": {
            kind.value: [
                {"label": e.label.value, "start": e.start, "end": e.end, "surface": e.surface}
                for e in entities
            ]
            for kind, entities in doc.gold_entities.items()
        },
        "case": serialize.case_to_dict(doc.gold_case),
    }


def _gold_from_files(text_path: Path, gold_path: Path) -> GoldPlumitif:
    text = text_path.read_text(encoding="utf-8")
    raw = RawPlumitif(text=text)
    gold = json.loads(gold_path.read_text(encoding="utf-8"))
    segments = tuple(
        Segment(SegmentKind(s["kind"]), s["start"], s["end"], text[s["start"] : s["end"]])
        for s in gold["segments"]
    )
    entities = {
        SegmentKind(kind): tuple(
            Entity(EntityLabel(e["label"]), e["start"], e["end"], e["surface"]) for e in items
        )
        for kind, items in gold["entities"].items()
    }
    return GoldPlumitif(
        district=gold["district"],
        raw=raw,
        header=gold["header"],
        gold_segments=segments,
        gold_entities=entities,
        gold_case=serialize.case_from_dict(gold["case"]),
    )


def _cmd_summarize(args) -> int:
    components = build_components(args.config)
    if args.infile == "-":
        raw = sys.stdin.read()
    else:
        raw = Path(args.infile).read_text(encoding="utf-8")
    try:
        summary = summarize(raw, components)
    except PlumitifError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(serialize.summary_to_dict(summary), ensure_ascii=False, indent=2))
    else:
        print(summary_as_text(summary))
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    components = build_components(args.config)
    static_dir = args.static if args.static else None
    serve(components, host=args.host, port=args.port, static_dir=static_dir)
    return 0


def _cmd_parse_ccc(args) -> int:
    html = Path(args.infile).read_text(encoding="utf-8")
    try:
        store = parse_ccc_html(html, source=args.infile)
    except PlumitifError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    Path(args.out).write_text(export_json(store) + "\n", encoding="utf-8")
    print(f"wrote {len(store)} provisions to {args.out}")
    return 0


def _cmd_synthesize(args) -> int:
    profiles = load_profiles(args.profile) if args.profile else DEFAULT_PROFILES
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    total = 0
    for profile in profiles:
        district_dir = out / profile.name.replace(" ", "_")
        district_dir.mkdir(exist_ok=True)
        for i, doc in enumerate(synthesize_corpus(profile, seed=args.seed, n=args.n), start=1):
            (district_dir / f"{i:04d}.txt").write_text(doc.raw.text, encoding="utf-8")
            (district_dir / f"{i:04d}.gold.json").write_text(
                json.dumps(_gold_to_dict(doc), ensure_ascii=False, indent=2), encoding="utf-8"
            )
            total += 1
    print(f"wrote {total} documents to {out}")
    return 0


def _cmd_evaluate(args) -> int:
    corpus_dir = Path(args.corpus)
    documents = []
    for text_path in sorted(corpus_dir.glob("*/*.txt")):
        gold_path = text_path.parent / (text_path.stem + ".gold.json")
        if gold_path.exists():
            documents.append(_gold_from_files(text_path, gold_path))
    if not documents:
        print(f"error: no <n>.txt + <n>.gold.json pairs under {corpus_dir}", file=sys.stderr)
        return 2

    components = build_components(args.config)
    extraction = evaluate_extraction(documents, components.tagger)
    rates = evaluate_error_rates(documents, lambda text: summarize(text, components))
    report = {"extraction": extraction.to_dict(), "error_rates": rates.to_dict()}
    Path(args.report).write_text(json.dumps(report, ensure_ascii=False, indent=2), encoding="utf-8")
    print(
        f"evaluated {len(documents)} documents: macro F1 {extraction.scores.macro_f1:.3f}, "
        f"EE {rates.to_dict()['average']['ee_rate']}, GE {rates.to_dict()['average']['ge_rate']}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plumitif", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--config", help="config file path (or env PLUMITIF_CONFIG)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summarize", help="summarize one raw docket")
    p.add_argument("--in", dest="infile", default="-", help="input file, or - for stdin")
    p.add_argument("--json", action="store_true", help="emit the Summary JSON instead of text")
    p.set_defaults(func=_cmd_summarize)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", help="directory of built web assets to serve at /")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("parse-ccc", help="parse consolidation HTML into store JSON")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_parse_ccc)

    p = sub.add_parser("synthesize", help="generate a synthetic gold corpus")
    p.add_argument("--profile", help="profiles JSON file (defaults to the 8 shipped districts)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="documents per district")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_synthesize)

    p = sub.add_parser("evaluate", help="evaluate a corpus directory")
    p.add_argument("--corpus", required=True)
    p.add_argument("--report", required=True)
    p.set_defaults(func=_cmd_evaluate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
