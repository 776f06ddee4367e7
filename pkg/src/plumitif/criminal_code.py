"""Parse the Criminal Code consolidation HTML into a queryable provision store.

The parser targets the documented markup schema (docs/formats.md): a flat
sequence of <p> blocks classed MarginalNote / Section / Paragraph /
Subparagraph / Repealed, with the provision or paragraph label carried by a
<span class="SectionLabel"> or <span class="Label"> child. Anything the
schema cannot interpret raises CccParseError; partial stores are never
returned. The JSON form is a top-level object keyed by provision number.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from html.parser import HTMLParser
from pathlib import Path

from .errors import CccParseError, ProvisionNotFoundError, StoreSchemaError
from .models import LawCitation

_NUMBER_TOKEN = re.compile(r"^\d+(\.\d+)*$")


@dataclass(frozen=True)
class ParagraphNode:
    text: str
    subparagraphs: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Provision:
    number: str
    title: str
    text: str
    paragraphs: dict[str, ParagraphNode] = field(default_factory=dict)
    repealed: bool = False


@dataclass(frozen=True)
class StoreMetadata:
    source: str | None = None
    checksum: str = ""


@dataclass(frozen=True)
class ProvisionStore:
    """Read-only map from provision number to Provision.

    Never mutated after load; metadata (provenance, checksum) is excluded
    from equality so that export/import round-trips compare equal.
    """

    provisions: dict[str, Provision]
    metadata: StoreMetadata = field(default=StoreMetadata(), compare=False)

    def __len__(self) -> int:
        return len(self.provisions)

    def __contains__(self, number: str) -> bool:
        return number in self.provisions


@dataclass(frozen=True)
class LookupResult:
    """The addressed node plus its owning provision (titles resolve from there)."""

    provision: Provision
    text: str
    paragraph: str | None = None
    subparagraph: str | None = None


_BLOCK_CLASSES = {"MarginalNote", "Section", "Paragraph", "Subparagraph", "Repealed"}
_LABEL_CLASSES = {"SectionLabel", "Label"}
_IGNORED_TAGS = {"html", "head", "body", "title", "meta", "h1", "h2", "h3", "div", "section", "br", "hr"}


class _CccHtmlReader(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.blocks: list[tuple[str, str, str, int]] = []  # (class, label, text, line)
        self._block_class: str | None = None
        self._block_line = 0
        self._in_label = False
        self._label_parts: list[str] = []
        self._text_parts: list[str] = []

    def _fail(self, reason: str):
        line, _ = self.getpos()
        raise CccParseError(f"line {line}", reason)

    def handle_starttag(self, tag, attrs):
        attrs = dict(attrs)
        if tag == "p":
            if self._block_class is not None:
                self._fail("nested <p> blocks are not part of the schema")
            cls = attrs.get("class", "")
            if cls not in _BLOCK_CLASSES:
                self._fail(f"unknown <p> class {cls!r}")
            self._block_class = cls
            self._block_line = self.getpos()[0]
            self._label_parts = []
            self._text_parts = []
        elif tag == "span":
            cls = attrs.get("class", "")
            if cls in _LABEL_CLASSES:
                if self._block_class is None:
                    self._fail("label <span> outside a <p> block")
                self._in_label = True
        elif tag not in _IGNORED_TAGS:
            self._fail(f"unexpected tag <{tag}>")

    def handle_endtag(self, tag):
        if tag == "span":
            self._in_label = False
        elif tag == "p":
            if self._block_class is None:
                self._fail("</p> without opening block")
            self.blocks.append(
                (
                    self._block_class,
                    "".join(self._label_parts).strip(),
                    " ".join("".join(self._text_parts).split()),
                    self._block_line,
                )
            )
            self._block_class = None

    def handle_data(self, data):
        if self._block_class is None:
            return
        if self._in_label:
            self._label_parts.append(data)
        else:
            self._text_parts.append(data)


def parse_ccc_html(html: str, source: str | None = None) -> ProvisionStore:
    """Parse consolidation HTML; every provision heading yields one Provision."""
    reader = _CccHtmlReader()
    reader.feed(html)
    reader.close()

    provisions: dict[str, Provision] = {}
    pending_title: str | None = None
    paragraphs: dict[str, dict] = {}
    open_number: str | None = None
    open_title = ""
    open_text = ""
    current_paragraph: str | None = None

    def close_open_provision():
        nonlocal open_number
        if open_number is None:
            return
        provisions[open_number] = Provision(
            number=open_number,
            title=open_title,
            text=open_text,
            paragraphs={
                label: ParagraphNode(text=node["text"], subparagraphs=dict(node["subparagraphs"]))
                for label, node in paragraphs.items()
            },
        )
        open_number = None

    for cls, label, text, line in reader.blocks:
        where = f"line {line}"
        if cls == "MarginalNote":
            if not text:
                raise CccParseError(where, "empty marginal note")
            pending_title = text
        elif cls in ("Section", "Repealed"):
            close_open_provision()
            if not label:
                raise CccParseError(where, f"{cls} block without a SectionLabel")
            if not _NUMBER_TOKEN.match(label):
                raise CccParseError(where, f"provision number {label!r} is not digits[.digits]")
            if label in provisions:
                raise CccParseError(where, f"duplicate provision {label}")
            if cls == "Repealed":
                provisions[label] = Provision(
                    number=label,
                    title=pending_title or "[Abrogé]",
                    text="",
                    repealed=True,
                )
                pending_title = None
                current_paragraph = None
                continue
            if pending_title is None:
                raise CccParseError(where, f"provision {label} has no marginal note title")
            open_number = label
            open_title = pending_title
            open_text = text
            paragraphs = {}
            current_paragraph = None
            pending_title = None
        elif cls == "Paragraph":
            if open_number is None:
                raise CccParseError(where, "paragraph outside any provision")
            if not label:
                raise CccParseError(where, "paragraph without a label")
            if label in paragraphs:
                raise CccParseError(where, f"duplicate paragraph {label} in provision {open_number}")
            paragraphs[label] = {"text": text, "subparagraphs": {}}
            current_paragraph = label
        elif cls == "Subparagraph":
            if open_number is None or current_paragraph is None:
                raise CccParseError(where, "subparagraph outside any paragraph")
            if not label:
                raise CccParseError(where, "subparagraph without a label")
            subs = paragraphs[current_paragraph]["subparagraphs"]
            if label in subs:
                raise CccParseError(where, f"duplicate subparagraph {label}")
            subs[label] = text

    close_open_provision()
    if not provisions:
        raise CccParseError("document", "no provisions found")
    return ProvisionStore(provisions=provisions, metadata=StoreMetadata(source=source, checksum=_checksum(provisions)))


def _provisions_payload(provisions: dict[str, Provision]) -> dict:
    return {
        p.number: {
            "title": p.title,
            "text": p.text,
            "repealed": p.repealed,
            "paragraphs": {
                label: {"text": node.text, "subparagraphs": dict(node.subparagraphs)}
                for label, node in p.paragraphs.items()
            },
        }
        for p in provisions.values()
    }


def _checksum(provisions: dict[str, Provision]) -> str:
    canonical = json.dumps(_provisions_payload(provisions), ensure_ascii=False, sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def export_json(store: ProvisionStore) -> str:
    """Canonical JSON document: top-level object keyed by provision number."""
    return json.dumps(_provisions_payload(store.provisions), ensure_ascii=False, sort_keys=True, indent=2)


def import_json(doc: str, source: str | None = None) -> ProvisionStore:
    try:
        raw = json.loads(doc)
    except json.JSONDecodeError as exc:
        raise StoreSchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise StoreSchemaError("top level must be an object keyed by provision number")

    provisions: dict[str, Provision] = {}
    for number, body in raw.items():
        where = f"provision {number}"
        if not _NUMBER_TOKEN.match(number):
            raise StoreSchemaError(f"{where}: key is not a digits[.digits] token")
        if not isinstance(body, dict):
            raise StoreSchemaError(f"{where}: value must be an object")
        title = body.get("title")
        if not isinstance(title, str) or not title.strip():
            raise StoreSchemaError(f"{where}: missing or empty 'title'")
        text = body.get("text", "")
        if not isinstance(text, str):
            raise StoreSchemaError(f"{where}: 'text' must be a string")
        paragraphs: dict[str, ParagraphNode] = {}
        for label, node in (body.get("paragraphs") or {}).items():
            if not isinstance(node, dict) or not isinstance(node.get("text", ""), str):
                raise StoreSchemaError(f"{where}: paragraph {label} must be an object with text")
            subs = node.get("subparagraphs") or {}
            if not all(isinstance(v, str) for v in subs.values()):
                raise StoreSchemaError(f"{where}: subparagraphs of {label} must map label to text")
            paragraphs[label] = ParagraphNode(text=node.get("text", ""), subparagraphs=dict(subs))
        provisions[number] = Provision(
            number=number,
            title=title,
            text=text,
            paragraphs=paragraphs,
            repealed=bool(body.get("repealed", False)),
        )
    return ProvisionStore(provisions=provisions, metadata=StoreMetadata(source=source, checksum=_checksum(provisions)))


def load_store(path: str | Path) -> ProvisionStore:
    p = Path(path)
    return import_json(p.read_text(encoding="utf-8"), source=str(p))


def lookup(store: ProvisionStore, citation: LawCitation) -> LookupResult:
    """Resolve a citation to its provision, paragraph or subparagraph node."""
    provision = store.provisions.get(citation.provision)
    if provision is None:
        raise ProvisionNotFoundError(citation)
    if citation.paragraph is None:
        return LookupResult(provision=provision, text=provision.text)
    node = provision.paragraphs.get(citation.paragraph)
    if node is None:
        raise ProvisionNotFoundError(citation)
    if citation.subparagraph is None:
        return LookupResult(provision=provision, text=node.text, paragraph=citation.paragraph)
    sub = node.subparagraphs.get(citation.subparagraph)
    if sub is None:
        raise ProvisionNotFoundError(citation)
    return LookupResult(
        provision=provision,
        text=sub,
        paragraph=citation.paragraph,
        subparagraph=citation.subparagraph,
    )
