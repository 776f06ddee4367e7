"""Minimal French surface helpers: dates, ordinals, elision, quantities.

Templates carry most inflection; this module only covers what slot values
need. No general morphology engine.
"""

from __future__ import annotations

from datetime import date
from decimal import Decimal

from ..models import Duration, DurationUnit, Money

MONTHS_FR = (
    "janvier", "février", "mars", "avril", "mai", "juin",
    "juillet", "août", "septembre", "octobre", "novembre", "décembre",
)

_VOWELS = "aàâäeéèêëiîïoôöuùûüy"

# French elision depends on whether a leading h is mute or aspirated;
# only words plausible at the head of an offence title are listed. An
# unlisted h word is treated as aspirated (no elision), which is the
# safe default for e.g. "harcèlement".
_H_MUTE = frozenset({"homicide", "habitation", "hospitalisation", "héroïne", "huile"})


def format_date_fr(d: date) -> str:
    """1979-01-01 -> "1er janvier 1979"; day 1 is ordinal, others cardinal."""
    day = "1er" if d.day == 1 else str(d.day)
    return f"{day} {MONTHS_FR[d.month - 1]} {d.year}"


def format_ordinal_fr(n: int) -> str:
    """1 -> "1er", any larger rank -> "<n>e"."""
    if n < 1:
        raise ValueError(f"ordinal rank must be >= 1, got {n}")
    return "1er" if n == 1 else f"{n}e"


def starts_with_vowel_sound(phrase: str) -> bool:
    word = phrase.lstrip().lower()
    if not word:
        return False
    if word[0] in _VOWELS:
        return True
    if word[0] == "h":
        head = word.split(maxsplit=1)[0].strip("',;.")
        return head in _H_MUTE
    return False


def elide_preposition(preposition: str, following: str) -> str:
    """Contract "de" to "d'" before a vowel sound; other prepositions unchanged."""
    if preposition == "de" and starts_with_vowel_sound(following):
        return "d'"
    return preposition


def attach_preposition(preposition: str, phrase: str) -> str:
    prep = elide_preposition(preposition, phrase)
    if prep.endswith("'"):
        return f"{prep}{phrase}"
    return f"{prep} {phrase}"


def lower_first(text: str) -> str:
    return text[0].lower() + text[1:] if text else text


def format_quantity(q: Decimal) -> str:
    """Integers render bare ("30"); fractions use the French decimal comma ("8,5")."""
    if q == q.to_integral_value():
        return str(q.quantize(Decimal(1)))
    return str(q.normalize()).replace(".", ",")


_UNIT_FORMS = {
    DurationUnit.HOURS: ("heure", "heures"),
    DurationUnit.DAYS: ("jour", "jours"),
    DurationUnit.MONTHS: ("mois", "mois"),
    DurationUnit.YEARS: ("an", "ans"),
}


def render_duration(d: Duration) -> str:
    singular, plural = _UNIT_FORMS[d.unit]
    unit = singular if d.quantity == 1 else plural
    return f"{format_quantity(d.quantity)} {unit}"


def render_amount(m: Money) -> str:
    return f"{format_quantity(m.value)} {m.currency}"


def title_case_name(raw: str) -> str:
    """Docket "DOE, JOHN" -> "John Doe"; hyphens and apostrophes title-case each part."""
    if "," in raw:
        surname, _, given = raw.partition(",")
        ordered = f"{given.strip()} {surname.strip()}"
    else:
        ordered = raw.strip()

    def cap_word(word: str) -> str:
        for sep in ("-", "'"):
            if sep in word:
                return sep.join(cap_word(part) for part in word.split(sep))
        return word[:1].upper() + word[1:].lower()

    return " ".join(cap_word(w) for w in ordered.split())
