"""Spoken-form expanders for the 19 non-standard-word classes.

``expand`` is the total entry point: it dispatches on the tag to the
date/numeric/letter/URL family expanders and falls back to digit-by-digit,
letter-by-letter spelling (flagged on the result) whenever the surface
form does not parse.  Expanders are pure functions of the token and the
immutable resource bundle.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from ..errors import ValidationError
from ..taxonomy import Tag, parse_tag
from .base import DIGIT_WORDS, ExpanderConfig, SpokenText, spell_fallback
from .dates import expand_date
from .letters import expand_labb, expand_letter, expand_lseq, expand_lwrd
from .numbers import (
    decimal_words,
    digits_to_words,
    number_to_words,
    number_words,
    roman_to_int,
)
from .numeric import UnitTables, expand_numeric

if TYPE_CHECKING:
    from ..resources import Resources

_DATE_TAGS = frozenset({Tag.NDAT, Tag.NDAY, Tag.NMON, Tag.NQUA})
_LETTER_TAGS = frozenset({Tag.LABB, Tag.LWRD, Tag.LSEQ})

__all__ = [
    "DIGIT_WORDS",
    "ExpanderConfig",
    "SpokenText",
    "UnitTables",
    "decimal_words",
    "digits_to_words",
    "expand",
    "expand_date",
    "expand_labb",
    "expand_letter",
    "expand_lseq",
    "expand_lwrd",
    "expand_numeric",
    "number_to_words",
    "number_words",
    "roman_to_int",
    "spell_fallback",
]


def expand(token: str, tag: Tag | str, resources: "Resources") -> SpokenText:
    """Spoken form of an NSW surface (a single token or a joined span).

    Total: unparseable surfaces degrade to spelled-out digits/letters with
    the ``fallback`` flag set, never an exception.
    """
    tag = parse_tag(tag)
    if tag is Tag.URLE:
        from ..flmm import expand_urle  # deferred: flmm imports .base

        words: list[str] = []
        for piece in token.split():
            words.extend(
                expand_urle(
                    piece, resources.lexicon, resources.urle_dictionary, resources.config
                ).words
            )
        return SpokenText(tuple(words))
    try:
        if tag is Tag.NDIG:
            return digits_to_words(token, resources.config)
        if tag in _DATE_TAGS:
            parts = expand_date(token, tag)
        elif tag in _LETTER_TAGS:
            parts = expand_letter(token, tag, resources.abbreviations, resources.loanwords)
        else:
            parts = expand_numeric(token, tag, resources.unit_tables, resources.config)
    except ValidationError:
        parts = None
    if parts is None:
        return spell_fallback(token)
    return SpokenText(tuple(parts))
