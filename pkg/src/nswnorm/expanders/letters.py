"""Letter-family expanders: LABB, LWRD, LSEQ.

LABB resolves through the abbreviation dictionary (first trying the token
verbatim, then without a trailing dot) and degrades to the LSEQ reading on
a miss.  LWRD resolves through the loanword dictionary, splitting compound
tokens like "Covid-19" into letter and digit runs; unknown words pass
through verbatim for the downstream grapheme-to-phoneme stage.  LSEQ reads
characters one by one, keeping letters verbatim and speaking digits.
"""

from __future__ import annotations

import re

from ..taxonomy import Tag
from .base import DIGIT_WORDS
from .numbers import number_words

_RUN_RE = re.compile(r"[^\W\d_]+|\d+", re.UNICODE)


def expand_lseq(token: str) -> list[str]:
    """Characters space-separated: letters verbatim, digits spoken,
    punctuation dropped."""
    words: list[str] = []
    for ch in token:
        # isdecimal, not isdigit: int() rejects Nd-adjacent chars like "²".
        if ch.isdecimal():
            words.append(DIGIT_WORDS[int(ch)])
        elif ch.isalpha():
            words.append(ch)
    return words


def _lookup(dictionary: dict[str, str], key: str) -> list[str] | None:
    hit = dictionary.get(key)
    if hit is None and key.lower() != key:
        hit = dictionary.get(key.lower())
    return None if hit is None else hit.split()


def expand_labb(token: str, abbreviations: dict[str, str]) -> list[str]:
    hit = _lookup(abbreviations, token) or _lookup(abbreviations, token.rstrip("."))
    return hit if hit is not None else expand_lseq(token)


def expand_lwrd(token: str, loanwords: dict[str, str]) -> list[str]:
    hit = _lookup(loanwords, token)
    if hit is not None:
        return hit
    runs = _RUN_RE.findall(token)
    if len(runs) <= 1:
        return [token]  # unknown plain word: verbatim passthrough
    words: list[str] = []
    for run in runs:
        if run.isdigit():
            words += (
                number_words(int(run))
                if len(run) < 16
                else [DIGIT_WORDS[int(c)] for c in run]
            )
        else:
            words += _lookup(loanwords, run) or [run]
    return words


def expand_letter(
    token: str,
    tag: Tag,
    abbreviations: dict[str, str],
    loanwords: dict[str, str],
) -> list[str]:
    """Dispatch over the letter family; total (never None)."""
    if tag is Tag.LABB:
        return expand_labb(token, abbreviations)
    if tag is Tag.LWRD:
        return expand_lwrd(token, loanwords)
    return expand_lseq(token)
