"""Forward lexicon-based maximum matching (FLMM).

Splits concatenated multi-syllable strings (hashtags, email local parts,
contact names) into known syllables by greedy longest-match scanning:
from each start position try window sizes from largest to smallest; on a
lexicon hit emit the match and jump past it, otherwise emit one character
and advance by one.  Matching is case-insensitive, emission preserves the
original characters, and the joined output conserves them exactly.

The greedy scan reproduces the documented failure modes on purpose
("vinasun" -> "vin a sun" when "vin" is in the lexicon): fidelity to the
algorithm outranks linguistic plausibility here.
"""

from __future__ import annotations

import os
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import ValidationError
from .expanders.base import DIGIT_WORDS, ExpanderConfig, SpokenText


def strip_diacritics(text: str) -> str:
    """Remove Vietnamese diacritics ("Đạt" -> "Dat", "tiếng" -> "tieng")."""
    replaced = text.replace("đ", "d").replace("Đ", "D")
    decomposed = unicodedata.normalize("NFD", replaced)
    return "".join(c for c in decomposed if not unicodedata.combining(c))


class Lexicon:
    """Case-folded exact-match entry set with O(1) membership."""

    def __init__(self, entries: Iterable[str]) -> None:
        folded = set()
        for entry in entries:
            if not entry or any(c.isspace() for c in entry):
                raise ValidationError(
                    f"lexicon entries must be non-empty and whitespace-free: {entry!r}"
                )
            folded.add(entry.casefold())
        self._entries = frozenset(folded)
        self._max_len = max(map(len, folded), default=0)

    def __contains__(self, candidate: str) -> bool:
        return candidate.casefold() in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def max_entry_length(self) -> int:
        return self._max_len

    @classmethod
    def from_wordlist(cls, words: Iterable[str]) -> "Lexicon":
        """Build from words/phrases: phrases split into single words, and
        diacritic-stripped twins added (hashtags drop diacritics, names
        may keep them)."""
        entries: list[str] = []
        for phrase in words:
            for word in phrase.split():
                entries.append(word)
                bare = strip_diacritics(word)
                if bare != word:
                    entries.append(bare)
        return cls(entries)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "Lexicon":
        """One entry per line; '#' comments and blank lines ignored."""
        words = []
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            entry = line.split("#", 1)[0].strip()
            if entry:
                words.append(entry)
        return cls.from_wordlist(words)


@dataclass(frozen=True)
class Segment:
    text: str
    is_match: bool  # False: single passthrough character (or trailing rest)


@dataclass(frozen=True)
class Segmentation:
    source: str
    segments: tuple[Segment, ...]

    @property
    def text(self) -> str:
        """Single-space-joined rendering."""
        return " ".join(s.text for s in self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)


def flmm_segment(lexicon: Lexicon, s: str, max_window: int | None = None) -> Segmentation:
    """Greedy longest-match segmentation of a whitespace-free string.

    ``max_window`` defaults to the longest lexicon entry, which cannot
    change the output relative to the full string length (no longer
    candidate can ever match); pass len(s) for the literal scan.
    """
    if any(c.isspace() for c in s):
        raise ValidationError(f"input must not contain whitespace: {s!r}")
    min_window = 1
    if max_window is None:
        max_window = max(lexicon.max_entry_length, min_window)
    segments: list[Segment] = []
    start = 0
    # main scan stops one char early; the tail guard below emits that
    # last char verbatim, never testing it as a match
    while start < len(s) - min_window:
        matched = False
        for size in range(min(max_window, len(s) - start), min_window - 1, -1):
            candidate = s[start : start + size]
            if candidate in lexicon:
                segments.append(Segment(candidate, is_match=True))
                start += size
                matched = True
                break
        if not matched:
            segments.append(Segment(s[start], is_match=False))
            start += 1
    if start < len(s):
        segments.append(Segment(s[start:], is_match=False))
    return Segmentation(s, tuple(segments))


def _speak_segments(seg: Segmentation) -> list[str]:
    """Spoken words for a segmentation: matches verbatim, digits spoken,
    other passthrough characters kept verbatim."""
    words: list[str] = []
    for segment in seg:
        if segment.is_match:
            words.append(segment.text)
        else:
            for ch in segment.text:
                words.append(DIGIT_WORDS[int(ch)] if ch.isdecimal() else ch)
    return words


def expand_urle(
    token: str,
    lexicon: Lexicon,
    dictionaries: dict[str, str] | None = None,
    config: ExpanderConfig = ExpanderConfig(),
) -> SpokenText:
    """Spoken form of a URL/email/hashtag/handle token.

    '#' prefixes are stripped (or verbalized per config), '@' and domain
    dots get their configured words, and every remaining part is
    dictionary-expanded when known, else FLMM-segmented.
    """
    dictionaries = dictionaries or {}
    body = token.strip()
    words: list[str] = []
    if body.startswith("#"):
        body = body[1:]
        words.extend(config.words_of(config.hashtag_word))
    for pi, piece in enumerate(body.split("@")):
        if pi:
            words.extend(config.words_of(config.at_word))
        for di, part in enumerate(piece.split(".")):
            if di:
                words.extend(config.words_of(config.dot_word))
            if not part:
                continue
            hit = dictionaries.get(part) or dictionaries.get(part.lower())
            if hit is not None:
                words.extend(hit.split())
            else:
                words.extend(_speak_segments(flmm_segment(lexicon, part)))
    return SpokenText(tuple(words))
