"""Shared types for the written-to-spoken expanders."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SpokenText:
    """Spoken-form words for one NSW.

    ``fallback`` marks outputs produced by the last-resort character
    reading (unparseable input), so callers can surface low confidence.
    """

    words: tuple[str, ...]
    fallback: bool = False

    @property
    def text(self) -> str:
        return " ".join(self.words)

    def __str__(self) -> str:
        return self.text

    def __bool__(self) -> bool:
        return bool(self.words)


@dataclass(frozen=True)
class ExpanderConfig:
    """Reading conventions that legitimately vary between deployments."""

    fraction_word: str = "trên"  # "3/4" -> "ba trên bốn"; alternative: "phần"
    plus_word: str = ""  # NDIG leading '+': "" drops it, "cộng" reads it
    hashtag_word: str = ""  # URLE '#' prefix: "" strips silently
    at_word: str = "a còng"  # URLE '@'
    dot_word: str = "chấm"  # URLE domain dots

    def words_of(self, value: str) -> tuple[str, ...]:
        return tuple(value.split()) if value else ()


DIGIT_WORDS = (
    "không", "một", "hai", "ba", "bốn", "năm", "sáu", "bảy", "tám", "chín",
)


def spell_fallback(token: str) -> SpokenText:
    """Last-resort reading: digits as digit words, letters verbatim."""
    words = []
    for ch in token:
        # isdecimal, not isdigit: int() rejects Nd-adjacent chars like "²".
        if ch.isdecimal():
            words.append(DIGIT_WORDS[int(ch)])
        elif ch.isalpha():
            words.append(ch)
    return SpokenText(tuple(words), fallback=True)
