"""Text cleaning and tokenization.

Raw input may carry emoji, HTML entity escapes, emoticon punctuation and
irregular spacing.  ``clean_text`` strips all of that; ``tokenize`` splits
the cleaned text into tokens such that non-standard words ("31/3",
"0966.3553.46", "Covid-19") survive as single tokens while detached
punctuation becomes separate tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

# Code point ranges treated as emoji / pictographs.
_EMOJI_RANGES = (
    (0x1F300, 0x1F5FF),  # symbols and pictographs
    (0x1F600, 0x1F64F),  # emoticons
    (0x1F680, 0x1F6FF),  # transport and map symbols
    (0x1F900, 0x1F9FF),  # supplemental symbols
    (0x1FA70, 0x1FAFF),  # extended pictographs
    (0x2600, 0x26FF),    # miscellaneous symbols
    (0x2700, 0x27BF),    # dingbats
    (0xFE00, 0xFE0F),    # variation selectors
    (0x1F1E6, 0x1F1FF),  # regional indicators
)

_EMOJI_RE = re.compile(
    "[" + "".join(f"{chr(lo)}-{chr(hi)}" for lo, hi in _EMOJI_RANGES) + "]"
)

# The five entities handled; nbsp becomes a plain space.
_ENTITY_RE = re.compile(r"&(nbsp|lt|gt|amp|quot);")
_ENTITY_MAP = {"nbsp": " ", "lt": "<", "gt": ">", "amp": "&", "quot": '"'}

_WS_RE = re.compile(r"\s+")

# Punctuation peeled from chunk edges by tokenize.  Hyphen and slash are
# deliberately absent: they carry NSW structure ("3-1", "3/4", "-100").
_PEEL = set('.,!?;:()[]{}"\'«»“”‘’…')

_ELLIPSIS = "..."


def _is_unspoken(chunk: str) -> bool:
    """True for emoticon-like chunks: all punctuation, some char repeated."""
    if len(chunk) < 2 or any(c.isalnum() for c in chunk):
        return False
    return len(set(chunk)) < len(chunk)


def clean_text(raw: str) -> str:
    """Normalize raw text: entities, emoji, emoticons, whitespace.

    HTML entity replacement runs to a fixpoint so no escape survives even
    when escapes are nested ("&amp;amp;" becomes "&").  The result is
    idempotent under clean_text.
    """
    text = raw
    while True:
        replaced = _ENTITY_RE.sub(lambda m: _ENTITY_MAP[m.group(1)], text)
        if replaced == text:
            break
        text = replaced
    text = _EMOJI_RE.sub(" ", text)
    chunks = [c for c in text.split() if not _is_unspoken(c)]
    return " ".join(chunks)


@dataclass(frozen=True)
class Token:
    """A whitespace-free slice of the cleaned text."""

    text: str
    start: int
    end: int  # exclusive character offset

    def __post_init__(self) -> None:
        if not self.text or self.end - self.start != len(self.text):
            raise ValueError(f"inconsistent token: {self!r}")


@dataclass(frozen=True)
class Sentence:
    """Tokenized cleaned text."""

    source: str
    tokens: tuple[Token, ...]

    @property
    def texts(self) -> list[str]:
        return [t.text for t in self.tokens]

    def __len__(self) -> int:
        return len(self.tokens)


def _keeps_trailing_dot(core: str) -> bool:
    """Abbreviation heuristic: "Tp." stays one token, "ca." does not.

    A single trailing dot is kept when the rest is 1-3 letters starting
    uppercase.  Lowercase words ("ca.") get the dot peeled.
    """
    if not core.endswith(".") or core.count(".") != 1:
        return False
    body = core[:-1]
    return 1 <= len(body) <= 3 and body.isalpha() and body[0].isupper()


def _split_chunk(chunk: str, offset: int) -> list[Token]:
    """Peel leading/trailing punctuation off one whitespace-free chunk."""
    lead: list[tuple[str, int]] = []
    trail: list[tuple[str, int]] = []  # collected right-to-left
    lo, hi = 0, len(chunk)
    while lo < hi:
        if chunk.startswith(_ELLIPSIS, lo):
            lead.append((_ELLIPSIS, lo))
            lo += 3
        elif chunk[lo] in _PEEL:
            lead.append((chunk[lo], lo))
            lo += 1
        else:
            break
    while hi > lo:
        if _keeps_trailing_dot(chunk[lo:hi]):
            break
        if chunk.endswith(_ELLIPSIS, lo, hi):
            trail.append((_ELLIPSIS, hi - 3))
            hi -= 3
        elif chunk[hi - 1] in _PEEL:
            trail.append((chunk[hi - 1], hi - 1))
            hi -= 1
        else:
            break
    parts = lead + ([(chunk[lo:hi], lo)] if hi > lo else []) + trail[::-1]
    return [Token(text, offset + at, offset + at + len(text)) for text, at in parts]


def tokenize(cleaned: str) -> Sentence:
    """Split cleaned text into tokens; total on any cleaned input.

    Whitespace-delimited chunks are emitted with leading/trailing
    punctuation peeled into separate tokens ("..." counts as one mark);
    internal punctuation is preserved so NSWs stay whole.  Character
    conservation holds: concatenating all token texts equals the input
    minus its whitespace.
    """
    tokens: list[Token] = []
    for match in re.finditer(r"\S+", cleaned):
        tokens.extend(_split_chunk(match.group(), match.start()))
    return Sentence(cleaned, tuple(tokens))
