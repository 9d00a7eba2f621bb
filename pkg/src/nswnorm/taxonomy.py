"""Non-standard-word taxonomy: tags, BIO labels, and span conversion.

A non-standard word (NSW) is a token span that cannot be spoken by
grapheme-to-phoneme rules alone: numbers, dates, abbreviations, URLs and so
on.  Each NSW carries one of 19 tags, grouped into three families (numeric,
letter-based, other).  Sequence labelling uses the BIO scheme over those
tags: 1 + 2 * 19 = 39 labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import ValidationError


class Tag(str, Enum):
    """NSW category tags."""

    # Numeric family
    NTIM = "NTIM"  # time of day: 1h20, 1:20:30, 12h-13h, 11'
    NDAT = "NDAT"  # full date: 13/12/2021, 12.12.2021, 8/9-10/9/2021
    NDAY = "NDAY"  # day/month: 31/3, 3-1
    NMON = "NMON"  # month/year: 12/2021
    NQUA = "NQUA"  # quarter: Quý I/2020, II/2021
    NNUM = "NNUM"  # cardinal number: 12, 70.000, -100, 700.005,6
    NDIG = "NDIG"  # digit string read digit by digit: 0977-1293-12, 114
    NSCR = "NSCR"  # score or season: 3-1, 2018-2019
    NRNG = "NRNG"  # numeric range: 3-4, 10-15
    NPER = "NPER"  # percentage: 30%, 20-30%
    NFRC = "NFRC"  # fraction: 3/4
    NVER = "NVER"  # version: 4.0, 1.2.3
    # Letter family
    LABB = "LABB"  # abbreviation expanded via dictionary: Tp., UBND
    LWRD = "LWRD"  # loanword with known pronunciation: Covid-19, NATO
    LSEQ = "LSEQ"  # letter sequence read char by char: VTV
    # Other
    URLE = "URLE"  # url / email / hashtag / handle
    MONEY = "MONEY"  # money: 2$, 1000đ
    ROMA = "ROMA"  # roman numeral: X, IV
    MEA = "MEA"  # measure: 100kg, 10km2, 30oC


NUMBER_TAGS: tuple[Tag, ...] = (
    Tag.NTIM, Tag.NDAT, Tag.NDAY, Tag.NMON, Tag.NQUA, Tag.NNUM,
    Tag.NDIG, Tag.NSCR, Tag.NRNG, Tag.NPER, Tag.NFRC, Tag.NVER,
)
LETTER_TAGS: tuple[Tag, ...] = (Tag.LABB, Tag.LWRD, Tag.LSEQ)
OTHER_TAGS: tuple[Tag, ...] = (Tag.URLE, Tag.MONEY, Tag.ROMA, Tag.MEA)

ALL_TAGS: tuple[Tag, ...] = NUMBER_TAGS + LETTER_TAGS + OTHER_TAGS

GROUPS: dict[str, tuple[Tag, ...]] = {
    "number": NUMBER_TAGS,
    "letter": LETTER_TAGS,
    "other": OTHER_TAGS,
}

OUTSIDE = "O"

# Label order is part of the model contract: O first, then B-X/I-X in tag
# order.  An all-zero weight model therefore decodes to all-O under the
# lowest-index tie-break.
ALL_LABELS: tuple[str, ...] = (OUTSIDE,) + tuple(
    f"{prefix}-{tag.value}" for tag in ALL_TAGS for prefix in ("B", "I")
)

LABEL_INDEX: dict[str, int] = {label: i for i, label in enumerate(ALL_LABELS)}


def parse_tag(name: str | Tag) -> Tag:
    """Return the Tag for ``name``, raising ValidationError if unknown."""
    if isinstance(name, Tag):
        return name
    try:
        return Tag(name)
    except ValueError:
        raise ValidationError(f"unknown NSW tag: {name!r}") from None


def parse_label(label: str) -> tuple[str, Tag | None]:
    """Split a BIO label into (prefix, tag).

    "O" parses to ("O", None); "B-NTIM" to ("B", Tag.NTIM).  Raises
    ValidationError on anything else.
    """
    if label == OUTSIDE:
        return (OUTSIDE, None)
    if len(label) > 2 and label[1] == "-" and label[0] in ("B", "I"):
        return (label[0], parse_tag(label[2:]))
    raise ValidationError(f"malformed BIO label: {label!r}")


@dataclass(frozen=True, order=True)
class NswSpan:
    """A tagged token span; ``last`` is the final token index (inclusive).

    ``text`` is the surface form when known (pipeline fills it in); it is
    excluded from equality so decoded spans compare against constructed ones.
    """

    tag: Tag
    start: int
    last: int
    text: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.start < 0 or self.last < self.start:
            raise ValidationError(
                f"bad span bounds: start={self.start} last={self.last}"
            )

    def __len__(self) -> int:
        return self.last - self.start + 1


def bio_encode(spans: list[NswSpan], length: int) -> list[str]:
    """Encode non-overlapping spans over ``length`` tokens as BIO labels.

    Raises ValidationError if spans overlap or fall outside the sequence.
    """
    labels = [OUTSIDE] * length
    for span in spans:
        if span.last >= length:
            raise ValidationError(f"span {span} exceeds sequence length {length}")
        for i in range(span.start, span.last + 1):
            if labels[i] != OUTSIDE:
                raise ValidationError(f"overlapping span at token {i}")
            labels[i] = ("B-" if i == span.start else "I-") + span.tag.value
    return labels


def bio_decode(labels: list[str]) -> list[NswSpan]:
    """Decode BIO labels into spans.

    Tolerates ill-formed input: an I-X with no live X span to its left is
    repaired to B-X (it opens a new span).  Every label must still parse.
    """
    spans: list[NswSpan] = []
    start: int | None = None
    tag: Tag | None = None

    def flush(last: int) -> None:
        nonlocal start, tag
        if start is not None and tag is not None:
            spans.append(NswSpan(tag, start, last))
        start, tag = None, None

    for i, label in enumerate(labels):
        prefix, label_tag = parse_label(label)
        if prefix == OUTSIDE:
            flush(i - 1)
        elif prefix == "B" or label_tag is not tag:
            # B-X always opens a span; an orphan or tag-switching I-X is
            # repaired to an opener too.
            flush(i - 1)
            start, tag = i, label_tag
        # else: I-X continuing the live X span.
    flush(len(labels) - 1)
    return spans
