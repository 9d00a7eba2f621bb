"""Vietnamese number readings: cardinals, digit strings, romans, decimals.

Cardinal grammar: digit words không..chín; mười/mươi for tens; the unit
alternations mốt (1 after tens >= 2), lăm (5 after any spoken tens), linh
(zero tens under a spoken hundreds); "không trăm" padding inside
non-leading 3-digit groups; scale words nghìn / triệu / tỷ / nghìn tỷ.
"""

from __future__ import annotations

import re

from ..errors import ValidationError
from .base import DIGIT_WORDS, ExpanderConfig, SpokenText

MAX_VALUE = 10**15

_SCALES = ("", "nghìn", "triệu", "tỷ", "nghìn tỷ")

_GROUPED_RE = re.compile(r"^\d{1,3}(?:[.  ]\d{3})+$")

_ROMAN_RE = re.compile(r"^M{0,3}(CM|CD|D?C{0,3})(XC|XL|L?X{0,3})(IX|IV|V?I{0,3})$")
_ROMAN_VALUES = {"I": 1, "V": 5, "X": 10, "L": 50, "C": 100, "D": 500, "M": 1000}


def _group_words(n: int, pad: bool) -> list[str]:
    """Read one 3-digit group; ``pad`` forces "không trăm" on h == 0."""
    hundreds, rem = divmod(n, 100)
    tens, units = divmod(rem, 10)
    words: list[str] = []
    spoken_hundreds = bool(hundreds) or pad
    if spoken_hundreds:
        words += [DIGIT_WORDS[hundreds], "trăm"]
    if tens == 0:
        if units:
            if spoken_hundreds:
                words.append("linh")
            words.append(DIGIT_WORDS[units])
    elif tens == 1:
        words.append("mười")
        if units:
            words.append("lăm" if units == 5 else DIGIT_WORDS[units])
    else:
        words += [DIGIT_WORDS[tens], "mươi"]
        if units:
            words.append({1: "mốt", 5: "lăm"}.get(units, DIGIT_WORDS[units]))
    return words


def number_words(value: int) -> list[str]:
    """Cardinal reading of a non-negative integer below 10^15, as a list."""
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"expected an integer, got {value!r}")
    if not 0 <= value < MAX_VALUE:
        raise ValidationError(f"value out of range [0, 10^15): {value}")
    if value == 0:
        return [DIGIT_WORDS[0]]
    groups: list[int] = []
    while value:
        value, g = divmod(value, 1000)
        groups.append(g)
    words: list[str] = []
    leading = len(groups) - 1
    for gi in range(leading, -1, -1):
        if groups[gi] == 0:
            continue
        words += _group_words(groups[gi], pad=gi != leading)
        if gi:
            words += _SCALES[gi].split()
    return words


def number_to_words(value: int) -> SpokenText:
    """Cardinal reading as SpokenText; range error outside [0, 10^15)."""
    return SpokenText(tuple(number_words(value)))


def digits_to_words(token: str, config: ExpanderConfig = ExpanderConfig()) -> SpokenText:
    """Digit-by-digit reading; separators dropped, '+' per config."""
    words: list[str] = []
    saw_digit = False
    for ch in token:
        # isdecimal, not isdigit: int() rejects Nd-adjacent chars like "²".
        if ch.isdecimal():
            words.append(DIGIT_WORDS[int(ch)])
            saw_digit = True
        elif ch == "+":
            words.extend(config.words_of(config.plus_word))
    if not saw_digit:
        raise ValidationError(f"no digits to read in {token!r}")
    return SpokenText(tuple(words))


def roman_to_int(token: str) -> int | None:
    """Parse a strict uppercase roman numeral; None when invalid."""
    if not token or _ROMAN_RE.match(token) is None:
        return None
    total = 0
    prev = 0
    for ch in reversed(token):
        v = _ROMAN_VALUES[ch]
        total += v if v >= prev else -v
        prev = max(prev, v)
    return total


def decimal_words(text: str) -> list[str] | None:
    """Read a decimal numeral with Vietnamese separator conventions.

    Dots/spaces are thousands separators (validated as groups of three),
    the comma is the decimal mark, a leading '-' reads "âm".  The
    fractional part reads as a cardinal unless it starts with 0, which
    forces digit-by-digit.  Returns None when the text is not a numeral.
    """
    s = text.strip()
    negative = s.startswith("-")
    if negative:
        s = s[1:]
    int_part, comma, frac = s.partition(",")
    if _GROUPED_RE.match(int_part):
        digits = re.sub(r"[.  ]", "", int_part)
    elif int_part.isdecimal():
        digits = int_part
    else:
        return None
    if len(digits) >= 16:
        return None
    words = number_words(int(digits))
    if negative:
        words.insert(0, "âm")
    if comma:
        if not frac.isdecimal():
            return None
        words.append("phẩy")
        if frac[0] == "0" or len(frac) >= 16:
            words += [DIGIT_WORDS[int(c)] for c in frac]
        else:
            words += number_words(int(frac))
    return words
