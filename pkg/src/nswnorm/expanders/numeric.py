"""Numeric-family expanders: NNUM, NPER, NFRC, NSCR, NRNG, NVER, NTIM,
MONEY, MEA, ROMA.

Each parser returns spoken words or None; the dispatcher falls back on
None.  Class conventions: "phẩy" decimal comma, "âm" minus, "phần trăm"
percent, fraction connective from the config ("trên" by default), "đến"
for ranges, "chấm" between version components, giờ/phút/giây for times.
"""

from __future__ import annotations

import re

from ..taxonomy import Tag
from .base import ExpanderConfig
from .numbers import decimal_words, number_words, roman_to_int

_INT_RE = re.compile(r"^\d{1,6}$")
_TIME_COLON_RE = re.compile(r"^(\d{1,2}):(\d{1,2})(?::(\d{1,2}))?$")
_TIME_LETTER_RE = re.compile(
    r"^(\d{1,2})[hg](?:(\d{1,2})(?:p(\d{1,2})s?|')?)?$"
)
_TIME_MINUTES_RE = re.compile(r"^(\d{1,3})'$")


def _cardinal(text: str) -> list[str] | None:
    """Small plain integer (scores, ranges, time parts)."""
    if _INT_RE.match(text) is None:
        return None
    return number_words(int(text))


def expand_nnum(token: str, config: ExpanderConfig) -> list[str] | None:
    return decimal_words(token)


def expand_nper(token: str, config: ExpanderConfig) -> list[str] | None:
    if not token.endswith("%"):
        return None
    body = token[:-1]
    lo, dash, hi = body.partition("-")
    if dash:
        a, b = decimal_words(lo), decimal_words(hi)
        if a is None or b is None:
            return None
        return a + ["đến"] + b + ["phần", "trăm"]
    words = decimal_words(body)
    return None if words is None else words + ["phần", "trăm"]


def expand_nfrc(token: str, config: ExpanderConfig) -> list[str] | None:
    num, slash, den = token.partition("/")
    if not slash:
        return None
    a, b = decimal_words(num), decimal_words(den)
    if a is None or b is None:
        return None
    return a + list(config.words_of(config.fraction_word)) + b


def expand_nscr(token: str, config: ExpanderConfig) -> list[str] | None:
    left, dash, right = token.partition("-")
    if not dash:
        return None
    a, b = _cardinal(left), _cardinal(right)
    if a is None or b is None:
        return None
    return a + b  # juxtaposed: "3-1" -> "ba một"


def expand_nrng(token: str, config: ExpanderConfig) -> list[str] | None:
    left, dash, right = token.partition("-")
    if not dash:
        return None
    a, b = decimal_words(left), decimal_words(right)
    if a is None or b is None:
        return None
    return a + ["đến"] + b


def expand_nver(token: str, config: ExpanderConfig) -> list[str] | None:
    parts = token.split(".")
    if not all(part.isdecimal() and len(part) <= 6 for part in parts):
        return None
    words: list[str] = []
    for i, part in enumerate(parts):
        if i:
            words.append("chấm")
        words += number_words(int(part))
    return words


def _time_part(token: str) -> list[str] | None:
    m = _TIME_COLON_RE.match(token) or _TIME_LETTER_RE.match(token)
    if m:
        h, minute, sec = m.groups()
        words = number_words(int(h)) + ["giờ"]
        if minute is not None:
            words += number_words(int(minute)) + ["phút"]
        if sec is not None:
            words += number_words(int(sec)) + ["giây"]
        return words
    m = _TIME_MINUTES_RE.match(token)
    if m:
        return number_words(int(m.group(1))) + ["phút"]
    return None


def expand_ntim(token: str, config: ExpanderConfig) -> list[str] | None:
    left, dash, right = token.partition("-")
    if dash:
        a, b = _time_part(left), _time_part(right)
        if a is None or b is None:
            return None
        return a + ["đến"] + b
    return _time_part(token)


def expand_roma(token: str, config: ExpanderConfig) -> list[str] | None:
    value = roman_to_int(token)
    return None if value is None else number_words(value)


class UnitTables:
    """Currency and measurement vocabularies, injected by the resources."""

    def __init__(self, currencies: dict[str, str], units: dict[str, str]) -> None:
        self.currencies = currencies
        self.units = units


def expand_money(token: str, tables: UnitTables, config: ExpanderConfig) -> list[str] | None:
    """Amount + currency word, whatever side the symbol was written on."""
    body = token.strip()
    currency: str | None = None
    for key in sorted(tables.currencies, key=len, reverse=True):
        if body.startswith(key) and len(key) < len(body):
            currency, body = tables.currencies[key], body[len(key):]
            break
        if body.endswith(key) and len(key) < len(body):
            currency, body = tables.currencies[key], body[: -len(key)]
            break
    if currency is None:
        return None
    amount = decimal_words(body.strip())
    if amount is None:
        return None
    return amount + currency.split()


def expand_mea(token: str, tables: UnitTables, config: ExpanderConfig) -> list[str] | None:
    """Number + unit word; the unit is the longest known suffix."""
    body = token.strip()
    for key in sorted(tables.units, key=len, reverse=True):
        if body.endswith(key) and len(key) < len(body):
            amount = decimal_words(body[: -len(key)].strip())
            if amount is None:
                return None
            return amount + tables.units[key].split()
    return None


_SIMPLE_DISPATCH = {
    Tag.NNUM: expand_nnum,
    Tag.NPER: expand_nper,
    Tag.NFRC: expand_nfrc,
    Tag.NSCR: expand_nscr,
    Tag.NRNG: expand_nrng,
    Tag.NVER: expand_nver,
    Tag.NTIM: expand_ntim,
    Tag.ROMA: expand_roma,
}


def expand_numeric(
    token: str, tag: Tag, tables: UnitTables, config: ExpanderConfig
) -> list[str] | None:
    """Dispatch over the numeric family; None when the surface won't parse."""
    if tag is Tag.MONEY:
        return expand_money(token, tables, config)
    if tag is Tag.MEA:
        return expand_mea(token, tables, config)
    fn = _SIMPLE_DISPATCH.get(tag)
    return None if fn is None else fn(token, config)
