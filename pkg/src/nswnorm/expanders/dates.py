"""Date-family expanders: NDAT, NDAY, NMON, NQUA.

Readings: day with "mùng" prefix for days 1-9, "tháng" + month (month 4
reads "tư"), "năm" + year as a plain cardinal; ranges use "đến"; quarters
read "quý" + quarter number [+ "năm" + year].
"""

from __future__ import annotations

import re

from ..taxonomy import Tag
from .numbers import number_words, roman_to_int

_FULL_DATE_RE = re.compile(r"^(\d{1,2})([/.-])(\d{1,2})\2(\d{4})$")
_DAY_RANGE_RE = re.compile(r"^(\d{1,2})-(\d{1,2})/(\d{1,2})/(\d{4})$")
_CROSS_RANGE_RE = re.compile(r"^(\d{1,2})/(\d{1,2})-(\d{1,2})/(\d{1,2})/(\d{4})$")
_FULL_RANGE_RE = re.compile(
    r"^(\d{1,2}/\d{1,2}/\d{4})-(\d{1,2}/\d{1,2}/\d{4})$"
)
_DAY_MONTH_RE = re.compile(r"^(\d{1,2})([/.-])(\d{1,2})$")
_MONTH_YEAR_RE = re.compile(r"^(\d{1,2})/(\d{4})$")
_QUARTER_RE = re.compile(r"^(I{1,3}|IV|[1-4])(?:/(\d{4}))?$")


def _day(n: int) -> list[str] | None:
    if not 1 <= n <= 31:
        return None
    words = number_words(n)
    return ["mùng"] + words if n <= 9 else words


def _month(n: int) -> list[str] | None:
    if not 1 <= n <= 12:
        return None
    return ["tháng", "tư"] if n == 4 else ["tháng"] + number_words(n)


def _year(n: int) -> list[str]:
    return ["năm"] + number_words(n)


def _day_month(d: int, m: int) -> list[str] | None:
    day, month = _day(d), _month(m)
    if day is None or month is None:
        return None
    return day + month


def _full_date(token: str) -> list[str] | None:
    m = _FULL_DATE_RE.match(token)
    if m is None:
        return None
    dm = _day_month(int(m.group(1)), int(m.group(3)))
    return None if dm is None else dm + _year(int(m.group(4)))


def expand_ndat(token: str) -> list[str] | None:
    """Full dates, including the three range shapes of the taxonomy."""
    m = _FULL_RANGE_RE.match(token)
    if m:
        a, b = _full_date(m.group(1)), _full_date(m.group(2))
        return None if a is None or b is None else a + ["đến"] + b
    m = _CROSS_RANGE_RE.match(token)
    if m:
        d1, m1, d2, m2, y = (int(g) for g in m.groups())
        a, b = _day_month(d1, m1), _day_month(d2, m2)
        return None if a is None or b is None else a + ["đến"] + b + _year(y)
    m = _DAY_RANGE_RE.match(token)
    if m:
        d1, d2, mo, y = (int(g) for g in m.groups())
        a, b = _day(d1), _day(d2)
        month = _month(mo)
        if a is None or b is None or month is None:
            return None
        return a + ["đến"] + b + month + _year(y)
    return _full_date(token)


def expand_nday(token: str) -> list[str] | None:
    m = _DAY_MONTH_RE.match(token)
    if m is None:
        return None
    return _day_month(int(m.group(1)), int(m.group(3)))


def expand_nmon(token: str) -> list[str] | None:
    m = _MONTH_YEAR_RE.match(token)
    if m is None:
        return None
    month = _month(int(m.group(1)))
    return None if month is None else month + _year(int(m.group(2)))


def expand_nqua(token: str) -> list[str] | None:
    """Quarter: optional leading "quý" word absorbed, roman or digit."""
    body = token.strip()
    first, _, rest = body.partition(" ")
    if first.lower() == "quý" and rest:
        body = rest.strip()
    m = _QUARTER_RE.match(body)
    if m is None:
        return None
    q = m.group(1)
    quarter = roman_to_int(q) if q.isalpha() else int(q)
    if quarter is None or not 1 <= quarter <= 4:
        return None
    words = ["quý"] + number_words(quarter)
    if m.group(2):
        words += _year(int(m.group(2)))
    return words


_DATE_DISPATCH = {
    Tag.NDAT: expand_ndat,
    Tag.NDAY: expand_nday,
    Tag.NMON: expand_nmon,
    Tag.NQUA: expand_nqua,
}


def expand_date(token: str, tag: Tag) -> list[str] | None:
    """Dispatch over the date family; None when the surface doesn't parse."""
    fn = _DATE_DISPATCH.get(tag)
    return None if fn is None else fn(token)
