"""Linguistic resource bundle: dictionaries, unit tables, syllable lexicon.

The resource directory is resolved in order: explicit path argument, the
NSWNORM_RESOURCES environment variable, then the data files packaged with
the library.  Dictionary files are UTF-8 TSV "key<TAB>expansion"; the
lexicon is one entry per line; '#' starts a comment anywhere; duplicate
keys keep the first entry (first-entry wins).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from importlib import resources as importlib_resources
from pathlib import Path

from .errors import ValidationError
from .expanders.base import ExpanderConfig
from .expanders.numeric import UnitTables
from .flmm import Lexicon

ENV_VAR = "NSWNORM_RESOURCES"

ABBREVIATIONS_FILE = "abbreviations.tsv"
LOANWORDS_FILE = "loanwords.tsv"
UNITS_FILE = "units.tsv"
CURRENCIES_FILE = "currencies.tsv"
LEXICON_FILE = "lexicon.txt"


def parse_dictionary(text: str, origin: str = "<data>") -> dict[str, str]:
    """Parse TSV "key<TAB>expansion" content; first entry wins."""
    mapping: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if "\t" not in line:
            raise ValidationError(f"{origin}:{lineno}: expected key<TAB>expansion")
        key, _, value = line.partition("\t")
        key, value = key.strip(), value.strip()
        if not key or not value:
            raise ValidationError(f"{origin}:{lineno}: empty key or expansion")
        mapping.setdefault(key, value)
    return mapping


def parse_wordlist(text: str) -> list[str]:
    """One entry per line; '#' comments and blank lines ignored."""
    words = []
    for raw in text.splitlines():
        entry = raw.split("#", 1)[0].strip()
        if entry:
            words.append(entry)
    return words


def read_dictionary(path: str | os.PathLike) -> dict[str, str]:
    path = Path(path)
    return parse_dictionary(path.read_text(encoding="utf-8"), str(path))


def read_wordlist(path: str | os.PathLike) -> list[str]:
    return parse_wordlist(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class Resources:
    """Immutable bundle of everything the expanders need besides the model."""

    abbreviations: dict[str, str] = field(default_factory=dict)
    loanwords: dict[str, str] = field(default_factory=dict)
    units: dict[str, str] = field(default_factory=dict)
    currencies: dict[str, str] = field(default_factory=dict)
    lexicon: Lexicon = field(default_factory=lambda: Lexicon(()))
    config: ExpanderConfig = ExpanderConfig()

    @cached_property
    def unit_tables(self) -> UnitTables:
        return UnitTables(currencies=self.currencies, units=self.units)

    @cached_property
    def urle_dictionary(self) -> dict[str, str]:
        """Merged lookup for URL/email parts; loanwords take precedence."""
        return {**self.abbreviations, **self.loanwords}


def load_resources(
    root: str | os.PathLike | None = None, config: ExpanderConfig | None = None
) -> Resources:
    """Load a resource directory, or the packaged defaults when absent."""
    if root is None:
        root = os.environ.get(ENV_VAR) or None
    if root is None:
        bundle = _packaged_resources()
        if config is None:
            return bundle
        return Resources(
            abbreviations=bundle.abbreviations,
            loanwords=bundle.loanwords,
            units=bundle.units,
            currencies=bundle.currencies,
            lexicon=bundle.lexicon,
            config=config,
        )
    root = Path(root)
    if not root.is_dir():
        raise ValidationError(f"resource directory not found: {root}")
    return Resources(
        abbreviations=read_dictionary(root / ABBREVIATIONS_FILE),
        loanwords=read_dictionary(root / LOANWORDS_FILE),
        units=read_dictionary(root / UNITS_FILE),
        currencies=read_dictionary(root / CURRENCIES_FILE),
        lexicon=Lexicon.from_wordlist(read_wordlist(root / LEXICON_FILE)),
        config=config or ExpanderConfig(),
    )


@lru_cache(maxsize=1)
def _packaged_resources() -> Resources:
    data = importlib_resources.files("nswnorm").joinpath("data")

    def text(name: str) -> str:
        return data.joinpath(name).read_text(encoding="utf-8")

    return Resources(
        abbreviations=parse_dictionary(text(ABBREVIATIONS_FILE), ABBREVIATIONS_FILE),
        loanwords=parse_dictionary(text(LOANWORDS_FILE), LOANWORDS_FILE),
        units=parse_dictionary(text(UNITS_FILE), UNITS_FILE),
        currencies=parse_dictionary(text(CURRENCIES_FILE), CURRENCIES_FILE),
        lexicon=Lexicon.from_wordlist(parse_wordlist(text(LEXICON_FILE))),
    )
