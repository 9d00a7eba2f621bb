"""Corpus file I/O.

Two plain-text formats, both UTF-8:

- labeled corpus: one "token<TAB>bio-label" per line, blank line between
  sentences; every label must be one of the 39 BIO labels and each
  sentence must be well-formed BIO (no orphan I- continuations);
- parallel file: one "written<TAB>spoken" sentence pair per line.
"""

from __future__ import annotations

import os
from pathlib import Path

from .errors import ValidationError
from .taxonomy import LABEL_INDEX, OUTSIDE, parse_label

LabeledSentence = tuple[list[str], list[str]]


def _check_labels(labels: list[str], origin: str, linenos: list[int]) -> None:
    prev = OUTSIDE
    for label, lineno in zip(labels, linenos):
        if label not in LABEL_INDEX:
            raise ValidationError(f"{origin}:{lineno}: unknown label {label!r}")
        prefix, tag = parse_label(label)
        if prefix == "I":
            prev_prefix, prev_tag = parse_label(prev)
            if prev_prefix not in ("B", "I") or prev_tag is not tag:
                raise ValidationError(
                    f"{origin}:{lineno}: orphan continuation {label!r} after {prev!r}"
                )
        prev = label


def parse_corpus(text: str, origin: str = "<corpus>") -> list[LabeledSentence]:
    sentences: list[LabeledSentence] = []
    tokens: list[str] = []
    labels: list[str] = []
    linenos: list[int] = []

    def flush() -> None:
        if tokens:
            _check_labels(labels, origin, linenos)
            sentences.append((tokens.copy(), labels.copy()))
            tokens.clear()
            labels.clear()
            linenos.clear()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip():
            flush()
            continue
        if "\t" not in line:
            raise ValidationError(f"{origin}:{lineno}: expected token<TAB>label")
        token, _, label = line.partition("\t")
        if not token or any(c.isspace() for c in token):
            raise ValidationError(f"{origin}:{lineno}: bad token field {token!r}")
        tokens.append(token)
        labels.append(label.strip())
        linenos.append(lineno)
    flush()
    return sentences


def format_corpus(sentences: list[LabeledSentence]) -> str:
    blocks = []
    for tokens, labels in sentences:
        if len(tokens) != len(labels):
            raise ValidationError("token/label length mismatch")
        blocks.append("\n".join(f"{t}\t{l}" for t, l in zip(tokens, labels)))
    return "\n\n".join(blocks) + "\n" if blocks else ""


def read_corpus(path: str | os.PathLike) -> list[LabeledSentence]:
    path = Path(path)
    return parse_corpus(path.read_text(encoding="utf-8"), str(path))


def write_corpus(path: str | os.PathLike, sentences: list[LabeledSentence]) -> None:
    Path(path).write_text(format_corpus(sentences), encoding="utf-8")


def parse_parallel(text: str, origin: str = "<parallel>") -> list[tuple[str, str]]:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValidationError(f"{origin}:{lineno}: expected written<TAB>spoken")
        pairs.append((fields[0], fields[1]))
    return pairs


def format_parallel(pairs: list[tuple[str, str]]) -> str:
    for written, spoken in pairs:
        if "\t" in written or "\t" in spoken:
            raise ValidationError("parallel fields must not contain tabs")
    return "".join(f"{w}\t{s}\n" for w, s in pairs)


def read_parallel(path: str | os.PathLike) -> list[tuple[str, str]]:
    path = Path(path)
    return parse_parallel(path.read_text(encoding="utf-8"), str(path))


def write_parallel(path: str | os.PathLike, pairs: list[tuple[str, str]]) -> None:
    Path(path).write_text(format_parallel(pairs), encoding="utf-8")
