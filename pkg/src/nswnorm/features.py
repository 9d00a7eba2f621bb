"""Per-position feature extraction for the sequence tagger.

Each position yields a set of string identifiers of the form
"name[offset]=value" (or a bare boundary marker "BOS[-1]"/"EOS[+1]").
The window covers offsets -2..+2.  Models record the template version they
were trained with; bumping TEMPLATE_VERSION invalidates old models loudly
instead of silently mis-featurizing.
"""

from __future__ import annotations

import re
from typing import Sequence

from .errors import ValidationError
from .preprocess import Sentence

TEMPLATE_VERSION = 1

_WINDOW = (-2, -1, 0, 1, 2)

_FEATURE_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\[([+-]?\d+)\](?:=(.*))?$", re.DOTALL)


def word_shape(token: str) -> str:
    """Map uppercase to X, lowercase to x, digits to d; collapse runs.

    Other characters are kept verbatim.  "31/3" -> "d/d", "Tp." -> "Xx.",
    "Covid-19" -> "Xx-d".
    """
    out: list[str] = []
    for ch in token:
        if ch.isdigit():
            mapped = "d"
        elif ch.isalpha():
            mapped = "X" if ch.isupper() else "x"
        else:
            mapped = ch
        if not out or out[-1] != mapped:
            out.append(mapped)
    return "".join(out)


def _token_features(token: str, off: int) -> list[str]:
    at = f"[{off:+d}]" if off else "[0]"
    feats = [f"lower{at}={token.lower()}"]
    for k in (1, 2, 3):
        if k <= len(token):
            feats.append(f"prefix{k}{at}={token[:k]}")
            feats.append(f"suffix{k}{at}={token[-k:]}")
    flags = (
        ("is_upper", token.isupper()),
        ("is_cap", token[0].isupper()),
        ("is_digit", token.isdigit()),
        ("contains_digit", any(c.isdigit() for c in token)),
        ("contains_letter", any(c.isalpha() for c in token)),
        ("contains_punct", any(not c.isalnum() for c in token)),
    )
    feats.extend(f"{name}{at}={int(value)}" for name, value in flags)
    feats.append(f"shape{at}={word_shape(token)}")
    if off == 0:
        bucket = len(token) if len(token) < 4 else "4+"
        feats.append(f"len[0]={bucket}")
    return feats


def extract_features(sentence: Sentence | Sequence[str], position: int) -> frozenset[str]:
    """Feature set for one position of a sentence (or plain token list).

    Raises ValidationError when the position is out of range.  Pure and
    local: tokens farther than 2 positions away never influence the result.
    """
    tokens = sentence.texts if isinstance(sentence, Sentence) else list(sentence)
    if not 0 <= position < len(tokens):
        raise ValidationError(
            f"position {position} out of range for {len(tokens)} tokens"
        )
    feats: list[str] = []
    for off in _WINDOW:
        i = position + off
        if i < 0:
            feats.append(f"BOS[{off:+d}]")
        elif i >= len(tokens):
            feats.append(f"EOS[{off:+d}]")
        else:
            feats.extend(_token_features(tokens[i], off))
    return frozenset(feats)


def parse_feature(identifier: str) -> tuple[str, int, str | None]:
    """Parse "name[offset]=value" back into its parts.

    Boundary markers ("BOS[-1]") have value None.  Raises ValidationError
    on malformed identifiers.
    """
    m = _FEATURE_RE.match(identifier)
    if m is None:
        raise ValidationError(f"malformed feature identifier: {identifier!r}")
    name, offset, value = m.groups()
    return name, int(offset), value


def featurize(tokens: Sentence | Sequence[str]) -> list[frozenset[str]]:
    """Feature sets for every position of a sentence."""
    texts = tokens.texts if isinstance(tokens, Sentence) else list(tokens)
    return [extract_features(texts, i) for i in range(len(texts))]
