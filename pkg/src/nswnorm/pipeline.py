"""End-to-end normalization: clean, tokenize, tag, expand, splice.

The two phases are NSW detection (CRF tagging into BIO labels over the 19
classes) and NSW normalization (per-class expansion of every detected
span).  Standard words and punctuation tokens pass through unchanged; the
output joins all resulting words with single spaces.
"""

from __future__ import annotations

from .crf import CrfModel, viterbi_decode
from .errors import ValidationError
from .expanders import expand
from .features import TEMPLATE_VERSION, featurize
from .preprocess import Sentence, clean_text, tokenize
from .resources import Resources, load_resources
from .taxonomy import bio_decode


def check_template_version(model: CrfModel) -> None:
    if model.template_version != TEMPLATE_VERSION:
        raise ValidationError(
            f"model was trained with feature template version "
            f"{model.template_version}, this library extracts version "
            f"{TEMPLATE_VERSION}; retrain or convert the model"
        )


def tag_sentence(raw: str, model: CrfModel) -> tuple[Sentence, list[str]]:
    """Clean, tokenize, and BIO-tag one sentence of raw text."""
    check_template_version(model)
    sentence = tokenize(clean_text(raw))
    if not len(sentence):
        return sentence, []
    labels = viterbi_decode(model, featurize(sentence))
    return sentence, labels


def normalize_sentence(
    raw: str, model: CrfModel, resources: Resources | None = None
) -> str:
    """Spoken form of one raw sentence; total on arbitrary input."""
    if resources is None:
        resources = load_resources()
    sentence, labels = tag_sentence(raw, model)
    texts = list(sentence.texts)
    words: list[str] = []
    cursor = 0
    for span in bio_decode(labels):
        words.extend(texts[cursor : span.start])
        surface = " ".join(texts[span.start : span.last + 1])
        words.extend(expand(surface, span.tag, resources).words)
        cursor = span.last + 1
    words.extend(texts[cursor:])
    return " ".join(w for w in words if w)
