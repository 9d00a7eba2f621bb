"""Vietnamese text normalization for text-to-speech front-ends.

Detects non-standard words (numbers, dates, abbreviations, URLs, ...) with
a trainable linear-chain CRF over a 19-class taxonomy, expands each class
into spoken Vietnamese with rule expanders, and splits concatenated tokens
into pronounceable syllables by greedy lexicon matching.
"""

from .corpus import read_corpus, read_parallel, write_corpus, write_parallel
from .crf import (
    CrfModel,
    TrainConfig,
    load_model,
    marginals,
    save_model,
    train,
    viterbi_decode,
)
from .datagen import generate_synthetic_corpus
from .errors import TrainingError, ValidationError
from .evaluate import PrfReport, SerReport, sentence_error_rate, span_prf
from .expanders import (
    ExpanderConfig,
    SpokenText,
    digits_to_words,
    expand,
    number_to_words,
)
from .features import TEMPLATE_VERSION, extract_features, featurize
from .flmm import Lexicon, Segmentation, expand_urle, flmm_segment
from .pipeline import normalize_sentence, tag_sentence
from .preprocess import Sentence, Token, clean_text, tokenize
from .resources import Resources, load_resources
from .taxonomy import (
    ALL_LABELS,
    ALL_TAGS,
    NswSpan,
    Tag,
    bio_decode,
    bio_encode,
)

__version__ = "1.0.0"

__all__ = [
    "ALL_LABELS",
    "ALL_TAGS",
    "CrfModel",
    "ExpanderConfig",
    "Lexicon",
    "NswSpan",
    "PrfReport",
    "Resources",
    "Segmentation",
    "Sentence",
    "SerReport",
    "SpokenText",
    "TEMPLATE_VERSION",
    "Tag",
    "Token",
    "TrainConfig",
    "TrainingError",
    "ValidationError",
    "bio_decode",
    "bio_encode",
    "clean_text",
    "digits_to_words",
    "expand",
    "expand_urle",
    "extract_features",
    "featurize",
    "flmm_segment",
    "generate_synthetic_corpus",
    "load_model",
    "load_resources",
    "marginals",
    "normalize_sentence",
    "number_to_words",
    "read_corpus",
    "read_parallel",
    "save_model",
    "sentence_error_rate",
    "span_prf",
    "tag_sentence",
    "tokenize",
    "train",
    "viterbi_decode",
    "write_corpus",
    "write_parallel",
]
