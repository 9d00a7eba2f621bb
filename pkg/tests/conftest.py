from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nswnorm.crf import TrainConfig, train
from nswnorm.datagen import generate_synthetic_corpus
from nswnorm.resources import load_resources


@pytest.fixture(scope="session")
def resources():
    return load_resources()


@pytest.fixture(scope="session")
def small_corpus():
    corpus, pairs = generate_synthetic_corpus(7, 80)
    return corpus, pairs


@pytest.fixture(scope="session")
def small_model(small_corpus):
    corpus, _ = small_corpus
    return train(corpus, TrainConfig(l1=0.1, l2=0.1, max_iter=100))
