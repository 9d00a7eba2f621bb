"""Linear-chain CRF: models, training, decoding, serialization."""

from .kernels import ENV_VAR, HAS_NUMBA, Backend, get_kernels
from .model import (
    CrfGradient,
    CrfModel,
    gradient,
    log_partition,
    marginals,
    score_sequence,
    viterbi_decode,
)
from .serialize import load_model, save_model
from .train import TrainConfig, train

__all__ = [
    "Backend",
    "CrfGradient",
    "CrfModel",
    "ENV_VAR",
    "HAS_NUMBA",
    "TrainConfig",
    "get_kernels",
    "gradient",
    "load_model",
    "log_partition",
    "marginals",
    "save_model",
    "score_sequence",
    "train",
    "viterbi_decode",
]
