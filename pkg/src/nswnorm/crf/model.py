"""Linear-chain CRF model and its decoding/scoring operations.

A model holds a dense emission weight matrix over (feature, label), a label
transition matrix, and begin/end boundary vectors.  The label alphabet is
arbitrary (the shipped pipeline uses the 39 BIO labels; tests may use tiny
alphabets).  Feature sets are collections of identifier strings; unknown
features are silently inactive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection, Sequence

import numpy as np

from ..errors import ValidationError
from ..features import TEMPLATE_VERSION
from ..taxonomy import parse_label
from .kernels import get_kernels

FeatureSets = Sequence[Collection[str]]


@dataclass
class CrfModel:
    labels: tuple[str, ...]
    feature_index: dict[str, int]
    emit: np.ndarray  # (F, L)
    trans: np.ndarray  # (L, L)
    begin: np.ndarray  # (L,)
    end: np.ndarray  # (L,)
    template_version: int = TEMPLATE_VERSION
    optimizer: str = ""

    def __post_init__(self) -> None:
        L = len(self.labels)
        if len(set(self.labels)) != L or L == 0:
            raise ValidationError("label alphabet must be non-empty and unique")
        if self.emit.shape != (len(self.feature_index), L):
            raise ValidationError(
                f"emission shape {self.emit.shape} does not match "
                f"{len(self.feature_index)} features x {L} labels"
            )
        if self.trans.shape != (L, L) or self.begin.shape != (L,) or self.end.shape != (L,):
            raise ValidationError("transition/boundary weight shapes do not match labels")
        for arr in (self.emit, self.trans, self.begin, self.end):
            if not np.all(np.isfinite(arr)):
                raise ValidationError("model weights must be finite")

    @classmethod
    def zeros(
        cls,
        labels: Sequence[str],
        features: Sequence[str],
        template_version: int = TEMPLATE_VERSION,
    ) -> "CrfModel":
        labels = tuple(labels)
        index = {f: i for i, f in enumerate(features)}
        if len(index) != len(features):
            raise ValidationError("duplicate feature identifiers")
        L = len(labels)
        return cls(
            labels=labels,
            feature_index=index,
            emit=np.zeros((len(index), L)),
            trans=np.zeros((L, L)),
            begin=np.zeros(L),
            end=np.zeros(L),
            template_version=template_version,
        )

    @property
    def label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def compile_features(self, feature_sets: FeatureSets) -> tuple[np.ndarray, np.ndarray]:
        """CSR-pack feature sets into (ids, offsets); unknown features drop."""
        ids: list[int] = []
        offsets = np.empty(len(feature_sets) + 1, dtype=np.int64)
        offsets[0] = 0
        index = self.feature_index
        for t, fs in enumerate(feature_sets):
            known = sorted(index[f] for f in fs if f in index)
            ids.extend(known)
            offsets[t + 1] = len(ids)
        return np.asarray(ids, dtype=np.int64), offsets

    def label_ids(self, labels: Sequence[str]) -> np.ndarray:
        index = self.label_index
        try:
            return np.asarray([index[lab] for lab in labels], dtype=np.int64)
        except KeyError as exc:
            raise ValidationError(f"label not in model alphabet: {exc.args[0]!r}") from None

    def decode_masks(self) -> tuple[np.ndarray, np.ndarray]:
        """BIO well-formedness masks (0 allowed, -inf forbidden).

        For every label that parses as I-X, forbid it at sequence start and
        after any label that is not B-X/I-X.  Labels that are not BIO-shaped
        are unconstrained, so non-BIO alphabets decode freely.
        """
        L = len(self.labels)
        tmask = np.zeros((L, L))
        bmask = np.zeros(L)
        parsed = []
        for lab in self.labels:
            try:
                parsed.append(parse_label(lab))
            except ValidationError:
                parsed.append(None)
        for j, pj in enumerate(parsed):
            if pj is None or pj[0] != "I":
                continue
            bmask[j] = -np.inf
            for i, pi in enumerate(parsed):
                if pi is None or pi[1] is not pj[1] or pi[0] == "O":
                    tmask[i, j] = -np.inf
        return tmask, bmask


@dataclass
class CrfGradient:
    """Gradient of the objective for one example, per weight block."""

    emit: np.ndarray
    trans: np.ndarray
    begin: np.ndarray
    end: np.ndarray

    def flat(self) -> np.ndarray:
        return np.concatenate(
            [self.emit.ravel(), self.trans.ravel(), self.begin, self.end]
        )


def _checked(model: CrfModel, feature_sets: FeatureSets, allow_empty: bool = False):
    if not allow_empty and len(feature_sets) == 0:
        raise ValidationError("empty sequence")
    return model.compile_features(feature_sets)


def score_sequence(model: CrfModel, feature_sets: FeatureSets, labels: Sequence[str]) -> float:
    """Unnormalized log-potential of one labelled path; linear in weights."""
    if len(feature_sets) != len(labels):
        raise ValidationError(
            f"{len(feature_sets)} positions vs {len(labels)} labels"
        )
    if not labels:
        return 0.0
    ids, offsets = model.compile_features(feature_sets)
    seq = model.label_ids(labels)
    E = get_kernels().gather(model.emit, ids, offsets)
    score = float(model.begin[seq[0]] + model.end[seq[-1]])
    score += float(E[np.arange(len(seq)), seq].sum())
    score += float(model.trans[seq[:-1], seq[1:]].sum())
    return score


def log_partition(model: CrfModel, feature_sets: FeatureSets) -> float:
    """log of the summed exponentiated scores of all label sequences."""
    ids, offsets = _checked(model, feature_sets)
    k = get_kernels()
    E = k.gather(model.emit, ids, offsets)
    return float(k.forward_logz(E, model.trans, model.begin, model.end))


def viterbi_decode(
    model: CrfModel, feature_sets: FeatureSets, constrain: bool = True
) -> list[str]:
    """Argmax label sequence; ties go to the lowest label index.

    With ``constrain`` (the default) transitions violating BIO
    well-formedness are suppressed, so the output never needs repair.
    """
    ids, offsets = _checked(model, feature_sets)
    k = get_kernels()
    E = k.gather(model.emit, ids, offsets)
    L = len(model.labels)
    if constrain:
        tmask, bmask = model.decode_masks()
    else:
        tmask, bmask = np.zeros((L, L)), np.zeros(L)
    path = k.viterbi(E, model.trans, model.begin, model.end, tmask, bmask)
    return [model.labels[i] for i in path]


def marginals(model: CrfModel, feature_sets: FeatureSets) -> np.ndarray:
    """Per-position label posteriors, shape (n, L); rows sum to 1."""
    ids, offsets = _checked(model, feature_sets)
    k = get_kernels()
    E = k.gather(model.emit, ids, offsets)
    _, node, _ = k.posteriors(E, model.trans, model.begin, model.end)
    return np.clip(node, 0.0, 1.0)


def gradient(
    model: CrfModel,
    feature_sets: FeatureSets,
    labels: Sequence[str],
    l2: float = 0.0,
) -> tuple[float, CrfGradient]:
    """Objective value and gradient for one example.

    Objective: NLL (log-partition minus gold score) plus l2/2 times the
    squared weight norm.  Gradient: expected minus empirical counts, plus
    the analytic l2 term.
    """
    if len(feature_sets) != len(labels):
        raise ValidationError(
            f"{len(feature_sets)} positions vs {len(labels)} labels"
        )
    ids, offsets = _checked(model, feature_sets)
    seq = model.label_ids(labels)
    k = get_kernels()
    E = k.gather(model.emit, ids, offsets)
    logZ, node, pair = k.posteriors(E, model.trans, model.begin, model.end)
    gold = float(model.begin[seq[0]] + model.end[seq[-1]])
    gold += float(E[np.arange(len(seq)), seq].sum())
    gold += float(model.trans[seq[:-1], seq[1:]].sum())
    nll = float(logZ) - gold

    g_emit = np.zeros_like(model.emit)
    g_trans = np.asarray(pair, dtype=float).copy()
    g_begin = np.asarray(node[0], dtype=float).copy()
    g_end = np.asarray(node[-1], dtype=float).copy()
    for t in range(len(seq)):
        lo, hi = offsets[t], offsets[t + 1]
        active = ids[lo:hi]
        g_emit[active] += node[t]
        g_emit[active, seq[t]] -= 1.0
    np.subtract.at(g_trans, (seq[:-1], seq[1:]), 1.0)
    g_begin[seq[0]] -= 1.0
    g_end[seq[-1]] -= 1.0
    if l2:
        nll += 0.5 * l2 * (
            float(np.sum(model.emit**2))
            + float(np.sum(model.trans**2))
            + float(np.sum(model.begin**2))
            + float(np.sum(model.end**2))
        )
        g_emit += l2 * model.emit
        g_trans += l2 * model.trans
        g_begin += l2 * model.begin
        g_end += l2 * model.end
    return nll, CrfGradient(g_emit, g_trans, g_begin, g_end)
