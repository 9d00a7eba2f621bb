"""Regularized maximum-likelihood training for the linear-chain CRF.

The objective is sum-NLL + l2/2·‖w‖² + l1·‖w‖₁, minimized with an
orthant-wise limited-memory quasi-Newton method (OWL-QN).  The L1 term is
handled through the minimum-norm subgradient and an orthant projection of
each trial point; with l1 = 0 the projection is disabled and the loop is
plain L-BFGS with Armijo backtracking.  Deterministic given a fixed corpus
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..errors import TrainingError, ValidationError
from ..features import TEMPLATE_VERSION, featurize
from ..preprocess import Sentence
from ..taxonomy import ALL_LABELS
from .kernels import get_kernels
from .model import CrfModel


@dataclass(frozen=True)
class TrainConfig:
    l1: float = 0.1
    l2: float = 0.1
    max_iter: int = 100
    tol: float = 1e-5  # relative objective change

    def __post_init__(self) -> None:
        if self.l1 < 0 or self.l2 < 0:
            raise ValidationError("regularization coefficients must be >= 0")
        if self.max_iter < 1:
            raise ValidationError("max_iter must be >= 1")
        if self.tol < 0:
            raise ValidationError("tol must be >= 0")


_MEMORY = 6  # L-BFGS history pairs
_ARMIJO = 1e-4
_MAX_BACKTRACKS = 40


def _pseudo_gradient(x: np.ndarray, g: np.ndarray, l1: float) -> np.ndarray:
    """Minimum-norm subgradient of g + l1·‖x‖₁."""
    if l1 == 0.0:
        return g.copy()
    pg = g + l1 * np.sign(x)
    zero = x == 0.0
    gz = g[zero]
    pg[zero] = np.sign(gz) * np.maximum(np.abs(gz) - l1, 0.0)
    return pg


def _two_loop(pg: np.ndarray, hist: list[tuple[np.ndarray, np.ndarray, float]]) -> np.ndarray:
    """L-BFGS two-loop recursion: approximates H·pg."""
    q = pg.copy()
    alphas: list[float] = []
    for s, y, rho in reversed(hist):
        a = rho * float(s @ q)
        alphas.append(a)
        q -= a * y
    if hist:
        s, y, _ = hist[-1]
        q *= float(s @ y) / float(y @ y)
    for (s, y, rho), a in zip(hist, reversed(alphas)):
        b = rho * float(y @ q)
        q += s * (a - b)
    return q


def _owlqn(
    f_only: Callable[[np.ndarray], float],
    f_and_g: Callable[[np.ndarray], tuple[float, np.ndarray]],
    x0: np.ndarray,
    l1: float,
    max_iter: int,
    tol: float,
    on_iteration: Callable[[int, float], None] | None = None,
) -> tuple[np.ndarray, int]:
    x = x0.copy()
    f, g = f_and_g(x)
    if not np.isfinite(f) or not np.all(np.isfinite(g)):
        raise TrainingError("non-finite objective at iteration 0")
    phi = f + l1 * float(np.abs(x).sum())
    hist: list[tuple[np.ndarray, np.ndarray, float]] = []
    iterations = 0
    for it in range(1, max_iter + 1):
        pg = _pseudo_gradient(x, g, l1)
        if float(np.abs(pg).max(initial=0.0)) < 1e-12:
            break
        d = -_two_loop(pg, hist)
        if l1 > 0.0:
            # keep only components agreeing with the steepest descent sign
            d = np.where(d * pg < 0.0, d, 0.0)
        if float(pg @ d) >= 0.0:
            break  # not a descent direction; give up rather than loop
        xi = np.sign(x) + (x == 0.0) * -np.sign(pg)
        step = 1.0 if hist else min(1.0, 1.0 / float(np.linalg.norm(pg)))
        accepted = False
        for _ in range(_MAX_BACKTRACKS):
            x_new = x + step * d
            if l1 > 0.0:
                x_new = np.where(x_new * xi < 0.0, 0.0, x_new)
            f_new = f_only(x_new)
            phi_new = f_new + l1 * float(np.abs(x_new).sum())
            if np.isnan(phi_new):
                raise TrainingError(f"non-finite objective at iteration {it}")
            if phi_new <= phi + _ARMIJO * float(pg @ (x_new - x)):
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break
        _, g_new = f_and_g(x_new)
        if not np.all(np.isfinite(g_new)):
            raise TrainingError(f"non-finite gradient at iteration {it}")
        s = x_new - x
        y = g_new - g
        sy = float(s @ y)
        if sy > 1e-10:
            hist.append((s, y, 1.0 / sy))
            if len(hist) > _MEMORY:
                hist.pop(0)
        rel = abs(phi - phi_new) / max(1.0, abs(phi))
        x, g, phi = x_new, g_new, phi_new
        iterations = it
        if on_iteration is not None:
            on_iteration(it, phi)
        if rel < tol:
            break
    return x, iterations


def _validate_corpus(
    corpus: Sequence[tuple[Sentence | Sequence[str], Sequence[str]]],
    label_index: dict[str, int],
) -> list[tuple[list[str], list[str]]]:
    if len(corpus) == 0:
        raise ValidationError("empty training corpus")
    pairs: list[tuple[list[str], list[str]]] = []
    for i, (sent, labels) in enumerate(corpus):
        tokens = sent.texts if isinstance(sent, Sentence) else list(sent)
        labels = list(labels)
        if not tokens:
            raise ValidationError(f"corpus sentence {i} has no tokens")
        if len(tokens) != len(labels):
            raise ValidationError(
                f"corpus sentence {i}: {len(tokens)} tokens vs {len(labels)} labels"
            )
        for lab in labels:
            if lab not in label_index:
                raise ValidationError(f"corpus sentence {i}: unknown label {lab!r}")
        pairs.append((tokens, labels))
    return pairs


def train(
    corpus: Sequence[tuple[Sentence | Sequence[str], Sequence[str]]],
    config: TrainConfig = TrainConfig(),
    labels: Sequence[str] = ALL_LABELS,
    backend: str | None = None,
    on_iteration: Callable[[int, float], None] | None = None,
) -> CrfModel:
    """Fit a CRF on (sentence, label sequence) pairs.

    ``on_iteration(iteration, objective)`` is invoked after every accepted
    optimizer step with the full (L1-inclusive) objective, which is
    non-increasing across calls.
    """
    labels = tuple(labels)
    label_index = {lab: i for i, lab in enumerate(labels)}
    pairs = _validate_corpus(corpus, label_index)

    # Feature alphabet in first-seen order over sorted per-position sets,
    # so the mapping does not depend on set iteration order.
    feature_index: dict[str, int] = {}
    compiled: list[list[list[int]]] = []
    for tokens, _ in pairs:
        sent_ids: list[list[int]] = []
        for fs in featurize(tokens):
            row = []
            for f in sorted(fs):
                fid = feature_index.setdefault(f, len(feature_index))
                row.append(fid)
            row.sort()
            sent_ids.append(row)
        compiled.append(sent_ids)

    F, L = len(feature_index), len(labels)
    starts = np.zeros(len(pairs) + 1, dtype=np.int64)
    for i, sent_ids in enumerate(compiled):
        starts[i + 1] = starts[i] + len(sent_ids)
    total_pos = int(starts[-1])
    offsets = np.zeros(total_pos + 1, dtype=np.int64)
    gold = np.empty(total_pos, dtype=np.int64)
    flat_ids: list[int] = []
    p = 0
    for (tokens, labs), sent_ids in zip(pairs, compiled):
        for row, lab in zip(sent_ids, labs):
            flat_ids.extend(row)
            offsets[p + 1] = len(flat_ids)
            gold[p] = label_index[lab]
            p += 1
    ids = np.asarray(flat_ids, dtype=np.int64)

    # empirical counts (constant through optimization)
    emp_emit = np.zeros((F, L))
    counts = np.diff(offsets)
    np.add.at(emp_emit, (ids, np.repeat(gold, counts)), 1.0)
    emp_trans = np.zeros((L, L))
    emp_begin = np.zeros(L)
    emp_end = np.zeros(L)
    for si in range(len(pairs)):
        seq = gold[starts[si] : starts[si + 1]]
        np.add.at(emp_trans, (seq[:-1], seq[1:]), 1.0)
        emp_begin[seq[0]] += 1.0
        emp_end[seq[-1]] += 1.0
    emp_vec = np.concatenate([emp_emit.ravel(), emp_trans.ravel(), emp_begin, emp_end])
    del emp_emit

    k = get_kernels(backend)
    nE, nT = F * L, L * L

    def split(x: np.ndarray):
        emit = x[:nE].reshape(F, L)
        trans = x[nE : nE + nT].reshape(L, L)
        begin = x[nE + nT : nE + nT + L]
        end = x[nE + nT + L :]
        return emit, trans, begin, end

    g_emit = np.zeros((F, L))
    g_trans = np.zeros((L, L))
    g_begin = np.zeros(L)
    g_end = np.zeros(L)
    l2 = config.l2

    def f_only(x: np.ndarray) -> float:
        emit, trans, begin, end = split(x)
        nll = k.corpus_nll(emit, trans, begin, end, ids, offsets, starts, gold)
        return float(nll) + 0.5 * l2 * float(x @ x)

    def f_and_g(x: np.ndarray) -> tuple[float, np.ndarray]:
        emit, trans, begin, end = split(x)
        nll = k.corpus_nll_grad(
            emit, trans, begin, end, ids, offsets, starts, gold,
            g_emit, g_trans, g_begin, g_end,
        )
        gvec = np.concatenate([g_emit.ravel(), g_trans.ravel(), g_begin, g_end])
        gvec -= emp_vec
        gvec += l2 * x
        return float(nll) + 0.5 * l2 * float(x @ x), gvec

    x0 = np.zeros(nE + nT + 2 * L)
    x_star, iterations = _owlqn(
        f_only, f_and_g, x0, config.l1, config.max_iter, config.tol, on_iteration
    )
    emit, trans, begin, end = split(x_star)
    method = "owlqn" if config.l1 > 0 else "lbfgs"
    optimizer = (
        f"{method}(l1={config.l1},l2={config.l2},max_iter={config.max_iter},"
        f"tol={config.tol},m={_MEMORY},iterations={iterations})"
    )
    return CrfModel(
        labels=labels,
        feature_index=feature_index,
        emit=emit.copy(),
        trans=trans.copy(),
        begin=begin.copy(),
        end=end.copy(),
        template_version=TEMPLATE_VERSION,
        optimizer=optimizer,
    )
