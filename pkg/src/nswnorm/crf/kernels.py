"""Numeric kernels for the linear-chain CRF, in two interchangeable backends.

The "numpy" backend is the readable reference: vectorized log-space
forward/backward with log-sum-exp.  The "numba" backend compiles explicit
loops with @njit and computes forward/backward in scaled linear space
(per-position max-shifted potentials, per-step normalization), which avoids
the per-cell exp/log of log-space at identical numerical results for
realistic weight magnitudes; Viterbi stays in log space (max-plus needs no
exponentials).  Both satisfy the same contracts and agree within 1e-8 in
the parity tests.

Backend selection: the NSWNORM_BACKEND environment variable ("auto",
"numba", "numpy"; default "auto" picks numba when importable).  Every
function takes plain numpy arrays:

- emissions E: (n, L) summed feature weights per position/label
- trans: (L, L); begin, end: (L,) boundary weights
- CSR-style feature indexing: ids (total active features, int64) and
  offsets (n+1, int64) so position t owns ids[offsets[t]:offsets[t+1]];
  ids must be unique within a position (feature sets), or the backends'
  gradient accumulation strategies diverge on the duplicates
- corpus batches add starts (S+1, int64) position boundaries per sentence
  and gold (total positions, int64) label indices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import logsumexp

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is an install-time choice
    HAS_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


# ---------------------------------------------------------------------------
# numpy backend (log-space reference)
# ---------------------------------------------------------------------------


def _np_gather(emit: np.ndarray, ids: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    n = offsets.shape[0] - 1
    E = np.zeros((n, emit.shape[1]))
    for t in range(n):
        lo, hi = offsets[t], offsets[t + 1]
        if hi > lo:
            E[t] = emit[ids[lo:hi]].sum(axis=0)
    return E


def _np_forward(E, trans, begin, end):
    """Log-space forward pass; returns (alpha, logZ)."""
    n, L = E.shape
    alpha = np.empty((n, L))
    alpha[0] = begin + E[0]
    for t in range(1, n):
        alpha[t] = logsumexp(alpha[t - 1][:, None] + trans, axis=0) + E[t]
    return alpha, float(logsumexp(alpha[-1] + end))


def _np_backward(E, trans, end):
    """Log-space backward pass.

    beta[t, x] sums all continuations after position t given label x,
    excluding the emission at t itself, including the end weight.
    """
    n, L = E.shape
    beta = np.empty((n, L))
    beta[-1] = end
    for t in range(n - 2, -1, -1):
        beta[t] = logsumexp(trans + (E[t + 1] + beta[t + 1])[None, :], axis=1)
    return beta


def _np_forward_logz(E, trans, begin, end) -> float:
    return _np_forward(E, trans, begin, end)[1]


def _np_backward_logz(E, trans, begin, end) -> float:
    beta = _np_backward(E, trans, end)
    return float(logsumexp(begin + E[0] + beta[0]))


def _np_posteriors(E, trans, begin, end):
    """Returns (logZ, node marginals (n, L), transition expectations (L, L))."""
    n, L = E.shape
    alpha, logZ = _np_forward(E, trans, begin, end)
    beta = _np_backward(E, trans, end)
    node = np.exp(alpha + beta - logZ)
    pair = np.zeros((L, L))
    for t in range(1, n):
        pair += np.exp(alpha[t - 1][:, None] + trans + (E[t] + beta[t])[None, :] - logZ)
    return logZ, node, pair


def _np_viterbi(E, trans, begin, end, tmask, bmask):
    """Log-space max-plus decode; ties resolved to the lowest label index."""
    n, L = E.shape
    delta = begin + bmask + E[0]
    back = np.empty((n, L), dtype=np.int64)
    scored = trans + tmask
    for t in range(1, n):
        cand = delta[:, None] + scored
        back[t] = np.argmax(cand, axis=0)  # first maximum = lowest index
        delta = cand[back[t], np.arange(L)] + E[t]
    path = np.empty(n, dtype=np.int64)
    path[-1] = int(np.argmax(delta + end))
    for t in range(n - 1, 0, -1):
        path[t - 1] = back[t, path[t]]
    return path


def _np_corpus_nll(emit, trans, begin, end, ids, offsets, starts, gold) -> float:
    total = 0.0
    for si in range(starts.shape[0] - 1):
        p0, p1 = starts[si], starts[si + 1]
        # re-base the CSR block so ids/offsets line up per sentence
        sent_ids = ids[offsets[p0] : offsets[p1]]
        E = _np_gather(emit, sent_ids, offsets[p0 : p1 + 1] - offsets[p0])
        seq = gold[p0:p1]
        score = begin[seq[0]] + end[seq[-1]] + E[np.arange(p1 - p0), seq].sum()
        score += trans[seq[:-1], seq[1:]].sum()
        total += _np_forward_logz(E, trans, begin, end) - score
    return total


def _np_corpus_nll_grad(
    emit, trans, begin, end, ids, offsets, starts, gold, g_emit, g_trans, g_begin, g_end
) -> float:
    g_emit[:] = 0.0
    g_trans[:] = 0.0
    g_begin[:] = 0.0
    g_end[:] = 0.0
    total = 0.0
    for si in range(starts.shape[0] - 1):
        p0, p1 = starts[si], starts[si + 1]
        n = p1 - p0
        sent_ids = ids[offsets[p0] : offsets[p1]]
        E = _np_gather(emit, sent_ids, offsets[p0 : p1 + 1] - offsets[p0])
        seq = gold[p0:p1]
        score = begin[seq[0]] + end[seq[-1]] + E[np.arange(n), seq].sum()
        score += trans[seq[:-1], seq[1:]].sum()
        logZ, node, pair = _np_posteriors(E, trans, begin, end)
        total += logZ - score
        g_trans += pair
        g_begin += node[0]
        g_end += node[-1]
        for t in range(n):
            lo, hi = offsets[p0 + t], offsets[p0 + t + 1]
            if hi > lo:
                g_emit[ids[lo:hi]] += node[t]
    return total


# ---------------------------------------------------------------------------
# numba backend (scaled linear space; log-space Viterbi)
# ---------------------------------------------------------------------------


@njit(cache=True)
def _nb_gather(emit, ids, offsets):
    n = offsets.shape[0] - 1
    L = emit.shape[1]
    E = np.zeros((n, L))
    for t in range(n):
        for k in range(offsets[t], offsets[t + 1]):
            f = ids[k]
            for y in range(L):
                E[t, y] += emit[f, y]
    return E


@njit(cache=True)
def _nb_shift_trans(trans):
    """Max weight and the max-shifted exp of the transition matrix."""
    L = trans.shape[0]
    m = trans[0, 0]
    for x in range(L):
        for y in range(L):
            if trans[x, y] > m:
                m = trans[x, y]
    pT = np.empty((L, L))
    for x in range(L):
        for y in range(L):
            pT[x, y] = np.exp(trans[x, y] - m)
    return m, pT


@njit(cache=True)
def _nb_fold_boundaries(E, begin, end):
    """Copy E with begin/end weights folded into first/last positions."""
    n, L = E.shape
    Ew = np.empty((n, L))
    for t in range(n):
        for y in range(L):
            Ew[t, y] = E[t, y]
    for y in range(L):
        Ew[0, y] += begin[y]
        Ew[n - 1, y] += end[y]
    return Ew


@njit(cache=True)
def _nb_scaled_emissions(Ew):
    """Per-position max shifts mE and linear potentials pE = exp(Ew - mE)."""
    n, L = Ew.shape
    pE = np.empty((n, L))
    mE = np.empty(n)
    for t in range(n):
        m = Ew[t, 0]
        for y in range(1, L):
            if Ew[t, y] > m:
                m = Ew[t, y]
        mE[t] = m
        for y in range(L):
            pE[t, y] = np.exp(Ew[t, y] - m)
    return pE, mE


@njit(cache=True)
def _nb_forward_scaled(pE, pT):
    """Scaled forward pass: normalized alpha-hat and per-step log-scales."""
    n, L = pE.shape
    ahat = np.empty((n, L))
    logc = 0.0
    s = 0.0
    for y in range(L):
        s += pE[0, y]
    logc += np.log(s)
    for y in range(L):
        ahat[0, y] = pE[0, y] / s
    for t in range(1, n):
        s = 0.0
        for y in range(L):
            acc = 0.0
            for x in range(L):
                acc += ahat[t - 1, x] * pT[x, y]
            acc *= pE[t, y]
            ahat[t, y] = acc
            s += acc
        logc += np.log(s)
        for y in range(L):
            ahat[t, y] /= s
    return ahat, logc


@njit(cache=True)
def _nb_forward_logz(E, trans, begin, end):
    maxT, pT = _nb_shift_trans(trans)
    Ew = _nb_fold_boundaries(E, begin, end)
    pE, mE = _nb_scaled_emissions(Ew)
    _, logc = _nb_forward_scaled(pE, pT)
    n = E.shape[0]
    logZ = logc + (n - 1) * maxT
    for t in range(n):
        logZ += mE[t]
    return logZ


@njit(cache=True)
def _nb_backward_logz(E, trans, begin, end):
    """Independent backward recursion for the forward/backward invariant."""
    maxT, pT = _nb_shift_trans(trans)
    Ew = _nb_fold_boundaries(E, begin, end)
    pE, mE = _nb_scaled_emissions(Ew)
    n, L = pE.shape
    bhat = np.empty(L)
    nxt = np.empty(L)
    logd = np.log(float(L))
    for y in range(L):
        bhat[y] = 1.0 / L
    for t in range(n - 2, -1, -1):
        s = 0.0
        for x in range(L):
            acc = 0.0
            for y in range(L):
                acc += pT[x, y] * pE[t + 1, y] * bhat[y]
            nxt[x] = acc
            s += acc
        logd += np.log(s)
        for x in range(L):
            bhat[x] = nxt[x] / s
    s = 0.0
    for y in range(L):
        s += pE[0, y] * bhat[y]
    logZ = np.log(s) + logd + (n - 1) * maxT
    for t in range(n):
        logZ += mE[t]
    return logZ


@njit(cache=True)
def _nb_fb_core(Ew, pT, maxT, node, pair):
    """Forward-backward over boundary-folded potentials.

    Writes node marginals into ``node`` (n, L) and accumulates transition
    expectations into ``pair`` (L, L).  Returns logZ.
    """
    n, L = Ew.shape
    pE, mE = _nb_scaled_emissions(Ew)
    ahat, logc = _nb_forward_scaled(pE, pT)
    logZ = logc + (n - 1) * maxT
    for t in range(n):
        logZ += mE[t]
    # backward (own normalization; ratios below cancel all scale factors)
    bhat = np.empty((n, L))
    for y in range(L):
        bhat[n - 1, y] = 1.0 / L
    for t in range(n - 2, -1, -1):
        s = 0.0
        for x in range(L):
            acc = 0.0
            for y in range(L):
                acc += pT[x, y] * pE[t + 1, y] * bhat[t + 1, y]
            bhat[t, x] = acc
            s += acc
        for x in range(L):
            bhat[t, x] /= s
    for t in range(n):
        s = 0.0
        for y in range(L):
            v = ahat[t, y] * bhat[t, y]
            node[t, y] = v
            s += v
        for y in range(L):
            node[t, y] /= s
    for t in range(1, n):
        s = 0.0
        for x in range(L):
            ax = ahat[t - 1, x]
            for y in range(L):
                s += ax * pT[x, y] * pE[t, y] * bhat[t, y]
        for x in range(L):
            ax = ahat[t - 1, x]
            if ax == 0.0:
                continue
            for y in range(L):
                pair[x, y] += ax * pT[x, y] * pE[t, y] * bhat[t, y] / s
    return logZ


@njit(cache=True)
def _nb_posteriors(E, trans, begin, end):
    n, L = E.shape
    maxT, pT = _nb_shift_trans(trans)
    Ew = _nb_fold_boundaries(E, begin, end)
    node = np.empty((n, L))
    pair = np.zeros((L, L))
    logZ = _nb_fb_core(Ew, pT, maxT, node, pair)
    return logZ, node, pair


@njit(cache=True)
def _nb_viterbi(E, trans, begin, end, tmask, bmask):
    n, L = E.shape
    delta = np.empty((n, L))
    back = np.empty((n, L), dtype=np.int64)
    for y in range(L):
        delta[0, y] = begin[y] + bmask[y] + E[0, y]
    for t in range(1, n):
        for y in range(L):
            best = -np.inf
            arg = 0
            for x in range(L):
                s = delta[t - 1, x] + trans[x, y] + tmask[x, y]
                if s > best:
                    best = s
                    arg = x
            delta[t, y] = best + E[t, y]
            back[t, y] = arg
    best = -np.inf
    arg = 0
    for y in range(L):
        s = delta[n - 1, y] + end[y]
        if s > best:
            best = s
            arg = y
    path = np.empty(n, dtype=np.int64)
    path[n - 1] = arg
    for t in range(n - 1, 0, -1):
        path[t - 1] = back[t, path[t]]
    return path


@njit(cache=True)
def _nb_corpus_nll(emit, trans, begin, end, ids, offsets, starts, gold):
    maxT, pT = _nb_shift_trans(trans)
    L = emit.shape[1]
    total = 0.0
    for si in range(starts.shape[0] - 1):
        p0, p1 = starts[si], starts[si + 1]
        n = p1 - p0
        Ew = np.empty((n, L))
        for t in range(n):
            for y in range(L):
                Ew[t, y] = 0.0
            for k in range(offsets[p0 + t], offsets[p0 + t + 1]):
                f = ids[k]
                for y in range(L):
                    Ew[t, y] += emit[f, y]
        score = begin[gold[p0]] + end[gold[p1 - 1]]
        for t in range(n):
            score += Ew[t, gold[p0 + t]]
        for t in range(1, n):
            score += trans[gold[p0 + t - 1], gold[p0 + t]]
        for y in range(L):
            Ew[0, y] += begin[y]
            Ew[n - 1, y] += end[y]
        pE, mE = _nb_scaled_emissions(Ew)
        _, logc = _nb_forward_scaled(pE, pT)
        logZ = logc + (n - 1) * maxT
        for t in range(n):
            logZ += mE[t]
        total += logZ - score
    return total


@njit(cache=True)
def _nb_corpus_nll_grad(
    emit, trans, begin, end, ids, offsets, starts, gold, g_emit, g_trans, g_begin, g_end
):
    F, L = emit.shape
    for f in range(F):
        for y in range(L):
            g_emit[f, y] = 0.0
    for x in range(L):
        for y in range(L):
            g_trans[x, y] = 0.0
    for y in range(L):
        g_begin[y] = 0.0
        g_end[y] = 0.0
    maxT, pT = _nb_shift_trans(trans)
    total = 0.0
    for si in range(starts.shape[0] - 1):
        p0, p1 = starts[si], starts[si + 1]
        n = p1 - p0
        Ew = np.empty((n, L))
        for t in range(n):
            for y in range(L):
                Ew[t, y] = 0.0
            for k in range(offsets[p0 + t], offsets[p0 + t + 1]):
                f = ids[k]
                for y in range(L):
                    Ew[t, y] += emit[f, y]
        score = begin[gold[p0]] + end[gold[p1 - 1]]
        for t in range(n):
            score += Ew[t, gold[p0 + t]]
        for t in range(1, n):
            score += trans[gold[p0 + t - 1], gold[p0 + t]]
        for y in range(L):
            Ew[0, y] += begin[y]
            Ew[n - 1, y] += end[y]
        node = np.empty((n, L))
        logZ = _nb_fb_core(Ew, pT, maxT, node, g_trans)
        total += logZ - score
        for t in range(n):
            for k in range(offsets[p0 + t], offsets[p0 + t + 1]):
                f = ids[k]
                for y in range(L):
                    g_emit[f, y] += node[t, y]
        for y in range(L):
            g_begin[y] += node[0, y]
            g_end[y] += node[n - 1, y]
    return total


# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Backend:
    """Function table for one kernel backend."""

    name: str
    gather: Callable
    forward_logz: Callable
    backward_logz: Callable
    posteriors: Callable
    viterbi: Callable
    corpus_nll: Callable
    corpus_nll_grad: Callable


_NUMPY = Backend(
    name="numpy",
    gather=_np_gather,
    forward_logz=_np_forward_logz,
    backward_logz=_np_backward_logz,
    posteriors=_np_posteriors,
    viterbi=_np_viterbi,
    corpus_nll=_np_corpus_nll,
    corpus_nll_grad=_np_corpus_nll_grad,
)

_NUMBA = Backend(
    name="numba",
    gather=_nb_gather,
    forward_logz=_nb_forward_logz,
    backward_logz=_nb_backward_logz,
    posteriors=_nb_posteriors,
    viterbi=_nb_viterbi,
    corpus_nll=_nb_corpus_nll,
    corpus_nll_grad=_nb_corpus_nll_grad,
)

ENV_VAR = "NSWNORM_BACKEND"


def get_kernels(name: str | None = None) -> Backend:
    """Resolve a backend by name or the NSWNORM_BACKEND variable.

    "auto" (the default) picks numba when it is installed, else numpy.
    """
    requested = name or os.environ.get(ENV_VAR, "auto")
    if requested == "auto":
        requested = "numba" if HAS_NUMBA else "numpy"
    if requested == "numpy":
        return _NUMPY
    if requested == "numba":
        if not HAS_NUMBA:
            raise ValueError(
                "numba backend requested but numba is not installed; "
                f"set {ENV_VAR}=numpy or install numba"
            )
        return _NUMBA
    raise ValueError(
        f"unknown kernel backend {requested!r}; expected auto, numba or numpy"
    )
