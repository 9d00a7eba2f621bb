"""Benchmark: numba-compiled CRF kernels against the pure-numpy reference.

Times the hot batch kernels (corpus NLL, corpus NLL + gradient) and the
per-sentence kernels (forward log-partition, posteriors, Viterbi) on a
randomly packed corpus shaped like real training data, then one full
training run per backend.  Agreement between the two backends is checked
alongside the timings.

Usage:
    python3 benchmarks/bench_kernels.py [--sentences N] [--features F]
            [--labels L] [--repeats R] [--train-size N] [--seed S]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from nswnorm.crf import HAS_NUMBA, TrainConfig, get_kernels, train
from nswnorm.datagen import generate_synthetic_corpus


def make_problem(rng, sentences, features, labels, min_len=6, max_len=22):
    """Random packed corpus in the exact shapes the batch kernels consume."""
    lengths = rng.integers(min_len, max_len + 1, size=sentences)
    total = int(lengths.sum())
    starts = np.zeros(sentences + 1, dtype=np.int64)
    starts[1:] = np.cumsum(lengths)
    per_pos = rng.integers(3, 9, size=total)
    offsets = np.zeros(total + 1, dtype=np.int64)
    offsets[1:] = np.cumsum(per_pos)
    # ids must be unique within a position, like real packed feature sets
    ids = np.concatenate(
        [np.sort(rng.choice(features, size=k, replace=False)) for k in per_pos]
    ).astype(np.int64)
    gold = rng.integers(0, labels, size=total, dtype=np.int64)
    emit = rng.normal(0.0, 0.3, size=(features, labels))
    trans = rng.normal(0.0, 0.3, size=(labels, labels))
    begin = rng.normal(0.0, 0.3, size=labels)
    end = rng.normal(0.0, 0.3, size=labels)
    return emit, trans, begin, end, ids, offsets, starts, gold


def timed(fn, repeats):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def bench_batch(backends, problem, repeats):
    emit, trans, begin, end, ids, offsets, starts, gold = problem
    grads = {
        name: tuple(np.zeros_like(a) for a in (emit, trans, begin, end))
        for name in backends
    }
    rows = []
    values = {}
    for label, attr in (("corpus_nll", "corpus_nll"), ("corpus_nll_grad", "corpus_nll_grad")):
        per_backend = {}
        for name, k in backends.items():
            fn = getattr(k, attr)
            if attr == "corpus_nll":
                call = lambda: fn(emit, trans, begin, end, ids, offsets, starts, gold)
            else:
                g = grads[name]
                call = lambda: fn(
                    emit, trans, begin, end, ids, offsets, starts, gold, *g
                )
            per_backend[name], values[(label, name)] = timed(call, repeats)
        rows.append((label, per_backend))
    checks = []
    if len(backends) == 2:
        nll_np = values[("corpus_nll", "numpy")]
        nll_nb = values[("corpus_nll", "numba")]
        checks.append(("corpus_nll |diff|", abs(nll_np - nll_nb)))
        worst = max(
            float(np.abs(a - b).max())
            for a, b in zip(grads["numpy"], grads["numba"])
        )
        checks.append(("gradient max |diff|", worst))
    return rows, checks


def bench_sentence(backends, problem, repeats):
    emit, trans, begin, end, ids, offsets, starts, gold = problem
    labels = emit.shape[1]
    tmask = np.zeros((labels, labels))
    bmask = np.zeros(labels)
    sent_count = min(200, starts.shape[0] - 1)

    def run(k):
        def body():
            acc = 0.0
            for si in range(sent_count):
                p0, p1 = starts[si], starts[si + 1]
                sent_ids = ids[offsets[p0] : offsets[p1]]
                sent_offsets = offsets[p0 : p1 + 1] - offsets[p0]
                E = k.gather(emit, sent_ids, sent_offsets)
                acc += float(k.forward_logz(E, trans, begin, end))
                k.posteriors(E, trans, begin, end)
                k.viterbi(E, trans, begin, end, tmask, bmask)
            return acc

        return body

    per_backend = {}
    reference = {}
    for name, k in backends.items():
        per_backend[name], reference[name] = timed(run(k), repeats)
    checks = []
    if len(backends) == 2:
        checks.append(
            ("summed logZ |diff|", abs(reference["numpy"] - reference["numba"]))
        )
    return [(f"per-sentence x{sent_count}", per_backend)], checks


def bench_training(backends, train_size, seed):
    corpus, _ = generate_synthetic_corpus(seed, train_size)
    config = TrainConfig(l1=0.1, l2=0.1, max_iter=15)
    rows = []
    models = {}
    for name in backends:
        t0 = time.perf_counter()
        models[name] = train(corpus, config, backend=name)
        rows.append((f"train {train_size} sentences, 15 iters", name, time.perf_counter() - t0))
    checks = []
    if len(backends) == 2:
        a, b = models["numpy"], models["numba"]
        worst = max(
            float(np.abs(x - y).max())
            for x, y in (
                (a.emit, b.emit),
                (a.trans, b.trans),
                (a.begin, b.begin),
                (a.end, b.end),
            )
        )
        checks.append(("trained weight max |diff|", worst))
    return rows, checks


def print_table(rows):
    names = sorted({n for _, per in rows for n in per})
    for label, per in rows:
        cells = "  ".join(f"{n}: {per[n] * 1000:9.2f} ms" for n in names)
        line = f"  {label:<24} {cells}"
        if len(per) == 2:
            line += f"  speedup: {per['numpy'] / per['numba']:.1f}x"
        print(line)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sentences", type=int, default=400)
    parser.add_argument("--features", type=int, default=20_000)
    parser.add_argument("--labels", type=int, default=39)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--train-size", type=int, default=300)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    backends = {"numpy": get_kernels("numpy")}
    if HAS_NUMBA:
        backends["numba"] = get_kernels("numba")
    else:
        print("numba is not available; timing the numpy reference only")

    rng = np.random.default_rng(args.seed)
    problem = make_problem(rng, args.sentences, args.features, args.labels)
    total_tokens = int(problem[6][-1])
    print(
        f"packed corpus: {args.sentences} sentences, {total_tokens} tokens, "
        f"{args.features} features, {args.labels} labels"
    )

    if HAS_NUMBA:
        # warm-up so JIT compilation stays out of the timings
        bench_batch({"numba": backends["numba"]}, problem, repeats=1)
        bench_sentence({"numba": backends["numba"]}, problem, repeats=1)

    print("\nbatch kernels (best of %d):" % args.repeats)
    rows, checks = bench_batch(backends, problem, args.repeats)
    print_table(rows)
    print("\nper-sentence kernels (best of %d):" % args.repeats)
    srows, schecks = bench_sentence(backends, problem, args.repeats)
    print_table(srows)

    print("\nfull training run:")
    trows, tchecks = bench_training(backends, args.train_size, args.seed)
    for label, name, seconds in trows:
        print(f"  {label:<32} {name}: {seconds:7.2f} s")

    print("\nbackend agreement:")
    for label, diff in checks + schecks + tchecks:
        print(f"  {label:<28} {diff:.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
