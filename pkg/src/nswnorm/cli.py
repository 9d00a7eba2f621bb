"""Command-line interface.

Subcommands: train, tag, normalize, segment, eval, gen.  Text inputs are
UTF-8 files, or standard input when the path is "-".  Exit status is 0 on
success and 1 on any error, with a diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import (
    read_corpus,
    read_parallel,
    write_corpus,
    write_parallel,
)
from .crf import TrainConfig, load_model, save_model, train
from .datagen import generate_synthetic_corpus
from .errors import TrainingError, ValidationError
from .evaluate import sentence_error_rate, span_prf
from .flmm import Lexicon, flmm_segment
from .pipeline import normalize_sentence, tag_sentence
from .resources import load_resources


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _input_lines(path: str) -> list[str]:
    return [line for line in _read_text(path).splitlines() if line.strip()]


def _cmd_train(args: argparse.Namespace) -> int:
    corpus = read_corpus(args.corpus)
    config = TrainConfig(
        l1=args.l1, l2=args.l2, max_iter=args.max_iter, tol=args.tol
    )
    model = train(corpus, config)
    save_model(model, args.output)
    print(
        f"trained on {len(corpus)} sentences: {len(model.feature_index)} features, "
        f"{model.optimizer} -> {args.output}"
    )
    return 0


def _cmd_tag(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    first = True
    for line in _input_lines(args.input):
        sentence, labels = tag_sentence(line, model)
        if not first:
            print()
        first = False
        if args.format == "conll":
            for token, label in zip(sentence.texts, labels):
                print(f"{token}\t{label}")
        else:
            from .taxonomy import bio_decode

            for span in bio_decode(labels):
                surface = " ".join(sentence.texts[span.start : span.last + 1])
                print(f"{span.tag.value}\t{span.start}\t{span.last}\t{surface}")
    return 0


def _cmd_normalize(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    resources = load_resources(args.resources)
    for line in _input_lines(args.input):
        print(normalize_sentence(line, model, resources))
    return 0


def _cmd_segment(args: argparse.Namespace) -> int:
    lexicon = Lexicon.load(args.lexicon)
    for line in _input_lines(args.input):
        print(flmm_segment(lexicon, line.strip()).text)
    return 0


def _spoken_column(path: str) -> list[str]:
    """Spoken sentences from a parallel file or plain one-per-line output."""
    return [line.split("\t")[-1] for line in _input_lines(path)]


def _cmd_eval(args: argparse.Namespace) -> int:
    if args.metric == "ser":
        report = sentence_error_rate(
            _spoken_column(args.gold), _spoken_column(args.predicted)
        )
        print(report.format())
        return 0
    gold = read_corpus(args.gold)
    predicted = read_corpus(args.predicted)
    report = span_prf([g[1] for g in gold], [p[1] for p in predicted])
    print(report.format())
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    corpus, pairs = generate_synthetic_corpus(args.seed, args.size)
    write_corpus(args.corpus, corpus)
    if args.parallel:
        write_parallel(args.parallel, pairs)
    print(f"generated {len(corpus)} sentences -> {args.corpus}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nswnorm",
        description="Vietnamese text normalization for TTS front-ends",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="fit a CRF tagger on a labeled corpus")
    p.add_argument("corpus", help="CoNLL-style token<TAB>label corpus file")
    p.add_argument("-o", "--output", required=True, help="model file to write")
    p.add_argument("--l1", type=float, default=0.1, help="L1 penalty (default 0.1)")
    p.add_argument("--l2", type=float, default=0.1, help="L2 penalty (default 0.1)")
    p.add_argument("--max-iter", type=int, default=100, help="iteration cap")
    p.add_argument("--tol", type=float, default=1e-5, help="relative objective tolerance")
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("tag", help="BIO-tag sentences, one per input line")
    p.add_argument("input", nargs="?", default="-", help="text file or - for stdin")
    p.add_argument("-m", "--model", required=True, help="trained model file")
    p.add_argument(
        "--format", choices=("conll", "spans"), default="conll",
        help="conll: token<TAB>label lines; spans: tag<TAB>start<TAB>last<TAB>surface",
    )
    p.set_defaults(func=_cmd_tag)

    p = sub.add_parser("normalize", help="spoken form of sentences, one per line")
    p.add_argument("input", nargs="?", default="-", help="text file or - for stdin")
    p.add_argument("-m", "--model", required=True, help="trained model file")
    p.add_argument("--resources", default=None, help="resource directory override")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("segment", help="greedy lexicon segmentation, one string per line")
    p.add_argument("input", nargs="?", default="-", help="strings file or - for stdin")
    p.add_argument("--lexicon", required=True, help="lexicon file, one entry per line")
    p.set_defaults(func=_cmd_segment)

    p = sub.add_parser("eval", help="score predictions against gold")
    p.add_argument("gold", help="gold file (corpus for prf, spoken/parallel for ser)")
    p.add_argument("predicted", help="prediction file in the same format")
    p.add_argument("--metric", choices=("prf", "ser"), default="prf")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("gen", help="generate a synthetic labeled corpus")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, required=True, help="sentence count")
    p.add_argument("--corpus", required=True, help="labeled corpus file to write")
    p.add_argument("--parallel", default=None, help="parallel written/spoken file to write")
    p.set_defaults(func=_cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename or exc}", file=sys.stderr)
        return 1
    except (ValidationError, TrainingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
