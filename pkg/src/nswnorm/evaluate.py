"""Evaluation: span-exact precision/recall/F1 and sentence error rate.

Span scoring is exact-match on (tag, start, last): a predicted span counts
as a true positive only when an identical gold span exists.  Micro scores
pool TP/FP/FN over all tags; macro-F1 is the unweighted mean of per-tag F1
over active tags (any gold or predicted occurrence).  SER compares spoken
sentences after whitespace normalization, case-sensitively.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .taxonomy import NswSpan, bio_decode


@dataclass(frozen=True)
class TagScore:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    @property
    def support(self) -> int:
        return self.tp + self.fn

    @property
    def predicted(self) -> int:
        return self.tp + self.fp

    @property
    def precision_defined(self) -> bool:
        return self.predicted > 0

    @property
    def precision(self) -> float:
        return self.tp / self.predicted if self.predicted else 0.0

    @property
    def recall(self) -> float:
        return self.tp / self.support if self.support else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0


@dataclass(frozen=True)
class PrfReport:
    per_tag: dict[str, TagScore]
    confusion: dict[tuple[str, str], int] = field(default_factory=dict)

    @property
    def micro(self) -> TagScore:
        return TagScore(
            tp=sum(s.tp for s in self.per_tag.values()),
            fp=sum(s.fp for s in self.per_tag.values()),
            fn=sum(s.fn for s in self.per_tag.values()),
        )

    @property
    def macro_f1(self) -> float:
        active = [s for s in self.per_tag.values() if s.support or s.predicted]
        return sum(s.f1 for s in active) / len(active) if active else 0.0

    @property
    def undefined_precision_tags(self) -> tuple[str, ...]:
        """Tags with gold spans but zero predictions (precision reported 0)."""
        return tuple(
            sorted(
                tag
                for tag, s in self.per_tag.items()
                if s.support and not s.precision_defined
            )
        )

    def format(self) -> str:
        width = max([len(t) for t in self.per_tag] + [9])
        lines = [f"{'tag':<{width}}  {'P':>6}  {'R':>6}  {'F1':>6}  {'support':>7}"]
        for tag in sorted(self.per_tag):
            s = self.per_tag[tag]
            mark = "" if s.precision_defined or not s.support else "  (no predictions)"
            lines.append(
                f"{tag:<{width}}  {s.precision:6.3f}  {s.recall:6.3f}"
                f"  {s.f1:6.3f}  {s.support:7d}{mark}"
            )
        m = self.micro
        lines.append(
            f"{'micro':<{width}}  {m.precision:6.3f}  {m.recall:6.3f}"
            f"  {m.f1:6.3f}  {m.support:7d}"
        )
        lines.append(f"{'macro-F1':<{width}}  {self.macro_f1:.3f}")
        return "\n".join(lines)


def _decoded(sequences: list[list[str]]) -> list[list[NswSpan]]:
    return [bio_decode(labels) for labels in sequences]


def span_prf(gold: list[list[str]], predicted: list[list[str]]) -> PrfReport:
    """Exact-span scores from aligned gold and predicted label sequences."""
    if len(gold) != len(predicted):
        raise ValidationError(
            f"sentence count mismatch: {len(gold)} gold vs {len(predicted)} predicted"
        )
    for i, (g, p) in enumerate(zip(gold, predicted)):
        if len(g) != len(p):
            raise ValidationError(
                f"sentence {i}: length mismatch {len(g)} gold vs {len(p)} predicted"
            )
    counts: dict[str, dict[str, int]] = {}
    confusion: dict[tuple[str, str], int] = {}

    def bump(tag: str, kind: str) -> None:
        counts.setdefault(tag, {"tp": 0, "fp": 0, "fn": 0})[kind] += 1

    for gold_spans, pred_spans in zip(_decoded(gold), _decoded(predicted)):
        gold_set = set(gold_spans)
        pred_set = set(pred_spans)
        gold_by_pos = {(s.start, s.last): s.tag for s in gold_spans}
        pred_by_pos = {(s.start, s.last): s.tag for s in pred_spans}
        for span in gold_set & pred_set:
            bump(span.tag, "tp")
        for span in gold_set - pred_set:
            bump(span.tag, "fn")
            other = pred_by_pos.get((span.start, span.last), "O")
            confusion[(span.tag, other)] = confusion.get((span.tag, other), 0) + 1
        for span in pred_set - gold_set:
            bump(span.tag, "fp")
            if (span.start, span.last) not in gold_by_pos:
                confusion[("O", span.tag)] = confusion.get(("O", span.tag), 0) + 1
    per_tag = {tag: TagScore(**c) for tag, c in counts.items()}
    return PrfReport(per_tag=per_tag, confusion=confusion)


@dataclass(frozen=True)
class SerReport:
    errors: int
    total: int

    @property
    def rate(self) -> float:
        return self.errors / self.total if self.total else 0.0

    def format(self) -> str:
        return f"SER {self.rate * 100:.2f}% ({self.errors}/{self.total})"


def normalize_spaces(text: str) -> str:
    return " ".join(text.split())


def sentence_error_rate(gold: list[str], predicted: list[str]) -> SerReport:
    """Fraction of sentences whose spoken form differs from gold."""
    if len(gold) != len(predicted):
        raise ValidationError(
            f"sentence count mismatch: {len(gold)} gold vs {len(predicted)} predicted"
        )
    errors = sum(
        normalize_spaces(g) != normalize_spaces(p) for g, p in zip(gold, predicted)
    )
    return SerReport(errors=errors, total=len(gold))
