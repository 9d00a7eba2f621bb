"""Tests for span precision/recall/F1 and sentence error rate."""

import pytest

from nswnorm.errors import ValidationError
from nswnorm.evaluate import (
    PrfReport,
    SerReport,
    TagScore,
    normalize_spaces,
    sentence_error_rate,
    span_prf,
)


class TestTagScore:
    def test_basic_arithmetic(self):
        s = TagScore(tp=3, fp=1, fn=2)
        assert s.support == 5
        assert s.predicted == 4
        assert s.precision == pytest.approx(0.75)
        assert s.recall == pytest.approx(0.6)
        assert s.f1 == pytest.approx(2 * 0.75 * 0.6 / 1.35)

    def test_empty_denominators_give_zero(self):
        assert TagScore().precision == 0.0
        assert TagScore().recall == 0.0
        assert TagScore().f1 == 0.0
        assert not TagScore().precision_defined
        assert TagScore(fp=1).precision == 0.0
        assert TagScore(fp=1).precision_defined


class TestSpanPrf:
    def test_hand_counted_example(self):
        # Two gold number spans; the tagger finds one exactly and calls
        # the other a digit string: NNUM P=1.0 R=0.5, NDIG P=0.0.
        gold = [["B-NNUM", "O", "B-NNUM"]]
        pred = [["B-NNUM", "O", "B-NDIG"]]
        report = span_prf(gold, pred)
        nnum = report.per_tag["NNUM"]
        assert (nnum.tp, nnum.fp, nnum.fn) == (1, 0, 1)
        assert nnum.precision == pytest.approx(1.0)
        assert nnum.recall == pytest.approx(0.5)
        ndig = report.per_tag["NDIG"]
        assert (ndig.tp, ndig.fp, ndig.fn) == (0, 1, 0)
        assert ndig.precision == pytest.approx(0.0)
        # Pooled: 1 TP, 1 FP, 1 FN.
        assert report.micro.precision == pytest.approx(0.5)
        assert report.micro.recall == pytest.approx(0.5)
        assert report.macro_f1 == pytest.approx(((2 / 3) + 0.0) / 2)
        # Same-boundary tag swap lands in the confusion table.
        assert report.confusion[("NNUM", "NDIG")] == 1

    def test_perfect_prediction(self):
        gold = [["O", "B-NDAY", "O"], ["B-NNUM", "I-NNUM"]]
        report = span_prf(gold, [list(s) for s in gold])
        assert report.micro.tp == 2
        assert report.micro.fp == 0
        assert report.micro.fn == 0
        assert report.micro.f1 == pytest.approx(1.0)
        assert report.macro_f1 == pytest.approx(1.0)
        assert report.confusion == {}

    def test_boundary_mismatch_is_fp_plus_fn(self):
        gold = [["B-NNUM", "O"]]
        pred = [["B-NNUM", "I-NNUM"]]
        report = span_prf(gold, pred)
        s = report.per_tag["NNUM"]
        assert (s.tp, s.fp, s.fn) == (0, 1, 1)
        assert report.confusion[("NNUM", "O")] == 1
        assert report.confusion[("O", "NNUM")] == 1

    def test_missed_span_confusion_row(self):
        gold = [["B-MEA"]]
        pred = [["O"]]
        report = span_prf(gold, pred)
        assert report.per_tag["MEA"].fn == 1
        assert report.confusion[("MEA", "O")] == 1

    def test_undefined_precision_flagged(self):
        gold = [["B-MEA", "O", "B-NNUM"]]
        pred = [["O", "O", "B-NNUM"]]
        report = span_prf(gold, pred)
        assert report.undefined_precision_tags == ("MEA",)
        assert "(no predictions)" in report.format()

    def test_micro_f1_self_consistent(self):
        gold = [["B-NNUM", "O", "B-NDAY", "O"], ["B-MEA", "I-MEA", "O"]]
        pred = [["B-NNUM", "O", "B-NNUM", "O"], ["B-MEA", "O", "B-NDIG"]]
        report = span_prf(gold, pred)
        m = report.micro
        tp = sum(s.tp for s in report.per_tag.values())
        fp = sum(s.fp for s in report.per_tag.values())
        fn = sum(s.fn for s in report.per_tag.values())
        p = tp / (tp + fp)
        r = tp / (tp + fn)
        assert m.precision == pytest.approx(p, abs=1e-9)
        assert m.recall == pytest.approx(r, abs=1e-9)
        assert m.f1 == pytest.approx(2 * p * r / (p + r), abs=1e-9)

    def test_macro_over_active_tags_only(self):
        # Tags absent from both gold and prediction do not drag the mean.
        gold = [["B-NNUM"]]
        pred = [["B-NNUM"]]
        report = span_prf(gold, pred)
        assert set(report.per_tag) == {"NNUM"}
        assert report.macro_f1 == pytest.approx(1.0)

    def test_alignment_validation(self):
        with pytest.raises(ValidationError) as err:
            span_prf([["O"]], [["O"], ["O"]])
        assert "sentence count" in str(err.value)
        with pytest.raises(ValidationError) as err:
            span_prf([["O", "O"]], [["O"]])
        assert "length mismatch" in str(err.value)

    def test_empty_corpus(self):
        report = span_prf([], [])
        assert report.per_tag == {}
        assert report.micro.f1 == 0.0
        assert report.macro_f1 == 0.0

    def test_format_table_shape(self):
        gold = [["B-NNUM", "O", "B-NDAY"]]
        pred = [["B-NNUM", "O", "B-NDAY"]]
        text = span_prf(gold, pred).format()
        lines = text.splitlines()
        assert lines[0].split() == ["tag", "P", "R", "F1", "support"]
        assert any(line.startswith("NDAY") for line in lines)
        assert any(line.startswith("micro") for line in lines)
        assert lines[-1].startswith("macro-F1")


class TestSer:
    def test_pinned_format_examples(self):
        assert SerReport(149, 1828).format() == "SER 8.15% (149/1828)"
        assert SerReport(8, 100).format() == "SER 8.00% (8/100)"
        assert SerReport(0, 500).format() == "SER 0.00% (0/500)"

    def test_rate(self):
        assert SerReport(149, 1828).rate == pytest.approx(149 / 1828)
        assert SerReport(0, 0).rate == 0.0

    def test_exact_match_zero_errors(self):
        gold = ["một hai ba", "bốn năm"]
        assert sentence_error_rate(gold, list(gold)).errors == 0

    def test_whitespace_insensitive(self):
        report = sentence_error_rate(["một  hai"], [" một hai "])
        assert report.errors == 0

    def test_case_sensitive(self):
        report = sentence_error_rate(["Một hai"], ["một hai"])
        assert report.errors == 1

    def test_counts_sentences_not_tokens(self):
        gold = ["a b c", "d", "e f"]
        pred = ["a b x", "d", "y f"]
        report = sentence_error_rate(gold, pred)
        assert report.errors == 2
        assert report.total == 3
        assert report.format() == "SER 66.67% (2/3)"

    def test_alignment_validation(self):
        with pytest.raises(ValidationError):
            sentence_error_rate(["a"], ["a", "b"])

    def test_normalize_spaces(self):
        assert normalize_spaces("  a \t b\nc ") == "a b c"
        assert normalize_spaces("") == ""
