"""Tests for text cleaning and tokenization."""

import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nswnorm.preprocess import Sentence, Token, clean_text, tokenize


class TestCleanText:
    def test_entities_resolved(self):
        assert clean_text("a &amp; b") == "a & b"
        assert clean_text("1 &lt; 2 &gt; 0") == "1 < 2 > 0"
        assert clean_text("&quot;ok&quot;") == '"ok"'
        assert clean_text("a&nbsp;b") == "a b"

    def test_entities_resolved_to_fixpoint(self):
        # Double-escaped entities collapse fully.
        assert clean_text("&amp;amp;") == "&"
        assert clean_text("&amp;lt;") == "<"
        assert clean_text("&amp;amp;amp;") == "&"

    def test_emoji_removed(self):
        assert clean_text("xin chào \U0001F600 bạn") == "xin chào bạn"
        assert clean_text("tuyệt \U0001F389\U0001F389") == "tuyệt"
        assert clean_text("cờ \U0001F1FB\U0001F1F3 đây") == "cờ đây"

    def test_emoticon_chunks_removed(self):
        assert clean_text("hay quá :)) nhỉ") == "hay quá nhỉ"
        assert clean_text("buồn =(( lắm") == "buồn lắm"
        assert clean_text("haha !!! thật") == "haha thật"

    def test_single_punctuation_kept(self):
        # Lone marks are not emoticons; they are real punctuation.
        assert clean_text("xong .") == "xong ."
        assert clean_text("sao ?") == "sao ?"

    def test_mixed_alnum_chunks_kept(self):
        # Chunks containing letters or digits never count as emoticons.
        assert clean_text("gs:88 x") == "gs:88 x"
        assert clean_text("a)) b") == "a)) b"

    def test_whitespace_collapsed(self):
        assert clean_text("  a \t b \n c  ") == "a b c"

    def test_idempotent(self):
        raw = "Ngày  31/3 &amp; 1/4 \U0001F600 :)) xong."
        once = clean_text(raw)
        assert clean_text(once) == once

    def test_empty_and_blank(self):
        assert clean_text("") == ""
        assert clean_text("   ") == ""
        assert clean_text(":)) \U0001F600") == ""

    @given(st.text(max_size=200))
    @settings(max_examples=200)
    def test_total_and_idempotent_property(self, raw):
        once = clean_text(raw)
        assert isinstance(once, str)
        assert clean_text(once) == once
        # Cleaned text never holds runs of whitespace or edge whitespace.
        assert once == " ".join(once.split())


class TestToken:
    def test_offsets_consistent(self):
        tok = Token("ab", 3, 5)
        assert tok.text == "ab"

    def test_inconsistent_rejected(self):
        with pytest.raises(ValueError):
            Token("ab", 3, 6)
        with pytest.raises(ValueError):
            Token("", 0, 0)


class TestTokenize:
    def test_simple_sentence(self):
        s = tokenize("xin chào bạn")
        assert s.texts == ["xin", "chào", "bạn"]
        assert len(s) == 3

    def test_offsets_slice_source(self):
        src = "Ngày 31/3, họp."
        s = tokenize(src)
        for tok in s.tokens:
            assert src[tok.start : tok.end] == tok.text

    def test_trailing_punctuation_peeled(self):
        assert tokenize("họp ngày 31/3.").texts == ["họp", "ngày", "31/3", "."]
        assert tokenize("xong rồi!").texts == ["xong", "rồi", "!"]
        assert tokenize("sao thế?").texts == ["sao", "thế", "?"]

    def test_leading_punctuation_peeled(self):
        assert tokenize('"tốt"').texts == ['"', "tốt", '"']
        assert tokenize("(ghi chú)").texts == ["(", "ghi", "chú", ")"]
        assert tokenize("«trích»").texts == ["«", "trích", "»"]

    def test_stacked_punctuation_peeled_in_order(self):
        assert tokenize('("xem")!').texts == ["(", '"', "xem", '"', ")", "!"]

    def test_ellipsis_is_one_token(self):
        assert tokenize("chờ đã...").texts == ["chờ", "đã", "..."]
        assert tokenize("...rồi sao").texts == ["...", "rồi", "sao"]

    def test_ellipsis_then_period_count(self):
        # Four dots peel as "..." plus ".".
        out = tokenize("hết....").texts
        assert out == ["hết", ".", "..."] or out == ["hết", "...", "."]
        joined = "".join(out)
        assert joined == "hết...."

    def test_internal_punctuation_preserved(self):
        assert tokenize("0966.3553.46 gọi").texts == ["0966.3553.46", "gọi"]
        assert tokenize("3/4 xong").texts == ["3/4", "xong"]
        assert tokenize("Covid-19").texts == ["Covid-19"]
        assert tokenize("1h20").texts == ["1h20"]

    def test_hyphen_and_slash_never_peeled(self):
        assert tokenize("-100 độ").texts == ["-100", "độ"]
        assert tokenize("trận 3-1").texts == ["trận", "3-1"]
        assert tokenize("ngày 10/3/2000").texts == ["ngày", "10/3/2000"]

    def test_abbreviation_dot_kept(self):
        # Short capitalized bodies keep one trailing dot.
        assert tokenize("Tp. HCM").texts == ["Tp.", "HCM"]
        assert tokenize("GS. Hùng").texts == ["GS.", "Hùng"]
        assert tokenize("xem BBC.").texts == ["xem", "BBC."]

    def test_abbreviation_dot_not_kept(self):
        # Lowercase body, long body, or digits peel the dot.
        assert tokenize("ca.").texts == ["ca", "."]
        assert tokenize("HTV7.").texts == ["HTV7", "."]
        assert tokenize("THPT.").texts == ["THPT", "."]
        assert tokenize("92000.").texts == ["92000", "."]

    def test_abbreviation_dot_requires_single_dot(self):
        # Internal dots disable the trailing-dot keep rule.
        out = tokenize("T.p.").texts
        assert out == ["T.p", "."]

    def test_quoted_nsw_survives(self):
        assert tokenize('"31/3"').texts == ['"', "31/3", '"']

    def test_comma_after_nsw(self):
        assert tokenize("ngày 31/3, họp").texts == ["ngày", "31/3", ",", "họp"]

    def test_empty_input(self):
        s = tokenize("")
        assert s.texts == []
        assert len(s) == 0

    def test_all_punctuation_chunk(self):
        assert tokenize("( )").texts == ["(", ")"]

    def test_character_conservation_example(self):
        src = 'Ngày 31/3, "họp" Tp. xong...'
        s = tokenize(src)
        assert "".join(s.texts) == src.replace(" ", "")

    @given(st.text(max_size=300))
    @settings(max_examples=300)
    def test_character_conservation_property(self, raw):
        cleaned = clean_text(raw)
        s = tokenize(cleaned)
        assert "".join(s.texts) == re.sub(r"\s+", "", cleaned)
        for tok in s.tokens:
            assert cleaned[tok.start : tok.end] == tok.text
        starts = [t.start for t in s.tokens]
        assert starts == sorted(starts)

    def test_large_input_conservation(self):
        # A long mixed document tokenizes without loss.
        piece = 'Ngày 31/3/2022, GS. Lan nói: "giá 92.000 đồng/kg"... xem HTV7. '
        src = clean_text(piece * 160)
        assert len(src) > 10_000
        s = tokenize(src)
        assert "".join(s.texts) == src.replace(" ", "")

    def test_sentence_texts_is_list(self):
        s = tokenize("a b")
        assert isinstance(s.texts, list)
        assert isinstance(s, Sentence)
