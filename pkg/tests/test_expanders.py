"""Tests for the written-to-spoken expanders and the total dispatcher."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nswnorm.expanders import ExpanderConfig, SpokenText, expand, spell_fallback
from nswnorm.expanders.dates import (
    expand_ndat,
    expand_nday,
    expand_nmon,
    expand_nqua,
)
from nswnorm.expanders.letters import expand_labb, expand_lseq, expand_lwrd
from nswnorm.expanders.numeric import (
    expand_mea,
    expand_money,
    expand_nfrc,
    expand_nper,
    expand_nrng,
    expand_nscr,
    expand_ntim,
    expand_nver,
    expand_roma,
)
from nswnorm.resources import load_resources
from nswnorm.taxonomy import ALL_TAGS, Tag

_CFG = ExpanderConfig()


def _s(words):
    return " ".join(words)


class TestDates:
    def test_nday(self):
        assert _s(expand_nday("31/3")) == "ba mươi mốt tháng ba"
        assert _s(expand_nday("3/4")) == "mùng ba tháng tư"
        assert _s(expand_nday("3-1")) == "mùng ba tháng một"
        assert _s(expand_nday("15.8")) == "mười lăm tháng tám"
        assert _s(expand_nday("10/10")) == "mười tháng mười"

    def test_nday_mung_only_single_digit_days(self):
        assert expand_nday("9/3")[0] == "mùng"
        assert expand_nday("10/3")[0] == "mười"
        assert expand_nday("1/1")[:1] == ["mùng"]

    def test_nday_rejects_out_of_range(self):
        assert expand_nday("32/3") is None
        assert expand_nday("0/3") is None
        assert expand_nday("3/13") is None
        assert expand_nday("3/0") is None
        assert expand_nday("abc") is None
        # Mixed separators are not a day/month.
        assert expand_nday("3/4/") is None

    def test_ndat_full_date(self):
        assert _s(expand_ndat("10/3/2000")) == "mười tháng ba năm hai nghìn"
        assert _s(expand_ndat("1/1/2021")) == (
            "mùng một tháng một năm hai nghìn không trăm hai mươi mốt"
        )
        assert _s(expand_ndat("31-12-1999")) == (
            "ba mươi mốt tháng mười hai năm một nghìn chín trăm chín mươi chín"
        )
        assert _s(expand_ndat("2.9.1945")) == (
            "mùng hai tháng chín năm một nghìn chín trăm bốn mươi lăm"
        )

    def test_ndat_separators_must_agree(self):
        assert expand_ndat("10/3-2000") is None
        assert expand_ndat("10.3/2000") is None

    def test_ndat_day_range(self):
        assert _s(expand_ndat("13-15/7/2021")) == (
            "mười ba đến mười lăm tháng bảy "
            "năm hai nghìn không trăm hai mươi mốt"
        )

    def test_ndat_cross_month_range(self):
        assert _s(expand_ndat("28/2-3/3/2021")) == (
            "hai mươi tám tháng hai đến mùng ba tháng ba "
            "năm hai nghìn không trăm hai mươi mốt"
        )

    def test_ndat_full_range(self):
        assert _s(expand_ndat("1/1/2020-2/2/2021")) == (
            "mùng một tháng một năm hai nghìn không trăm hai mươi "
            "đến mùng hai tháng hai năm hai nghìn không trăm hai mươi mốt"
        )

    def test_nmon(self):
        assert _s(expand_nmon("12/2021")) == (
            "tháng mười hai năm hai nghìn không trăm hai mươi mốt"
        )
        assert _s(expand_nmon("4/2022")) == (
            "tháng tư năm hai nghìn không trăm hai mươi hai"
        )
        assert expand_nmon("13/2021") is None
        assert expand_nmon("12/21") is None

    def test_nqua(self):
        assert _s(expand_nqua("I/2021")) == (
            "quý một năm hai nghìn không trăm hai mươi mốt"
        )
        assert _s(expand_nqua("Quý III/2022")) == (
            "quý ba năm hai nghìn không trăm hai mươi hai"
        )
        assert _s(expand_nqua("quý 2")) == "quý hai"
        assert _s(expand_nqua("IV")) == "quý bốn"
        assert _s(expand_nqua("4/2022")) == (
            "quý bốn năm hai nghìn không trăm hai mươi hai"
        )

    def test_nqua_rejects(self):
        assert expand_nqua("V/2021") is None
        assert expand_nqua("5") is None
        assert expand_nqua("0") is None
        assert expand_nqua("quý") is None


class TestNumericFamily:
    def test_nper(self):
        assert _s(expand_nper("5%", _CFG)) == "năm phần trăm"
        assert _s(expand_nper("4,5%", _CFG)) == "bốn phẩy năm phần trăm"
        assert _s(expand_nper("5-7%", _CFG)) == "năm đến bảy phần trăm"
        assert expand_nper("5", _CFG) is None
        assert expand_nper("%", _CFG) is None

    def test_nfrc_default_connective(self):
        assert _s(expand_nfrc("3/4", _CFG)) == "ba trên bốn"
        assert _s(expand_nfrc("1/2", _CFG)) == "một trên hai"
        assert expand_nfrc("3", _CFG) is None
        assert expand_nfrc("a/4", _CFG) is None

    def test_nfrc_configured_connective(self):
        cfg = ExpanderConfig(fraction_word="phần")
        assert _s(expand_nfrc("3/4", cfg)) == "ba phần bốn"
        cfg = ExpanderConfig(fraction_word="")
        assert _s(expand_nfrc("3/4", cfg)) == "ba bốn"

    def test_nscr_juxtaposes(self):
        assert _s(expand_nscr("3-1", _CFG)) == "ba một"
        assert _s(expand_nscr("0-0", _CFG)) == "không không"
        assert _s(expand_nscr("10-0", _CFG)) == "mười không"
        assert expand_nscr("3", _CFG) is None

    def test_nrng(self):
        assert _s(expand_nrng("3-4", _CFG)) == "ba đến bốn"
        assert _s(expand_nrng("100-200", _CFG)) == "một trăm đến hai trăm"
        assert _s(expand_nrng("1,5-2,5", _CFG)) == (
            "một phẩy năm đến hai phẩy năm"
        )
        assert expand_nrng("3", _CFG) is None

    def test_nver(self):
        assert _s(expand_nver("4.0", _CFG)) == "bốn chấm không"
        assert _s(expand_nver("2.1.3", _CFG)) == "hai chấm một chấm ba"
        assert _s(expand_nver("10", _CFG)) == "mười"
        assert expand_nver("4.x", _CFG) is None

    def test_ntim_letter_forms(self):
        assert _s(expand_ntim("1h20", _CFG)) == "một giờ hai mươi phút"
        assert _s(expand_ntim("9h", _CFG)) == "chín giờ"
        assert _s(expand_ntim("20g30", _CFG)) == "hai mươi giờ ba mươi phút"
        assert _s(expand_ntim("1h20p30s", _CFG)) == (
            "một giờ hai mươi phút ba mươi giây"
        )
        assert _s(expand_ntim("8h15'", _CFG)) == "tám giờ mười lăm phút"

    def test_ntim_colon_forms(self):
        assert _s(expand_ntim("15:30", _CFG)) == "mười lăm giờ ba mươi phút"
        assert _s(expand_ntim("7:05:30", _CFG)) == (
            "bảy giờ năm phút ba mươi giây"
        )

    def test_ntim_minutes_only(self):
        assert _s(expand_ntim("11'", _CFG)) == "mười một phút"
        assert _s(expand_ntim("90'", _CFG)) == "chín mươi phút"

    def test_ntim_range(self):
        assert _s(expand_ntim("18h-20h", _CFG)) == (
            "mười tám giờ đến hai mươi giờ"
        )
        assert expand_ntim("18x", _CFG) is None

    def test_roma(self):
        assert _s(expand_roma("X", _CFG)) == "mười"
        assert _s(expand_roma("XXI", _CFG)) == "hai mươi mốt"
        assert _s(expand_roma("IV", _CFG)) == "bốn"
        assert expand_roma("IIII", _CFG) is None
        assert expand_roma("xiv", _CFG) is None


class TestMoneyAndMeasure:
    @pytest.fixture()
    def tables(self, resources):
        return resources.unit_tables

    def test_money_suffix_symbol(self, tables):
        assert _s(expand_money("92.000đ", tables, _CFG)) == (
            "chín mươi hai nghìn đồng"
        )
        assert _s(expand_money("5000VNĐ", tables, _CFG)) == "năm nghìn đồng"

    def test_money_prefix_symbol(self, tables):
        assert _s(expand_money("$100", tables, _CFG)) == "một trăm đô la"
        assert _s(expand_money("€50", tables, _CFG)) == "năm mươi ơ rô"

    def test_money_longest_symbol_wins(self, tables):
        # "USD" must be matched whole, not as a bare "$"-like fragment.
        assert _s(expand_money("20USD", tables, _CFG)) == "hai mươi đô la"

    def test_money_rejects(self, tables):
        assert expand_money("100", tables, _CFG) is None
        assert expand_money("đ", tables, _CFG) is None
        assert expand_money("abcđ", tables, _CFG) is None

    def test_mea(self, tables):
        assert _s(expand_mea("20kg", tables, _CFG)) == "hai mươi ki lô gam"
        assert _s(expand_mea("5km2", tables, _CFG)) == "năm ki lô mét vuông"
        assert _s(expand_mea("25oC", tables, _CFG)) == "hai mươi lăm độ xê"
        assert _s(expand_mea("60km/h", tables, _CFG)) == (
            "sáu mươi ki lô mét trên giờ"
        )
        assert _s(expand_mea("1,5m", tables, _CFG)) == "một phẩy năm mét"

    def test_mea_longest_unit_wins(self, tables):
        # "km2" must not be read as "km" + stray digit.
        words = expand_mea("5km2", tables, _CFG)
        assert "vuông" in words

    def test_mea_rejects(self, tables):
        assert expand_mea("kg", tables, _CFG) is None
        assert expand_mea("20", tables, _CFG) is None
        assert expand_mea("xkg", tables, _CFG) is None


class TestLetters:
    @pytest.fixture()
    def res(self, resources):
        return resources

    def test_labb_dictionary_hit(self, res):
        assert _s(expand_labb("UBND", res.abbreviations)) == "ủy ban nhân dân"
        assert _s(expand_labb("NATO", res.abbreviations)) == "na tô"
        assert _s(expand_labb("Tp", res.abbreviations)) == "thành phố"

    def test_labb_trailing_dot_stripped(self, res):
        assert _s(expand_labb("Tp.", res.abbreviations)) == "thành phố"
        assert _s(expand_labb("GS.", res.abbreviations)) == "giáo sư"

    def test_labb_miss_degrades_to_letter_sequence(self, res):
        assert expand_labb("XYZ", res.abbreviations) == ["X", "Y", "Z"]

    def test_lwrd_dictionary_hit(self, res):
        assert _s(expand_lwrd("virus", res.loanwords)) == "vi rút"
        assert _s(expand_lwrd("Internet", res.loanwords)) == "in tơ nét"

    def test_lwrd_compound_split(self, res):
        assert _s(expand_lwrd("Covid-19", res.loanwords)) == "cô vít mười chín"

    def test_lwrd_unknown_passthrough(self, res):
        assert expand_lwrd("blorptastic", res.loanwords) == ["blorptastic"]

    def test_lwrd_compound_with_unknown_part(self, res):
        assert expand_lwrd("A4", res.loanwords) == ["A", "bốn"]

    def test_lseq(self):
        assert expand_lseq("VTV3") == ["V", "T", "V", "ba"]
        assert expand_lseq("HTV7") == ["H", "T", "V", "bảy"]
        assert expand_lseq("GDP") == ["G", "D", "P"]
        assert expand_lseq("A-1") == ["A", "một"]
        assert expand_lseq("...") == []


class TestExpandDispatcher:
    @pytest.fixture()
    def res(self, resources):
        return resources

    def test_pinned_goldens(self, res):
        cases = {
            ("92000", "NNUM"): "chín mươi hai nghìn",
            ("31/3", "NDAY"): "ba mươi mốt tháng ba",
            ("3/4", "NDAY"): "mùng ba tháng tư",
            ("3/4", "NFRC"): "ba trên bốn",
            ("3-1", "NSCR"): "ba một",
            ("3-1", "NDAY"): "mùng ba tháng một",
            ("3-4", "NRNG"): "ba đến bốn",
            ("10/3/2000", "NDAT"): "mười tháng ba năm hai nghìn",
            ("VTV", "LSEQ"): "V T V",
            ("4.0", "NVER"): "bốn chấm không",
            ("911", "NDIG"): "chín một một",
            ("911", "NNUM"): "chín trăm mười một",
            ("Covid-19", "LWRD"): "cô vít mười chín",
            ("Tp.", "LABB"): "thành phố",
            ("NATO", "LABB"): "na tô",
            ("12/2021", "NMON"): (
                "tháng mười hai năm hai nghìn không trăm hai mươi mốt"
            ),
            ("X", "ROMA"): "mười",
            ("1h20", "NTIM"): "một giờ hai mươi phút",
        }
        for (token, tag), want in cases.items():
            got = expand(token, tag, res)
            assert got.text == want, (token, tag)
            assert not got.fallback, (token, tag)

    def test_accepts_tag_objects_and_strings(self, res):
        assert expand("31/3", Tag.NDAY, res) == expand("31/3", "NDAY", res)

    def test_urle_through_dispatcher(self, res):
        assert expand("#anhkhanh", "URLE", res).text == "anh khanh"
        assert expand("xuanthanh@gmail.com", "URLE", res).text == (
            "xuan thanh a còng gờ meo chấm com"
        )

    def test_urle_multi_token_span(self, res):
        # Spans joined with spaces expand piecewise without error.
        got = expand("#anhkhanh #hanoi", "URLE", res)
        assert got.text == "anh khanh ha noi"

    def test_fallback_on_unparseable(self, res):
        got = expand("abc", "NNUM", res)
        assert got.fallback
        assert got.words == ("a", "b", "c")
        got = expand("99/99", "NDAY", res)
        assert got.fallback
        got = expand("??", "NDIG", res)
        assert got.fallback

    def test_spell_fallback_shape(self):
        got = spell_fallback("a1-b")
        assert got == SpokenText(("a", "một", "b"), fallback=True)

    @given(
        token=st.text(min_size=1, max_size=12).filter(str.strip),
        tag=st.sampled_from([t.name for t in ALL_TAGS]),
    )
    @settings(max_examples=400, deadline=None)
    def test_totality(self, token, tag):
        res = load_resources()
        if any(c.isspace() for c in token):
            return
        got = expand(token, tag, res)
        assert isinstance(got, SpokenText)
        for w in got.words:
            assert w
            assert not any(c.isspace() for c in w)

    def test_purity(self, res):
        a = expand("31/3", "NDAY", res)
        b = expand("31/3", "NDAY", res)
        assert a == b
