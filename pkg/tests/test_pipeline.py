"""Tests for the end-to-end normalization pipeline.

The tagger here is a hand-rigged model: a handful of lexical features with
large positive weights pin the tags of the example sentences, and every
other position falls to O through the lowest-index tie-break.  This keeps
the expected outputs exact without depending on training.
"""

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from nswnorm.crf import CrfModel
from nswnorm.errors import ValidationError
from nswnorm.features import TEMPLATE_VERSION
from nswnorm.pipeline import check_template_version, normalize_sentence, tag_sentence
from nswnorm.preprocess import clean_text, tokenize
from nswnorm.taxonomy import ALL_LABELS, LABEL_INDEX


_RIGGED_WEIGHTS = {
    "lower[0]=31/3": ("B-NDAY", 10.0),
    "lower[0]=92000": ("B-NNUM", 10.0),
    "lower[0]=covid-19": ("B-LWRD", 10.0),
    "lower[0]=tp.": ("B-LABB", 10.0),
    "lower[-1]=ngày": ("B-NDAY", 5.0),
    "lower[-1]=có": ("B-NFRC", 5.0),
}


@pytest.fixture(scope="module")
def rigged_model():
    model = CrfModel.zeros(ALL_LABELS, list(_RIGGED_WEIGHTS))
    for feature, (label, weight) in _RIGGED_WEIGHTS.items():
        model.emit[model.feature_index[feature], LABEL_INDEX[label]] = weight
    return model


@pytest.fixture(scope="module")
def empty_model():
    return CrfModel.zeros(ALL_LABELS, [])


class TestTagSentence:
    def test_date_and_number_sentence(self, rigged_model):
        sentence, labels = tag_sentence("Ngày 31/3, gần 92000 ca.", rigged_model)
        assert sentence.texts == ["Ngày", "31/3", ",", "gần", "92000", "ca", "."]
        assert labels == ["O", "B-NDAY", "O", "O", "B-NNUM", "O", "O"]

    def test_context_disambiguates_shared_surface(self, rigged_model):
        sentence, labels = tag_sentence(
            "Trong ngày 3/4, có 3/4 xe được bán.", rigged_model
        )
        assert sentence.texts == [
            "Trong", "ngày", "3/4", ",", "có", "3/4", "xe", "được", "bán", ".",
        ]
        assert labels == [
            "O", "O", "B-NDAY", "O", "O", "B-NFRC", "O", "O", "O", "O",
        ]

    def test_empty_input(self, rigged_model):
        sentence, labels = tag_sentence("", rigged_model)
        assert sentence.texts == []
        assert labels == []

    def test_whitespace_only_input(self, rigged_model):
        sentence, labels = tag_sentence("  \t  ", rigged_model)
        assert sentence.texts == []
        assert labels == []

    def test_all_zero_model_tags_outside(self, empty_model):
        _, labels = tag_sentence("một hai ba 31/3", empty_model)
        assert labels == ["O"] * 4


class TestNormalizeSentence:
    def test_date_number_loanword_abbreviation(self, rigged_model, resources):
        raw = "Ngày 31/3, gần 92000 ca mắc mới Covid-19 ở Tp. Hà Nội"
        assert normalize_sentence(raw, rigged_model, resources) == (
            "Ngày ba mươi mốt tháng ba , gần chín mươi hai nghìn ca mắc mới "
            "cô vít mười chín ở thành phố Hà Nội"
        )

    def test_day_versus_fraction_by_context(self, rigged_model, resources):
        raw = "Trong ngày 3/4, có 3/4 xe được bán."
        assert normalize_sentence(raw, rigged_model, resources) == (
            "Trong ngày mùng ba tháng tư , có ba trên bốn xe được bán ."
        )

    def test_identity_on_standard_words(self, rigged_model, resources):
        raw = "Hôm nay trời rất đẹp."
        expected = " ".join(tokenize(clean_text(raw)).texts)
        assert normalize_sentence(raw, rigged_model, resources) == expected
        assert expected == "Hôm nay trời rất đẹp ."

    def test_empty_input_gives_empty_output(self, rigged_model, resources):
        assert normalize_sentence("", rigged_model, resources) == ""
        assert normalize_sentence("   ", rigged_model, resources) == ""

    def test_default_resources_load(self, rigged_model):
        # resources=None loads the packaged tables.
        assert normalize_sentence("Ngày 31/3.", rigged_model) == (
            "Ngày ba mươi mốt tháng ba ."
        )

    def test_all_zero_model_is_identity_rejoin(self, empty_model, resources):
        raw = "Ngày 31/3, gần 92000 ca."
        expected = " ".join(tokenize(clean_text(raw)).texts)
        assert normalize_sentence(raw, empty_model, resources) == expected

    @settings(max_examples=300, deadline=None)
    @given(raw=st.text(max_size=80))
    def test_total_on_arbitrary_text(self, rigged_model, resources, raw):
        spoken = normalize_sentence(raw, rigged_model, resources)
        assert isinstance(spoken, str)
        assert "  " not in spoken
        assert spoken == spoken.strip()


class TestTemplateVersion:
    def test_mismatch_is_rejected(self):
        stale = CrfModel.zeros(ALL_LABELS, [], template_version=TEMPLATE_VERSION + 1)
        with pytest.raises(ValidationError) as exc:
            check_template_version(stale)
        message = str(exc.value)
        assert f"version {TEMPLATE_VERSION + 1}" in message
        assert f"version {TEMPLATE_VERSION}" in message
        assert "retrain or convert" in message

    def test_mismatch_blocks_tagging(self, resources):
        stale = CrfModel.zeros(ALL_LABELS, [], template_version=TEMPLATE_VERSION + 1)
        with pytest.raises(ValidationError):
            tag_sentence("một câu", stale)
        with pytest.raises(ValidationError):
            normalize_sentence("một câu", stale, resources)

    def test_current_version_passes(self, rigged_model):
        check_template_version(rigged_model)
