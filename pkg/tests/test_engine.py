from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hawar2sorani.alphabets import KURDISH_LATIN_LETTERS
from hawar2sorani.engine import (
    RLM,
    DigitMode,
    EngineConfig,
    PunctMode,
    UnmatchedCharacter,
    fold_word,
    map_symbols,
    transliterate_text,
    transliterate_word,
)
from hawar2sorani.rules import parse_rules
from helpers import naive_transliterate_word


# --------------------------------------------------------------- fold_word

def test_fold_plain():
    assert fold_word("Kurdistan") == "kurdistan"


def test_fold_extended_letters():
    assert fold_word("ŞEMDÎNANÎ") == "şemdînanî"
    assert fold_word("ÇÊÛḦẌ") == "çêûḧẍ"


def test_fold_apostrophe_canonicalized():
    assert fold_word("Se’îd") == "se'îd"
    assert fold_word("Seʼîd") == "se'îd"


def test_fold_composes_nfc():
    assert fold_word("ḧ") == "ḧ"  # h + diaeresis -> ḧ


# ------------------------------------------------------- transliterate_word

@pytest.mark.parametrize(
    ("latin", "expected"),
    [
        ("min", "من"),
        ("diînine", "دئیننە"),
        ("se'îd", "سەعید"),
        ("kurdistan", "کوردستان"),
        ("agir", "ئاگر"),
        ("dill", "دڵ"),
        ("şerr", "شەڕ"),
        ("ḧeft", "حەفت"),
        ("ẍerîb", "غەریب"),
        ("'erd", "عەرد"),
        ("dua", "دوئا"),
    ],
)
def test_word_table(latin, expected, rs, cfg):
    assert transliterate_word(latin, rs, cfg) == expected


def test_word_exception(rs, cfg):
    assert transliterate_word("û", rs, cfg) == "و"
    assert transliterate_word("Û", rs, cfg) == "و"


def test_word_exception_only_whole_word(rs, cfg):
    # "û" inside a longer word follows the normal rules
    assert transliterate_word("ûr", rs, cfg) == "ئوور"


def test_word_unmatched_passthrough():
    tiny = parse_rules("b\tany\tب\na\tany\tا")
    assert transliterate_word("baq", tiny) == "باq"


def test_word_strict_raises():
    tiny = parse_rules("b\tany\tب\na\tany\tا")
    with pytest.raises(UnmatchedCharacter) as exc_info:
        transliterate_word("baq", tiny, strict=True)
    assert exc_info.value.char == "q"
    assert exc_info.value.offset == 2


def test_word_strict_cache_interaction():
    # the same word must behave identically whichever mode ran first
    tiny = parse_rules("b\tany\tب\na\tany\tا")
    assert transliterate_word("baq", tiny) == "باq"
    with pytest.raises(UnmatchedCharacter):
        transliterate_word("baq", tiny, strict=True)
    assert transliterate_word("baq", tiny) == "باq"


# ------------------------------------------------------------- map_symbols

def test_symbols_arabic_punct(cfg):
    assert map_symbols("?,;", cfg) == "؟،؛"


def test_symbols_keep_punct():
    keep = EngineConfig(punct_mode=PunctMode.KEEP)
    assert map_symbols("?", keep) == "?"


def test_symbols_digits():
    arabic = EngineConfig(digit_mode=DigitMode.ARABIC_INDIC)
    assert map_symbols("1984", arabic) == "١٩٨٤"
    keep = EngineConfig()
    assert map_symbols("1984", keep) == "1984"


def test_symbols_everything_else_unchanged(cfg):
    assert map_symbols("«»!٣—", cfg) == "«»!٣—"


# -------------------------------------------------------- transliterate_text

def test_text_sentence(rs, cfg):
    assert transliterate_text("min û tu", rs, cfg) == "من و تو"


def test_text_empty(rs, cfg):
    assert transliterate_text("", rs, cfg) == ""


def test_text_arabic_passthrough(rs, cfg):
    assert transliterate_text("دیننە", rs, cfg) == "دیننە"


def test_text_mixed_line(rs, cfg):
    assert transliterate_text("rojbaş, se'îd?", rs, cfg) == "رۆژباش، سەعید؟"


def test_text_decomposed_input_still_matches(rs, cfg):
    # ḧ typed as h + combining diaeresis
    assert transliterate_text("ḧeft", rs, cfg) == "حەفت"


def test_text_preserves_newlines(rs, cfg):
    out = transliterate_text("min\n\ntu\n", rs, cfg)
    assert out == "من\n\nتو\n"


def test_text_strict_line_and_column(rs):
    tiny = parse_rules("b\tany\tب\na\tany\tا\nn\tany\tن")
    with pytest.raises(UnmatchedCharacter) as exc_info:
        transliterate_text("ban\nbaq na", tiny, strict=True)
    assert (exc_info.value.line, exc_info.value.column) == (2, 3)
    assert exc_info.value.char == "q"


def test_text_rlm_after_final_stop(rs):
    rlm_cfg = EngineConfig(emit_rlm=True)
    assert transliterate_text("min.\n", rs, rlm_cfg) == "من." + RLM + "\n"
    assert transliterate_text("min.\r\n", rs, rlm_cfg) == "من." + RLM + "\r\n"
    assert transliterate_text("min.", rs, rlm_cfg) == "من." + RLM
    # not at end of line: untouched
    assert transliterate_text("min. tu\n", rs, rlm_cfg) == "من. تو\n"


def test_text_rlm_off_by_default(rs, cfg):
    assert transliterate_text("min.\n", rs, cfg) == "من.\n"


# ---------------------------------------------------------------- properties

_hawar_words = st.text(
    st.sampled_from(sorted("abcçdeêfghiîjklmnopqrsştuûvwxyz'ḧẍ")),
    min_size=1,
    max_size=12,
)
_hawar_texts = st.lists(_hawar_words, max_size=8).map(" ".join)
_mixed_texts = st.lists(
    st.one_of(_hawar_words, st.sampled_from([",", "?", "12", ".", "«ok»", "\n"])),
    max_size=10,
).map(" ".join)


@given(_mixed_texts)
def test_deterministic(rs, cfg, text):
    assert transliterate_text(text, rs, cfg) == transliterate_text(text, rs, cfg)


@given(_mixed_texts)
def test_idempotent(rs, text):
    for config in (EngineConfig(), EngineConfig(digit_mode=DigitMode.ARABIC_INDIC, emit_rlm=True)):
        once = transliterate_text(text, rs, config)
        assert transliterate_text(once, rs, config) == once


@given(_hawar_words)
def test_case_invariance(rs, cfg, word):
    assert transliterate_word(word.upper(), rs, cfg) == transliterate_word(word, rs, cfg)


@given(_hawar_words)
def test_no_latin_residue(rs, cfg, word):
    out = transliterate_word(word, rs, cfg)
    assert not any(c in KURDISH_LATIN_LETTERS for c in out), (word, out)


@given(st.text(st.sampled_from(sorted("مدینە«»!٣—‏ ")), max_size=30))
def test_passthrough_without_mappable_content(rs, cfg, text):
    assert transliterate_text(text, rs, cfg) == text


@given(_mixed_texts)
def test_line_count_preserved(rs, cfg, text):
    assert transliterate_text(text, rs, cfg).count("\n") == text.count("\n")


@given(st.text(st.sampled_from(sorted("lriîamn'")), min_size=1, max_size=8))
def test_greedy_matches_oracle(rs, cfg, word):
    assert transliterate_word(word, rs, cfg) == naive_transliterate_word(word, rs)


@given(_mixed_texts)
def test_whole_text_equals_per_line_composition(rs, text):
    for config in (EngineConfig(), EngineConfig(emit_rlm=True, digit_mode=DigitMode.ARABIC_INDIC)):
        whole = transliterate_text(text, rs, config)
        joined = "\n".join(
            transliterate_text(line, rs, config) for line in text.split("\n")
        )
        assert whole == joined


def test_concurrent_equals_sequential(rs, cfg):
    lines = ["min û tu", "rojbaş, se'îd?", "çiya bilind in.", "dê û bav"] * 8
    sequential = [transliterate_text(line, rs, cfg) for line in lines]
    with ThreadPoolExecutor(max_workers=4) as pool:
        concurrent = list(pool.map(lambda line: transliterate_text(line, rs, cfg), lines))
    assert concurrent == sequential
