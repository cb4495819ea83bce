"""Transliteration engine: applies a rule table to scanned tokens.

Word tokens are case-folded and rewritten left to right by longest-match
lookup with positional context; symbol tokens get the configured punctuation
and digit mapping; everything else passes through. No rule context crosses a
word boundary and words never cross lines, so line-by-line processing gives
byte-identical output to whole-text processing.
"""

import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .alphabets import CANONICAL_APOSTROPHE
from .rules import RuleSet, lookup
from .scanner import TokenKind, token_runs

RLM = "‏"  # RIGHT-TO-LEFT MARK


class DigitMode(Enum):
    KEEP = "keep"
    ARABIC_INDIC = "arabic"


class PunctMode(Enum):
    KEEP = "keep"
    ARABIC_SCRIPT = "arabic"


class Dialect(Enum):
    UNIFIED = "unified"  # one table serves Kurmanji and Sorani input


@dataclass(frozen=True)
class EngineConfig:
    digit_mode: DigitMode = DigitMode.KEEP
    punct_mode: PunctMode = PunctMode.ARABIC_SCRIPT
    emit_rlm: bool = False
    dialect: Dialect = Dialect.UNIFIED


DEFAULT_CONFIG = EngineConfig()


class UnmatchedCharacter(ValueError):
    """Strict mode: a word character no rule matches.

    ``offset`` is the character index inside the folded word; ``line`` and
    ``column`` (both 1-based) are filled in by transliterate_text.
    """

    def __init__(
        self,
        char: str,
        offset: int,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.char = char
        self.offset = offset
        self.line = line
        self.column = column
        where = f"{line}:{column}" if line is not None else f"offset {offset}"
        super().__init__(f"no rule matches {char!r} at {where}")


_APOSTROPHE_FOLD = str.maketrans({"’": CANONICAL_APOSTROPHE, "ʼ": CANONICAL_APOSTROPHE})


def fold_word(word: str) -> str:
    """NFC-normalize, lowercase, and canonicalize apostrophes."""
    folded = unicodedata.normalize("NFC", word).lower()
    folded = folded.translate(_APOSTROPHE_FOLD)
    return unicodedata.normalize("NFC", folded)


# Transliterated words memoized per RuleSet, keyed on the raw token text so
# repeats skip case folding too; real text repeats words heavily.
_CACHE_LIMIT = 1 << 17


def transliterate_word(
    word: str, rs: RuleSet, cfg: EngineConfig = DEFAULT_CONFIG, *, strict: bool = False
) -> str:
    """Rewrite one word token. Characters without a rule pass through.

    With ``strict`` a pass-through character raises UnmatchedCharacter
    instead.
    """
    entry = rs._word_cache.get(word)
    if entry is None:
        entry = _word_entry(word, rs)
    if strict and entry[1] >= 0:
        raise UnmatchedCharacter(entry[2], entry[1])
    return entry[0]


def _word_entry(word: str, rs: RuleSet) -> tuple:
    """Compute and cache (output, first unmatched folded index or -1, unmatched char)."""
    folded = fold_word(word)
    exception = rs.exceptions.get(folded)
    if exception is not None:
        entry = (exception, -1, "")
    else:
        output, unmatched = _apply_rules(folded, rs)
        entry = (output, unmatched, folded[unmatched] if unmatched >= 0 else "")
    cache = rs._word_cache
    if len(cache) >= _CACHE_LIMIT:
        cache.clear()
    cache[word] = entry
    return entry


def _apply_rules(folded: str, rs: RuleSet) -> tuple:
    """Greedy left-to-right application; returns (output, first unmatched index or -1)."""
    vowels = rs.latin_vowels
    out = []
    unmatched = -1
    pos = 0
    end = len(folded)
    while pos < end:
        match = lookup(
            rs,
            folded,
            pos,
            is_word_initial=pos == 0,
            prev_is_vowel=pos > 0 and folded[pos - 1] in vowels,
        )
        if match is None:
            if unmatched < 0:
                unmatched = pos
            out.append(folded[pos])
            pos += 1
        else:
            out.append(match.rule.output)
            pos += match.consumed
    return "".join(out), unmatched


_PUNCT_TO_ARABIC = str.maketrans({",": "،", ";": "؛", "?": "؟"})
_DIGITS_TO_ARABIC_INDIC = str.maketrans("0123456789", "٠١٢٣٤٥٦٧٨٩")


def map_symbols(text: str, cfg: EngineConfig) -> str:
    """Per-character symbol mapping; everything unconfigured is unchanged."""
    if cfg.punct_mode is PunctMode.ARABIC_SCRIPT:
        text = text.translate(_PUNCT_TO_ARABIC)
    if cfg.digit_mode is DigitMode.ARABIC_INDIC:
        text = text.translate(_DIGITS_TO_ARABIC_INDIC)
    return text


def transliterate_text(
    text: str, rs: RuleSet, cfg: EngineConfig = DEFAULT_CONFIG, *, strict: bool = False
) -> str:
    """Transliterate arbitrary text, preserving line structure exactly."""
    if not (strict or cfg.emit_rlm):
        # Newlines sit inside whitespace runs and pass through, so the text
        # need not be split into lines unless a per-line feature is on.
        return _transliterate_chunk(text, rs, cfg)
    parts = [
        _transliterate_line(line, rs, cfg, strict, lineno)
        for lineno, line in enumerate(text.split("\n"), start=1)
    ]
    return "\n".join(parts)


def _nfc(text: str) -> str:
    if unicodedata.is_normalized("NFC", text):
        return text
    return unicodedata.normalize("NFC", text)


def _transliterate_chunk(text, rs, cfg):
    text = _nfc(text)
    cache = rs._word_cache
    pieces = []
    append = pieces.append
    word_kind = TokenKind.WORD
    symbols_kind = TokenKind.SYMBOLS
    for kind, run in token_runs(text):
        if kind is word_kind:
            entry = cache.get(run)
            if entry is None:
                entry = _word_entry(run, rs)
            append(entry[0])
        elif kind is symbols_kind:
            append(map_symbols(run, cfg))
        else:
            append(run)
    return "".join(pieces)


def _transliterate_line(line, rs, cfg, strict, lineno):
    line = _nfc(line)
    cache = rs._word_cache
    pieces = []
    column = 0  # char offset in the normalized line
    for kind, run in token_runs(line):
        if kind is TokenKind.WORD:
            entry = cache.get(run)
            if entry is None:
                entry = _word_entry(run, rs)
            if strict and entry[1] >= 0:
                raise UnmatchedCharacter(
                    entry[2], entry[1], line=lineno, column=column + entry[1] + 1
                )
            pieces.append(entry[0])
        elif kind is TokenKind.SYMBOLS:
            pieces.append(map_symbols(run, cfg))
        else:
            pieces.append(run)
        column += len(run)
    out = "".join(pieces)
    if cfg.emit_rlm:
        # A full stop ending the line would render on the wrong side in an
        # LTR-defaulted editor; the mark pins it. \r from CRLF input stays
        # after the mark.
        body = out.rstrip("\r")
        if body.endswith("."):
            out = body + RLM + out[len(body):]
    return out
