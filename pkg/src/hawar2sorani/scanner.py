"""Tokenizer: splits text into word, symbol, and whitespace runs.

Reconstruction is exact: concatenating the token texts in order reproduces
the input byte for byte, for any Unicode input. Apostrophes count as word
characters when they sit in a run that contains at least one Kurdish Latin
letter ("se'îd" is one word); a run of apostrophes alone is symbols.
"""

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum

from .alphabets import APOSTROPHES, KURDISH_LATIN_LETTERS


class CharClass(Enum):
    KURDISH_LATIN_LETTER = "letter"
    APOSTROPHE = "apostrophe"
    DIGIT = "digit"
    PUNCTUATION = "punctuation"
    WHITESPACE = "whitespace"
    OTHER = "other"


class TokenKind(Enum):
    WORD = "word"
    SYMBOLS = "symbols"
    SPACE = "space"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    start: int  # byte offset into the UTF-8 encoding of the input


def classify_char(ch: str) -> CharClass:
    """Character class of one Unicode scalar. Total and deterministic."""
    if ch in KURDISH_LATIN_LETTERS:
        return CharClass.KURDISH_LATIN_LETTER
    if ch in APOSTROPHES:
        return CharClass.APOSTROPHE
    if ch.isspace():
        return CharClass.WHITESPACE
    category = unicodedata.category(ch)
    if category == "Nd":
        return CharClass.DIGIT
    if category.startswith("P"):
        return CharClass.PUNCTUATION
    return CharClass.OTHER


_WORDISH = "".join(sorted(KURDISH_LATIN_LETTERS | APOSTROPHES))
# Three alternatives that partition all of Unicode, so every character lands
# in exactly one maximal run. re's \s agrees with str.isspace for str input.
_RUNS = re.compile(
    "(?P<word>[{w}]+)|(?P<space>\\s+)|(?P<symbols>[^{w}\\s]+)".format(
        w=re.escape(_WORDISH)
    )
)


def token_runs(text: str):
    """Yield (TokenKind, run) pairs; the engine's allocation-light path."""
    for match in _RUNS.finditer(text):
        run = match.group()
        if match.lastgroup == "space":
            yield TokenKind.SPACE, run
        elif match.lastgroup == "word" and not all(c in APOSTROPHES for c in run):
            yield TokenKind.WORD, run
        else:
            yield TokenKind.SYMBOLS, run


def segment(text: str) -> list:
    """Tokenize ``text`` into maximal Word / Symbols / Space runs.

    The input is not normalized or otherwise altered; callers that want NFC
    matching normalize before segmenting.
    """
    tokens = []
    offset = 0
    for kind, run in token_runs(text):
        tokens.append(Token(kind, run, offset))
        offset += len(run.encode("utf-8"))
    return tokens
