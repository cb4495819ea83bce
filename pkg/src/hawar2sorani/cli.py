"""Command-line front end and the gold-pair corpus check harness.

``translit [options] [IN]`` transliterates a UTF-8 file (or stdin) to a
UTF-8 file (or stdout), streaming line by line so memory stays bounded by
line length rather than file size. ``translit check [CORPUS]`` runs the
regression harness over tab-separated (latin, expected) pairs and exits
nonzero when any pair disagrees.

Exit codes: 0 success, 1 corpus-check failures, 2 unreadable or invalid
input, 3 rule-file errors, 4 unmatched character in --strict mode.
"""

import argparse
import sys
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .engine import (
    DigitMode,
    EngineConfig,
    PunctMode,
    UnmatchedCharacter,
    transliterate_text,
)
from .rules import RuleError, RuleSet, default_rules, parse_rules

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_RULES = 3
EXIT_STRICT = 4

BOM = "﻿"


class MalformedPairLine(ValueError):
    """Corpus line that is not exactly `latin<TAB>expected`."""

    def __init__(self, line: int, reason: str):
        self.line = line
        super().__init__(f"MalformedPairLine: {reason} (line {line})")


class InvalidInputBytes(ValueError):
    """Input that is not valid UTF-8; ``offset`` is the global byte offset."""

    def __init__(self, offset: int, reason: str):
        self.offset = offset
        super().__init__(f"invalid UTF-8 at byte offset {offset}: {reason}")


@dataclass(frozen=True)
class CorpusPair:
    latin: str
    arabic_expected: str
    line: int  # 1-based source line


@dataclass
class CheckReport:
    total: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)  # (line, latin, expected, actual)


def load_corpus(text: str) -> list:
    """Parse corpus text into CorpusPair entries.

    One pair per line, exactly one TAB between the Latin input and the
    expected output; ``#`` comments and blank lines are skipped. Both fields
    are stored NFC.
    """
    pairs = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if line.count("\t") != 1:
            raise MalformedPairLine(lineno, "expected exactly one TAB")
        latin, expected = (f.strip() for f in line.split("\t"))
        if not latin or not expected:
            raise MalformedPairLine(lineno, "empty field")
        pairs.append(
            CorpusPair(
                unicodedata.normalize("NFC", latin),
                unicodedata.normalize("NFC", expected),
                lineno,
            )
        )
    return pairs


def check_corpus(path, rs: RuleSet, cfg: EngineConfig) -> CheckReport:
    """Transliterate every pair's Latin side and compare NFC-exact."""
    with open(path, "r", encoding="utf-8") as handle:
        pairs = load_corpus(handle.read())
    report = CheckReport()
    for pair in pairs:
        actual = unicodedata.normalize("NFC", transliterate_text(pair.latin, rs, cfg))
        report.total += 1
        if actual == pair.arabic_expected:
            report.passed += 1
        else:
            report.failures.append((pair.line, pair.latin, pair.arabic_expected, actual))
    return report


def seed_corpus_path() -> str:
    """Path of the corpus shipped with the package."""
    return str(resources.files("hawar2sorani").joinpath("data/seed_corpus.tsv"))


def _add_shared_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rules", metavar="FILE", help="rule file replacing the built-in table")
    parser.add_argument(
        "--digits", choices=["keep", "arabic"], default="keep", help="digit handling (default: keep)"
    )
    parser.add_argument(
        "--punct",
        choices=["keep", "arabic"],
        default="arabic",
        help="punctuation handling (default: arabic)",
    )
    parser.add_argument(
        "--rlm",
        action="store_true",
        help="append a right-to-left mark after a line-final full stop",
    )


def _build_main_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="translit",
        description="Transliterate Kurdish text in Hawar Latin script into Sorani Persian-Arabic script.",
    )
    _add_shared_options(parser)
    parser.add_argument(
        "--strict",
        action="store_true",
        help="fail on the first in-word character no rule matches",
    )
    parser.add_argument("-o", "--output", metavar="OUT", default="-", help="output file (default: stdout)")
    parser.add_argument("input", metavar="IN", nargs="?", default="-", help="input file (default: stdin)")
    return parser


def _build_check_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="translit check",
        description="Check a gold-pair corpus against the transliterator.",
    )
    _add_shared_options(parser)
    parser.add_argument(
        "corpus",
        metavar="CORPUS",
        nargs="?",
        default=None,
        help="pairs file `latin<TAB>expected` (default: the shipped seed corpus)",
    )
    return parser


def _config_from_args(args: argparse.Namespace) -> EngineConfig:
    return EngineConfig(
        digit_mode=DigitMode.KEEP if args.digits == "keep" else DigitMode.ARABIC_INDIC,
        punct_mode=PunctMode.KEEP if args.punct == "keep" else PunctMode.ARABIC_SCRIPT,
        emit_rlm=args.rlm,
    )


def _load_rules(path: Optional[str]) -> RuleSet:
    if path is None:
        return default_rules()
    with open(path, "r", encoding="utf-8") as handle:
        return parse_rules(handle.read())


# Batch size for streaming reads. readlines() returns whole lines, so memory
# stays bounded by max(batch size, longest line), never by file size.
_BATCH_BYTES = 1 << 18


def _stream(infile, outfile, rs: RuleSet, cfg: EngineConfig, strict: bool) -> None:
    """Transliterate ``infile`` to ``outfile`` in line batches (both binary)."""
    consumed = 0
    lines_done = 0
    first = True
    while True:
        batch = infile.readlines(_BATCH_BYTES)
        if not batch:
            break
        raw = b"".join(batch)
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidInputBytes(consumed + exc.start, exc.reason) from None
        if first:
            if text.startswith(BOM):
                text = text[len(BOM):]
            first = False
        try:
            out = transliterate_text(text, rs, cfg, strict=strict)
        except UnmatchedCharacter as exc:
            raise UnmatchedCharacter(
                exc.char, exc.offset, lines_done + (exc.line or 1), exc.column
            ) from None
        outfile.write(out.encode("utf-8"))
        consumed += len(raw)
        lines_done += text.count("\n")
    outfile.flush()


def _run_transliterate(argv: list) -> int:
    args = _build_main_parser().parse_args(argv)
    try:
        rs = _load_rules(args.rules)
    except (RuleError, OSError, UnicodeDecodeError) as exc:
        print(f"translit: {exc}", file=sys.stderr)
        return EXIT_RULES
    cfg = _config_from_args(args)

    infile = outfile = None
    try:
        try:
            infile = sys.stdin.buffer if args.input == "-" else open(args.input, "rb")
            outfile = sys.stdout.buffer if args.output == "-" else open(args.output, "wb")
        except OSError as exc:
            print(f"translit: {exc}", file=sys.stderr)
            return EXIT_INPUT
        try:
            _stream(infile, outfile, rs, cfg, args.strict)
        except InvalidInputBytes as exc:
            print(f"translit: {exc}", file=sys.stderr)
            return EXIT_INPUT
        except UnmatchedCharacter as exc:
            print(
                f"translit: no rule matches {exc.char!r} at {exc.line}:{exc.column}",
                file=sys.stderr,
            )
            return EXIT_STRICT
    finally:
        if infile is not None and infile is not sys.stdin.buffer:
            infile.close()
        if outfile is not None and outfile is not sys.stdout.buffer:
            outfile.close()
    return EXIT_OK


def _run_check(argv: list) -> int:
    args = _build_check_parser().parse_args(argv)
    try:
        rs = _load_rules(args.rules)
    except (RuleError, OSError, UnicodeDecodeError) as exc:
        print(f"translit: {exc}", file=sys.stderr)
        return EXIT_RULES
    cfg = _config_from_args(args)
    corpus = args.corpus if args.corpus is not None else seed_corpus_path()
    try:
        report = check_corpus(corpus, rs, cfg)
    except (OSError, UnicodeDecodeError, MalformedPairLine) as exc:
        print(f"translit: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for line, latin, expected, actual in report.failures:
        print(f"line {line}: {latin!r} -> {actual!r} (expected {expected!r})")
    print(f"check: {report.passed}/{report.total} pairs passed")
    return EXIT_CHECK_FAILED if report.failures else EXIT_OK


def run(argv: Optional[list] = None) -> int:
    """CLI entry point, returning the exit status."""
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    if argv and argv[0] == "check":
        return _run_check(argv[1:])
    return _run_transliterate(argv)


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
