"""Shared test oracles: naive, unoptimized reimplementations of the match
policy used to cross-check the engine's indexed fast path."""

from hawar2sorani.rules import Context, RuleSet


def naive_lookup(rs: RuleSet, word: str, pos: int, is_word_initial: bool, prev_is_vowel: bool):
    """Scan the full rule list and pick the best applicable rule by the
    documented (length, specificity, table order) key. Returns the Rule."""
    candidates = []
    for order, rule in enumerate(rs.rules):
        pattern = rule.pattern
        if word[pos : pos + len(pattern)] != pattern:
            continue
        if rule.context is Context.WORD_INITIAL and not is_word_initial:
            continue
        if rule.context is Context.AFTER_VOWEL and not prev_is_vowel:
            continue
        if rule.context is Context.WORD_FINAL and pos + len(pattern) != len(word):
            continue
        specificity = 1 if rule.context is Context.ANY else 0
        candidates.append((-len(pattern), specificity, order, rule))
    if not candidates:
        return None
    return min(candidates)[3]


def naive_transliterate_word(word: str, rs: RuleSet) -> str:
    """Greedy parse driven entirely by naive_lookup; expects folded input."""
    exception = rs.exceptions.get(word)
    if exception is not None:
        return exception
    out = []
    pos = 0
    while pos < len(word):
        rule = naive_lookup(
            rs,
            word,
            pos,
            is_word_initial=pos == 0,
            prev_is_vowel=pos > 0 and word[pos - 1] in rs.latin_vowels,
        )
        if rule is None:
            out.append(word[pos])
            pos += 1
        else:
            out.append(rule.output)
            pos += len(rule.pattern)
    return "".join(out)
