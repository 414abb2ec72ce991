"""Rule-based noun tagger.

Only the noun / not-noun distinction matters downstream, so the tagger is a
short cascade of rules rather than a full part-of-speech model:

1. tokens in the stopword or non-noun lexicon, and tokens without letters, are
   not nouns;
2. a capitalized token that does not start the sentence is a proper noun;
3. tokens in the known-noun list are nouns;
4. noun-forming suffixes (-tion, -ment, -ness, -ity, -er, -or, ...) mark nouns,
   verb/adverb/adjective suffixes (-ed, -ing, -ly, -ous, ...) mark non-nouns;
5. a plural ``-s`` form is judged by its singular stem;
6. anything else defaults to noun.
"""
from __future__ import annotations

import re

from legalsum.wordlists import Lexicon, default_lexicon

_WORD_RE = re.compile(r"[^\W_]+(?:['\-][^\W_]+)*")

NOUN_SUFFIXES = (
    "tion", "sion", "ment", "ness", "ity", "ship", "ism", "ist", "ance", "ence", "er", "or", "ee",
)
NON_NOUN_SUFFIXES = ("ed", "ing", "ly", "ous", "ful", "able", "ible", "less")


def _has_suffix(word: str, suffixes: tuple[str, ...]) -> bool:
    # the remaining stem must be at least three characters long
    return any(word.endswith(s) and len(word) >= len(s) + 3 for s in suffixes)


def _base(word: str) -> str:
    if word.endswith("'s"):
        word = word[:-2]
    word = word.rstrip("'")
    return word.rsplit("-", 1)[-1]


def _by_form(word: str, lex: Lexicon, depth: int = 0) -> bool:
    if word in lex.stopwords or word in lex.non_nouns:
        return False
    if word in lex.nouns:
        return True
    if _has_suffix(word, NOUN_SUFFIXES):
        return True
    if _has_suffix(word, NON_NOUN_SUFFIXES):
        return False
    if depth == 0 and len(word) > 3 and word.endswith("s") and not word.endswith("ss"):
        singular = word[:-1]
        if word.endswith("es") and word[:-2].endswith(("s", "x", "z", "ch", "sh")):
            singular = word[:-2]
        return _by_form(singular, lex, depth + 1)
    return True


def is_noun(surface: str, sentence_initial: bool, lexicon: Lexicon | None = None) -> bool:
    """Classify one surface token (original casing) as noun or not."""
    lex = lexicon or default_lexicon()
    word = surface.lower()
    base = _base(word)
    if not any(c.isalpha() for c in base):
        return False
    if word in lex.stopwords or base in lex.stopwords or base in lex.non_nouns:
        return False
    if not sentence_initial and surface[0].isupper():
        return True
    return _by_form(base, lex)


def tag_nouns(sentence_text: str, lexicon: Lexicon | None = None) -> frozenset[str]:
    """Return the lowercased surface tokens of ``sentence_text`` tagged as nouns."""
    text = sentence_text.replace("’", "'")
    nouns = set()
    for i, match in enumerate(_WORD_RE.finditer(text)):
        surface = match.group()
        if is_noun(surface, sentence_initial=i == 0, lexicon=lexicon):
            nouns.add(surface.lower())
    return frozenset(nouns)
