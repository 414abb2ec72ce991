"""Turn raw case-file text into a :class:`Document`.

Pipeline: ``normalize_text`` -> ``split_sentences`` -> per sentence
``tokenize`` -> ``remove_stopwords`` -> ``stem``, with ``tag_nouns`` run on the
raw sentence text. The title is tagged separately.
"""
from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from nltk.stem.porter import PorterStemmer

from legalsum.errors import EmptyDocumentError
from legalsum.tagger import tag_nouns
from legalsum.wordlists import Lexicon, default_lexicon

# Abbreviations whose trailing period never ends a sentence (compared lowercased).
SPLIT_EXCEPTIONS = frozenset(
    """
    v. vs. no. nos. pty. ltd. co. inc. corp. mr. mrs. ms. dr. hon. s. ss. p. pp. cf.
    e.g. i.e. art. arts. para. paras. reg. regs. sch. ch. cl. div. pt. vol. ch. st.
    ibid. fig. ed. eds. jan. feb. mar. apr. jun. jul. aug. sep. sept. oct. nov. dec.
    """.split()
)

# Longest bracketed span inside which terminal punctuation is ignored.
MAX_BRACKET_SPAN = 300

_ELLIPSIS_RE = re.compile(r"(?:\.{2,}|…)+")
_ACRONYM_RE = re.compile(r"(?<![\w.])((?:[^\W\d_]\.)+[^\W\d_])(?![\w])(\.?)")
_WHITESPACE_RE = re.compile(r"\s+")
_TERMINAL_RE = re.compile(r"[.!?]+[\"'”’]*")
_WORD_RE = re.compile(r"[^\W_]+(?:['\-][^\W_]+)*")
_SENTENCE_START_RE = re.compile(r"\s+[A-Z0-9]")
_FOLLOWER_RE = re.compile(r"\s+(\S)")


@dataclass(frozen=True)
class RawInput:
    text: str
    title: str = ""


@dataclass(frozen=True)
class Sentence:
    position: int
    raw: str
    tokens: tuple[str, ...]
    nouns: frozenset[str]


@dataclass(frozen=True)
class Document:
    title_nouns: frozenset[str]
    sentences: tuple[Sentence, ...]

    def __len__(self) -> int:
        return len(self.sentences)


def _clean_controls(text: str) -> str:
    return "".join(
        " " if unicodedata.category(c) == "Cc" and c not in "\n\t" else c for c in text
    )


def _merge_acronym(match: re.Match[str]) -> str:
    letters = match.group(1).replace(".", "")
    trailing = match.group(2)
    if trailing:
        # keep the period only where it plausibly ends a sentence
        if _SENTENCE_START_RE.match(match.string, match.end()):
            return letters + "."
    return letters


def normalize_text(raw: str) -> str:
    """Clean case-file text.

    Collapses runs of periods (and the ellipsis character) to one period,
    merges dotted acronyms (``F.C.A`` -> ``FCA``), blanks control characters and
    collapses all whitespace to single spaces.
    """
    text = _clean_controls(raw)
    text = _ELLIPSIS_RE.sub(".", text)
    text = _ACRONYM_RE.sub(_merge_acronym, text)
    # merging can leave a doubled period behind ("U.S.A.." style input)
    text = _ELLIPSIS_RE.sub(".", text)
    return _WHITESPACE_RE.sub(" ", text).strip()


def _bracket_spans(text: str) -> list[tuple[int, int]]:
    pairs = {")": "(", "]": "["}
    stack: list[tuple[str, int]] = []
    spans = []
    for i, c in enumerate(text):
        if c in "([":
            stack.append((c, i))
        elif c in pairs:
            # an unmatched closer pops back to its opener, dropping stray openers
            for depth in range(len(stack) - 1, -1, -1):
                if stack[depth][0] == pairs[c]:
                    start = stack[depth][1]
                    del stack[depth:]
                    if i - start <= MAX_BRACKET_SPAN:
                        spans.append((start, i))
                    break
    return spans


def _bracket_mask(text: str) -> bytearray:
    """1 at every position strictly inside a matched bracket span."""
    mask = bytearray(len(text))
    for start, end in _bracket_spans(text):
        mask[start + 1:end] = b"\x01" * (end - start - 1)
    return mask


def _is_exception(text: str, punct_start: int) -> bool:
    head = text[max(0, punct_start - 40):punct_start]
    if not head or head[-1].isspace():
        return False
    word = head.split()[-1].lstrip("([\"'“‘").lower()
    return word + "." in SPLIT_EXCEPTIONS


def split_sentences(normalized: str) -> list[tuple[int, str]]:
    """Split normalized text into ``(position, sentence)`` pairs.

    A split happens after ``.``, ``!`` or ``?`` (plus any closing quotes) when
    followed by whitespace and then an uppercase letter or digit. Periods that
    end a known abbreviation, and punctuation inside short bracketed spans, do
    not split.
    """
    text = normalized
    inside = _bracket_mask(text)
    pieces = []
    start = 0
    for m in _TERMINAL_RE.finditer(text):
        end = m.end()
        follower = _FOLLOWER_RE.match(text, end)
        if follower is None:
            continue
        nxt = follower.group(1)
        if not (nxt.isupper() or nxt.isdigit()):
            continue
        if inside[m.start()]:
            continue
        if m.group().startswith(".") and len(m.group().rstrip("\"'”’")) == 1 and _is_exception(text, m.start()):
            continue
        piece = text[start:end].strip()
        if piece:
            pieces.append(piece)
        start = end
    tail = text[start:].strip()
    if tail:
        pieces.append(tail)
    if not pieces:
        raise EmptyDocumentError("no sentence found in input text")
    return list(enumerate(pieces))


def tokenize(sentence_text: str) -> list[str]:
    """Lowercased alphanumeric runs; word-internal hyphens and apostrophes are kept."""
    return [m.group().lower() for m in _WORD_RE.finditer(sentence_text.replace("’", "'"))]


def remove_stopwords(tokens: Iterable[str], stopwords: frozenset[str] | None = None) -> list[str]:
    stop = default_lexicon().stopwords if stopwords is None else stopwords
    return [t for t in tokens if t not in stop]


_STEMMER = PorterStemmer()


@lru_cache(maxsize=1 << 16)
def stem(token: str) -> str:
    """Porter stem of a lowercased token; possessive ``'s`` is dropped first."""
    word = token[:-2] if token.endswith("'s") else token
    word = word.rstrip("'") or token
    return _STEMMER.stem(word) or word


def preprocess_document(raw: RawInput, lexicon: Lexicon | None = None) -> Document:
    lex = lexicon or default_lexicon()
    sentences = []
    for position, text in split_sentences(normalize_text(raw.text)):
        tokens = tuple(stem(t) for t in remove_stopwords(tokenize(text), lex.stopwords))
        sentences.append(Sentence(position, text, tokens, tag_nouns(text, lex)))
    return Document(title_nouns=tag_nouns(normalize_text(raw.title), lex), sentences=tuple(sentences))
