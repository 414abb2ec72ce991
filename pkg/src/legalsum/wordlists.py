"""Loading of the embedded word lists (stopwords, tagger lexicon).

Files hold one token per line, UTF-8, with ``#`` starting a comment. The
shipped lists live in ``legalsum/data``; pass a path to any of the loaders to
override them.
"""
from __future__ import annotations

from functools import lru_cache
from importlib import resources
from os import PathLike
from pathlib import Path

StrPath = str | PathLike[str]


def parse_wordlist(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            words.add(line)
    return frozenset(words)


def read_wordlist(path: StrPath) -> frozenset[str]:
    return parse_wordlist(Path(path).read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def _packaged(name: str) -> frozenset[str]:
    return parse_wordlist(resources.files("legalsum").joinpath("data", name).read_text(encoding="utf-8"))


def load_stopwords(path: StrPath | None = None) -> frozenset[str]:
    return _packaged("stopwords.txt") if path is None else read_wordlist(path)


def load_non_nouns(path: StrPath | None = None) -> frozenset[str]:
    return _packaged("non_nouns.txt") if path is None else read_wordlist(path)


def load_nouns(path: StrPath | None = None) -> frozenset[str]:
    return _packaged("nouns.txt") if path is None else read_wordlist(path)


class Lexicon:
    """The word lists consumed by preprocessing and noun tagging."""

    __slots__ = ("stopwords", "non_nouns", "nouns")

    def __init__(
        self,
        stopwords: frozenset[str] | None = None,
        non_nouns: frozenset[str] | None = None,
        nouns: frozenset[str] | None = None,
    ) -> None:
        self.stopwords = load_stopwords() if stopwords is None else frozenset(stopwords)
        self.non_nouns = load_non_nouns() if non_nouns is None else frozenset(non_nouns)
        self.nouns = load_nouns() if nouns is None else frozenset(nouns)

    @classmethod
    def from_files(
        cls,
        stopwords: StrPath | None = None,
        non_nouns: StrPath | None = None,
        nouns: StrPath | None = None,
    ) -> "Lexicon":
        return cls(load_stopwords(stopwords), load_non_nouns(non_nouns), load_nouns(nouns))

    def __repr__(self) -> str:
        return (
            f"Lexicon(stopwords={len(self.stopwords)}, non_nouns={len(self.non_nouns)}, "
            f"nouns={len(self.nouns)})"
        )


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    return Lexicon()
