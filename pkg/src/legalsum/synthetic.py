"""Synthetic case files with planted key sentences.

A generated case has a title naming the parties, a number of topics with
their own pseudo-word vocabularies, and per topic a few *planted* sentences
that mention the parties and the topic's rare key terms. The reference summary
restates each planted sentence's key content in fresh word order, the way a
headnote paraphrases the judgment.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from legalsum.wordlists import load_stopwords

_ONSETS = ("b", "c", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z", "br", "dr", "gr", "tr", "st")
_VOWELS = ("a", "e", "i", "o", "u", "ai", "ou")
_FILLER = (
    "court", "appeal", "evidence", "party", "claim", "judgment", "witness", "matter", "order", "costs",
    "defamation", "publication", "article", "trial", "damages", "hearing", "respondent", "applicant",
)


@dataclass(frozen=True)
class SyntheticCase:
    title: str
    text: str
    reference: str
    planted: tuple[int, ...]
    n_sentences: int


def pseudo_words(count: int, rng: np.random.Generator) -> list[str]:
    """``count`` distinct lowercase pseudo-words of two to four syllables."""
    words: set[str] = set()
    out = []
    while len(out) < count:
        n_syl = int(rng.integers(2, 5))
        w = "".join(_ONSETS[rng.integers(len(_ONSETS))] + _VOWELS[rng.integers(len(_VOWELS))] for _ in range(n_syl))
        if w not in words:
            words.add(w)
            out.append(w)
    return out


def _sentence(words: list[str]) -> str:
    return " ".join([words[0].capitalize()] + words[1:]) + "."


def synthetic_case(
    n_sentences: int,
    seed: int = 0,
    n_topics: int | None = None,
    vocab_size: int | None = None,
    planted_per_topic: int = 2,
) -> SyntheticCase:
    rng = np.random.default_rng(seed)
    n_topics = n_topics or max(2, min(8, n_sentences // 15))
    vocab_size = vocab_size or max(300, 2 * n_sentences)
    stop = sorted(w for w in load_stopwords() if len(w) > 2 and "'" not in w)

    names = [w.capitalize() for w in pseudo_words(4, rng)]
    title = f"{names[0]} v {names[1]} {names[2]} Pty Ltd"

    vocab = pseudo_words(vocab_size + 6 * n_topics, rng)
    key_terms = [vocab[vocab_size + 6 * t : vocab_size + 6 * (t + 1)] for t in range(n_topics)]
    topic_vocab = np.array_split(np.array(vocab[:vocab_size]), n_topics)
    zipf = [1.0 / np.arange(1, len(v) + 1) for v in topic_vocab]
    zipf = [z / z.sum() for z in zipf]

    n_planted = min(planted_per_topic * n_topics, n_sentences)
    planted = sorted(rng.choice(n_sentences, size=n_planted, replace=False).tolist())
    planted_topic = {pos: i % n_topics for i, pos in enumerate(planted)}

    sentences = []
    reference = []
    for pos in range(n_sentences):
        if pos in planted_topic:
            t = planted_topic[pos]
            keys = list(rng.choice(key_terms[t], size=4, replace=False))
            parties = [names[0].lower(), names[1].lower()]
            content = keys + parties + list(rng.choice(topic_vocab[t], size=4, p=zipf[t]))
            words = content + list(rng.choice(stop, size=5))
            rng.shuffle(words)
            words.append(keys[0])
            sentences.append(_sentence([str(w) for w in words]))
            restated = keys + parties + list(rng.choice(stop, size=3)) + [str(rng.choice(_FILLER))]
            rng.shuffle(restated)
            reference.append(_sentence([str(w) for w in restated]))
        else:
            t = int(rng.integers(n_topics))
            length = int(rng.integers(6, 20))
            n_content = max(2, length // 2)
            words = list(rng.choice(topic_vocab[t], size=n_content, p=zipf[t]))
            words += list(rng.choice(_FILLER, size=int(rng.integers(0, 3))))
            words += list(rng.choice(stop, size=length - n_content))
            rng.shuffle(words)
            # end on a content word so no abbreviation rule blocks the split
            words.append(str(rng.choice(topic_vocab[t], p=zipf[t])))
            sentences.append(_sentence([str(w) for w in words]))

    text = title + "\n" + " ".join(sentences) + "\n"
    # the title line has no final period, so it merges into sentence 0 and positions hold
    return SyntheticCase(title, text, " ".join(reference), tuple(planted), n_sentences)
