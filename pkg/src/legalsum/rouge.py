"""ROUGE-1, ROUGE-2, ROUGE-L and ROUGE-W.

Scores are computed over whole token streams (no sentence-level union LCS).
Tokens come from the summarizer's tokenizer with stopwords kept; stemming is
optional.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from legalsum.errors import InvalidAlphaError
from legalsum.preprocess import stem, tokenize

VARIANTS = ("ROUGE-1", "ROUGE-2", "ROUGE-L", "ROUGE-W")
DEFAULT_ALPHA = 1.2


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f_measure: float

    @classmethod
    def from_pr(cls, precision: float, recall: float) -> "RougeScore":
        f = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
        return cls(precision, recall, f)

    def as_percent(self) -> tuple[float, float, float]:
        return (100 * self.precision, 100 * self.recall, 100 * self.f_measure)


ZERO = RougeScore(0.0, 0.0, 0.0)


def eval_tokens(text: str, stem_tokens: bool = False) -> list[str]:
    tokens = tokenize(text)
    return [stem(t) for t in tokens] if stem_tokens else tokens


def ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int = 1) -> RougeScore:
    if n not in (1, 2):
        raise ValueError(f"ROUGE-N is provided for n in (1, 2), got {n}")
    cand, ref = ngrams(candidate, n), ngrams(reference, n)
    overlap = sum((cand & ref).values())
    c_total, r_total = sum(cand.values()), sum(ref.values())
    precision = overlap / c_total if c_total else 0.0
    recall = overlap / r_total if r_total else 0.0
    return RougeScore.from_pr(precision, recall)


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    """Length of the longest common subsequence, bit-parallel over ``a``.

    One integer bit per position of ``a``; each token of ``b`` updates the
    whole row with a handful of big-integer operations.
    """
    if not a or not b:
        return 0
    masks: dict[str, int] = {}
    for i, tok in enumerate(a):
        masks[tok] = masks.get(tok, 0) | (1 << i)
    full = (1 << len(a)) - 1
    v = full
    for tok in b:
        m = masks.get(tok)
        if m is None:
            continue
        u = v & m
        v = ((v + u) | (v - u)) & full
    return len(a) - bin(v).count("1")


def rouge_l(candidate: Sequence[str], reference: Sequence[str]) -> RougeScore:
    if not candidate or not reference:
        return ZERO
    lcs = lcs_length(reference, candidate)
    return RougeScore.from_pr(lcs / len(candidate), lcs / len(reference))


def wlcs(a: Sequence[str], b: Sequence[str], alpha: float = DEFAULT_ALPHA) -> float:
    """Weighted LCS score with run weight ``f(k) = k ** alpha``.

    Standard recurrence: a match extending a run of length ``r`` adds
    ``f(r + 1) - f(r)``; on a mismatch the better of the upper and left cells
    is carried (the left one on ties) and the run resets. Evaluated one
    anti-diagonal at a time so each step is a vector operation.
    """
    m, n = len(a), len(b)
    if m == 0 or n == 0:
        return 0.0
    vocab: dict[str, int] = {}
    ai = np.array([vocab.setdefault(t, len(vocab)) for t in a], dtype=np.int64)
    bi = np.array([vocab.get(t, -1) for t in b], dtype=np.int64)
    # run-extension increments, indexed by current run length
    inc = np.array([(r + 1) ** alpha - r**alpha for r in range(min(m, n) + 1)])

    # diagonals indexed by i (row); cell (i, d - i)
    c_prev2 = np.zeros(m + 1)
    c_prev = np.zeros(m + 1)
    w_prev2 = np.zeros(m + 1, dtype=np.int64)
    w_prev = np.zeros(m + 1, dtype=np.int64)
    for d in range(2, m + n + 1):
        lo, hi = max(1, d - n), min(m, d - 1)
        c_cur = np.zeros(m + 1)
        w_cur = np.zeros(m + 1, dtype=np.int64)
        if lo <= hi:
            i = np.arange(lo, hi + 1)
            match = ai[i - 1] == bi[d - i - 1]
            diag_c, diag_w = c_prev2[i - 1], w_prev2[i - 1]
            up, left = c_prev[i - 1], c_prev[i]
            c_cur[lo : hi + 1] = np.where(match, diag_c + inc[diag_w], np.where(up > left, up, left))
            w_cur[lo : hi + 1] = np.where(match, diag_w + 1, 0)
        c_prev2, c_prev = c_prev, c_cur
        w_prev2, w_prev = w_prev, w_cur
    return float(c_prev[m])


def rouge_w(candidate: Sequence[str], reference: Sequence[str], alpha: float = DEFAULT_ALPHA) -> RougeScore:
    if alpha <= 1:
        raise InvalidAlphaError(f"ROUGE-W needs alpha > 1, got {alpha}")
    if not candidate or not reference:
        return ZERO
    score = wlcs(reference, candidate, alpha)
    inv = 1.0 / alpha
    recall = (score / len(reference) ** alpha) ** inv
    precision = (score / len(candidate) ** alpha) ** inv
    # f^-1(f(m)/f(m)) can land an ulp above 1
    return RougeScore.from_pr(min(precision, 1.0), min(recall, 1.0))


def evaluate_all(
    candidate_text: str,
    reference_text: str,
    alpha: float = DEFAULT_ALPHA,
    stem_tokens: bool = False,
) -> dict[str, RougeScore]:
    if alpha <= 1:
        raise InvalidAlphaError(f"ROUGE-W needs alpha > 1, got {alpha}")
    cand = eval_tokens(candidate_text, stem_tokens)
    ref = eval_tokens(reference_text, stem_tokens)
    return {
        "ROUGE-1": rouge_n(cand, ref, 1),
        "ROUGE-2": rouge_n(cand, ref, 2),
        "ROUGE-L": rouge_l(cand, ref),
        "ROUGE-W": rouge_w(cand, ref, alpha),
    }

