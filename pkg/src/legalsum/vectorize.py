"""Sentence-level tf-idf.

Each sentence of a case is one "document" of the idf statistic: ``N`` is the
sentence count and ``df`` the number of sentences containing a term. The
weight of term ``i`` in sentence ``j`` is ``count(i, j) * log(N / df_i)`` with
raw counts and no smoothing. Terms present in every sentence get weight 0 and
are not stored.
"""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from legalsum.errors import EmptyDocumentError
from legalsum.preprocess import Document


@dataclass(frozen=True)
class Term:
    term_id: int
    df: int


@dataclass(frozen=True)
class SparseVector:
    """Sorted ``(term_id, weight)`` pairs with strictly positive weights."""

    entries: tuple[tuple[int, float], ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def total(self) -> float:
        return math.fsum(w for _, w in self.entries)


@dataclass(frozen=True)
class TfIdfModel:
    vocabulary: dict[str, Term]
    n_sentences: int
    matrix: sp.csr_matrix = field(repr=False)
    total_weight: float
    log_base: float = math.e

    @cached_property
    def vectors(self) -> list[SparseVector]:
        m = self.matrix
        return [
            SparseVector(tuple(zip(m.indices[a:b].tolist(), m.data[a:b].tolist())))
            for a, b in zip(m.indptr[:-1], m.indptr[1:])
        ]

    @cached_property
    def sentence_totals(self) -> np.ndarray:
        """Sum of stored weights per sentence."""
        m = self.matrix
        return np.array([math.fsum(m.data[a:b]) for a, b in zip(m.indptr[:-1], m.indptr[1:])])

    @property
    def dimension(self) -> int:
        return len(self.vocabulary)

    def to_json(self) -> str:
        terms = sorted(self.vocabulary.items(), key=lambda kv: kv[1].term_id)
        payload = {
            "n_sentences": self.n_sentences,
            "vocab": [{"term": t, "df": info.df} for t, info in terms],
            "vectors": [[[i, float(f"{w:.12g}")] for i, w in v.entries] for v in self.vectors],
        }
        return json.dumps(payload, ensure_ascii=False)


def build_model(doc: Document, log_base: float = math.e) -> TfIdfModel:
    """Build the tf-idf model of ``doc``; ``log_base`` only rescales the weights."""
    n = len(doc.sentences)
    if n == 0:
        raise EmptyDocumentError("cannot build a tf-idf model without sentences")

    vocabulary: dict[str, list[int]] = {}
    counts = []
    for sentence in doc.sentences:
        c = Counter(sentence.tokens)
        counts.append(c)
        for term in c:
            if term in vocabulary:
                vocabulary[term][1] += 1
            else:
                vocabulary[term] = [len(vocabulary), 1]

    log_n = math.log(n)
    idf = np.zeros(len(vocabulary))
    for term_id, df in vocabulary.values():
        # log(N/df) as a difference of logs keeps df == N exactly at zero
        idf[term_id] = (log_n - math.log(df)) / math.log(log_base)

    indptr = [0]
    indices: list[int] = []
    data: list[float] = []
    for c in counts:
        row = sorted(
            (vocabulary[t][0], tf * idf[vocabulary[t][0]]) for t, tf in c.items() if vocabulary[t][1] < n
        )
        indices.extend(i for i, _ in row)
        data.extend(w for _, w in row)
        indptr.append(len(indices))

    matrix = sp.csr_matrix(
        (np.asarray(data, dtype=float), np.asarray(indices, dtype=np.int64), np.asarray(indptr, dtype=np.int64)),
        shape=(n, len(vocabulary)),
    )
    return TfIdfModel(
        vocabulary={t: Term(i, df) for t, (i, df) in vocabulary.items()},
        n_sentences=n,
        matrix=matrix,
        total_weight=math.fsum(data),
        log_base=log_base,
    )


def vector_norm(v: SparseVector) -> float:
    return math.sqrt(math.fsum(w * w for _, w in v.entries))
