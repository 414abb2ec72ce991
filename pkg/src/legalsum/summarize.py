"""Rank sentences inside clusters and extract an equal-quota summary."""
from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass, replace

from legalsum.cluster import Clustering, KMeansConfig, kmeans, select_k
from legalsum.preprocess import Document, RawInput, Sentence, preprocess_document
from legalsum.vectorize import TfIdfModel, build_model
from legalsum.wordlists import Lexicon

TITLE_WEIGHT = 0.1
# scores are ranked at this many decimals so float noise cannot reorder exact ties
SCORE_DECIMALS = 12


@dataclass(frozen=True)
class RankedSentence:
    position: int
    cluster: int
    tfidf_score: float
    title_score: float

    @property
    def rank_score(self) -> float:
        return self.tfidf_score + self.title_score

    @property
    def sort_key(self) -> tuple[float, int]:
        return (-round(self.rank_score, SCORE_DECIMALS), self.position)


@dataclass(frozen=True)
class Summary:
    selected_positions: tuple[int, ...]
    sentences: tuple[str, ...]
    per_cluster_quota: int
    scores: tuple[RankedSentence, ...] = ()

    @property
    def text(self) -> str:
        return " ".join(self.sentences)

    def to_text(self) -> str:
        return self.text + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "positions": list(self.selected_positions),
                "sentences": list(self.sentences),
                "scores": [
                    {"position": r.position, "tfidf_score": r.tfidf_score, "title_score": r.title_score}
                    for r in self.scores
                ],
            },
            ensure_ascii=False,
        )


def sentence_tfidf_score(position: int, model: TfIdfModel) -> float:
    """Share of the document's total tf-idf mass carried by one sentence (0 if there is none)."""
    if model.total_weight == 0:
        return 0.0
    return float(model.sentence_totals[position]) / model.total_weight


def title_similarity_score(sentence: Sentence, title_nouns: frozenset[str]) -> float:
    if not title_nouns:
        return 0.0
    return len(sentence.nouns & title_nouns) * TITLE_WEIGHT / len(title_nouns)


def rank_clusters(doc: Document, model: TfIdfModel, clustering: Clustering) -> list[list[RankedSentence]]:
    ranked: list[list[RankedSentence]] = [[] for _ in range(clustering.k)]
    for sentence in doc.sentences:
        cluster = int(clustering.assignments[sentence.position])
        ranked[cluster].append(
            RankedSentence(
                position=sentence.position,
                cluster=cluster,
                tfidf_score=sentence_tfidf_score(sentence.position, model),
                title_score=title_similarity_score(sentence, doc.title_nouns),
            )
        )
    for group in ranked:
        group.sort(key=lambda r: r.sort_key)
    return ranked


def allocate(ranked: list[list[RankedSentence]], target_sentences: int) -> list[RankedSentence]:
    """Pick sentences with equal per-cluster quotas.

    Every cluster first gives its top ``target // k`` sentences (or all of them
    if smaller). Leftover slots go one per cluster to the clusters whose next
    candidate scores best, and once each cluster has had its extra slot any
    remaining shortfall is filled by the same best-next-candidate rule.
    """
    k = len(ranked)
    total = sum(len(g) for g in ranked)
    target = min(target_sentences, total)
    quota = target // k
    taken = [min(quota, len(g)) for g in ranked]
    picked = [r for g, t in zip(ranked, taken) for r in g[:t]]

    remaining = target - len(picked)
    for per_cluster_cap in (1, math.inf):
        if remaining <= 0:
            break
        extra = [0] * k
        heap = [(g[taken[c]].sort_key, c) for c, g in enumerate(ranked) if taken[c] < len(g)]
        heapq.heapify(heap)
        while remaining > 0 and heap:
            _, c = heapq.heappop(heap)
            picked.append(ranked[c][taken[c]])
            taken[c] += 1
            extra[c] += 1
            remaining -= 1
            if taken[c] < len(ranked[c]) and extra[c] < per_cluster_cap:
                heapq.heappush(heap, (ranked[c][taken[c]].sort_key, c))
    return picked


def extract_summary(doc: Document, ranked: list[list[RankedSentence]], target_sentences: int) -> Summary:
    if target_sentences < 1:
        raise ValueError("target_sentences must be >= 1")
    picked = sorted(allocate(ranked, target_sentences), key=lambda r: r.position)
    return Summary(
        selected_positions=tuple(r.position for r in picked),
        sentences=tuple(doc.sentences[r.position].raw for r in picked),
        per_cluster_quota=min(target_sentences, len(doc.sentences)) // len(ranked),
        scores=tuple(picked),
    )


@dataclass(frozen=True)
class PipelineResult:
    document: Document
    model: TfIdfModel
    clustering: Clustering
    ranked: list[list[RankedSentence]]
    summary: Summary


def run_pipeline(
    raw: RawInput,
    config: KMeansConfig,
    target_sentences: int,
    lexicon: Lexicon | None = None,
    log_base: float = math.e,
    k_selector=None,
) -> PipelineResult:
    """Full pipeline, keeping every intermediate.

    ``k_selector(model, target)`` replaces the default cluster-count rule when
    ``config.k`` is 0.
    """
    doc = preprocess_document(raw, lexicon)
    model = build_model(doc, log_base)
    n = model.n_sentences
    if config.k == 0 and k_selector is not None:
        k = k_selector(model, target_sentences)
    else:
        k = select_k(n, target_sentences, config.k or None)
    clustering = kmeans(model, replace(config, k=k))
    ranked = rank_clusters(doc, model, clustering)
    return PipelineResult(doc, model, clustering, ranked, extract_summary(doc, ranked, target_sentences))


def summarize_document(
    raw: RawInput,
    config: KMeansConfig,
    target_sentences: int,
    lexicon: Lexicon | None = None,
    log_base: float = math.e,
) -> Summary:
    return run_pipeline(raw, config, target_sentences, lexicon, log_base).summary
