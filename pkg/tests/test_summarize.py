import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import make_doc
from legalsum.cluster import Clustering, KMeansConfig
from legalsum.preprocess import RawInput, Sentence
from legalsum.summarize import (
    RankedSentence,
    allocate,
    extract_summary,
    rank_clusters,
    run_pipeline,
    sentence_tfidf_score,
    summarize_document,
    title_similarity_score,
)
from legalsum.vectorize import build_model


def fixed_clustering(assignments):
    a = np.asarray(assignments)
    k = int(a.max()) + 1
    return Clustering(k=k, assignments=a, centroids=np.zeros((k, 1)), inertia=0.0, iterations=1)


def ranked_from_scores(clusters):
    """``clusters``: list of lists of (position, score) pairs."""
    out = []
    for c, members in enumerate(clusters):
        group = [RankedSentence(p, c, s, 0.0) for p, s in members]
        out.append(sorted(group, key=lambda r: r.sort_key))
    return out


def doc_of(n):
    return make_doc([[f"t{i}"] for i in range(n)])


# --- sentence scores -------------------------------------------------------

def test_tfidf_score_three_sentence_fixture(three_sentence_doc):
    model = build_model(three_sentence_doc)
    # weights: 2 ln1.5 | ln1.5 | 2 ln1.5, total 5 ln1.5
    assert sentence_tfidf_score(0, model) == pytest.approx(2 * math.log(1.5) / (5 * math.log(1.5)), abs=1e-9)
    assert sentence_tfidf_score(0, model) == pytest.approx(0.8109302162 / (5 * 0.4054651081), abs=1e-9)
    assert sentence_tfidf_score(1, model) == pytest.approx(0.2, abs=1e-9)
    assert sentence_tfidf_score(2, model) == pytest.approx(0.4, abs=1e-9)


def test_tfidf_score_only_one_weighted_sentence():
    model = build_model(make_doc([["rare", "x"], ["x"], ["x"]]))
    assert [sentence_tfidf_score(i, model) for i in range(3)] == [1.0, 0.0, 0.0]


def test_tfidf_score_zero_total():
    assert sentence_tfidf_score(0, build_model(make_doc([["court"]]))) == 0.0


@pytest.mark.parametrize(
    "nouns, title, expected",
    [
        ({"news"}, set(), 0.0),
        ({"news", "court"}, {"rush", "news", "ltd"}, 1 * 0.1 / 3),
        ({"rush", "news", "ltd", "court"}, {"rush", "news", "ltd"}, 0.1),
        ({"court"}, {"rush"}, 0.0),
    ],
)
def test_title_similarity(nouns, title, expected):
    s = Sentence(0, "x", (), frozenset(nouns))
    assert title_similarity_score(s, frozenset(title)) == pytest.approx(expected, abs=1e-12)


# --- ranking ---------------------------------------------------------------

def test_rank_clusters_matches_brute_force_sort():
    tokens = [["a", "b", "c"], ["a"], ["b", "d", "d"], ["e"], ["a", "e", "f"]]
    nouns = [{"rush"}, {"rush", "news"}, set(), {"news"}, {"ltd"}]
    doc = make_doc(tokens, nouns, title_nouns={"rush", "news", "ltd"})
    model = build_model(doc)
    clustering = fixed_clustering([0, 0, 1, 1, 0])
    ranked = rank_clusters(doc, model, clustering)

    # hand formulas: weights count * ln(5/df); df a=3 b=2 c=1 d=1 e=2 f=1
    ln = math.log
    w = [ln(5 / 3) + ln(5 / 2) + ln(5), ln(5 / 3), ln(5 / 2) + 2 * ln(5), ln(5 / 2), ln(5 / 3) + ln(5 / 2) + ln(5)]
    total = sum(w)
    title = [1, 2, 0, 1, 1]
    score = {i: w[i] / total + title[i] * 0.1 / 3 for i in range(5)}
    for c, group in enumerate(ranked):
        members = [i for i in range(5) if clustering.assignments[i] == c]
        expected = sorted(members, key=lambda i: (-score[i], i))
        assert [r.position for r in group] == expected
        for r in group:
            assert r.rank_score == pytest.approx(score[r.position], abs=1e-9)
            assert r.rank_score == r.tfidf_score + r.title_score
            assert 0 <= r.tfidf_score <= 1


def test_rank_single_member_cluster():
    doc = make_doc([["a"], ["b"]])
    ranked = rank_clusters(doc, build_model(doc), fixed_clustering([0, 1]))
    assert [[r.position for r in g] for g in ranked] == [[0], [1]]


def test_rank_tie_goes_to_earlier_position():
    doc = make_doc([["x", "a"], ["x", "b"], ["x", "a", "b"]])
    ranked = rank_clusters(doc, build_model(doc), fixed_clustering([0, 0, 0]))
    # sentences 0 and 1 carry identical weight ln(3/2)
    assert [r.position for r in ranked[0]][1:] == [0, 1]


# --- extraction ------------------------------------------------------------

def test_extract_k1_is_plain_top_n():
    ranked = ranked_from_scores([[(0, 0.1), (1, 0.5), (2, 0.3), (3, 0.9), (4, 0.2)]])
    summary = extract_summary(doc_of(5), ranked, 3)
    assert summary.selected_positions == (1, 2, 3)


def test_extract_saturation():
    ranked = ranked_from_scores([[(0, 0.1), (2, 0.5)], [(1, 0.3)]])
    summary = extract_summary(doc_of(3), ranked, 10)
    assert summary.selected_positions == (0, 1, 2)
    assert summary.sentences == ("Sentence 0.", "Sentence 1.", "Sentence 2.")


def test_extract_quota_with_small_cluster():
    # sizes 4/4/1, target 6: base quota 2 each, cluster 2 gives its single
    # sentence, the freed slot goes to the best next candidate (0.7 in cluster 1)
    ranked = ranked_from_scores([
        [(0, 0.9), (1, 0.8), (2, 0.6), (3, 0.1)],
        [(4, 0.95), (5, 0.75), (6, 0.7), (7, 0.2)],
        [(8, 0.05)],
    ])
    summary = extract_summary(doc_of(9), ranked, 6)
    assert summary.selected_positions == (0, 1, 4, 5, 6, 8)
    assert summary.per_cluster_quota == 2


def test_extract_remainder_one_per_cluster():
    # target 5 over 2 clusters: quota 2 each, one remainder slot to the better next candidate
    ranked = ranked_from_scores([
        [(0, 0.9), (1, 0.8), (2, 0.3)],
        [(3, 0.5), (4, 0.4), (5, 0.35)],
    ])
    assert extract_summary(doc_of(6), ranked, 5).selected_positions == (0, 1, 3, 4, 5)


def test_extract_remainder_capped_at_one_extra_per_cluster():
    # target 4 over 3 clusters: quota 1, remainder 1 -> cluster 0 gets 2 at most
    ranked = ranked_from_scores([
        [(0, 0.9), (1, 0.8), (2, 0.7)],
        [(3, 0.1), (4, 0.05)],
        [(5, 0.2)],
    ])
    assert extract_summary(doc_of(6), ranked, 4).selected_positions == (0, 1, 3, 5)


def test_extract_rejects_non_positive_target():
    with pytest.raises(ValueError):
        extract_summary(doc_of(2), ranked_from_scores([[(0, 0.1), (1, 0.2)]]), 0)


cluster_shapes = st.lists(st.lists(st.floats(0, 1), min_size=1, max_size=8), min_size=1, max_size=6)


def _ranked_from_shape(shape):
    pos = 0
    clusters = []
    for scores in shape:
        clusters.append([(pos + i, s) for i, s in enumerate(scores)])
        pos += len(scores)
    return ranked_from_scores(clusters), pos


@settings(max_examples=200)
@given(cluster_shapes, st.integers(1, 60))
def test_extract_contracts(shape, target):
    ranked, n = _ranked_from_shape(shape)
    summary = extract_summary(doc_of(n), ranked, target)
    positions = summary.selected_positions
    assert len(positions) == min(target, n)
    assert all(a < b for a, b in zip(positions, positions[1:]))
    # within each cluster the chosen sentences are its top-ranked prefix
    for group in ranked:
        chosen = [r.position for r in group if r.position in positions]
        assert chosen == [r.position for r in group[: len(chosen)]]


@settings(max_examples=200)
@given(st.integers(1, 6), st.integers(1, 40), st.data())
def test_quota_law(k, target, data):
    size = math.ceil(target / k)
    shape = [data.draw(st.lists(st.floats(0, 1), min_size=size, max_size=size + 3)) for _ in range(k)]
    ranked, n = _ranked_from_shape(shape)
    picked = allocate(ranked, target)
    per_cluster = [sum(1 for r in picked if r.cluster == c) for c in range(k)]
    assert sum(per_cluster) == target
    assert all(c in (target // k, target // k + 1) for c in per_cluster)


@settings(max_examples=100)
@given(st.lists(st.floats(0, 0.5), min_size=2, max_size=8), st.data())
def test_title_match_never_lowers_rank(scores, data):
    i = data.draw(st.integers(0, len(scores) - 1))
    before = sorted(
        [RankedSentence(p, 0, s, 0.0) for p, s in enumerate(scores)], key=lambda r: r.sort_key
    )
    bumped = sorted(
        [RankedSentence(p, 0, s, 0.1 / 3 if p == i else 0.0) for p, s in enumerate(scores)],
        key=lambda r: r.sort_key,
    )
    rank_before = [r.position for r in before].index(i)
    rank_after = [r.position for r in bumped].index(i)
    assert rank_after <= rank_before


def test_title_match_never_lowers_rank_through_pipeline():
    tokens = [["a", "b"], ["c", "d"], ["e"], ["a", "f"]]
    base = make_doc(tokens, [set(), set(), set(), set()], title_nouns={"rush"})
    more = make_doc(tokens, [set(), set(), {"rush"}, set()], title_nouns={"rush"})
    clustering = fixed_clustering([0, 0, 0, 0])
    r0 = [r.position for r in rank_clusters(base, build_model(base), clustering)[0]]
    r1 = [r.position for r in rank_clusters(more, build_model(more), clustering)[0]]
    assert r1.index(2) <= r0.index(2)


# --- pipeline --------------------------------------------------------------

def test_single_sentence_input():
    summary = summarize_document(RawInput("Only one sentence here.", "Title"), KMeansConfig(), 5)
    assert summary.sentences == ("Only one sentence here.",)
    assert summary.to_text() == "Only one sentence here.\n"


def test_pipeline_deterministic():
    text = " ".join(f"Sentence number {w} talks about topic {w % 3} and costs." for w in range(30))
    raw = RawInput(text, "Topic costs")
    a = summarize_document(raw, KMeansConfig(seed=7), 5)
    b = summarize_document(raw, KMeansConfig(seed=7), 5)
    assert a.to_text() == b.to_text() and a.to_json() == b.to_json()


def planted_case():
    """40 sentences over two topics; sentences 7, 15 (topic A) and 24, 33 (topic B) are planted."""
    rng = np.random.default_rng(5)
    topic_a = ["contract", "breach", "payment", "invoice", "supplier", "delivery"]
    topic_b = ["article", "newspaper", "reputation", "publication", "editor", "headline"]
    planted_words = {
        7: ["Rush", "contract", "breach", "payment", "arbitration", "indemnity", "warranty"],
        15: ["Rush", "invoice", "supplier", "liquidated", "guarantee", "novation", "delivery"],
        24: ["Nationwide", "article", "reputation", "imputation", "malice", "retraction", "editor"],
        33: ["Nationwide", "newspaper", "headline", "innuendo", "apology", "publication", "defamatory"],
    }
    sentences = []
    for i in range(40):
        if i in planted_words:
            words = planted_words[i]
        else:
            vocab = topic_a if i < 20 else topic_b
            words = list(rng.choice(vocab, size=3, replace=False))
        sentences.append("The " + " ".join(words) + ".")
    return RawInput(" ".join(sentences), "Rush v Nationwide"), sorted(planted_words)


def test_planted_sentences_selected_at_k2():
    raw, planted = planted_case()
    result = run_pipeline(raw, KMeansConfig(k=2, seed=42), 4)
    assert result.clustering.k == 2
    # the two topics separate into the two clusters
    assignments = result.clustering.assignments
    assert len(set(assignments[:20])) == 1 and len(set(assignments[20:])) == 1
    assert list(result.summary.selected_positions) == planted


def test_log_base_does_not_change_summary():
    raw, _ = planted_case()
    a = summarize_document(raw, KMeansConfig(seed=3), 6)
    b = summarize_document(raw, KMeansConfig(seed=3), 6, log_base=10)
    assert a.to_text() == b.to_text()
    assert a.selected_positions == b.selected_positions


def test_summary_json_shape():
    import json

    raw, planted = planted_case()
    payload = json.loads(summarize_document(raw, KMeansConfig(k=2), 4).to_json())
    assert payload["positions"] == planted
    assert len(payload["sentences"]) == 4
    assert {tuple(sorted(s)) for s in payload["scores"]} == {("position", "tfidf_score", "title_score")}


def test_float_noise_does_not_reorder_equal_scores():
    a = RankedSentence(position=0, cluster=0, tfidf_score=0.1 + 0.2, title_score=0.0)
    b = RankedSentence(position=1, cluster=0, tfidf_score=0.3, title_score=0.0)
    assert a.rank_score != b.rank_score
    assert sorted([b, a], key=lambda r: r.sort_key) == [a, b]
