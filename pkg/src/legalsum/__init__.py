"""Extractive summarization of legal case files with a built-in ROUGE evaluator."""
from legalsum.cluster import Clustering, KMeansConfig, elbow_k, kmeans, select_k
from legalsum.errors import EmptyDocumentError, InvalidAlphaError, InvalidKError
from legalsum.preprocess import Document, RawInput, Sentence, preprocess_document
from legalsum.rouge import RougeScore, evaluate_all, rouge_l, rouge_n, rouge_w
from legalsum.summarize import (
    PipelineResult,
    RankedSentence,
    Summary,
    extract_summary,
    rank_clusters,
    run_pipeline,
    summarize_document,
)
from legalsum.vectorize import SparseVector, TfIdfModel, build_model, vector_norm

__all__ = [
    "Clustering", "Document", "EmptyDocumentError", "InvalidAlphaError", "InvalidKError",
    "KMeansConfig", "RankedSentence", "RawInput", "RougeScore", "Sentence", "SparseVector",
    "Summary", "TfIdfModel", "build_model", "elbow_k", "evaluate_all", "extract_summary",
    "kmeans", "preprocess_document", "rank_clusters", "rouge_l", "rouge_n", "rouge_w",
    "select_k", "summarize_document", "run_pipeline", "PipelineResult", "vector_norm",
]
