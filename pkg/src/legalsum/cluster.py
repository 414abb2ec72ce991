"""Lloyd's k-means over sparse sentence vectors.

Points stay sparse (CSR), centroids are dense. Squared distances use the
expansion ``|x|^2 - 2 x.c + |c|^2``. Seeding is k-means++ from an explicit
seed, ties in assignment go to the lowest cluster id, and an empty cluster
takes the point farthest from its own centroid.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from legalsum.errors import InvalidKError
from legalsum.vectorize import TfIdfModel

DISTANCE_DECIMALS = 12

@dataclass(frozen=True)
class KMeansConfig:
    k: int = 0  # 0 = choose automatically
    seed: int = 42
    max_iterations: int = 300
    tolerance: float = 1e-6
    normalize: bool = True

    def __post_init__(self) -> None:
        if self.k < 0:
            raise InvalidKError(f"k must be >= 0 (0 = auto), got {self.k}")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.tolerance < 0:
            raise ValueError("tolerance must be >= 0")


@dataclass(frozen=True)
class Clustering:
    k: int
    assignments: np.ndarray
    centroids: np.ndarray = field(repr=False)
    inertia: float
    iterations: int
    converged: bool = True
    # inertia after each assign + update step
    history: tuple[float, ...] = ()

    def members(self, cluster: int) -> np.ndarray:
        return np.flatnonzero(self.assignments == cluster)

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": self.k,
                "iterations": self.iterations,
                "inertia": self.inertia,
                "assignments": self.assignments.tolist(),
            }
        )


def as_points(data: TfIdfModel | sp.spmatrix | np.ndarray, normalize: bool = True) -> sp.csr_matrix:
    """CSR float64 matrix of the points to cluster, optionally L2-normalized per row."""
    matrix = data.matrix if isinstance(data, TfIdfModel) else data
    X = sp.csr_matrix(matrix, dtype=np.float64, copy=True)
    if normalize:
        norms = np.sqrt(np.asarray(X.multiply(X).sum(axis=1)).ravel())
        scale = np.divide(1.0, norms, out=np.zeros_like(norms), where=norms > 0)
        X = sp.csr_matrix(sp.diags(scale) @ X)
    X.sort_indices()
    return X


def _row_sq_norms(X: sp.csr_matrix) -> np.ndarray:
    return np.asarray(X.multiply(X).sum(axis=1)).ravel()


def sq_distances(X: sp.csr_matrix, centroids: np.ndarray, x_sq: np.ndarray | None = None) -> np.ndarray:
    """``(n, k)`` squared Euclidean distances, clipped at zero."""
    if x_sq is None:
        x_sq = _row_sq_norms(X)
    cross = np.asarray(X @ centroids.T)
    d2 = x_sq[:, None] - 2.0 * cross + np.einsum("ij,ij->i", centroids, centroids)[None, :]
    np.maximum(d2, 0.0, out=d2)
    return d2


def _means(X: sp.csr_matrix, labels: np.ndarray, k: int) -> np.ndarray:
    n = X.shape[0]
    indicator = sp.csr_matrix((np.ones(n), (labels, np.arange(n))), shape=(k, n))
    sums = (indicator @ X).toarray()
    counts = np.bincount(labels, minlength=k).astype(float)
    return sums / np.maximum(counts, 1.0)[:, None]


def _inertia(X: sp.csr_matrix, labels: np.ndarray, centroids: np.ndarray, x_sq: np.ndarray) -> float:
    d2 = sq_distances(X, centroids, x_sq)
    return math.fsum(d2[np.arange(len(labels)), labels])


def kmeans_plus_plus(X: sp.csr_matrix, k: int, rng: np.random.Generator) -> np.ndarray:
    n = X.shape[0]
    x_sq = _row_sq_norms(X)
    chosen = [int(rng.integers(n))]
    closest = sq_distances(X, X[chosen[0]].toarray(), x_sq)[:, 0]
    for _ in range(1, k):
        total = closest.sum()
        if total > 0:
            idx = int(rng.choice(n, p=closest / total))
        else:
            # every point coincides with a chosen centre
            remaining = np.setdiff1d(np.arange(n), chosen)
            idx = int(rng.choice(remaining))
        chosen.append(idx)
        closest = np.minimum(closest, sq_distances(X, X[idx].toarray(), x_sq)[:, 0])
    return X[chosen].toarray()


def _repair_empty(
    X: sp.csr_matrix, labels: np.ndarray, centroids: np.ndarray, d2: np.ndarray
) -> None:
    k = centroids.shape[0]
    counts = np.bincount(labels, minlength=k)
    own = d2[np.arange(len(labels)), labels].copy()
    for empty in np.flatnonzero(counts == 0):
        donors = counts[labels] >= 2
        if not donors.any():
            break
        candidates = np.where(donors, own, -1.0)
        idx = int(np.argmax(candidates))
        counts[labels[idx]] -= 1
        labels[idx] = empty
        counts[empty] = 1
        own[idx] = 0.0
        centroids[empty] = X[idx].toarray()[0]


def assign(X: sp.csr_matrix, centroids: np.ndarray, x_sq: np.ndarray | None = None) -> np.ndarray:
    """One assignment step: nearest centroid (ties to the lowest id), then empty-cluster repair.

    Distances are rounded to ``DISTANCE_DECIMALS`` places first, otherwise
    last-bit noise from normalization decides between equidistant centroids.

    ``centroids`` rows of repaired clusters are overwritten with the moved point.
    """
    # compare at a fixed resolution so ties that are exact on paper stay ties
    d2 = np.round(sq_distances(X, centroids, x_sq), DISTANCE_DECIMALS)
    labels = np.argmin(d2, axis=1)
    _repair_empty(X, labels, centroids, d2)
    return labels


def kmeans(
    data: TfIdfModel | sp.spmatrix | np.ndarray,
    config: KMeansConfig,
    init: np.ndarray | None = None,
) -> Clustering:
    """Cluster the rows of ``data`` into ``config.k`` groups.

    ``init`` injects explicit starting centroids (in the normalized space when
    ``config.normalize`` is set) instead of k-means++ seeding. If every point
    is the zero vector the result has a single cluster regardless of ``k``.
    """
    X = as_points(data, config.normalize)
    n, dim = X.shape
    k = config.k if init is None else init.shape[0]
    if k < 1 or k > n:
        raise InvalidKError(f"k must lie in [1, {n}], got {k}")

    if X.nnz == 0 or not np.any(X.data):
        return Clustering(1, np.zeros(n, dtype=np.int64), np.zeros((1, dim)), 0.0, 0, True, (0.0,))

    x_sq = _row_sq_norms(X)
    if init is None:
        centroids = kmeans_plus_plus(X, k, np.random.default_rng(config.seed))
    else:
        centroids = np.array(init, dtype=np.float64, copy=True)

    labels: np.ndarray | None = None
    history: list[float] = []
    converged = False
    iterations = 0
    for iterations in range(1, config.max_iterations + 1):
        new_labels = assign(X, centroids, x_sq)
        stable = labels is not None and np.array_equal(new_labels, labels)
        labels = new_labels
        centroids = _means(X, labels, k)
        history.append(_inertia(X, labels, centroids, x_sq))
        if stable:
            converged = True
            break
        if len(history) >= 2:
            prev, cur = history[-2], history[-1]
            if prev - cur < config.tolerance * prev:
                break

    assert labels is not None
    return Clustering(
        k=k,
        assignments=labels,
        centroids=centroids,
        inertia=history[-1],
        iterations=iterations,
        converged=converged,
        history=tuple(history),
    )


def select_k(n_sentences: int, target_summary_sentences: int, requested_k: int | None = None) -> int:
    """Resolve the cluster count.

    An explicit request is clamped to ``[1, n_sentences]``. Otherwise
    ``round(sqrt(n / 2))``, clamped to ``[1, min(target, n)]``.
    """
    if requested_k:
        return max(1, min(requested_k, n_sentences))
    k = math.floor(math.sqrt(n_sentences / 2) + 0.5)
    return max(1, min(k, target_summary_sentences, n_sentences))


def knee(ks: list[int], inertias: list[float]) -> int:
    """The k whose point lies farthest from the chord between the first and last points.

    Ties go to the smaller k.
    """
    x0, y0, x1, y1 = ks[0], inertias[0], ks[-1], inertias[-1]
    dx, dy = x1 - x0, y1 - y0
    length = math.hypot(dx, dy)
    best_k, best_d = ks[0], -1.0
    for k, y in zip(ks, inertias):
        d = abs(dy * (k - x0) - dx * (y - y0)) / length if length > 0 else 0.0
        if d > best_d:
            best_k, best_d = k, d
    return best_k


def elbow_k(
    data: TfIdfModel | sp.spmatrix | np.ndarray,
    k_min: int,
    k_max: int,
    seed: int = 42,
    normalize: bool = True,
) -> int:
    n = data.n_sentences if isinstance(data, TfIdfModel) else data.shape[0]
    if not 1 <= k_min < k_max <= n:
        raise InvalidKError(f"need 1 <= k_min < k_max <= {n}, got [{k_min}, {k_max}]")
    ks = list(range(k_min, k_max + 1))
    inertias = [kmeans(data, KMeansConfig(k=k, seed=seed, normalize=normalize)).inertia for k in ks]
    return knee(ks, inertias)
