"""Bidirectional set matching and the J-score.

Matching runs independently in both directions: every class is matched to
its most similar cluster, and every cluster to its most similar class, so
no cluster can go unmatched. The J-score is the harmonic mean of the two
size-weighted sums of best-match Jaccard indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .partition import ContingencyTable, SimilarityMatrix, jaccard_matrix

__all__ = [
    "MatchAssignment",
    "BidirectionalMatching",
    "JScoreReport",
    "match_sets",
    "j_score",
]


@dataclass(frozen=True)
class MatchAssignment:
    """One reference group matched to its most similar counterpart."""

    reference_group: str
    matched_group: str
    similarity: float


@dataclass(frozen=True)
class BidirectionalMatching:
    """Best matches in both directions: one entry per class and per cluster."""

    class_to_cluster: tuple[MatchAssignment, ...]
    cluster_to_class: tuple[MatchAssignment, ...]


@dataclass(frozen=True)
class JScoreReport:
    """J-score with its two weighted sums and the matching that produced it.

    ``recall_sum`` aggregates class-referenced best matches, weighted by
    class size; ``precision_sum`` aggregates cluster-referenced best
    matches, weighted by cluster size; ``j`` is their harmonic mean.
    """

    matching: BidirectionalMatching
    recall_sum: float
    precision_sum: float
    j: float


def _best_matches(
    values: np.ndarray,
    reference_names: tuple[str, ...],
    candidate_names: tuple[str, ...],
) -> tuple[MatchAssignment, ...]:
    """Row-wise argmax with ties broken toward the smallest candidate name.

    When candidate names are already sorted, argmax's first-occurrence rule
    coincides with the name tie-break, so the plain vectorized argmax is
    used; tables built from labelings always hit this path.
    """
    best = values.max(axis=1)
    if all(candidate_names[i] <= candidate_names[i + 1] for i in range(len(candidate_names) - 1)):
        picks = values.argmax(axis=1)
    else:
        picks = []
        for i in range(values.shape[0]):
            tied = np.flatnonzero(values[i] == best[i])
            picks.append(min(tied, key=lambda idx: candidate_names[idx]))
    return tuple(
        MatchAssignment(name, candidate_names[int(j)], float(b))
        for name, j, b in zip(reference_names, picks, best)
    )


def match_sets(sim: SimilarityMatrix) -> BidirectionalMatching:
    """Bidirectional best-match assignment over an arbitrary similarity table.

    Accepts any finite similarity values, not only Jaccard indices; this is
    the generic utility for plugging in other pairwise scores (e.g. F1 or
    centroid affinities). Ties are broken toward the lexicographically
    smallest group name so results are deterministic.

    Raises
    ------
    ValueError
        If any entry is NaN or infinite.
    """
    values = sim.values
    if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
        raise ValueError("similarity matrix must have at least one row and one column")
    if not np.isfinite(values).all():
        raise ValueError("invalid similarity value")
    return BidirectionalMatching(
        class_to_cluster=_best_matches(values, sim.row_names, sim.col_names),
        cluster_to_class=_best_matches(values.T, sim.col_names, sim.row_names),
    )


def j_score(table: ContingencyTable) -> JScoreReport:
    """Compute the J-score of a hypothesis against the truth.

    Every class contributes its best-match Jaccard index weighted by class
    size (summed into ``recall_sum``); every cluster contributes likewise
    into ``precision_sum``. J is their harmonic mean, and 0 by convention
    in the unreachable case where both sums vanish.
    """
    sim = jaccard_matrix(table)
    matching = match_sets(sim)
    n = table.total
    # dot integer sizes first, divide once: keeps the perfect-match case exact
    recall = float(np.dot(table.row_sums, sim.values.max(axis=1)) / n)
    precision = float(np.dot(table.col_sums, sim.values.max(axis=0)) / n)
    if recall == precision:
        j = recall  # harmonic mean of equal values, without rounding wobble
    elif recall + precision > 0:
        j = 2.0 * recall * precision / (recall + precision)
    else:
        j = 0.0
    return JScoreReport(matching=matching, recall_sum=recall, precision_sum=precision, j=j)
