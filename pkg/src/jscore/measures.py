"""Reference clustering-accuracy measures over a shared contingency table.

Seven comparison measures accompany the J-score: H-score and F-score
(unidirectional set matching), Rand index and adjusted Rand index (pair
counting), and NMI, V-measure, VI and NVI (information theoretic). All are
computed natively from the contingency counts. A naive O(N^2) pair
enumerator is included as an independent test oracle for the pair-counting
path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matching import BidirectionalMatching, j_score
from .partition import ContingencyTable, Labeling, build_contingency

__all__ = [
    "PairCounts",
    "EntropyStats",
    "ScoreReport",
    "h_score",
    "f_score",
    "pair_counts",
    "pair_counting_scores",
    "entropy_stats",
    "information_scores",
    "brute_force_pair_oracle",
    "score_table",
    "score_labelings",
]


@dataclass(frozen=True)
class PairCounts:
    """Classification of all point pairs by co-grouping in each partition."""

    together_both: int
    together_truth_only: int
    together_hypo_only: int
    separate_both: int
    total_pairs: int


@dataclass(frozen=True)
class EntropyStats:
    """Plug-in entropies (nats) of the two marginals and their joint."""

    h_truth: float
    h_hypo: float
    h_joint: float
    mutual_info: float


@dataclass(frozen=True)
class ScoreReport:
    """All accuracy measures for one truth/hypothesis pair.

    ``j``, ``f_score``, ``ri``, ``nmi`` and ``v_measure`` lie in [0, 1]
    with 1 best; ``h_score`` lies in [0, 1] with 0 best; ``ari`` is at most
    1 and can be negative; ``vi`` is a distance in nats; ``nvi`` is a
    normalized distance in [0, 1]. The bidirectional matching is retained
    for diagnosis.
    """

    j: float
    h_score: float
    f_score: float
    ri: float
    ari: float
    nmi: float
    v_measure: float
    vi: float
    nvi: float
    recall_sum: float
    precision_sum: float
    matching: BidirectionalMatching


def h_score(table: ContingencyTable) -> float:
    """Fraction of points not covered by each class's best-matched cluster.

    Each class independently matches the cluster sharing the most points
    with it; the same cluster may serve several classes. Lower is better;
    0 means every class is fully covered.
    """
    return 1.0 - float(table.counts.max(axis=1).sum()) / table.total


def f_score(table: ContingencyTable) -> float:
    """Class-size-weighted best F1 over clusters.

    F1 of a class/cluster pair is ``2n / (class_size + cluster_size)``;
    each class takes its best cluster and contributes proportionally to
    its size.
    """
    f1 = 2.0 * table.counts / (table.row_sums[:, None] + table.col_sums[None, :])
    return float(np.dot(table.row_sums / table.total, f1.max(axis=1)))


def _comb2(x: np.ndarray) -> np.ndarray:
    return x * (x - 1) // 2


def pair_counts(table: ContingencyTable) -> PairCounts:
    """Pair classification derived from contingency counts (comb identities).

    Raises
    ------
    ValueError
        If the table covers fewer than two points.
    """
    n = table.total
    if n < 2:
        raise ValueError("pair counting undefined")
    together_both = int(_comb2(table.counts).sum())
    same_truth = int(_comb2(table.row_sums).sum())
    same_hypo = int(_comb2(table.col_sums).sum())
    total = n * (n - 1) // 2
    return PairCounts(
        together_both=together_both,
        together_truth_only=same_truth - together_both,
        together_hypo_only=same_hypo - together_both,
        separate_both=total - same_truth - same_hypo + together_both,
        total_pairs=total,
    )


def pair_counting_scores(table: ContingencyTable) -> tuple[float, float]:
    """Rand index and adjusted Rand index.

    RI is the fraction of pairs grouped consistently in both partitions.
    ARI subtracts the permutation-model expectation and rescales so random
    agreement sits at 0; a degenerate adjustment denominator (both sides
    all-singletons or all-one-cluster) yields 0.
    """
    pc = pair_counts(table)
    ri = (pc.together_both + pc.separate_both) / pc.total_pairs
    sa = pc.together_both + pc.together_truth_only
    sb = pc.together_both + pc.together_hypo_only
    # exact integer arithmetic; both sides scaled by 2 * total_pairs
    numer = 2 * (pc.total_pairs * pc.together_both - sa * sb)
    denom = pc.total_pairs * (sa + sb) - 2 * sa * sb
    ari = numer / denom if denom != 0 else 0.0
    return ri, ari


def entropy_stats(table: ContingencyTable) -> EntropyStats:
    """Marginal, joint, and mutual information of the plug-in distribution.

    Probabilities are maximum-likelihood cell frequencies with the 0 log 0
    = 0 convention; all entropies are in nats.
    """
    n = table.total
    pt = table.row_sums / n
    pk = table.col_sums / n
    h_truth = float(-(pt * np.log(pt)).sum())
    h_hypo = float(-(pk * np.log(pk)).sum())
    joint = table.counts[table.counts > 0] / n
    h_joint = float(-(joint * np.log(joint)).sum())
    return EntropyStats(
        h_truth=h_truth,
        h_hypo=h_hypo,
        h_joint=h_joint,
        mutual_info=h_truth + h_hypo - h_joint,
    )


def information_scores(table: ContingencyTable) -> tuple[float, float, float, float]:
    """NMI, V-measure, VI, and NVI from the shared entropy statistics.

    NMI normalizes mutual information by the larger of the two marginal
    entropies (the default convention of the widely used R implementation
    this package is checked against); V-measure normalizes by the
    arithmetic mean (equivalently the harmonic mean of homogeneity and
    completeness). VI is the entropy distance ``h_truth + h_hypo - 2 I``
    and NVI its normalization by the joint entropy. Degenerate
    single-group marginals follow the usual toolkit conventions: two
    trivial partitions are identical (NMI = V = 1), one trivial side
    shares no information (NMI = V = 0).
    """
    es = entropy_stats(table)
    if es.h_truth == 0.0 and es.h_hypo == 0.0:
        nmi = 1.0
        v = 1.0
    elif es.h_truth == 0.0 or es.h_hypo == 0.0:
        nmi = 0.0
        v = 0.0
    else:
        nmi = es.mutual_info / max(es.h_truth, es.h_hypo)
        v = 2.0 * es.mutual_info / (es.h_truth + es.h_hypo)
    vi = es.h_truth + es.h_hypo - 2.0 * es.mutual_info
    nvi = vi / es.h_joint if es.h_joint > 0 else 0.0
    return nmi, v, vi, nvi


def brute_force_pair_oracle(truth: Labeling, hypo: Labeling) -> PairCounts:
    """Classify every point pair by direct enumeration (test oracle).

    Deliberately shares no code with :func:`pair_counts`: plain label
    comparisons over all N(N-1)/2 pairs. Guarded to test-scale inputs.

    Raises
    ------
    ValueError
        If N < 2, N > 500, or the labelings differ in length.
    """
    a = truth.labels()
    b = hypo.labels()
    if len(a) != len(b):
        raise ValueError("labelings cover different point sets")
    n = len(a)
    if n < 2:
        raise ValueError("pair counting undefined")
    if n > 500:
        raise ValueError("brute-force oracle limited to 500 points")
    both = truth_only = hypo_only = neither = 0
    for i in range(n - 1):
        for j in range(i + 1, n):
            same_a = a[i] == a[j]
            same_b = b[i] == b[j]
            if same_a and same_b:
                both += 1
            elif same_a:
                truth_only += 1
            elif same_b:
                hypo_only += 1
            else:
                neither += 1
    return PairCounts(
        together_both=both,
        together_truth_only=truth_only,
        together_hypo_only=hypo_only,
        separate_both=neither,
        total_pairs=n * (n - 1) // 2,
    )


def score_table(table: ContingencyTable) -> ScoreReport:
    """All measures for one contingency table."""
    js = j_score(table)
    ri, ari = pair_counting_scores(table)
    nmi, v, vi, nvi = information_scores(table)
    return ScoreReport(
        j=js.j,
        h_score=h_score(table),
        f_score=f_score(table),
        ri=ri,
        ari=ari,
        nmi=nmi,
        v_measure=v,
        vi=vi,
        nvi=nvi,
        recall_sum=js.recall_sum,
        precision_sum=js.precision_sum,
        matching=js.matching,
    )


def score_labelings(truth: Labeling, hypo: Labeling) -> ScoreReport:
    """All measures for a truth/hypothesis labeling pair."""
    return score_table(build_contingency(truth, hypo))
