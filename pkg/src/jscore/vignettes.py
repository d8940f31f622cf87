"""Predetermined partition structures illustrating the matching problem.

A 100-point data set with three classes of sizes 10/30/60 is paired with
four hand-built hypotheses. Two pairs differ only by splitting a cluster
that no class matches, which leaves unidirectional measures (H-score,
F-score) unchanged while the bidirectional J-score drops; they make good
regression fixtures and demo inputs.

Layout: points 1-10 belong to class Ta, 11-40 to Tb, 41-100 to Tc.
"""

from __future__ import annotations

from .partition import Labeling, build_labeling

__all__ = [
    "three_class_truth",
    "extra_clusters_hypothesis",
    "extra_clusters_split_hypothesis",
    "mixed_pair_hypothesis",
    "mixed_pair_split_hypothesis",
    "VIGNETTES",
]

_TA, _TB, _TC = 10, 30, 60


def three_class_truth() -> Labeling:
    """Ground truth: classes Ta (10), Tb (30), Tc (60)."""
    return build_labeling(["Ta"] * _TA + ["Tb"] * _TB + ["Tc"] * _TC)


def extra_clusters_hypothesis() -> Labeling:
    """Four clusters: K1 = Ta, K2 = Tb, K3 = first 40 of Tc, K4 = last 20.

    K4 goes unmatched in the class-to-cluster direction; only the reverse
    direction credits it.
    """
    return build_labeling(["K1"] * 10 + ["K2"] * 30 + ["K3"] * 40 + ["K4"] * 20)


def extra_clusters_split_hypothesis() -> Labeling:
    """Same as :func:`extra_clusters_hypothesis` with K4 split in half.

    The split halves stay unmatched, so H-score and F-score cannot tell
    this structure from the unsplit one; J-score strictly decreases.
    """
    return build_labeling(["K1"] * 10 + ["K2"] * 30 + ["K3"] * 40 + ["K4a"] * 10 + ["K4b"] * 10)


def mixed_pair_hypothesis() -> Labeling:
    """Two clusters: K1 takes 70% of every class, K2 the remaining 30%.

    All three classes best-match K1, leaving K2 unmatched in the
    class-to-cluster direction.
    """
    labels = ["K1"] * 7 + ["K2"] * 3
    labels += ["K1"] * 21 + ["K2"] * 9
    labels += ["K1"] * 42 + ["K2"] * 18
    return build_labeling(labels)


def mixed_pair_split_hypothesis() -> Labeling:
    """Same as :func:`mixed_pair_hypothesis` with K2 split into equal halves.

    K2's members (3 from Ta, 9 from Tb, 18 from Tc, in index order) are
    dealt alternately into K2a and K2b, 15 points each, so neither half
    displaces K1 as any class's best match and H/F are again unchanged.
    """
    k2_members = ["Ta"] * 3 + ["Tb"] * 9 + ["Tc"] * 18
    halves = ["K2a" if i % 2 == 0 else "K2b" for i in range(len(k2_members))]
    labels = ["K1"] * 7 + halves[0:3]
    labels += ["K1"] * 21 + halves[3:12]
    labels += ["K1"] * 42 + halves[12:30]
    return build_labeling(labels)


VIGNETTES = {
    "truth": three_class_truth,
    "extra": extra_clusters_hypothesis,
    "extra_split": extra_clusters_split_hypothesis,
    "mixed": mixed_pair_hypothesis,
    "mixed_split": mixed_pair_split_hypothesis,
}
