"""Partition labelings, contingency tables, and Jaccard similarity.

Everything downstream (the J-score engine, the reference measures, the
simulation sweeps) consumes the types built here. A partition is a plain
sequence of group identifiers, one per data point; two labelings over the
same points reduce to a single contingency table of shared-member counts,
which is a sufficient statistic for every measure in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Labeling",
    "ContingencyTable",
    "SimilarityMatrix",
    "build_labeling",
    "build_contingency",
    "jaccard_matrix",
]


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Labeling:
    """Assignment of N data points to named, nonempty groups.

    Attributes
    ----------
    codes : ndarray of int64, shape (n_points,)
        For each point, the index of its group in ``groups``.
    groups : tuple of str
        Distinct group identifiers in lexicographic order.
    counts : ndarray of int64, shape (n_groups,)
        Number of points in each group; always strictly positive.
    """

    codes: np.ndarray
    groups: tuple[str, ...]
    counts: np.ndarray

    def __post_init__(self) -> None:
        _freeze(self.codes)
        _freeze(self.counts)

    @property
    def n_points(self) -> int:
        return self.codes.shape[0]

    @property
    def n_groups(self) -> int:
        return len(self.groups)

    def labels(self) -> list[str]:
        """Raw label sequence, one identifier per point."""
        return [self.groups[c] for c in self.codes]


@dataclass(frozen=True)
class ContingencyTable:
    """Shared-member counts between a truth labeling and a hypothesis.

    ``counts[t, k]`` is the number of points assigned to class
    ``row_names[t]`` and cluster ``col_names[k]``. Row and column sums are
    the class and cluster sizes; all are strictly positive because empty
    groups are unrepresentable.
    """

    counts: np.ndarray
    row_names: tuple[str, ...]
    col_names: tuple[str, ...]
    row_sums: np.ndarray
    col_sums: np.ndarray
    total: int

    def __post_init__(self) -> None:
        _freeze(self.counts)
        _freeze(self.row_sums)
        _freeze(self.col_sums)

    @property
    def n_rows(self) -> int:
        return self.counts.shape[0]

    @property
    def n_cols(self) -> int:
        return self.counts.shape[1]


@dataclass(frozen=True)
class SimilarityMatrix:
    """Pairwise class/cluster similarity values.

    Jaccard similarities are produced by :func:`jaccard_matrix`, but the
    matching utilities accept arbitrary finite scores (correlation,
    F1, negated distances, ...).
    """

    values: np.ndarray
    row_names: tuple[str, ...]
    col_names: tuple[str, ...]

    def __post_init__(self) -> None:
        _freeze(self.values)


def build_labeling(raw_labels: Sequence[str] | Iterable[str]) -> Labeling:
    """Build a :class:`Labeling` from a sequence of group identifiers.

    Groups are enumerated in lexicographic order of their identifiers so
    that repeated runs produce identical tables regardless of input order.

    Raises
    ------
    ValueError
        If the sequence is empty.
    """
    arr = np.asarray(list(raw_labels) if not isinstance(raw_labels, np.ndarray) else raw_labels, dtype=str)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("empty labeling")
    groups, codes, counts = np.unique(arr, return_inverse=True, return_counts=True)
    return Labeling(
        codes=codes.astype(np.int64),
        groups=tuple(str(g) for g in groups),
        counts=counts.astype(np.int64),
    )


def labeling_from_codes(codes: np.ndarray, groups: Sequence[str], counts: np.ndarray) -> Labeling:
    """Internal fast path: wrap pre-validated integer codes as a Labeling.

    ``groups`` must already be lexicographically sorted and every group
    nonempty; generators in the simulation module guarantee this.
    """
    return Labeling(
        codes=np.ascontiguousarray(codes, dtype=np.int64),
        groups=tuple(groups),
        counts=np.ascontiguousarray(counts, dtype=np.int64),
    )


def build_contingency(truth: Labeling, hypo: Labeling) -> ContingencyTable:
    """Tabulate shared-member counts between two labelings.

    Points correspond positionally: index i in ``truth`` and index i in
    ``hypo`` are the same data point.

    Raises
    ------
    ValueError
        If the labelings have different lengths.
    """
    if truth.n_points != hypo.n_points:
        raise ValueError("labelings cover different point sets")
    t = truth.n_groups
    k = hypo.n_groups
    flat = truth.codes * k + hypo.codes
    counts = np.bincount(flat, minlength=t * k).reshape(t, k).astype(np.int64)
    return ContingencyTable(
        counts=counts,
        row_names=truth.groups,
        col_names=hypo.groups,
        row_sums=truth.counts.copy(),
        col_sums=hypo.counts.copy(),
        total=truth.n_points,
    )


def jaccard_matrix(table: ContingencyTable) -> SimilarityMatrix:
    """Jaccard index of every class/cluster pair.

    Entry (t, k) is ``|V_t & V_k| / |V_t | V_k|``, computed from counts as
    ``n / (row_sum + col_sum - n)``. The denominator is positive because
    rows and columns are nonempty.
    """
    n = table.counts
    union = table.row_sums[:, None] + table.col_sums[None, :] - n
    values = n / union
    return SimilarityMatrix(values=values, row_names=table.row_names, col_names=table.col_names)
