"""Synthetic data sets, hypothesis generators, and Monte-Carlo sweeps.

Ground truths are mixtures of well-separated Gaussians; hypothetical
partitions come from three generators: predetermined structures (see the
vignettes module), fully random partitions, and split/merge derivatives of
the truth. Sweep drivers score hypotheses across a range of cluster counts
K and aggregate per-measure mean curves, from which each measure's
"inferred" class count is read off as the argmax.

Reproducibility contract: every (K, repetition) cell draws from its own
substream derived from (seed, K, repetition), so results are identical
under any execution order or worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .measures import ScoreReport, score_table
from .partition import ContingencyTable, Labeling, labeling_from_codes

__all__ = [
    "GaussianClassSpec",
    "LabeledDataset",
    "SweepConfig",
    "SweepResult",
    "MEASURES",
    "DEFAULT_SWEEP_MEASURES",
    "generate_gaussian_dataset",
    "random_partition",
    "split_merge_partition",
    "run_inference_sweep",
    "run_baseline_sweep",
]

# Extractors from ScoreReport, keyed by sweep measure name. ``1-nvi`` is
# plotted instead of raw NVI so every curve reads "higher is better";
# ``h`` is the exception (lower is better) and is excluded by default.
MEASURES: dict[str, Callable[[ScoreReport], float]] = {
    "j": lambda r: r.j,
    "h": lambda r: r.h_score,
    "f": lambda r: r.f_score,
    "ri": lambda r: r.ri,
    "ari": lambda r: r.ari,
    "nmi": lambda r: r.nmi,
    "v": lambda r: r.v_measure,
    "1-nvi": lambda r: 1.0 - r.nvi,
}

LOWER_IS_BETTER = frozenset({"h"})

DEFAULT_SWEEP_MEASURES = ("j", "f", "v", "ri", "ari", "nmi", "1-nvi")

# Boundary perturbation defaults for split_merge_partition: local jitter
# width scale (relative to the squared local group share) and the chance
# of a full-span re-draw. See the function docstring.
JITTER_SCALE = 1.75
FULL_REDRAW_CHANCE = 0.05


@dataclass(frozen=True)
class GaussianClassSpec:
    """Mixture description: one (mean, size) pair per class, shared sigma."""

    classes: tuple[tuple[float, int], ...]
    std_dev: float = 0.05

    def __post_init__(self) -> None:
        if not self.classes:
            raise ValueError("at least one class required")
        if any(size < 1 for _, size in self.classes):
            raise ValueError("class sizes must be positive")
        if self.std_dev <= 0:
            raise ValueError("std_dev must be positive")

    @property
    def n_points(self) -> int:
        return sum(size for _, size in self.classes)


@dataclass(frozen=True)
class LabeledDataset:
    """Simulated values plus their ground-truth labeling."""

    values: np.ndarray
    truth: Labeling

    def __post_init__(self) -> None:
        self.values.flags.writeable = False


@dataclass(frozen=True)
class SweepConfig:
    """Monte-Carlo sweep parameters.

    ``k_range`` is inclusive. ``generator`` selects how hypotheses are
    produced: ``split_merge`` derives them from a fixed Gaussian truth,
    ``random`` scores pairs of independent random partitions.
    ``regenerate_truth`` redraws the truth every repetition instead of
    fixing one per scenario (split_merge only).
    """

    n_points: int
    n_true_classes: int
    k_range: tuple[int, int]
    repetitions: int
    generator: str = "split_merge"
    measures: tuple[str, ...] = DEFAULT_SWEEP_MEASURES
    seed: int = 0
    regenerate_truth: bool = False

    def __post_init__(self) -> None:
        if self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        lo, hi = self.k_range
        if not (1 <= lo <= hi <= self.n_points):
            raise ValueError("k_range must lie within [1, n_points]")
        if self.generator not in ("split_merge", "random"):
            raise ValueError(f"unknown generator: {self.generator!r}")
        unknown = [m for m in self.measures if m not in MEASURES]
        if unknown:
            raise ValueError(f"unknown measures: {', '.join(unknown)}")
        if self.generator == "split_merge" and not (1 <= self.n_true_classes <= self.n_points):
            raise ValueError("n_true_classes must lie within [1, n_points]")

    @property
    def ks(self) -> range:
        return range(self.k_range[0], self.k_range[1] + 1)


@dataclass(frozen=True)
class SweepResult:
    """Per-(measure, K) score statistics plus each measure's inferred K.

    ``means[m]`` and ``sds[m]`` are arrays aligned with ``ks``; standard
    deviations are population (ddof=0) so single-repetition cells are
    well-defined. ``inferred_k[m]`` is the K with the best mean (highest,
    or lowest for ``h``), ties going to the smallest K.
    """

    config: SweepConfig
    ks: tuple[int, ...]
    means: dict[str, np.ndarray]
    sds: dict[str, np.ndarray]
    inferred_k: dict[str, int]

    def csv_lines(self) -> list[str]:
        """Render the schema-stable CSV: data rows then argmax summary."""
        lines = ["measure,k,mean,sd,reps"]
        reps = self.config.repetitions
        for m in self.config.measures:
            for i, k in enumerate(self.ks):
                lines.append(f"{m},{k},{float(self.means[m][i])!r},{float(self.sds[m][i])!r},{reps}")
        for m in self.config.measures:
            lines.append(f"# argmax {m} {self.inferred_k[m]}")
        return lines


def _class_names(count: int) -> list[str]:
    width = len(str(count))
    return [f"c{i + 1:0{width}d}" for i in range(count)]


def generate_gaussian_dataset(spec: GaussianClassSpec, rng: np.random.Generator) -> LabeledDataset:
    """Draw one value per point, class by class, in class order.

    The numeric values are carried for realism and export; all accuracy
    measures depend only on the labels.
    """
    names = _class_names(len(spec.classes))
    sizes = np.array([size for _, size in spec.classes], dtype=np.int64)
    chunks = [rng.normal(mean, spec.std_dev, size) for (mean, _), size in zip(spec.classes, sizes)]
    codes = np.repeat(np.arange(len(names)), sizes)
    truth = labeling_from_codes(codes, names, sizes)
    return LabeledDataset(values=np.concatenate(chunks), truth=truth)


def _labeling_from_segments(seg_sizes: np.ndarray, order: np.ndarray, n: int) -> Labeling:
    """Clusters = consecutive segments of the (class-sorted) point order."""
    k = len(seg_sizes)
    sorted_labels = np.repeat(np.arange(k), seg_sizes)
    codes = np.empty(n, dtype=np.int64)
    codes[order] = sorted_labels
    return labeling_from_codes(codes, _class_names(k), seg_sizes)


def random_partition(n: int, k: int, rng: np.random.Generator) -> Labeling:
    """Random partition of n points into k nonempty clusters.

    Cluster sizes are k random integers summing to n: every cluster is
    seeded with one member and the remaining n - k points are assigned
    multinomially with equal odds, so sizes concentrate around n/k while
    no cluster can be empty. The induced ordered label list is then
    uniformly permuted over the points.

    Raises
    ------
    ValueError
        If k is outside [1, n].
    """
    if k > n:
        raise ValueError("more clusters than points")
    if k < 1:
        raise ValueError("at least one cluster required")
    sizes = 1 + rng.multinomial(n - k, np.full(k, 1.0 / k))
    order = rng.permutation(n)
    return _labeling_from_segments(sizes.astype(np.int64), order, n)


def split_merge_partition(
    truth: Labeling,
    k: int,
    rng: np.random.Generator,
    *,
    jitter_scale: float = JITTER_SCALE,
    full_redraw_chance: float = FULL_REDRAW_CHANCE,
) -> Labeling:
    """Derive a k-cluster hypothesis by splitting and merging classes.

    Points are arranged class-contiguously and the hypothesis is defined
    by cluster boundaries over that arrangement. Starting from the class
    boundaries: merging below k removes randomly chosen boundaries
    (joining neighboring classes); splitting above k inserts cuts at
    uniformly random positions. Finally every surviving boundary is
    randomly perturbed: usually a local offset whose width scales with the
    squared share of the smaller adjacent cluster (``jitter_scale``),
    occasionally (``full_redraw_chance``) a uniform re-draw between its
    neighbors.

    The perturbation keeps hypotheses at the true cluster count from being
    exact copies of the truth, the way real clustering output recovers
    classes only approximately; because neighborhoods tighten as k grows,
    the noise fades for finer partitions. With both perturbation
    parameters set to 0 the truth is reproduced exactly at k = T.

    Raises
    ------
    ValueError
        If k is outside [1, n_points].
    """
    n = truth.n_points
    if k > n:
        raise ValueError("more clusters than points")
    if k < 1:
        raise ValueError("at least one cluster required")
    t = truth.n_groups
    order = np.argsort(truth.codes, kind="stable")
    bounds = list(np.cumsum(truth.counts)[:-1])
    if k < t:
        keep = sorted(rng.choice(t - 1, size=k - 1, replace=False))
        bounds = [bounds[i] for i in keep]
    elif k > t:
        free = np.setdiff1d(np.arange(1, n), np.asarray(bounds, dtype=np.int64))
        extra = rng.choice(free, size=k - t, replace=False)
        bounds = sorted(bounds + list(extra))
    for i in range(len(bounds)):
        lo = bounds[i - 1] if i > 0 else 0
        hi = bounds[i + 1] if i + 1 < len(bounds) else n
        if rng.random() < full_redraw_chance:
            if hi - lo >= 2:
                bounds[i] = int(rng.integers(lo + 1, hi))
            continue
        gap = min(bounds[i] - lo, hi - bounds[i])
        width = jitter_scale * gap * gap / n
        if width < 1:
            continue
        moved = int(round(bounds[i] + rng.uniform(-width, width)))
        bounds[i] = max(lo + 1, min(hi - 1, moved))
    edges = np.concatenate([[0], bounds, [n]]).astype(np.int64)
    return _labeling_from_segments(np.diff(edges), order, n)


def _contingency_fast(truth: Labeling, hypo: Labeling) -> ContingencyTable:
    t = truth.n_groups
    k = hypo.n_groups
    counts = np.bincount(truth.codes * k + hypo.codes, minlength=t * k).reshape(t, k)
    return ContingencyTable(
        counts=counts,
        row_names=truth.groups,
        col_names=hypo.groups,
        row_sums=truth.counts.copy(),
        col_sums=hypo.counts.copy(),
        total=truth.n_points,
    )


def _cell_rng(seed: int, k: int, rep: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, 2, k, rep]))


def _truth_rng(seed: int, rep: int = 0) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, 1, rep]))


def _equal_class_spec(n_points: int, n_classes: int) -> GaussianClassSpec:
    """Equal class sizes (remainder spread over the first classes), means
    1..T spaced one unit apart, sigma 0.05."""
    base = n_points // n_classes
    rem = n_points % n_classes
    classes = tuple(
        (float(i + 1), base + (1 if i < rem else 0)) for i in range(n_classes)
    )
    return GaussianClassSpec(classes=classes)


def _aggregate(
    config: SweepConfig,
    per_cell: Callable[[int, int, np.random.Generator], ScoreReport],
) -> SweepResult:
    ks = tuple(config.ks)
    extractors = [(m, MEASURES[m]) for m in config.measures]
    means = {m: np.empty(len(ks)) for m in config.measures}
    sds = {m: np.empty(len(ks)) for m in config.measures}
    for ki, k in enumerate(ks):
        cells = {m: np.empty(config.repetitions) for m in config.measures}
        for rep in range(config.repetitions):
            rng = _cell_rng(config.seed, k, rep)
            try:
                report = per_cell(k, rep, rng)
            except Exception as exc:
                raise RuntimeError(f"sweep cell failed at k={k}, repetition={rep}: {exc}") from exc
            for m, extract in extractors:
                cells[m][rep] = extract(report)
        for m in config.measures:
            means[m][ki] = cells[m].mean()
            sds[m][ki] = cells[m].std()
    inferred = {}
    for m in config.measures:
        curve = -means[m] if m in LOWER_IS_BETTER else means[m]
        inferred[m] = ks[int(np.argmax(curve))]
    return SweepResult(config=config, ks=ks, means=means, sds=sds, inferred_k=inferred)


def run_inference_sweep(config: SweepConfig) -> SweepResult:
    """Score split/merge hypotheses against a Gaussian truth across K.

    One truth is generated per sweep (or per repetition when
    ``regenerate_truth`` is set); hypotheses vary by seed-derived
    substream. Peaks of the resulting mean curves indicate each measure's
    inferred class count.
    """
    if config.generator != "split_merge":
        raise ValueError("inference sweep requires the split_merge generator")
    spec = _equal_class_spec(config.n_points, config.n_true_classes)
    fixed_truth = generate_gaussian_dataset(spec, _truth_rng(config.seed)).truth

    def cell(k: int, rep: int, rng: np.random.Generator) -> ScoreReport:
        if config.regenerate_truth:
            truth = generate_gaussian_dataset(spec, _truth_rng(config.seed, rep)).truth
        else:
            truth = fixed_truth
        hypo = split_merge_partition(truth, k, rng)
        return score_table(_contingency_fast(truth, hypo))

    return _aggregate(config, cell)


def run_baseline_sweep(config: SweepConfig) -> SweepResult:
    """Score pairs of independent random partitions across K.

    The mean curves expose each measure's chance baseline: a stable, low
    baseline makes isolated score values interpretable.
    """
    if config.generator != "random":
        raise ValueError("baseline sweep requires the random generator")

    def cell(k: int, rep: int, rng: np.random.Generator) -> ScoreReport:
        first = random_partition(config.n_points, k, rng)
        second = random_partition(config.n_points, k, rng)
        return score_table(_contingency_fast(first, second))

    return _aggregate(config, cell)
