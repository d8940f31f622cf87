"""Clustering accuracy via bidirectional Jaccard set matching.

The J-score matches every true class to its most similar cluster and every
cluster to its most similar class, then combines the two size-weighted
similarity sums into a single harmonic-mean score, so structures that
differ only by unmatched clusters are still told apart. Seven reference
measures (H-score, F-score, RI, ARI, NMI, V-measure, VI/NVI) are computed
from the same contingency table, and Monte-Carlo sweep drivers benchmark
all of them on synthetic class-recovery tasks.
"""

from .matching import (
    BidirectionalMatching,
    JScoreReport,
    MatchAssignment,
    j_score,
    match_sets,
)
from .measures import (
    EntropyStats,
    PairCounts,
    ScoreReport,
    brute_force_pair_oracle,
    entropy_stats,
    f_score,
    h_score,
    information_scores,
    pair_counting_scores,
    pair_counts,
    score_labelings,
    score_table,
)
from .partition import (
    ContingencyTable,
    Labeling,
    SimilarityMatrix,
    build_contingency,
    build_labeling,
    jaccard_matrix,
)
from .simulation import (
    DEFAULT_SWEEP_MEASURES,
    GaussianClassSpec,
    LabeledDataset,
    SweepConfig,
    SweepResult,
    generate_gaussian_dataset,
    random_partition,
    run_baseline_sweep,
    run_inference_sweep,
    split_merge_partition,
)
from . import vignettes

__version__ = "0.1.0"

__all__ = [
    "Labeling",
    "ContingencyTable",
    "SimilarityMatrix",
    "build_labeling",
    "build_contingency",
    "jaccard_matrix",
    "MatchAssignment",
    "BidirectionalMatching",
    "JScoreReport",
    "match_sets",
    "j_score",
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
    "GaussianClassSpec",
    "LabeledDataset",
    "SweepConfig",
    "SweepResult",
    "DEFAULT_SWEEP_MEASURES",
    "generate_gaussian_dataset",
    "random_partition",
    "split_merge_partition",
    "run_inference_sweep",
    "run_baseline_sweep",
    "vignettes",
    "__version__",
]
