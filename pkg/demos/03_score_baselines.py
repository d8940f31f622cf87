"""Chance baselines: what does a score mean when nothing is learned?

Scoring two independent random partitions of the same 1000 points exposes
each measure's baseline. A measure with a stable, low baseline lets a
single reported value be read at face value; a baseline that climbs with
the cluster count K rewards over-partitioning.

ARI is chance-corrected to 0 by construction. The J-score baseline
settles near 0.07 once clusters get small, while RI, NMI, V-measure and
1-NVI keep climbing across the whole range.

Command-line equivalent:

    jscore sweep baseline --n 1000 --k-min 2 --k-max 30 --reps 150 --seed 7
"""

from jscore import SweepConfig, run_baseline_sweep

config = SweepConfig(
    n_points=1000,
    n_true_classes=1,
    k_range=(2, 30),
    repetitions=150,
    generator="random",
    seed=7,
)
result = run_baseline_sweep(config)

shown = [2, 4, 6, 8, 12, 16, 20, 25, 30]
print("mean score between two random partitions, by cluster count K:")
print("  K " + "".join(f"{m:>8s}" for m in config.measures))
for i, k in enumerate(result.ks):
    if k in shown:
        print(f"{k:4d}" + "".join(f"{result.means[m][i]:8.4f}" for m in config.measures))

print()
print("J stabilizes while the information/pair measures keep rising;")
print("ARI stays pinned at zero by design.")
