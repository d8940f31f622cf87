"""Which measures reward guessing the right number of clusters?

We fix a 1000-point truth with 5 equal classes, derive split/merge
hypotheses for every cluster count K from 1 to 20, and average each
measure over 300 repetitions. A measure useful for picking K should peak
at the true count. The J-score does; most others drift toward more,
smaller clusters.

A full-scale run (K up to 50, thousands of repetitions, also with 10
classes) is what the acceptance suite checks; this demo keeps the same
structure at a size that finishes in seconds. The same sweep is available
from the command line:

    jscore sweep inference --n 1000 --classes 5 --k-min 1 --k-max 20 \
        --reps 300 --seed 7
"""

from jscore import SweepConfig, run_inference_sweep

config = SweepConfig(
    n_points=1000,
    n_true_classes=5,
    k_range=(1, 20),
    repetitions=300,
    seed=7,
)
result = run_inference_sweep(config)

print("mean score by requested cluster count K (truth has 5 classes):")
header = "  K " + "".join(f"{m:>8s}" for m in config.measures)
print(header)
for i, k in enumerate(result.ks):
    row = f"{k:4d}" + "".join(f"{result.means[m][i]:8.4f}" for m in config.measures)
    marker = "  <- true K" if k == 5 else ""
    print(row + marker)

print()
print("inferred class count (argmax of each mean curve):")
for m in config.measures:
    verdict = "correct" if result.inferred_k[m] == 5 else "overestimates"
    print(f"  {m:6s} -> K = {result.inferred_k[m]:2d}  ({verdict})")
