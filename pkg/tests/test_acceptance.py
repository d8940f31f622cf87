"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines; criteria 2 and 3 run Monte-Carlo sweeps and take a few minutes.
"""

import time

import numpy as np

from jscore import (
    SweepConfig,
    brute_force_pair_oracle,
    build_contingency,
    build_labeling,
    j_score,
    pair_counts,
    run_baseline_sweep,
    run_inference_sweep,
    score_labelings,
    vignettes,
)
from jscore.cli import main

from naive_reference import naive_j


def conclude(number: int, description: str, checks: list[tuple[str, bool]]) -> None:
    failed = [name for name, ok in checks if not ok]
    status = "PASS" if not failed else f"FAIL ({', '.join(failed)})"
    print(f"ACCEPTANCE {number} [{description}]: {status}")
    assert not failed, f"criterion {number} failed: {failed}"


def random_labeling(rng, n, max_groups, prefix):
    return build_labeling([f"{prefix}{i}" for i in rng.integers(0, max_groups, size=n)])


def test_criterion_1_matching_vignette_regression():
    start = time.perf_counter()
    truth = vignettes.three_class_truth()
    extra = score_labelings(truth, vignettes.extra_clusters_hypothesis())
    extra_split = score_labelings(truth, vignettes.extra_clusters_split_hypothesis())
    mixed = score_labelings(truth, vignettes.mixed_pair_hypothesis())
    mixed_split = score_labelings(truth, vignettes.mixed_pair_split_hypothesis())
    elapsed = time.perf_counter() - start
    conclude(1, "matching-problem regression", [
        ("H(extra) == 0.20", round(extra.h_score, 2) == 0.20),
        ("F(extra) == 0.88", round(extra.f_score, 2) == 0.88),
        ("J(extra) == 0.77", round(extra.j, 2) == 0.77),
        ("R internal 0.8000", round(extra.recall_sum, 4) == 0.8),
        ("P internal 0.7333", round(extra.precision_sum, 4) == 0.7333),
        ("J(extra_split) == 0.75", round(extra_split.j, 2) == 0.75),
        ("H unchanged by split", extra_split.h_score == extra.h_score),
        ("F unchanged by split", extra_split.f_score == extra.f_score),
        ("J(mixed) == 0.39", round(mixed.j, 2) == 0.39),
        ("J(mixed_split) < J(mixed)", mixed_split.j < mixed.j),
        ("H unchanged by mixed split", mixed_split.h_score == mixed.h_score),
        ("F unchanged by mixed split", mixed_split.f_score == mixed.f_score),
        ("J(mixed_split) near 0.38", abs(mixed_split.j - 0.38) <= 0.01),
        ("runtime < 1 s", elapsed < 1.0),
    ])


def test_criterion_2_class_count_inference():
    ten = run_inference_sweep(
        SweepConfig(n_points=1000, n_true_classes=10, k_range=(1, 50), repetitions=3000, seed=7)
    )
    five = run_inference_sweep(
        SweepConfig(n_points=1000, n_true_classes=5, k_range=(1, 50), repetitions=3000, seed=7)
    )
    checks = []
    for m in ("j", "f", "ari", "nmi"):
        checks.append((f"T=10 argmax {m} == 10", ten.inferred_k[m] == 10))
    for m in ("v", "ri", "1-nvi"):
        checks.append((f"T=10 argmax {m} > 10", ten.inferred_k[m] > 10))
    checks.append(("T=5 argmax j == 5", five.inferred_k["j"] == 5))
    for m in ("f", "ari", "nmi", "v", "ri", "1-nvi"):
        checks.append((f"T=5 argmax {m} > 5", five.inferred_k[m] > 5))
    conclude(2, "class-count inference peaks", checks)


def test_criterion_3_baseline_stability():
    result = run_baseline_sweep(
        SweepConfig(
            n_points=1000, n_true_classes=1, k_range=(2, 50), repetitions=200,
            generator="random", seed=7,
        )
    )
    ks = np.array(result.ks)
    j = result.means["j"]
    f = result.means["f"]
    ari = result.means["ari"]
    j_stable = j[ks >= 12]
    checks = [
        ("|mean ARI| < 0.01 at every K", bool((np.abs(ari) < 0.01).all())),
        ("mean J in [0.05, 0.11] for K >= 12", bool(((j_stable >= 0.05) & (j_stable <= 0.11)).all())),
        ("J spread < 0.03 over K in [12, 50]", float(j_stable.max() - j_stable.min()) < 0.03),
        ("mean F > mean J at every K", bool((f > j).all())),
    ]
    for m in ("ri", "nmi", "v", "1-nvi"):
        drops = np.diff(result.means[m])
        drops = drops[drops < 0]
        checks.append(
            (f"{m} nondecreasing up to noise", len(drops) <= 2 and bool((np.abs(drops) < 0.005).all()))
        )
    conclude(3, "random baseline stability", checks)


def test_criterion_4_oracle_equivalence():
    rng = np.random.default_rng(2024)
    pair_ok = True
    j_ok = True
    for _ in range(500):
        n = int(rng.integers(2, 101))
        t_raw = [f"t{i}" for i in rng.integers(0, 8, size=n)]
        k_raw = [f"k{i}" for i in rng.integers(0, 8, size=n)]
        truth = build_labeling(t_raw)
        hypo = build_labeling(k_raw)
        table = build_contingency(truth, hypo)
        if pair_counts(table) != brute_force_pair_oracle(truth, hypo):
            pair_ok = False
            break
        if abs(j_score(table).j - naive_j(t_raw, k_raw)) > 1e-12:
            j_ok = False
            break
    conclude(4, "independent oracle equivalence", [
        ("comb-identity pair counts == brute force (exact, 500 pairs)", pair_ok),
        ("engine J == naive J within 1e-12", j_ok),
    ])


def test_criterion_5_property_suite():
    rng = np.random.default_rng(555)
    symmetry_ok = True
    for _ in range(1000):
        n = int(rng.integers(1, 80))
        a = random_labeling(rng, n, int(rng.integers(1, 8)), "a")
        b = random_labeling(rng, n, int(rng.integers(1, 8)), "b")
        if j_score(build_contingency(a, b)).j != j_score(build_contingency(b, a)).j:
            symmetry_ok = False
            break

    invariance_ok = True
    fields = ["j", "h_score", "f_score", "ri", "ari", "nmi", "v_measure", "vi", "nvi"]
    for _ in range(200):
        n = int(rng.integers(2, 80))
        t_raw = [f"t{i}" for i in rng.integers(0, 6, size=n)]
        k_raw = [f"k{i}" for i in rng.integers(0, 6, size=n)]
        base = score_labelings(build_labeling(t_raw), build_labeling(k_raw))
        perm = rng.permutation(n)
        other = score_labelings(
            build_labeling([f"x{9 - int(t_raw[i][1:])}" for i in perm]),
            build_labeling([f"y{9 - int(k_raw[i][1:])}" for i in perm]),
        )
        if any(abs(getattr(base, fl) - getattr(other, fl)) > 1e-12 for fl in fields):
            invariance_ok = False
            break

    bounds_ok = True
    sandwich_ok = True
    iff_ok = True
    for _ in range(500):
        n = int(rng.integers(2, 80))
        a = random_labeling(rng, n, int(rng.integers(1, 8)), "a")
        b = random_labeling(rng, n, int(rng.integers(1, 8)), "b")
        r = score_labelings(a, b)
        if not (
            0 < r.j <= 1
            and r.ari <= 1
            and r.vi >= -1e-12
            and 0 <= r.h_score <= 1
            and 0 <= r.f_score <= 1
            and 0 <= r.ri <= 1
            and -1e-12 <= r.nmi <= 1 + 1e-12
            and -1e-12 <= r.v_measure <= 1 + 1e-12
            and -1e-12 <= r.nvi <= 1 + 1e-12
        ):
            bounds_ok = False
        if not (
            min(r.recall_sum, r.precision_sum) - 1e-12
            <= r.j
            <= max(r.recall_sum, r.precision_sum) + 1e-12
        ):
            sandwich_ok = False
        same = len(set(zip(a.codes.tolist(), b.codes.tolist()))) == a.n_groups == b.n_groups
        if (r.j == 1.0) != same:
            iff_ok = False
    # constructed identical-up-to-relabeling pairs must hit J == 1 exactly
    for _ in range(100):
        n = int(rng.integers(1, 60))
        raw = [f"g{i}" for i in rng.integers(0, 5, size=n)]
        renamed = [f"zz{9 - int(x[1:])}" for x in raw]
        if j_score(build_contingency(build_labeling(raw), build_labeling(renamed))).j != 1.0:
            iff_ok = False
            break

    conclude(5, "property suite", [
        ("J symmetric under swap (exact, 1000 pairs)", symmetry_ok),
        ("relabel/point-order invariance, all measures", invariance_ok),
        ("bounds hold on random inputs", bounds_ok),
        ("min(R,P) <= J <= max(R,P)", sandwich_ok),
        ("J == 1 iff identical up to relabeling", iff_ok),
    ])


def test_criterion_6_sweep_determinism(tmp_path, capsys):
    argv_base = [
        "sweep", "baseline", "--n", "500", "--k-min", "2", "--k-max", "20",
        "--reps", "40", "--seed", "123",
    ]
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    code_a = main(argv_base + ["--out", str(out_a)])
    code_b = main(argv_base + ["--out", str(out_b)])
    argv_inf = [
        "sweep", "inference", "--n", "400", "--classes", "4", "--k-min", "1",
        "--k-max", "12", "--reps", "40", "--seed", "321",
    ]
    out_c = tmp_path / "c.csv"
    out_d = tmp_path / "d.csv"
    code_c = main(argv_inf + ["--out", str(out_c)])
    code_d = main(argv_inf + ["--out", str(out_d)])
    conclude(6, "sweep determinism", [
        ("exit codes clean", (code_a, code_b, code_c, code_d) == (0, 0, 0, 0)),
        ("baseline reruns byte-identical", out_a.read_bytes() == out_b.read_bytes()),
        ("inference reruns byte-identical", out_c.read_bytes() == out_d.read_bytes()),
    ])
