"""Independent naive reimplementation of the J-score for oracle tests.

Plain dictionaries and loops over raw label lists; deliberately shares no
code (and no contingency table) with the library.
"""


def naive_j(truth_labels, hypo_labels):
    n = len(truth_labels)
    assert len(hypo_labels) == n and n > 0
    classes = {}
    clusters = {}
    for i, (t, k) in enumerate(zip(truth_labels, hypo_labels)):
        classes.setdefault(t, set()).add(i)
        clusters.setdefault(k, set()).add(i)

    def jaccard(a, b):
        return len(a & b) / len(a | b)

    r = 0.0
    for members in classes.values():
        best = max(jaccard(members, c) for c in clusters.values())
        r += len(members) / n * best
    p = 0.0
    for members in clusters.values():
        best = max(jaccard(members, c) for c in classes.values())
        p += len(members) / n * best
    if r + p == 0:
        return 0.0
    return 2 * r * p / (r + p)
