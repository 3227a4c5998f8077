"""Shared helpers for the test suite."""

from skewrsk.biwords import MatrixBar
from skewrsk.partitions import Partition
from skewrsk.tableaux import GeneralizedSkewShape, random_sst


def random_mbar(rng, n=3, max_entries=5, w_lo=0, w_hi=3):
    """Random square weighted matrix with weights in [w_lo, w_hi]."""
    support = {}
    for _ in range(rng.randint(1, max_entries)):
        key = (rng.randint(1, n), rng.randint(1, n), rng.randint(w_lo, w_hi))
        support[key] = support.get(key, 0) + 1
    return MatrixBar(n, n, support)


def random_classical_pair(rng, n=3, max_cols=4, max_rows=3):
    """Random same-shape classical SST pair by direct random filling."""
    while True:
        la = Partition(
            sorted((rng.randint(0, max_cols) for _ in range(max_rows)), reverse=True)
        )
        if la.size == 0:
            continue
        rho = Partition(
            sorted((rng.randint(0, la.part(i + 1)) for i in range(len(la))), reverse=True)
        )
        try:
            shape = GeneralizedSkewShape.from_partitions(la, rho)
        except ValueError:
            continue
        if shape.size == 0:
            continue
        P = random_sst(shape, n, rng)
        Q = random_sst(shape, n, rng)
        if P is not None and Q is not None:
            return P, Q


def random_mixed_pair(rng, n=4, m=3, max_cols=4, max_rows=3):
    """(P, Q) sharing the inner profile but with independent outer shapes."""
    while True:
        bounds = sorted((rng.randint(0, max_cols) for _ in range(max_rows)), reverse=True)
        rho = Partition(bounds)
        shapes = []
        for _ in range(2):
            extra = [rng.randint(rho.part(i + 1), max_cols + 1) for i in range(max_rows)]
            outer = Partition(sorted(extra, reverse=True))
            try:
                shapes.append(GeneralizedSkewShape.from_partitions(outer, rho))
            except ValueError:
                break
        if len(shapes) < 2 or shapes[0].size == 0 or shapes[1].size == 0:
            continue
        P = random_sst(shapes[0], n, rng)
        Q = random_sst(shapes[1], m, rng)
        if P is not None and Q is not None:
            return P, Q
