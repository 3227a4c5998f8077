"""Longest-subsequence statistics of weighted biwords on the twisted
cylinder.

A weighted biword column (q, p, w) marks the point (q, p - n*w) of the
cylinder {1..n} x Z with the identification (j, i) ~ (j + n, i - n).  Two
families of distinguished subsequences generalize the increasing and
decreasing subsequences of classical words:

* increasing sequences, whose points all lie on one up-right lattice
  path of the cylinder, and
* localized decreasing sequences (LDS), whose points form a strictly
  down-right loop winding once around the cylinder.

The exact maxima computed here are exhaustive-search oracles meant for
small instances; the partition carved out by these statistics is
available for arbitrary inputs through the dynamics (greene_partition).
"""

from functools import lru_cache

from .biwords import MatrixBar, WeightedBiword
from .cylinder import ss_forward, weight_shift
from .engine import stabilize_forward
from .partitions import Partition

INCREASING_CAP = 12
DECREASING_CAP = 10


def _as_matrix(data):
    if isinstance(data, WeightedBiword):
        return data.to_matrix()
    if isinstance(data, MatrixBar):
        return data
    raise TypeError(f"expected a weighted biword or matrix, got {type(data)!r}")


def _columns(data):
    """Canonically sorted (q, p, w) columns with multiplicity."""
    mbar = _as_matrix(data)
    cols = []
    for (i, j, k), c in mbar.support.items():
        cols.extend([(j, i, k)] * c)
    cols.sort(key=lambda t: (t[0], t[1], -t[2]))
    return mbar.n, cols


def point_of_column(column, n):
    """Cylinder point (q, p - n*w) of a biword column (q, p, w)."""
    q, p, w = column
    return (q, p - n * w)


def points_weakly_ordered(a, b, n):
    """True when point b sits weakly after point a on some up-right path.

    Writing a = (q_a, x_a), b = (q_b, x_b) with columns reduced to 1..n,
    some pair of lifts to the plane is ordered coordinatewise exactly
    when x_b >= x_a if q_b >= q_a, and x_b >= x_a + n otherwise.
    """
    dq = b[0] - a[0]
    dx = b[1] - a[1]
    return dx >= 0 if dq >= 0 else dx >= n


def is_increasing_sequence(columns, n):
    """True when the columns' points all fit on one up-right path."""
    pts = [point_of_column(c, n) for c in columns]
    for s, a in enumerate(pts):
        for b in pts[s + 1 :]:
            if not (
                points_weakly_ordered(a, b, n) or points_weakly_ordered(b, a, n)
            ):
                return False
    return True


def is_localized_decreasing(columns, n):
    """True when the columns form one strictly down-right loop.

    The loop visits at most two adjacent weight layers w and w+1.  All
    column indices q are distinct, with the layer-w group entirely to the
    left of the layer-(w+1) group; within each group, rows p strictly
    decrease as q grows, and every p of the upper layer exceeds every p
    of the lower one.
    """
    if not columns:
        return False
    if len(set(columns)) != len(columns):
        return False
    layers = sorted({w for (_, _, w) in columns})
    if len(layers) > 2 or (len(layers) == 2 and layers[1] - layers[0] != 1):
        return False
    low = sorted(c for c in columns if c[2] == layers[0])
    high = sorted(c for c in columns if len(layers) == 2 and c[2] == layers[1])
    for group in (low, high):
        for (q1, p1, _), (q2, p2, _) in zip(group, group[1:]):
            if q2 <= q1 or p2 >= p1:
                return False
    if low and high:
        if low[-1][0] >= high[0][0]:
            return False
        if min(p for (_, p, _) in high) <= max(p for (_, p, _) in low):
            return False
    return True


def _min_path_cover(points, n):
    """Minimum number of up-right chains covering the given distinct
    points, via matching on the (transitive) order relation."""
    s = len(points)
    adj = [
        [v for v in range(s) if v != u and points_weakly_ordered(points[u], points[v], n)]
        for u in range(s)
    ]
    match = [-1] * s

    def augment(u, seen):
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if match[v] == -1 or augment(match[v], seen):
                match[v] = u
                return True
        return False

    matched = sum(1 for u in range(s) if augment(u, set()))
    return s - matched


def longest_increasing(data, k, cap=INCREASING_CAP):
    """Largest total length of k disjoint increasing subsequences.

    Exhaustive over subsets of occupied cells; a chosen cell always
    contributes its full multiplicity, since repeated points share a
    path.  Instances with more than `cap` occupied cells are rejected —
    use greene_partition for the dynamics-based route.
    """
    if k < 1:
        raise ValueError("subsequence count k must be positive")
    mbar = _as_matrix(data)
    n = mbar.n
    cells = sorted(
        (point_of_column((j, i, w), n), c) for (i, j, w), c in mbar.support.items()
    )
    if not cells:
        return 0
    if len(cells) > cap:
        raise ValueError(
            f"{len(cells)} occupied cells exceed the exhaustive-search cap "
            f"{cap}; use greene_partition for large instances"
        )
    pts = [p for p, _ in cells]
    weights = [c for _, c in cells]
    m = len(cells)
    best = 0
    for mask in range(1, 1 << m):
        total = sum(weights[t] for t in range(m) if mask >> t & 1)
        if total <= best:
            continue
        sel = [pts[t] for t in range(m) if mask >> t & 1]
        if _min_path_cover(sel, n) <= k:
            best = total
    return best


def _lds_table(points, n):
    """Bitmask table marking which subsets form a single loop."""
    full = (1 << len(points)) - 1
    table = [False] * (full + 1)
    for mask in range(1, full + 1):
        subset = [points[t] for t in range(len(points)) if mask >> t & 1]
        table[mask] = is_localized_decreasing(subset, n)
    return table


def _check_decreasing_instance(data, k, cap):
    if k < 1:
        raise ValueError("subsequence count k must be positive")
    n, cols = _columns(data)
    if len(cols) > cap:
        raise ValueError(
            f"{len(cols)} entries exceed the exhaustive-search cap {cap}; "
            "use greene_partition for large instances"
        )
    return n, cols


def longest_localized_decreasing(data, k, cap=DECREASING_CAP):
    """Largest total length of k disjoint localized decreasing
    subsequences, by exhaustive search over loop subsets."""
    n, cols = _check_decreasing_instance(data, k, cap)
    if not cols:
        return 0
    table = _lds_table(cols, n)
    full = (1 << len(cols)) - 1
    prev = [0] * (full + 1)
    for _ in range(min(k, len(cols))):
        cur = list(prev)
        for mask in range(1, full + 1):
            best = prev[mask]
            sub = mask
            while sub:
                if table[sub]:
                    cand = bin(sub).count("1") + prev[mask ^ sub]
                    if cand > best:
                        best = cand
                sub = (sub - 1) & mask
            cur[mask] = best
        prev = cur
    return prev[full]


def min_decomposition_cost(data, k, cap=DECREASING_CAP):
    """Minimum of sum_i min(k, length of part i) over decompositions of
    the whole biword into localized decreasing subsequences."""
    n, cols = _check_decreasing_instance(data, k, cap)
    if not cols:
        return 0
    table = _lds_table(cols, n)
    full = (1 << len(cols)) - 1

    @lru_cache(maxsize=None)
    def cost(mask):
        if mask == 0:
            return 0
        low = mask & -mask
        best = None
        sub = mask
        while sub:
            if sub & low and table[sub]:
                cand = min(k, bin(sub).count("1")) + cost(mask ^ sub)
                if best is None or cand < best:
                    best = cand
            sub = (sub - 1) & mask
        return best

    return cost(full)


def increasing_partition(data, cap=INCREASING_CAP):
    """Partition whose k-th partial sum is longest_increasing(data, k)."""
    mbar = _as_matrix(data)
    parts = []
    prev = 0
    for k in range(1, mbar.size + 1):
        cur = longest_increasing(mbar, k, cap=cap)
        parts.append(cur - prev)
        prev = cur
        if cur == mbar.size:
            break
    return Partition(parts)


def decreasing_partition(data, cap=DECREASING_CAP):
    """Partition whose conjugate has k-th partial sum equal to
    longest_localized_decreasing(data, k)."""
    mbar = _as_matrix(data)
    parts = []
    prev = 0
    for k in range(1, mbar.size + 1):
        cur = longest_localized_decreasing(mbar, k, cap=cap)
        parts.append(cur - prev)
        prev = cur
        if cur == mbar.size:
            break
    return Partition(parts).transpose()


def greene_partition(data):
    """Asymptotic increment of the dynamics attached to the input.

    Accepts a same-shape tableau pair, a weighted matrix, or a weighted
    biword; matrices with negative weights are first shifted up, which
    leaves the statistic unchanged.
    """
    if isinstance(data, tuple):
        pair = data
    else:
        mbar = _as_matrix(data)
        w_min = min((w for (_, _, w) in mbar.support), default=0)
        pair = ss_forward(weight_shift(mbar, max(0, -w_min)), ())
    return stabilize_forward(pair)[2]


def extended_schensted_check(data, nu, cap=INCREASING_CAP):
    """Verify that the first row of the tableau pair built from
    (matrix, nu) has length nu_1 plus the longest increasing subsequence."""
    mbar = _as_matrix(data)
    if not mbar.is_nonnegative():
        raise ValueError("weights must be non-negative to build the pair")
    nu = Partition(nu)
    P, _ = ss_forward(mbar, tuple(nu))
    lam1 = P.shape.classical_pair()[0].part(1) if P.shape.outer else 0
    return lam1 == nu.part(1) + longest_increasing(mbar, 1, cap=cap)
