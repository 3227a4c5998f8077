"""Long-time behavior of the skew RSK dynamics.

A pair is stable when every forward step only translates each column down
by its own height, leaving the label sequences unchanged.  Stability is
detected after a configurable number of consecutive pure-shift steps; the
asymptotic increment µ and the column projections (V, W) are then read off
the stable state.  The backward direction is analogous with upward shifts
and produces column tensors over the reversed height profile.
"""

from .insertion import skew_rsk, skew_rsk_inverse
from .io_formats import pair_to_json
from .partitions import Partition
from .vst import ColumnTensor, VerticallyStrictTableau

STABLE_AFTER = 2  # consecutive pure-shift steps before declaring stability


def column_data(T):
    """Per nonempty column: (labels top to bottom, their row indices)."""
    cols = {}
    for r, row in zip(T.shape.rows, T.rows):
        inner = T.shape.inner_at(r)
        for i, x in enumerate(row):
            labels, rows_ = cols.setdefault(inner + 1 + i, ([], []))
            labels.append(x)
            rows_.append(r)
    return {
        c: (tuple(labels), tuple(rows_)) for c, (labels, rows_) in cols.items()
    }


def is_pure_shift(pair, nxt, direction=1):
    """True when the step pair → nxt moved every column rigidly by its own
    height, downward for direction=+1 and upward for direction=-1."""
    for T, T2 in zip(pair, nxt):
        cols, cols2 = column_data(T), column_data(T2)
        if cols.keys() != cols2.keys():
            return False
        for c, (labels, rows_) in cols.items():
            labels2, rows2 = cols2[c]
            h = len(labels) * direction
            if labels2 != labels or rows2 != tuple(r + h for r in rows_):
                return False
    return True


def default_step_cap(pair):
    P, _ = pair
    return 4 * (P.size + abs(P.shape.base_row)) + 16


def _stabilize(pair, step, direction, max_steps):
    cap = default_step_cap(pair) if max_steps is None else max_steps
    history = [pair]
    consecutive = 0
    while consecutive < STABLE_AFTER:
        if len(history) > cap:
            raise RuntimeError(
                f"no stable state within {cap} steps; raise the cap if the "
                "input is unusually tall"
            )
        nxt = step(*history[-1])
        if is_pure_shift(history[-1], nxt, direction):
            consecutive += 1
        else:
            consecutive = 0
        history.append(nxt)
    t_star = len(history) - 1 - STABLE_AFTER
    return t_star, history[t_star]


def stabilize_forward(pair, max_steps=None):
    """Run the dynamics to its stable regime.

    Returns (t*, stable pair, µ, V, W): the first time the pair is detected
    stable, the pair at that time, the asymptotic increment µ whose
    conjugate lists column heights, and the vertically strict tableaux
    collecting the per-column labels of the stable state.
    """
    t_star, stable = _stabilize(pair, skew_rsk, 1, max_steps)
    P, Q = stable
    pcols = column_data(P)
    heights = tuple(len(pcols[c][0]) for c in sorted(pcols))
    mu = Partition(heights).transpose()
    V = VerticallyStrictTableau([pcols[c][0] for c in sorted(pcols)], P.n)
    qcols = column_data(Q)
    W = VerticallyStrictTableau([qcols[c][0] for c in sorted(qcols)], Q.n)
    return t_star, stable, mu, V, W


def stabilize_backward(pair, max_steps=None):
    """Backward counterpart: run the inverse dynamics until stable and read
    the column tensors (V⁻, W⁻), whose height profile is the reversal of
    the forward µ'."""
    _, stable = _stabilize(pair, skew_rsk_inverse, -1, max_steps)
    P, Q = stable
    pcols = column_data(P)
    qcols = column_data(Q)
    Vm = ColumnTensor([pcols[c][0] for c in sorted(pcols)], P.n)
    Wm = ColumnTensor([qcols[c][0] for c in sorted(qcols)], Q.n)
    return Vm, Wm


def phi(pair):
    """Projection to the forward asymptotic vertically strict tableaux."""
    _, _, _, V, W = stabilize_forward(pair)
    return V, W


def phi_backward(pair):
    """Projection to the backward asymptotic column tensors."""
    return stabilize_backward(pair)


class DynamicsTrace:
    """A stretch of the dynamics plus boundary-crossing records.

    crossings holds tuples (step, boundary, i, j, count): during forward
    step number `step` (0-based), `count` i-cells of P moved from row
    boundary−1 to row boundary while the j-cells of Q were being inserted.
    """

    __slots__ = ("steps", "crossings")

    def __init__(self, steps, crossings):
        object.__setattr__(self, "steps", tuple(steps))
        object.__setattr__(self, "crossings", tuple(crossings))

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def crossing_counts(self):
        """Aggregate {(i, j): count} over all recorded steps."""
        agg = {}
        for _, _, i, j, count in self.crossings:
            agg[(i, j)] = agg.get((i, j), 0) + count
        return agg

    def to_json(self):
        return {
            "steps": [pair_to_json(pair) for pair in self.steps],
            "crossings": [
                {"step": t, "boundary": b, "i": i, "j": j, "count": c}
                for (t, b, i, j, c) in self.crossings
            ],
        }


def record_boundary_crossings(pair, boundary_row, steps):
    """Run `steps` forward steps recording every cell move across the
    horizontal boundary between rows boundary_row−1 and boundary_row."""
    history = [pair]
    crossings = []
    for t in range(steps):
        events = []
        nxt = skew_rsk(*history[-1], trace=events)
        counts = {}
        for level, value, _, to_row in events:
            if to_row == boundary_row:
                key = (value, level)
                counts[key] = counts.get(key, 0) + 1
        for (i, j), c in sorted(counts.items()):
            crossings.append((t, boundary_row, i, j, c))
        history.append(nxt)
    return DynamicsTrace(history, crossings)
