"""Internal insertion, the ι-maps, and the skew RSK dynamics.

The engine works on a mutable row state {row_index: [inner_length,
[labels...]]} so that intermediate configurations may transiently
violate the weakly-decreasing profile; results are validated when
converted back to tableaux.
"""

from __future__ import annotations

from .tableaux import GeneralizedSkewShape, SkewTableau


# ---------------------------------------------------------------- state


def _to_state(T):
    state = {}
    for r, labels in zip(T.shape.rows, T.rows):
        state[r] = [T.shape.inner_at(r), list(labels)]
    return state


def _outer_at(state, r):
    if r not in state:
        return 0
    inner, labels = state[r]
    return inner + len(labels)


def _from_state(state, n):
    if not state:
        return SkewTableau.empty(n)
    rows = sorted(state)
    lo, hi = rows[0], rows[-1]
    if rows != list(range(lo, hi + 1)):
        raise ValueError("rows of the state are not contiguous")
    outer = [_outer_at(state, r) for r in range(lo, hi + 1)]
    inner = [state[r][0] for r in range(lo, hi + 1)]
    shape = GeneralizedSkewShape(lo, outer, inner)
    offset = shape.base_row - lo
    labels = [tuple(state[r][1]) for r in range(shape.base_row, shape.base_row + len(shape.outer))]
    return SkewTableau(shape, labels, n)


def _is_corner(state, r):
    """Leftmost cell of non-empty row r has no cell above or to its left."""
    inner, labels = state[r]
    if not labels:
        return True
    c = inner + 1
    if r - 1 not in state:
        return True
    above_inner, above_labels = state[r - 1]
    return c <= above_inner or c > above_inner + len(above_labels)


def _bump_from(state, v, start_row, trace=None, level=None):
    """Bump the value v downward starting at row start_row: at each row it
    displaces the leftmost strictly larger entry or rests at the right end."""
    rr = start_row
    while True:
        if rr not in state:
            state[rr] = [0, []]
        row_inner, row_labels = state[rr]
        idx = None
        for i, x in enumerate(row_labels):
            if x > v:
                idx = i
                break
        if trace is not None:
            trace.append((level, v, rr - 1, rr))
        if idx is None:
            row_labels.append(v)
            return rr
        v, row_labels[idx] = row_labels[idx], v
        rr += 1


def _insert_at_row(state, r, trace=None, level=None):
    """One internal insertion at row r: vacate the leftmost cell and bump
    its label downward; an empty row gains one empty cell instead."""
    if r not in state or not state[r][1]:
        # empty row: an extra empty cell, no labels move
        if r not in state:
            state[r] = [0, []]
        state[r][0] += 1
        return
    if not _is_corner(state, r):
        raise ValueError(f"leftmost cell of row {r} is not a corner")
    inner, labels = state[r]
    v = labels.pop(0)
    state[r][0] = inner + 1
    _bump_from(state, v, r + 1, trace=trace, level=level)


def _reverse_insert_at_cell(state, qstate, c, r, trace=None, level=None):
    """Undo one internal insertion whose bumping ended at cell (c, r):
    remove that cell and carry its label upward, at each row displacing
    the rightmost smaller entry; when none exists the label comes to rest
    at the left end of that row, restoring an inner corner, and the
    recording state gains a 1-cell at the same spot.

    When the label climbs past the top row a fresh row is created in both
    states.  Its offset is the unique one that keeps the pair kernel
    unchanged: slack outer+1 shrinks by one when both rows below end in
    an entry that the new cells sit strictly under.

    Returns the (column, row) where the restored corner cell sits.
    """
    inner, labels = state[r]
    if inner + len(labels) != c or not labels:
        raise ValueError(f"cell ({c},{r}) is not the last cell of its row")
    v = labels.pop()
    rr = r - 1
    while True:
        idx = None
        if rr in state:
            row_labels = state[rr][1]
            for i in range(len(row_labels) - 1, -1, -1):
                if row_labels[i] < v:
                    idx = i
                    break
        if trace is not None:
            trace.append((level, v, rr + 1, rr))
        if idx is not None:
            v, row_labels[idx] = row_labels[idx], v
            rr -= 1
            continue
        if rr not in state:
            below, qbelow = state[rr + 1], qstate[rr + 1]
            ov_p = 1 if below[1] and below[1][-1] > v else 0
            ov_q = 1 if qbelow[1] and qbelow[1][-1] > 1 else 0
            col = below[0] + len(below[1]) + 1 - min(ov_p, ov_q)
            state[rr] = [col, []]
            qstate[rr] = [col, []]
        row_inner = state[rr][0]
        if qstate[rr][0] != row_inner:
            raise ValueError("pair states fell out of alignment")
        state[rr][1].insert(0, v)
        state[rr][0] = row_inner - 1
        qstate[rr][1].insert(0, 1)
        qstate[rr][0] = row_inner - 1
        return (row_inner, rr)


# ------------------------------------------------------------- public ops


def internal_insert(P, r):
    """The single-row insertion ℛ_[r]."""
    state = _to_state(P)
    _insert_at_row(state, r)
    return _from_state(state, P.n)


def _require_same_shape(P, Q):
    if P.shape != Q.shape:
        raise ValueError("tableaux must share their shape")


def _one_cell_rows(Q):
    rows = []
    for r in Q.shape.rows:
        for x in Q.row_word(r):
            if x == 1:
                rows.append(r)
    return sorted(rows, reverse=True)


def _n_cell_positions(Q):
    cells = []
    for r in Q.shape.rows:
        inner = Q.shape.inner_at(r)
        for i, x in enumerate(Q.row_word(r)):
            if x == Q.n:
                cells.append((inner + 1 + i, r))
    return cells


def iota2(P, Q, trace=None):
    """Vacate the 1-cells of Q, insert internally in P at their rows from
    the largest row down, then cycle Q: drop its 1-cells, decrement the
    remaining labels, and append Q.n-cells to match the new shape."""
    _require_same_shape(P, Q)
    state = _to_state(P)
    for r in _one_cell_rows(Q):
        _insert_at_row(state, r, trace=trace, level=1)
    P2 = _from_state(state, P.n)

    qstate = _to_state(Q)
    for r in list(qstate):
        inner, labels = qstate[r]
        while labels and labels[0] == 1:
            labels.pop(0)
            inner += 1
        qstate[r] = [inner, [x - 1 for x in labels]]
    for r in P2.shape.rows:
        want = P2.shape.outer_at(r)
        have = _outer_at(qstate, r)
        if have < want:
            if r not in qstate:
                qstate[r] = [P2.shape.inner_at(r), []]
            qstate[r][1].extend([Q.n] * (want - have))
    Q2 = _from_state(qstate, Q.n)
    _require_same_shape(P2, Q2)
    return P2, Q2


def iota2_inverse(P, Q, trace=None):
    """Exact inverse of iota2; may create cells at non-positive rows."""
    _require_same_shape(P, Q)
    n = Q.n
    ncells = sorted(_n_cell_positions(Q), key=lambda cr: (cr[1], -cr[0]))
    # un-cycle the recording tableau first: drop its n-cells and shift the
    # remaining labels up, so reverse chains see the final labels alongside
    qstate = _to_state(Q)
    for r in list(qstate):
        inner, labels = qstate[r]
        while labels and labels[-1] == n:
            labels.pop()
        qstate[r] = [inner, [x + 1 for x in labels]]
    state = _to_state(P)
    for c, r in ncells:
        _reverse_insert_at_cell(state, qstate, c, r, trace=trace, level=1)
    P2 = _from_state(state, P.n)
    Q2 = _from_state(qstate, n)
    _require_same_shape(P2, Q2)
    return P2, Q2


def swap(pair):
    P, Q = pair
    return Q, P


def iota1(P, Q, trace=None):
    Q2, P2 = iota2(Q, P, trace=trace)
    return P2, Q2


def iota1_inverse(P, Q):
    Q2, P2 = iota2_inverse(Q, P)
    return P2, Q2


def skew_rsk(P, Q, trace=None, externals=None):
    """The skew RSK map for P over alphabet n and Q over alphabet m:
    for each letter j of Q from 1 to m, internally insert in P at the rows
    of the j-cells (largest row first), then grow Q's recording copy with
    j-cells so external shapes agree.

    ``externals`` optionally maps a letter j of Q's alphabet to a list of
    letters of P's alphabet; after the internal batch of level j those
    letters are bumped into row 1 from smallest to largest, standing in
    for cells that would otherwise arrive from row 0.  Their trace events
    read (j, v, 0, 1)."""
    if P.shape != Q.shape:
        if not (P.shape.is_classical and Q.shape.is_classical
                and P.shape.classical_pair()[1] == Q.shape.classical_pair()[1]):
            raise ValueError("P and Q must share their inner shape")
    state = _to_state(P)
    # recording tableau starts as the fully empty shape λ/λ over P's outer profile
    qstate = {r: [P.shape.outer_at(r), []] for r in P.shape.rows}
    cells_by_level = {}
    for r in Q.shape.rows:
        for x in Q.row_word(r):
            cells_by_level.setdefault(x, []).append(r)
    for j in range(1, Q.n + 1):
        for r in sorted(cells_by_level.get(j, ()), reverse=True):
            _insert_at_row(state, r, trace=trace, level=j)
        if externals:
            for v in sorted(externals.get(j, ())):
                _bump_from(state, v, 1, trace=trace, level=j)
        rows = set(state) | set(qstate)
        for r in rows:
            want = _outer_at(state, r)
            have = _outer_at(qstate, r)
            if have < want:
                if r not in qstate:
                    qstate[r] = [0, []]
                qstate[r][1].extend([j] * (want - have))
    return _from_state(state, P.n), _from_state(qstate, Q.n)


def skew_rsk_inverse(P, Q):
    """Inverse of the equal-shape skew RSK map: n applications of iota2⁻¹."""
    _require_same_shape(P, Q)
    for _ in range(Q.n):
        P, Q = iota2_inverse(P, Q)
    return P, Q


def run_dynamics(P, Q, t, trace=None):
    """t-fold skew RSK map; negative t runs the inverse."""
    if t >= 0:
        for _ in range(t):
            P, Q = skew_rsk(P, Q, trace=trace)
    else:
        for _ in range(-t):
            P, Q = skew_rsk_inverse(P, Q)
    return P, Q
