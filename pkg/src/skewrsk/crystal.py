"""Affine crystal operators on words, column tensors, tableau pairs, and
cylinder matrices.

Two commuting operator families act on equal-shape tableau pairs: family 1
touches the insertion component, family 2 the recording component.
Classical indices 1..n-1 follow the parenthesis signature rule on column
reading words.  The index-0 operators conjugate the index-1 action by the
cyclic letter shift: promotion on single columns, the row-insertion shift
on tableau pairs, and the rigid cylinder translation on matrices.  Walks
restricted to Demazure arrows connect every state to its leading vector;
the signed count of 0-arrows in such a walk measures intrinsic energy.
"""

from collections import deque

from .biwords import MatrixBar
from .insertion import iota1, iota1_inverse, iota2, iota2_inverse
from .tableaux import SkewTableau
from .vst import ColumnTensor, VerticallyStrictTableau

RAISE = "E"
LOWER = "F"


class Token(tuple):
    """One raising (E) or lowering (F) operator.

    ``family`` is 1 or 2 for operators on pairs and matrices and None for
    the single family acting on words and column tensors.
    """

    __slots__ = ()

    def __new__(cls, direction, index, family=None):
        if direction not in (RAISE, LOWER):
            raise ValueError(f"direction must be 'E' or 'F', got {direction!r}")
        if family not in (None, 1, 2):
            raise ValueError(f"family must be None, 1 or 2, got {family!r}")
        return super().__new__(cls, (direction, int(index), family))

    @property
    def direction(self):
        return self[0]

    @property
    def index(self):
        return self[1]

    @property
    def family(self):
        return self[2]

    def inverse(self):
        return Token(RAISE if self[0] == LOWER else LOWER, self[1], self[2])

    def with_family(self, family):
        return Token(self[0], self[1], family)

    def __repr__(self):
        return format_ops([self])


def E(index, family=None):
    return Token(RAISE, index, family)


def F(index, family=None):
    return Token(LOWER, index, family)


def invert_ops(ops):
    """Reversed, direction-flipped sequence; applying it after ``ops``
    restores the starting state."""
    return tuple(tok.inverse() for tok in reversed(ops))


def format_ops(ops):
    """Compact string in application order: ``F[2] E2[0]^3`` lowers with
    index 2 (single family), then raises twice with family 2, index 0."""
    parts = []
    for tok in ops:
        fam = "" if tok.family is None else str(tok.family)
        text = f"{tok.direction}{fam}[{tok.index}]"
        if parts and parts[-1][0] == text:
            parts[-1][1] += 1
        else:
            parts.append([text, 1])
    return " ".join(t if c == 1 else f"{t}^{c}" for t, c in parts)


def parse_ops(text):
    """Inverse of format_ops."""
    out = []
    for chunk in text.split():
        body, _, rep = chunk.partition("^")
        if not body or body[0] not in (RAISE, LOWER) or "[" not in body:
            raise ValueError(f"bad operator token {chunk!r}")
        head, idx = body[:-1].split("[")
        family = int(head[1:]) if len(head) > 1 else None
        out.extend([Token(body[0], int(idx), family)] * (int(rep) if rep else 1))
    return tuple(out)


# --------------------------------------------------------------- words


def _signature(word, i):
    """Positions of unmatched i letters (closers) and unmatched i+1
    letters (openers) after the sequential matching of adjacent pairs."""
    closers = []
    stack = []
    for pos, x in enumerate(word):
        if x == i:
            if stack:
                stack.pop()
            else:
                closers.append(pos)
        elif x == i + 1:
            stack.append(pos)
    return closers, stack


def phi_eps(word, i):
    """(φ_i, ε_i): how many times lowering then raising can be applied."""
    closers, stack = _signature(word, i)
    return len(closers), len(stack)


def kashiwara_word(word, i, direction):
    """Raise turns the first unmatched i+1 into i; lower turns the last
    unmatched i into i+1.  Returns None when no such letter exists."""
    if i < 1:
        raise ValueError("word operators take index >= 1")
    word = tuple(word)
    closers, stack = _signature(word, i)
    out = list(word)
    if direction == RAISE:
        if not stack:
            return None
        out[stack[0]] = i
    else:
        if not closers:
            return None
        out[closers[-1]] = i + 1
    return tuple(out)


# ------------------------------------------------------ column tensors


def promote(V, steps=1):
    """Cyclic letter shift applied to every column, each re-sorted."""
    d = steps % V.n
    cols = [
        tuple(sorted((x - 1 + d) % V.n + 1 for x in col)) for col in V.columns
    ]
    return type(V)(cols, V.n)


def column_word(V):
    """Columns left to right, each read bottom to top."""
    return tuple(x for col in V.columns for x in reversed(col))


def _word_position(V, pos):
    """Map a column-word position to (factor index, cell index)."""
    for k, col in enumerate(V.columns):
        if pos < len(col):
            return k, len(col) - 1 - pos
        pos -= len(col)
    raise IndexError(pos)


def phi_eps_vst(V, i):
    if i == 0:
        return phi_eps(column_word(promote(V)), 1)
    return phi_eps(column_word(V), i)


def kashiwara_vst(V, i, direction):
    """Signature-rule action on the column word for i >= 1; the index-0
    action conjugates the index-1 action by promotion."""
    if i == 0:
        inner = kashiwara_vst(promote(V), 1, direction)
        return None if inner is None else promote(inner, -1)
    word = column_word(V)
    new_word = kashiwara_word(word, i, direction)
    if new_word is None:
        return None
    pos = next(t for t in range(len(word)) if word[t] != new_word[t])
    k, cell = _word_position(V, pos)
    cols = [list(col) for col in V.columns]
    cols[k][cell] = new_word[pos]
    return type(V)(cols, V.n)


def leading_vector(heights, n):
    """The unique state with content equal to the sorted height profile:
    column of height h holds 1..h."""
    cols = [tuple(range(1, h + 1)) for h in heights]
    heights = tuple(heights)
    cls = (
        VerticallyStrictTableau
        if all(a >= b for a, b in zip(heights, heights[1:]))
        else ColumnTensor
    )
    return cls(cols, n)


# ---------------------------------------------------------------- pairs


def _column_cells(T):
    """Cells (column, row) of a skew tableau in column reading order."""
    sh = T.shape
    if not T.rows:
        return []
    lo = min(sh.inner) + 1
    hi = max(sh.outer)
    cells = []
    for c in range(lo, hi + 1):
        for r in reversed(sh.rows):
            if T.cell(c, r) is not None:
                cells.append((c, r))
    return cells


def _replace_cell(T, c, r, x):
    rows = [list(row) for row in T.rows]
    rows[r - T.shape.base_row][c - 1 - T.shape.inner_at(r)] = x
    return SkewTableau(T.shape, rows, T.n)


def _act_tableau(T, i, direction):
    """Classical action on one skew tableau via its column reading word."""
    cells = _column_cells(T)
    word = tuple(T.cell(c, r) for c, r in cells)
    new_word = kashiwara_word(word, i, direction)
    if new_word is None:
        return None
    pos = next(t for t in range(len(word)) if word[t] != new_word[t])
    return _replace_cell(T, *cells[pos], new_word[pos])


def kashiwara_pair(pair, token):
    """Family 1 acts on the first component, family 2 on the second;
    index 0 conjugates the index-1 action by the row-insertion shift of
    the matching family."""
    P, Q = pair
    if P.shape != Q.shape:
        raise ValueError("pair components must share their shape")
    if token.family not in (1, 2):
        raise ValueError(f"pair operators need family 1 or 2: {token!r}")
    i, direction = token.index, token.direction
    if i >= 1:
        if token.family == 1:
            P2 = _act_tableau(P, i, direction)
            return None if P2 is None else (P2, Q)
        Q2 = _act_tableau(Q, i, direction)
        return None if Q2 is None else (P, Q2)
    if token.family == 1:
        hatP, hatQ = iota1_inverse(P, Q)
        hatP2 = _act_tableau(hatP, 1, direction)
        return None if hatP2 is None else iota1(hatP2, hatQ)
    hatP, hatQ = iota2_inverse(P, Q)
    hatQ2 = _act_tableau(hatQ, 1, direction)
    return None if hatQ2 is None else iota2(hatP, hatQ2)


def _pair_epsilon_zero(pair, family):
    """How many times the family's raising 0-operator applies, read off
    the signature of the shift-conjugated component."""
    P, Q = pair
    if family == 1:
        hat = iota1_inverse(P, Q)[0]
    else:
        hat = iota2_inverse(P, Q)[1]
    cells = _column_cells(hat)
    return phi_eps(tuple(hat.cell(c, r) for c, r in cells), 1)[1]


# -------------------------------------------------------------- matrices


def matrix_letter_shift(mbar, d):
    """Rigid cylinder translation moving every row letter by d, with the
    weight absorbing wrap-arounds."""
    support = {}
    for (p, q, w), c in mbar.support.items():
        p2 = p + d
        while p2 > mbar.n:
            p2 -= mbar.n
            w -= 1
        while p2 < 1:
            p2 += mbar.n
            w += 1
        key = (p2, q, w)
        support[key] = support.get(key, 0) + c
    return MatrixBar(mbar.n, mbar.m, support)


def _matrix_classical(mbar, i, direction):
    """Family-1 signature rule: entries ordered along the cylinder by
    q − n·w, closers (row letter i) before openers (i+1) at ties."""
    symbols = []
    for (p, q, w), c in mbar.support.items():
        if p == i:
            symbols.extend([(q - mbar.n * w, 0, q, w)] * c)
        elif p == i + 1:
            symbols.extend([(q - mbar.n * w, 1, q, w)] * c)
    symbols.sort(key=lambda s: (s[0], s[1]))
    closers = []
    stack = []
    for sym in symbols:
        if sym[1] == 0:
            if stack:
                stack.pop()
            else:
                closers.append(sym)
        else:
            stack.append(sym)
    if direction == RAISE:
        if not stack:
            return None
        _, _, q, w = stack[0]
        delta = {(i + 1, q, w): -1, (i, q, w): 1}
    else:
        if not closers:
            return None
        _, _, q, w = closers[-1]
        delta = {(i, q, w): -1, (i + 1, q, w): 1}
    support = dict(mbar.support)
    for key, d in delta.items():
        support[key] = support.get(key, 0) + d
    return MatrixBar(mbar.n, mbar.m, support)


def kashiwara_matrix(mbar, token):
    """Family 1 changes a row letter i+1 ↔ i at the cylinder position
    fixed by the signature rule; family 2 is the transpose conjugate;
    index 0 conjugates index 1 by the letter-shift translation."""
    if token.family not in (1, 2):
        raise ValueError(f"matrix operators need family 1 or 2: {token!r}")
    if mbar.n != mbar.m:
        raise ValueError("matrix operators need equal alphabets")
    if token.family == 2:
        inner = kashiwara_matrix(mbar.transpose(), token.with_family(1))
        return None if inner is None else inner.transpose()
    if token.index == 0:
        shifted = matrix_letter_shift(mbar, 1)
        inner = _matrix_classical(shifted, 1, token.direction)
        return None if inner is None else matrix_letter_shift(inner, -1)
    return _matrix_classical(mbar, token.index, token.direction)


# ------------------------------------------------------- Demazure walks


def is_demazure_arrow(state, token):
    """Classical arrows always qualify; a 0-lowering arrow needs the
    raising 0-operator defined at the state, a 0-raising arrow needs it
    defined twice."""
    if token.index != 0:
        return True
    need = 1 if token.direction == LOWER else 2
    if isinstance(state, ColumnTensor):
        if token.family is not None:
            raise ValueError(f"column tensors take single-family tokens: {token!r}")
        return phi_eps_vst(state, 0)[1] >= need
    return _pair_epsilon_zero(state, token.family) >= need


class DemazureWalk:
    """A walk of Demazure arrows ending at the leading vector.

    ``ops`` lists the tokens in application order; ``factors`` gives, for
    each step, the 1-based tensor factor changed by a 0-arrow and None
    for classical steps.  u(k)/d(k) count lowering/raising 0-arrows at
    factor k; their difference is the local energy recovered at k.
    """

    __slots__ = ("ops", "factors", "num_factors")

    def __init__(self, ops, factors, num_factors):
        object.__setattr__(self, "ops", tuple(ops))
        object.__setattr__(self, "factors", tuple(factors))
        object.__setattr__(self, "num_factors", int(num_factors))

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def u(self, k):
        return sum(
            1
            for tok, f in zip(self.ops, self.factors)
            if f == k and tok.direction == LOWER
        )

    def d(self, k):
        return sum(
            1
            for tok, f in zip(self.ops, self.factors)
            if f == k and tok.direction == RAISE
        )

    def local_energies(self):
        return tuple(self.u(k) - self.d(k) for k in range(1, self.num_factors + 1))

    def zero_balance(self):
        """Signed count of 0-arrows: #lowering − #raising."""
        return sum(self.local_energies())


def _changed_factor(before, after):
    for k, (a, b) in enumerate(zip(before.columns, after.columns), start=1):
        if a != b:
            return k
    raise AssertionError("no factor changed")


def demazure_neighbors(state, tokens=None):
    """Demazure arrows leaving the state, in the fixed token order
    (index ascending, lowering before raising)."""
    if tokens is None:
        tokens = [
            Token(d, i) for i in range(state.n) for d in (LOWER, RAISE)
        ]
    out = []
    for tok in tokens:
        if not is_demazure_arrow(state, tok):
            continue
        nxt = kashiwara_vst(state, tok.index, tok.direction)
        if nxt is not None:
            out.append((tok, nxt))
    return out


def leading_map(V, tokens=None):
    """Breadth-first walk over Demazure arrows from V to its leading
    vector.  The fixed token ordering makes the result reproducible; any
    other valid walk reaches the same endpoint."""
    target = leading_vector(V.heights, V.n)
    parents = {V: None}
    queue = deque([V])
    while queue:
        state = queue.popleft()
        if state == target:
            break
        for tok, nxt in demazure_neighbors(state, tokens):
            if nxt not in parents:
                parents[nxt] = (state, tok)
                queue.append(nxt)
    else:
        raise AssertionError("no Demazure walk to the leading vector")
    ops = []
    factors = []
    state = target
    while parents[state] is not None:
        prev, tok = parents[state]
        ops.append(tok)
        factors.append(_changed_factor(prev, state) if tok.index == 0 else None)
        state = prev
    return DemazureWalk(reversed(ops), reversed(factors), len(V.columns))


def leading_map_pair(V, W):
    """Token sequence on pairs projecting to the leading maps of both
    components: the first component's walk as family 1, then the second
    component's walk as family 2."""
    return tuple(tok.with_family(1) for tok in leading_map(V).ops) + tuple(
        tok.with_family(2) for tok in leading_map(W).ops
    )


# ------------------------------------------------------------ sequences


def apply_op_sequence(state, ops):
    """Apply tokens in order, dispatching on the state kind; raises when
    a step is undefined, naming the token and its position."""
    for idx, tok in enumerate(ops):
        if isinstance(state, ColumnTensor):
            if tok.family is not None:
                raise ValueError(
                    f"column tensors take single-family tokens: {tok!r}"
                )
            state = kashiwara_vst(state, tok.index, tok.direction)
        elif isinstance(state, MatrixBar):
            state = kashiwara_matrix(state, tok)
        elif isinstance(state, tuple) and len(state) == 2:
            state = kashiwara_pair(state, tok)
        else:
            raise TypeError(f"cannot act on {type(state).__name__}")
        if state is None:
            raise ValueError(f"operator {tok!r} undefined at position {idx}")
    return state
