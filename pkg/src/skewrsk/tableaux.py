"""Generalized skew shapes, semistandard tableaux, and their encodings.

Cells are addressed as (c, r) = (column, row), both 1-based for classical
shapes; rows increase downward and may take non-positive indices for
generalized shapes.  Row r of a shape spans columns inner[r]+1 .. outer[r].
"""

from __future__ import annotations

import random as _random

from .partitions import Partition


class GeneralizedSkewShape:
    """A skew diagram λ/ρ whose top row may sit at a non-positive index.

    Stored as a base row index plus aligned outer/inner row lengths.
    Canonical form drops trailing rows of outer length 0 and leading
    fully-empty rows at non-positive indices, so structural equality is
    well defined.  Rows that are empty (inner == outer > 0) at positive
    indices are meaningful and kept.
    """

    __slots__ = ("base_row", "outer", "inner")

    def __init__(self, base_row, outer, inner):
        outer = [int(x) for x in outer]
        inner = [int(x) for x in inner]
        if len(outer) != len(inner):
            raise ValueError("outer and inner must have equal length")
        # trim trailing rows with no columns at all
        while outer and outer[-1] == 0:
            if inner[-1] != 0:
                raise ValueError("inner exceeds outer")
            outer.pop()
            inner.pop()
        # trim leading fully-empty rows while they sit at non-positive indices
        while outer and base_row <= 0 and inner[0] == outer[0]:
            outer.pop(0)
            inner.pop(0)
            base_row += 1
        if not outer:
            base_row = 1
        if base_row > 1:
            raise ValueError("base row of a generalized shape is at most 1")
        for a, b in zip(outer, outer[1:]):
            if a < b:
                raise ValueError(f"outer profile not weakly decreasing: {outer}")
        for a, b in zip(inner, inner[1:]):
            if a < b:
                raise ValueError(f"inner profile not weakly decreasing: {inner}")
        for o, i in zip(outer, inner):
            if i > o:
                raise ValueError("inner exceeds outer")
            if i < 0:
                raise ValueError("negative row length")
        object.__setattr__(self, "base_row", base_row)
        object.__setattr__(self, "outer", tuple(outer))
        object.__setattr__(self, "inner", tuple(inner))

    def __setattr__(self, name, value):
        raise AttributeError("GeneralizedSkewShape is immutable")

    @classmethod
    def from_partitions(cls, outer, inner=()):
        """Classical shape λ/ρ at base row 1."""
        outer = Partition(outer)
        inner = Partition(inner)
        if not outer.contains(inner):
            raise ValueError(f"inner {inner} not contained in outer {outer}")
        return cls(1, tuple(outer), tuple(inner) + (0,) * (len(outer) - len(inner)))

    @property
    def rows(self):
        """List of row indices carried by this shape."""
        return range(self.base_row, self.base_row + len(self.outer))

    def outer_at(self, r):
        i = r - self.base_row
        return self.outer[i] if 0 <= i < len(self.outer) else 0

    def inner_at(self, r):
        i = r - self.base_row
        return self.inner[i] if 0 <= i < len(self.inner) else 0

    def row_length(self, r):
        return self.outer_at(r) - self.inner_at(r)

    @property
    def is_classical(self):
        return self.base_row == 1

    def classical_pair(self):
        """Return (λ, ρ) as partitions; only for classical shapes."""
        if not self.is_classical:
            raise ValueError("shape has rows at non-positive indices")
        return Partition(self.outer), Partition(self.inner)

    @property
    def size(self):
        """Number of labelled (non-empty) cells."""
        return sum(o - i for o, i in zip(self.outer, self.inner))

    def cells(self):
        """All labelled cells as (c, r), row by row."""
        for r in self.rows:
            for c in range(self.inner_at(r) + 1, self.outer_at(r) + 1):
                yield (c, r)

    def __eq__(self, other):
        return (
            isinstance(other, GeneralizedSkewShape)
            and self.base_row == other.base_row
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self):
        return hash((self.base_row, self.outer, self.inner))

    def __repr__(self):
        return f"GeneralizedSkewShape(base_row={self.base_row}, outer={self.outer}, inner={self.inner})"


class SkewTableau:
    """Semistandard filling of a generalized skew shape.

    Rows weakly increase left to right, columns strictly increase downward.
    `rows[i]` holds the labels of row `base_row + i`, left to right.
    """

    __slots__ = ("shape", "rows", "n")

    def __init__(self, shape, rows, n):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if len(rows) != len(shape.outer):
            raise ValueError("row count does not match shape")
        for r, labels in zip(shape.rows, rows):
            if len(labels) != shape.row_length(r):
                raise ValueError(f"row {r} has {len(labels)} labels, shape wants {shape.row_length(r)}")
            for x in labels:
                if not 1 <= x <= n:
                    raise ValueError(f"label {x} outside alphabet 1..{n}")
            for a, b in zip(labels, labels[1:]):
                if a > b:
                    raise ValueError(f"row {r} not weakly increasing: {labels}")
        # column strictness between consecutive rows
        for idx in range(len(rows) - 1):
            r = shape.base_row + idx
            lo = max(shape.inner_at(r), shape.inner_at(r + 1))
            hi = min(shape.outer_at(r), shape.outer_at(r + 1))
            for c in range(lo + 1, hi + 1):
                top = rows[idx][c - 1 - shape.inner_at(r)]
                bot = rows[idx + 1][c - 1 - shape.inner_at(r + 1)]
                if top >= bot:
                    raise ValueError(f"column {c} not strictly increasing between rows {r},{r+1}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", int(n))

    def __setattr__(self, name, value):
        raise AttributeError("SkewTableau is immutable")

    @classmethod
    def from_rows(cls, row_data, n, base_row=1):
        """Build from [(inner_count, labels...)] per row, top to bottom."""
        inner = []
        outer = []
        rows = []
        for item in row_data:
            pad, labels = item[0], tuple(item[1:])
            inner.append(pad)
            outer.append(pad + len(labels))
            rows.append(labels)
        shape = GeneralizedSkewShape(base_row, outer, inner)
        # canonicalization may have trimmed leading/trailing empty rows
        offset = shape.base_row - base_row
        rows = rows[offset : offset + len(shape.outer)]
        return cls(shape, rows, n)

    @classmethod
    def empty(cls, n):
        return cls(GeneralizedSkewShape(1, (), ()), (), n)

    def cell(self, c, r):
        """Label at (column, row), or None if the cell is not labelled."""
        i = r - self.shape.base_row
        if not 0 <= i < len(self.rows):
            return None
        j = c - 1 - self.shape.inner_at(r)
        if not 0 <= j < len(self.rows[i]):
            return None
        return self.rows[i][j]

    def row_word(self, r):
        """Labels of row r as a tuple (empty when outside the shape)."""
        i = r - self.shape.base_row
        return self.rows[i] if 0 <= i < len(self.rows) else ()

    def content(self):
        gamma = [0] * self.n
        for row in self.rows:
            for x in row:
                gamma[x - 1] += 1
        return tuple(gamma)

    @property
    def size(self):
        return sum(len(row) for row in self.rows)

    def is_standard(self):
        return sorted(x for row in self.rows for x in row) == list(range(1, self.size + 1))

    def with_alphabet(self, n):
        return SkewTableau(self.shape, self.rows, n)

    def __eq__(self, other):
        return (
            isinstance(other, SkewTableau)
            and self.shape == other.shape
            and self.rows == other.rows
            and self.n == other.n
        )

    def __hash__(self):
        return hash((self.shape, self.rows, self.n))

    def __repr__(self):
        body = ", ".join(
            f"{r}:{self.shape.inner_at(r)}+{list(w)}" for r, w in zip(self.shape.rows, self.rows)
        )
        return f"SkewTableau(n={self.n}, [{body}])"


def reading_word(T, mode="row"):
    """Row mode concatenates rows last to first; column mode reads each
    column bottom to top, columns left to right."""
    if mode == "row":
        return tuple(x for row in reversed(T.rows) for x in row)
    if mode == "column":
        sh = T.shape
        out = []
        if not T.rows:
            return ()
        cmax = max(sh.outer)
        for c in range(1, cmax + 1):
            for r in reversed(sh.rows):
                x = T.cell(c, r)
                if x is not None:
                    out.append(x)
        return tuple(out)
    raise ValueError(f"unknown reading mode {mode!r}")


def overlap(A, B):
    """Largest L such that the last L letters of B sit strictly below the
    first L letters of A in a valid two-row semistandard configuration."""
    A = tuple(A)
    B = tuple(B)
    for word in (A, B):
        for a, b in zip(word, word[1:]):
            if a > b:
                raise ValueError(f"word not weakly increasing: {word}")
    for L in range(min(len(A), len(B)), -1, -1):
        if all(B[len(B) - L + i] > A[i] for i in range(L)):
            return L
    return 0


def _row_slacks(tableaux):
    """Common per-row left-shift slack of one or more same-shape tableaux.

    Entry for row r is the largest s such that rows up to r of every
    tableau can be shifted s cells left preserving semistandardness.
    """
    shape = tableaux[0].shape
    slacks = []
    for r in shape.rows:
        best = None
        for T in tableaux:
            ov = overlap(T.row_word(r), T.row_word(r + 1))
            s = shape.inner_at(r) - shape.outer_at(r + 1) + ov
            best = s if best is None else min(best, s)
        slacks.append(best)
    return slacks


def kernel(P):
    """Kernel partition of a classical skew tableau: ϰ_j − ϰ_{j+1} is the
    maximal left shift of the first j rows preserving semistandardness."""
    if not P.shape.is_classical:
        raise ValueError("kernel requires a classical shape")
    return _kernel_from_slacks(_row_slacks([P]))


def kernel_pair(P, Q):
    """Joint kernel of a same-shape classical pair: rowwise minimum of the
    slacks.  For generalized shapes only the per-interface slacks remain
    meaningful; see _row_slacks."""
    if P.shape != Q.shape:
        raise ValueError("kernel_pair needs tableaux of equal shape")
    if not P.shape.is_classical:
        raise ValueError("kernel requires a classical shape")
    return _kernel_from_slacks(_row_slacks([P, Q]))


def _kernel_from_slacks(slacks):
    kappa = []
    total = 0
    for s in reversed(slacks):
        total += s
        kappa.append(total)
    return Partition(reversed(kappa))


class RowCoordMatrix:
    """Counts of i-cells per row: support maps (letter i, row j) → count."""

    __slots__ = ("n", "support")

    def __init__(self, n, support):
        cleaned = {}
        for (i, j), c in dict(support).items():
            c = int(c)
            if c < 0:
                raise ValueError("negative multiplicity")
            if c:
                if not 1 <= i <= n:
                    raise ValueError(f"letter {i} outside alphabet 1..{n}")
                cleaned[(int(i), int(j))] = c
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "support", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("RowCoordMatrix is immutable")

    def __getitem__(self, ij):
        return self.support.get(ij, 0)

    def rows(self):
        """Sorted row indices with any cell."""
        return sorted({j for (_, j) in self.support})

    def row_sum(self, j):
        return sum(c for (i, jj), c in self.support.items() if jj == j)

    def letter_rows(self, i):
        """Multiset of rows of the i-cells, weakly decreasing."""
        out = []
        for (ii, j), c in self.support.items():
            if ii == i:
                out.extend([j] * c)
        return sorted(out, reverse=True)

    @property
    def size(self):
        return sum(self.support.values())

    def is_classical(self):
        return all(j >= 1 for (_, j) in self.support)

    def __eq__(self, other):
        return (
            isinstance(other, RowCoordMatrix)
            and self.n == other.n
            and self.support == other.support
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.support.items()))))

    def __repr__(self):
        return f"RowCoordMatrix(n={self.n}, {dict(sorted(self.support.items()))})"


def rc_matrix(P):
    """Row coordinate matrix of a (possibly generalized) tableau."""
    support = {}
    for r, row in zip(P.shape.rows, P.rows):
        for x in row:
            support[(x, r)] = support.get((x, r), 0) + 1
    return RowCoordMatrix(P.n, support)


def balanced(alpha, beta):
    """True when per-row cell counts of the two matrices agree."""
    rows = set(alpha.rows()) | set(beta.rows())
    return all(alpha.row_sum(j) == beta.row_sum(j) for j in rows)


def rc_encode(P, Q):
    """(P, Q) ↦ (α, β; ν): row coordinate matrices plus the joint kernel."""
    if P.shape != Q.shape:
        raise ValueError("rc_encode needs tableaux of equal shape")
    return rc_matrix(P), rc_matrix(Q), kernel_pair(P, Q)


def _row_word_of_counts(alpha, j):
    word = []
    for i in range(1, alpha.n + 1):
        word.extend([i] * alpha[(i, j)])
    return tuple(word)


def rc_decode(alpha, beta, nu=()):
    """Inverse of rc_encode: rebuild the unique same-shape classical pair
    with the given row contents and joint kernel."""
    if not (alpha.is_classical() and beta.is_classical()):
        raise ValueError("rc_decode requires rows at positive indices")
    if not balanced(alpha, beta):
        raise ValueError("row coordinate matrices are not balanced")
    nu = Partition(nu)
    rows = set(alpha.rows()) | set(beta.rows())
    L = max(rows, default=0)
    p_words = [_row_word_of_counts(alpha, j) for j in range(1, L + 2)]
    q_words = [_row_word_of_counts(beta, j) for j in range(1, L + 2)]
    theta = [len(w) for w in p_words]
    # empty-shape profile η from row-to-row overlaps, built bottom-up
    eta = [0] * (L + 1)
    for j in range(L - 1, -1, -1):
        ov = min(overlap(p_words[j], p_words[j + 1]), overlap(q_words[j], q_words[j + 1]))
        eta[j] = eta[j + 1] + theta[j + 1] - ov
    la = [eta[j] + theta[j] + nu.part(j + 1) for j in range(L)]
    rho = [eta[j] + nu.part(j + 1) for j in range(L)]
    # ν may extend below the deepest occupied row as fully empty rows
    for j in range(L, len(nu)):
        la.append(nu.part(j + 1))
        rho.append(nu.part(j + 1))
    shape = GeneralizedSkewShape(1, la, rho)
    nrows = len(shape.outer)
    p_rows = [p_words[j] if j < len(p_words) else () for j in range(nrows)]
    q_rows = [q_words[j] if j < len(q_words) else () for j in range(nrows)]
    return SkewTableau(shape, p_rows, alpha.n), SkewTableau(shape, q_rows, beta.n)


def standardize(T):
    """Relabel the i-cells, for i ascending and left to right within each
    letter, with consecutive integers; output has all-ones content."""
    gamma = T.content()
    next_label = [0] * (T.n + 1)
    acc = 0
    for i in range(1, T.n + 1):
        next_label[i] = acc + 1
        acc += gamma[i - 1]
    # within letter i, order cells by column ascending
    cells_by_letter = {i: [] for i in range(1, T.n + 1)}
    for r, row in zip(T.shape.rows, T.rows):
        for idx, x in enumerate(row):
            c = T.shape.inner_at(r) + 1 + idx
            cells_by_letter[x].append((c, r))
    relabel = {}
    counters = list(next_label)
    for i in range(1, T.n + 1):
        for c, r in sorted(cells_by_letter[i]):
            relabel[(c, r)] = counters[i]
            counters[i] += 1
    new_rows = []
    for r, row in zip(T.shape.rows, T.rows):
        new_rows.append(
            tuple(
                relabel[(T.shape.inner_at(r) + 1 + idx, r)] for idx in range(len(row))
            )
        )
    return SkewTableau(T.shape, new_rows, max(T.size, 1))


def standardize_matrix(alpha):
    """Array 𝔞: per letter, the rows of its cells sorted weakly decreasing,
    concatenated for letters 1..n."""
    out = []
    for i in range(1, alpha.n + 1):
        out.extend(alpha.letter_rows(i))
    return tuple(out)


def rc_array(P):
    """Row coordinate array of a standard tableau: entry i is the row of
    the unique i-cell."""
    if not P.is_standard():
        raise ValueError("rc_array needs a standard tableau")
    pos = {}
    for r, row in zip(P.shape.rows, P.rows):
        for x in row:
            pos[x] = r
    return tuple(pos[i] for i in range(1, P.size + 1))


def enumerate_sst(shape, n):
    """All semistandard fillings of a shape with labels in 1..n (backtracking)."""
    rows_idx = list(shape.rows)
    cells = [
        (c, r) for r in rows_idx for c in range(shape.inner_at(r) + 1, shape.outer_at(r) + 1)
    ]

    def rec(k, filled):
        if k == len(cells):
            rows = [
                tuple(
                    filled[(c, r)]
                    for c in range(shape.inner_at(r) + 1, shape.outer_at(r) + 1)
                )
                for r in rows_idx
            ]
            yield SkewTableau(shape, rows, n)
            return
        c, r = cells[k]
        lo = 1
        left = filled.get((c - 1, r))
        if left is not None:
            lo = max(lo, left)
        above = filled.get((c, r - 1))
        if above is not None:
            lo = max(lo, above + 1)
        for x in range(lo, n + 1):
            filled[(c, r)] = x
            yield from rec(k + 1, filled)
        filled.pop((c, r), None)

    yield from rec(0, {})


def random_sst(shape, n, rng=None):
    """Uniform-ish random semistandard filling (greedy with random labels,
    retrying on dead ends); None if the shape admits no filling."""
    rng = rng or _random
    rows_idx = list(shape.rows)
    for _attempt in range(200):
        filled = {}
        ok = True
        for r in rows_idx:
            for c in range(shape.inner_at(r) + 1, shape.outer_at(r) + 1):
                lo = 1
                if (c - 1, r) in filled:
                    lo = max(lo, filled[(c - 1, r)])
                if (c, r - 1) in filled:
                    lo = max(lo, filled[(c, r - 1)] + 1)
                if lo > n:
                    ok = False
                    break
                filled[(c, r)] = rng.randint(lo, n)
            if not ok:
                break
        if ok:
            rows = [
                tuple(
                    filled[(c, r)]
                    for c in range(shape.inner_at(r) + 1, shape.outer_at(r) + 1)
                )
                for r in rows_idx
            ]
            return SkewTableau(shape, rows, n)
    return None
