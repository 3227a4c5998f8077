"""Vertically strict tableaux and general column tensors.

A vertically strict tableau of shape µ over the alphabet {1..n} fills the
Young diagram of µ with column-strict labels and no condition along rows.
Reading its columns left to right identifies it with a tensor product of
single-column factors of heights µ'_1, µ'_2, ...; dropping the requirement
that heights decrease gives a general column tensor, which appears as the
backward asymptotic state of the dynamics and as intermediate state of
R-matrix compositions.
"""

from itertools import combinations

from .partitions import Partition


class ColumnTensor:
    """A sequence of strictly increasing columns over {1..n}."""

    __slots__ = ("columns", "n")

    def __init__(self, columns, n):
        cols = tuple(tuple(col) for col in columns)
        for col in cols:
            if not col:
                raise ValueError("columns must be nonempty")
            if col[0] < 1 or col[-1] > n:
                raise ValueError(f"labels outside 1..{n}: {col}")
            for a, b in zip(col, col[1:]):
                if a >= b:
                    raise ValueError(f"column not strictly increasing: {col}")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @property
    def heights(self):
        return tuple(len(col) for col in self.columns)

    @property
    def size(self):
        return sum(len(col) for col in self.columns)

    def content(self):
        gamma = [0] * self.n
        for col in self.columns:
            for x in col:
                gamma[x - 1] += 1
        return tuple(gamma)

    def __eq__(self, other):
        return (
            isinstance(other, ColumnTensor)
            and self.n == other.n
            and self.columns == other.columns
        )

    def __hash__(self):
        return hash((self.n, self.columns))

    def __repr__(self):
        cols = ".".join("".join(map(str, col)) for col in self.columns)
        return f"{type(self).__name__}(n={self.n}, {cols})"


class VerticallyStrictTableau(ColumnTensor):
    """Column tensor whose heights weakly decrease, i.e. the columns fill
    the diagram of a partition shape µ with µ'_j = height of column j."""

    def __init__(self, columns, n):
        super().__init__(columns, n)
        h = self.heights
        if any(a < b for a, b in zip(h, h[1:])):
            raise ValueError("column heights must weakly decrease")

    @classmethod
    def from_rows(cls, rows, n):
        """Build from row lists, top row first, as printed."""
        rows = [tuple(row) for row in rows]
        width = len(rows[0]) if rows else 0
        cols = []
        for j in range(width):
            cols.append([row[j] for row in rows if len(row) > j])
        return cls(cols, n)

    @property
    def shape(self):
        """The partition µ with conjugate equal to the height profile."""
        return Partition(self.heights).transpose()

    def rows(self):
        """Row lists, top row first."""
        height = max(self.heights, default=0)
        return [
            tuple(col[i] for col in self.columns if len(col) > i)
            for i in range(height)
        ]


def enumerate_vst(mu, n):
    """All vertically strict tableaux of shape µ over {1..n}."""
    heights = Partition(mu).transpose()
    columns_by_height = {}
    out = [[]]
    for h in set(heights):
        columns_by_height[h] = [list(c) for c in combinations(range(1, n + 1), h)]
    for h in heights:
        out = [cols + [col] for cols in out for col in columns_by_height.get(h, [])]
    return [VerticallyStrictTableau(cols, n) for cols in out]
