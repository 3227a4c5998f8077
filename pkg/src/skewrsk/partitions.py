"""Integer partitions and compositions.

A partition is stored as a tuple of weakly decreasing positive parts
(trailing zeros dropped).  Helper functions treat indices 1-based where
the mathematical convention does, but the `Partition` class itself is a
thin tuple wrapper with 0-based Python indexing.
"""

from __future__ import annotations

import itertools


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    def part(self, i):
        """1-based part access with zero padding: part(i) = λ_i, 0 beyond length."""
        if i < 1:
            raise IndexError("partition parts are 1-based")
        return self[i - 1] if i <= len(self) else 0

    @property
    def size(self):
        return sum(self)

    def transpose(self):
        """Conjugate partition λ': λ'_i = #{j : λ_j ≥ i}."""
        if not self:
            return Partition()
        return Partition(
            sum(1 for p in self if p >= i) for i in range(1, self[0] + 1)
        )

    def contains(self, other):
        """True if other ⊆ self cellwise (ρ ⊆ λ)."""
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    def add(self, other):
        """Partwise sum (always a partition when both are partitions)."""
        n = max(len(self), len(other))
        return Partition(self.part(i) + Partition(other).part(i) for i in range(1, n + 1))

    def __repr__(self):
        return f"Partition({tuple(self)})"


def rectangular_decomposition(mu):
    """Split the columns of µ into maximal blocks of equal height.

    Returns a list of triples (R_i, r_i, h_i) for i = 1..N where
    0 = R₀ < R₁ < ... < R_N = µ₁ index the block boundaries,
    r_i = R_i − R_{i−1} is the block width and h_i the common column
    height µ'_j for j in (R_{i−1}, R_i].  Heights strictly decrease.
    """
    mu = Partition(mu)
    if not mu:
        return []
    cols = mu.transpose()
    blocks = []
    prev_R = 0
    for height, run in itertools.groupby(cols):
        width = len(list(run))
        R = prev_R + width
        blocks.append((R, width, height))
        prev_R = R
    return blocks


def partitions_of(n, max_part=None):
    """Yield all partitions of n (as Partition), parts bounded by max_part."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_in_box(rows, cols):
    """Yield all partitions with at most `rows` parts, each at most `cols`."""
    def rec(remaining_rows, bound):
        yield ()
        if remaining_rows == 0:
            return
        for first in range(1, bound + 1):
            for rest in rec(remaining_rows - 1, first):
                yield (first,) + rest

    for parts in rec(rows, cols):
        yield Partition(parts)


def sort_to_partition(kappa):
    """ϰ⁺: sort a finite non-negative composition into a partition."""
    return Partition(sorted((k for k in kappa if k > 0), reverse=True))


def odd_columns(la):
    """Number of odd parts of λ' — i.e. number of columns of odd height."""
    return sum(1 for p in Partition(la).transpose() if p % 2 == 1)


def odd_parts(kappa):
    """Number of odd entries in a composition (not necessarily sorted)."""
    return sum(1 for k in kappa if k % 2 == 1)
