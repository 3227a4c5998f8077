"""Weighted biwords and their matrix encodings.

A weighted biword is a finite multiset of columns (q, p, w) with q in
1..m, p in 1..n and w any integer.  Canonical storage sorts columns by
(q, p) lexicographically, breaking full ties by weakly decreasing w.
The timetable ordering instead sorts by weakly decreasing w, then q, then
p, both ascending.
"""

from __future__ import annotations


def _canonical(entries):
    return tuple(sorted(entries, key=lambda t: (t[0], t[1], -t[2])))


class WeightedBiword:
    """Multiset of (q, p, w) columns in canonical order; p ≤ n, q ≤ m."""

    __slots__ = ("n", "m", "entries")

    def __init__(self, n, m, entries):
        entries = [(int(q), int(p), int(w)) for q, p, w in entries]
        for q, p, w in entries:
            if not 1 <= q <= m:
                raise ValueError(f"q letter {q} outside alphabet 1..{m}")
            if not 1 <= p <= n:
                raise ValueError(f"p letter {p} outside alphabet 1..{n}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "entries", _canonical(entries))

    def __setattr__(self, name, value):
        raise AttributeError("WeightedBiword is immutable")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, WeightedBiword)
            and (self.n, self.m, self.entries) == (other.n, other.m, other.entries)
        )

    def __hash__(self):
        return hash((self.n, self.m, self.entries))

    def __repr__(self):
        return f"WeightedBiword(n={self.n}, m={self.m}, {list(self.entries)})"

    # ------------------------------------------------------------ views

    def timetable(self):
        """Columns rearranged by weakly decreasing w, ties by q then p."""
        return tuple(sorted(self.entries, key=lambda t: (-t[2], t[0], t[1])))

    def weight(self):
        return sum(w for _, _, w in self.entries)

    def invert(self):
        """Swap the p and q rows (matrix transpose)."""
        return WeightedBiword(self.m, self.n, [(p, q, w) for q, p, w in self.entries])

    def union(self, other):
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("alphabet sizes differ")
        return WeightedBiword(self.n, self.m, self.entries + other.entries)

    def cylinder_points(self):
        """Multiset of points (q, p − n·w) on the twisted cylinder, sorted."""
        return tuple(sorted((q, p - self.n * w) for q, p, w in self.entries))

    def is_nonnegative(self):
        return all(w >= 0 for _, _, w in self.entries)

    def is_weighted_word(self):
        """q row equal to 1, 2, ..., k."""
        return [q for q, _, _ in self.entries] == list(range(1, len(self.entries) + 1))

    def is_partial_permutation(self):
        qs = [q for q, _, _ in self.entries]
        ps = [p for _, p, _ in self.entries]
        return len(set(qs)) == len(qs) and len(set(ps)) == len(ps)

    def content_p(self):
        gamma = [0] * self.n
        for _, p, _ in self.entries:
            gamma[p - 1] += 1
        return tuple(gamma)

    def content_q(self):
        gamma = [0] * self.m
        for q, _, _ in self.entries:
            gamma[q - 1] += 1
        return tuple(gamma)

    def to_matrix(self):
        support = {}
        for q, p, w in self.entries:
            key = (p, q, w)
            support[key] = support.get(key, 0) + 1
        return MatrixBar(self.n, self.m, support)


class MatrixBar:
    """Weighted integer matrix: (i, j, k) → multiplicity, i ≤ n, j ≤ m.

    Entry (i, j, k) counts columns (q=j, p=i, w=k) of the biword.
    """

    __slots__ = ("n", "m", "support")

    def __init__(self, n, m, support):
        cleaned = {}
        for (i, j, k), c in dict(support).items():
            c = int(c)
            if c < 0:
                raise ValueError("negative multiplicity")
            if c:
                if not 1 <= i <= n:
                    raise ValueError(f"row letter {i} outside 1..{n}")
                if not 1 <= j <= m:
                    raise ValueError(f"column letter {j} outside 1..{m}")
                cleaned[(int(i), int(j), int(k))] = c
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "support", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixBar is immutable")

    def __getitem__(self, ijk):
        return self.support.get(ijk, 0)

    def __eq__(self, other):
        return (
            isinstance(other, MatrixBar)
            and (self.n, self.m, self.support) == (other.n, other.m, other.support)
        )

    def __hash__(self):
        return hash((self.n, self.m, tuple(sorted(self.support.items()))))

    def __repr__(self):
        return f"MatrixBar(n={self.n}, m={self.m}, {dict(sorted(self.support.items()))})"

    def weight(self):
        return sum(k * c for (_, _, k), c in self.support.items())

    @property
    def size(self):
        return sum(self.support.values())

    def is_nonnegative(self):
        return all(k >= 0 for (_, _, k) in self.support)

    def transpose(self):
        return MatrixBar(
            self.m, self.n, {(j, i, k): c for (i, j, k), c in self.support.items()}
        )

    def add(self, other):
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("dimensions differ")
        support = dict(self.support)
        for key, c in other.support.items():
            support[key] = support.get(key, 0) + c
        return MatrixBar(self.n, self.m, support)

    def to_biword(self):
        entries = []
        for (i, j, k), c in self.support.items():
            entries.extend([(j, i, k)] * c)
        return WeightedBiword(self.n, self.m, entries)

    # ------------------------------------------------ map view M̄(j, x)

    def as_map(self, j, x):
        """Value of the map view at (j, x) with x = i − k·n."""
        i = (x - 1) % self.n + 1
        k = (i - x) // self.n
        return self.support.get((i, j, k), 0)

    @classmethod
    def from_map(cls, n, m, mapping):
        """Build from {(j, x): count} with x = i − k·n."""
        support = {}
        for (j, x), c in mapping.items():
            i = (x - 1) % n + 1
            k = (i - x) // n
            support[(i, j, k)] = support.get((i, j, k), 0) + c
        return cls(n, m, support)

    def map_support(self):
        """The map view as a dict {(j, x): count}."""
        out = {}
        for (i, j, k), c in self.support.items():
            out[(j, i - k * self.n)] = out.get((j, i - k * self.n), 0) + c
        return out


def from_word(word, weights=None, n=None):
    """Weighted word: q row forced to 1..k."""
    word = list(word)
    k = len(word)
    if weights is None:
        weights = [0] * k
    n = n or max(word, default=1)
    return WeightedBiword(n, k, [(i + 1, p, w) for i, (p, w) in enumerate(zip(word, weights))])
