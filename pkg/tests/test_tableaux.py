"""Shapes, semistandard tableaux, kernels, row-coordinate encodings."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from skewrsk.partitions import Partition
from skewrsk.tableaux import (
    GeneralizedSkewShape,
    RowCoordMatrix,
    SkewTableau,
    balanced,
    enumerate_sst,
    kernel,
    kernel_pair,
    overlap,
    random_sst,
    rc_array,
    rc_decode,
    rc_encode,
    rc_matrix,
    reading_word,
    standardize,
    standardize_matrix,
)

# ---------------------------------------------------------------- fixtures

# Semistandard tableau with rows (from the top): 3 empty cells then 2 4,
# 1 empty cell then 1 3 3 5, then 1 2 5.
T_WORDS = SkewTableau.from_rows(
    [(3, 2, 4), (1, 1, 3, 3, 5), (0, 1, 2, 5)], n=5
)

# Same filling pushed right: kernel (2,1).
T_KERNEL = SkewTableau.from_rows(
    [(5, 2, 4), (2, 1, 3, 3, 5), (0, 1, 2, 5)], n=5
)

# The standard (P,Q) pair used across the encoding examples.
P_RC = SkewTableau.from_rows([(3, 2), (2, 1, 3), (0, 1, 2)], n=3)
Q_RC = SkewTableau.from_rows([(3, 1), (2, 2, 2), (0, 1, 3)], n=3)


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


# ---------------------------------------------------------------- shapes


def test_shape_canonicalization():
    s = GeneralizedSkewShape(-1, (3, 3, 2, 0), (3, 1, 0, 0))
    # leading fully-empty row at index -1 trimmed, trailing zero row dropped
    assert s.base_row == 0
    assert s.outer == (3, 2)
    assert s.inner == (1, 0)


def test_shape_keeps_positive_empty_rows():
    s = GeneralizedSkewShape.from_partitions((2, 2), (2, 2))
    assert s.outer == (2, 2) and s.inner == (2, 2)
    assert s.size == 0
    # distinct from the truly empty shape
    assert s != GeneralizedSkewShape(1, (), ())


def test_shape_rejects_bad_profiles():
    with pytest.raises(ValueError):
        GeneralizedSkewShape(1, (2, 3), (0, 0))
    with pytest.raises(ValueError):
        GeneralizedSkewShape(1, (3, 2), (1, 2))
    with pytest.raises(ValueError):
        GeneralizedSkewShape(1, (3,), (4,))
    with pytest.raises(ValueError):
        GeneralizedSkewShape(2, (3,), (0,))


def test_shape_classical_round_trip():
    s = GeneralizedSkewShape.from_partitions((4, 3, 1), (2, 1))
    la, rho = s.classical_pair()
    assert la == (4, 3, 1) and rho == (2, 1)
    assert s.size == 8 - 3


# ---------------------------------------------------------------- tableaux


def test_tableau_validation():
    with pytest.raises(ValueError):  # row not weakly increasing
        SkewTableau.from_rows([(0, 2, 1)], n=3)
    with pytest.raises(ValueError):  # column not strict
        SkewTableau.from_rows([(0, 1, 1), (0, 1, 2)], n=3)
    with pytest.raises(ValueError):  # label out of alphabet
        SkewTableau.from_rows([(0, 4)], n=3)


def test_tableau_cell_access_and_content():
    assert T_WORDS.cell(4, 1) == 2
    assert T_WORDS.cell(1, 1) is None
    assert T_WORDS.cell(1, 3) == 1
    assert T_WORDS.content() == (2, 2, 2, 1, 2)


def test_reading_words_match_display():
    assert reading_word(T_WORDS, "row") == (1, 2, 5, 1, 3, 3, 5, 2, 4)
    assert reading_word(T_WORDS, "column") == (1, 2, 1, 5, 3, 3, 2, 5, 4)


def test_reading_words_trivial():
    empty = SkewTableau.empty(3)
    assert reading_word(empty, "row") == ()
    assert reading_word(empty, "column") == ()
    single = SkewTableau.from_rows([(0, 3)], n=3)
    assert reading_word(single, "row") == (3,)
    assert reading_word(single, "column") == (3,)


# ---------------------------------------------------------------- overlap


def overlap_by_simulation(A, B):
    """Independent oracle: ℓ(B) minus the empty-shape size of the minimal
    semistandard two-row tableau with row words A (top) and B (bottom)."""
    A, B = tuple(A), tuple(B)
    for off in range(max(0, len(B) - len(A)), len(B) + 1):
        ok = True
        for c in range(off + 1, min(len(B), off + len(A)) + 1):
            if not A[c - off - 1] < B[c - 1]:
                ok = False
                break
        if ok:
            return len(B) - off
    return 0


def test_overlap_examples():
    assert overlap((1, 3, 3, 5), (1, 2, 2, 3, 4)) == 2
    assert overlap((), (1, 2)) == 0
    assert overlap((1, 1), (2, 2)) == 2


def test_overlap_rejects_non_monotone():
    with pytest.raises(ValueError):
        overlap((2, 1), (1, 2))


@given(
    st.lists(st.integers(1, 5), max_size=5).map(sorted),
    st.lists(st.integers(1, 5), max_size=5).map(sorted),
)
def test_overlap_matches_simulation(A, B):
    assert overlap(A, B) == overlap_by_simulation(A, B)


# ---------------------------------------------------------------- kernel


def shift_rows_left(T, j, s):
    """Try to shift the first j rows of T left by s cells; None if invalid."""
    la, rho = T.shape.classical_pair()
    new_inner = []
    new_outer = []
    for idx in range(len(T.rows)):
        shift = s if idx < j else 0
        if T.shape.inner[idx] - shift < 0:
            return None
        new_inner.append(T.shape.inner[idx] - shift)
        new_outer.append(T.shape.outer[idx] - shift)
    try:
        shape = GeneralizedSkewShape(1, new_outer, new_inner)
        return SkewTableau(shape, T.rows[: len(shape.outer)], T.n)
    except ValueError:
        return None


def kernel_by_shifting(tableaux):
    """Independent oracle for (joint) kernels via literal shifting."""
    la, _ = tableaux[0].shape.classical_pair()
    ell = len(la)
    diffs = []
    for j in range(1, ell + 1):
        s = 0
        while all(shift_rows_left(T, j, s + 1) is not None for T in tableaux):
            s += 1
        diffs.append(s)
    kappa = []
    total = 0
    for d in reversed(diffs):
        total += d
        kappa.append(total)
    return Partition(reversed(kappa))


def test_kernel_example():
    assert kernel(T_KERNEL) == (2, 1)


def test_kernel_flush_tableau_is_empty():
    flush = SkewTableau.from_rows([(0, 1, 1), (0, 2)], n=2)
    assert kernel(flush) == ()


def test_kernel_pair_example():
    assert kernel_pair(P_RC, Q_RC) == (1, 1)


def test_kernel_matches_shifting_oracle():
    rng = random.Random(7)
    for _ in range(60):
        P, Q = random_classical_pair(rng)
        assert kernel(P) == kernel_by_shifting([P])
        assert kernel_pair(P, Q) == kernel_by_shifting([P, Q])


def test_kernel_rejects_generalized():
    T = SkewTableau.from_rows([(0, 1), (0, 2)], n=2, base_row=0)
    with pytest.raises(ValueError):
        kernel(T)


# ------------------------------------------------------- row coordinates


def test_rc_encode_matches_display():
    alpha, beta, nu = rc_encode(P_RC, Q_RC)
    assert alpha == RowCoordMatrix(
        3, {(1, 2): 1, (1, 3): 1, (2, 1): 1, (2, 3): 1, (3, 2): 1}
    )
    assert beta == RowCoordMatrix(
        3, {(1, 1): 1, (1, 3): 1, (2, 2): 2, (3, 3): 1}
    )
    assert nu == (1, 1)


def test_rc_decode_rebuilds_display_pair():
    alpha, beta, nu = rc_encode(P_RC, Q_RC)
    P, Q = rc_decode(alpha, beta, nu)
    assert P == P_RC and Q == Q_RC


def test_rc_empty_round_trip():
    a = RowCoordMatrix(2, {})
    P, Q = rc_decode(a, a, ())
    assert P.size == 0 and Q.size == 0
    alpha, beta, nu = rc_encode(P, Q)
    assert alpha == a and beta == a and nu == ()


def test_rc_decode_rejects_unbalanced():
    a = RowCoordMatrix(2, {(1, 1): 1})
    b = RowCoordMatrix(2, {(1, 2): 1})
    assert not balanced(a, b)
    with pytest.raises(ValueError):
        rc_decode(a, b, ())


def test_rc_round_trip_random():
    rng = random.Random(11)
    for _ in range(200):
        P, Q = random_classical_pair(rng, n=4, max_cols=4)
        alpha, beta, nu = rc_encode(P, Q)
        P2, Q2 = rc_decode(alpha, beta, nu)
        assert P2 == P and Q2 == Q


def test_rc_decode_with_deep_kernel():
    # ν longer than the occupied rows adds fully empty rows below
    a = RowCoordMatrix(2, {(1, 1): 1})
    P, Q = rc_decode(a, a, (2, 1, 1))
    la, rho = P.shape.classical_pair()
    assert la == (3, 1, 1) and rho == (2, 1, 1)
    alpha, beta, nu = rc_encode(P, Q)
    assert (alpha, beta, nu) == (a, a, Partition((2, 1, 1)))


# --------------------------------------------------------- standardization


def test_standardize_example():
    got = standardize(P_RC)
    want = SkewTableau.from_rows([(3, 4), (2, 2, 5), (0, 1, 3)], n=5)
    assert got == want


def test_standardize_matrix_example():
    alpha = rc_matrix(P_RC)
    assert standardize_matrix(alpha) == (3, 2, 3, 1, 2)


def test_standardize_fixed_point():
    std = standardize(P_RC)
    assert standardize(std) == std
    assert std.is_standard()


def test_standardize_commutes_with_rc():
    rng = random.Random(13)
    for _ in range(100):
        P, _ = random_classical_pair(rng, n=4)
        assert rc_array(standardize(P)) == standardize_matrix(rc_matrix(P))


# ---------------------------------------------------------------- misc


def test_enumerate_sst_counts():
    # SST of shape (2,1) with 3 letters: 8 of them (Kostka numbers sum)
    shape = GeneralizedSkewShape.from_partitions((2, 1))
    assert sum(1 for _ in enumerate_sst(shape, 3)) == 8


def test_enumerate_sst_all_valid():
    shape = GeneralizedSkewShape.from_partitions((2, 2), (1,))
    for T in enumerate_sst(shape, 3):
        assert T.content() and T.size == 3
