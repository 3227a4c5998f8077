"""Internal insertion, the cycling operators, and the skew RSK map."""

import random

import pytest

from skewrsk.partitions import Partition
from skewrsk.tableaux import (
    GeneralizedSkewShape,
    SkewTableau,
    kernel_pair,
    overlap,
    random_sst,
    rc_array,
    standardize,
)
from skewrsk.insertion import (
    internal_insert,
    iota1,
    iota1_inverse,
    iota2,
    iota2_inverse,
    run_dynamics,
    skew_rsk,
    skew_rsk_inverse,
    swap,
)

from conftest import random_classical_pair, random_mixed_pair

# ---------------------------------------------------------------- fixtures

# The 5-letter pair used throughout the worked examples.
P0 = SkewTableau.from_rows([(3, 1), (1, 2, 3, 4), (0, 1, 3, 5), (0, 2)], n=5)
Q0 = SkewTableau.from_rows([(3, 2), (1, 1, 3, 3), (0, 2, 2, 5), (0, 3)], n=5)

# iota2(P0, Q0)
P0_I2 = SkewTableau.from_rows([(3, 1), (2, 3, 4), (0, 1, 2, 5), (0, 2, 3)], n=5)
Q0_I2 = SkewTableau.from_rows([(3, 1), (2, 2, 2), (0, 1, 1, 4), (0, 2, 5)], n=5)

# iota2_inverse(P0, Q0); the chain exits above the original top row.
P0_I2INV = SkewTableau.from_rows(
    [(3, 1), (3, 4), (1, 2, 3, 5), (0, 1, 3), (0, 2)], n=5, base_row=0
)
Q0_I2INV = SkewTableau.from_rows(
    [(3, 1), (3, 3), (1, 2, 4, 4), (0, 3, 3), (0, 4)], n=5, base_row=0
)

# skew_rsk(P0, Q0)
P0_RSK = SkewTableau.from_rows(
    [(4,), (4,), (3, 4), (1, 1, 3), (0, 1, 2, 5), (0, 2, 3)], n=5
)
Q0_RSK = SkewTableau.from_rows(
    [(4,), (4,), (3, 3), (1, 1, 2), (0, 2, 2, 3), (0, 3, 5)], n=5
)

# The standard 3-letter pair and its image under the skew RSK map.
P1 = SkewTableau.from_rows([(3, 2), (2, 1, 3), (0, 1, 2)], n=3)
Q1 = SkewTableau.from_rows([(3, 1), (2, 2, 2), (0, 1, 3)], n=3)
P1_RSK = SkewTableau.from_rows([(4,), (4,), (2, 2), (0, 1, 1, 3), (0, 2)], n=3)
Q1_RSK = SkewTableau.from_rows([(4,), (4,), (2, 1), (0, 1, 2, 2), (0, 3)], n=3)

# Ten forward iterations of the map on (P0, Q0): the labels have split
# into blocks travelling with speeds 3, 2, 2, 1 per column.
P10 = SkewTableau.from_rows(
    [(4,)] * 11
    + [(3, 4)]
    + [(3,)] * 9
    + [(2, 3), (1, 1, 5), (1, 2)]
    + [(1,)] * 6
    + [(0, 1), (0, 2), (0, 3)],
    n=5,
)
Q10 = SkewTableau.from_rows(
    [(4,)] * 11
    + [(3, 3)]
    + [(3,)] * 9
    + [(2, 2), (1, 2, 3), (1, 5)]
    + [(1,)] * 6
    + [(0, 1), (0, 2), (0, 3)],
    n=5,
)

# Eleven iterations: the same labels, each column shifted down by its
# own height (stable regime).
P11 = SkewTableau.from_rows(
    [(4,)] * 12
    + [(3, 4)]
    + [(3,)] * 10
    + [(2, 3), (1, 1, 5), (1, 2)]
    + [(1,)] * 7
    + [(0, 1), (0, 2), (0, 3)],
    n=5,
)
Q11 = SkewTableau.from_rows(
    [(4,)] * 12
    + [(3, 3)]
    + [(3,)] * 10
    + [(2, 2), (1, 2, 3), (1, 5)]
    + [(1,)] * 7
    + [(0, 1), (0, 2), (0, 3)],
    n=5,
)

# Ten backward iterations: blocks escape upward, tallest first.
P_M10 = SkewTableau.from_rows(
    [(3, 1), (3, 4), (3, 5)]
    + [(3,)] * 8
    + [(2, 2), (1, 1, 3), (1, 3)]
    + [(1,)] * 7
    + [(0, 2)],
    n=5,
    base_row=-29,
)
Q_M10 = SkewTableau.from_rows(
    [(3, 2), (3, 3), (3, 5)]
    + [(3,)] * 8
    + [(2, 1), (1, 2, 3), (1, 3)]
    + [(1,)] * 7
    + [(0, 2)],
    n=5,
    base_row=-29,
)


# ------------------------------------------------- independent oracles


def rs_arrays_oracle(a, b):
    """Row-coordinate arrays pushed through the grid of local moves.

    West edges of the first column carry ``a``, south edges of the first
    row carry ``b``.  At each face equal incoming values exit increased
    by one on both outgoing edges; different values pass straight
    through.  Returns the east and north boundary arrays.
    """
    east = list(a)
    north = []
    for s0 in b:
        s = s0
        for i in range(len(east)):
            if east[i] == s:
                east[i] = s + 1
                s += 1
        north.append(s)
    return tuple(east), tuple(north)


def iota2_arrays_oracle(a, b):
    """One column of local moves plus the cyclic rotation of ``b``."""
    east, north = rs_arrays_oracle(a, b[:1])
    return east, tuple(b[1:]) + north


# ---------------------------------------------------------------- goldens


def test_internal_insert_golden():
    assert internal_insert(P0, 2) == P0_I2


def test_internal_insert_empty_row():
    P = SkewTableau.from_rows([(2,), (0, 1, 2)], n=3)
    out = internal_insert(P, 1)
    assert out == SkewTableau.from_rows([(3,), (0, 1, 2)], n=3)


def test_internal_insert_rejects_non_corner():
    # row 2 starts flush with row 1: no internal corner there
    P = SkewTableau.from_rows([(0, 1, 2), (0, 2, 3)], n=3)
    with pytest.raises(ValueError):
        internal_insert(P, 2)


def test_iota2_golden():
    assert iota2(P0, Q0) == (P0_I2, Q0_I2)


def test_iota2_inverse_golden():
    assert iota2_inverse(P0, Q0) == (P0_I2INV, Q0_I2INV)


def positive_slacks(P, Q):
    """Sorted positive per-interface left-shift slacks of a same-shape pair.

    Works for generalized shapes, where the kernel partition itself is not
    defined; the multiset of positive slacks is what the cycling maps leave
    unchanged.
    """
    sh = P.shape
    out = []
    for r in sh.rows:
        ov = min(
            overlap(P.row_word(r), P.row_word(r + 1)),
            overlap(Q.row_word(r), Q.row_word(r + 1)),
        )
        out.append(sh.inner_at(r) - sh.outer_at(r + 1) + ov)
    return tuple(sorted((s for s in out if s > 0), reverse=True))


def test_iota2_inverse_three_chains():
    # three reverse chains all climb past the top row; the fresh row's
    # offset must keep the pair's slack structure unchanged
    P = SkewTableau.from_rows([(0, 1, 1, 1, 3), (0, 2, 2), (0, 3, 3)], 3)
    Q = SkewTableau.from_rows([(0, 1, 1, 2, 3), (0, 2, 2), (0, 3, 3)], 3)
    Pb = SkewTableau.from_rows([(1, 1, 1, 3), (0, 1, 2, 2), (0, 3, 3)], 3, base_row=0)
    Qb = SkewTableau.from_rows([(1, 1, 1, 1), (0, 2, 2, 3), (0, 3, 3)], 3, base_row=0)
    assert iota2_inverse(P, Q) == (Pb, Qb)
    assert iota2(Pb, Qb) == (P, Q)
    assert positive_slacks(Pb, Qb) == positive_slacks(P, Q)


def test_skew_rsk_golden():
    assert skew_rsk(P0, Q0) == (P0_RSK, Q0_RSK)


def test_skew_rsk_three_letter_golden():
    assert skew_rsk(P1, Q1) == (P1_RSK, Q1_RSK)


def test_forward_dynamics_golden():
    assert run_dynamics(P0, Q0, 10) == (P10, Q10)
    assert skew_rsk(P10, Q10) == (P11, Q11)


def test_backward_dynamics_golden():
    assert run_dynamics(P0, Q0, -10) == (P_M10, Q_M10)


# ------------------------------------------------------------- properties


def test_iota2_round_trip():
    rng = random.Random(11)
    for _ in range(80):
        P, Q = random_classical_pair(rng)
        assert iota2_inverse(*iota2(P, Q)) == (P, Q)
        assert iota2(*iota2_inverse(P, Q)) == (P, Q)


def test_iota1_round_trip():
    rng = random.Random(12)
    for _ in range(60):
        P, Q = random_classical_pair(rng)
        assert iota1_inverse(*iota1(P, Q)) == (P, Q)
        assert iota1(*iota1_inverse(P, Q)) == (P, Q)


def test_iota_operators_commute():
    rng = random.Random(13)
    for _ in range(60):
        P, Q = random_classical_pair(rng)
        assert iota1(*iota2(P, Q)) == iota2(*iota1(P, Q))


def test_skew_rsk_is_iterated_cycling():
    rng = random.Random(14)
    for _ in range(40):
        P, Q = random_classical_pair(rng)
        by_iota2 = (P, Q)
        by_iota1 = (P, Q)
        for _ in range(Q.n):
            by_iota2 = iota2(*by_iota2)
            by_iota1 = iota1(*by_iota1)
        assert skew_rsk(P, Q) == by_iota2 == by_iota1


def test_swap_symmetry():
    rng = random.Random(15)
    for _ in range(40):
        P, Q = random_mixed_pair(rng)
        P2, Q2 = skew_rsk(P, Q)
        assert skew_rsk(Q, P) == (Q2, P2)


def test_kernel_preserved():
    rng = random.Random(16)
    for _ in range(60):
        P, Q = random_classical_pair(rng)
        nu = kernel_pair(P, Q)
        assert kernel_pair(*iota2(P, Q)) == nu
        assert kernel_pair(*iota1(P, Q)) == nu
        assert kernel_pair(*skew_rsk(P, Q)) == nu
        # inverses may leave the classical region, where only the multiset
        # of positive slacks survives
        slacks = positive_slacks(P, Q)
        assert positive_slacks(*iota2_inverse(P, Q)) == slacks
        assert positive_slacks(*iota1_inverse(P, Q)) == slacks
        assert positive_slacks(*run_dynamics(P, Q, -2)) == slacks


def test_contents_preserved():
    rng = random.Random(17)
    for _ in range(60):
        P, Q = random_classical_pair(rng)
        P2, Q2 = skew_rsk(P, Q)
        assert P2.content() == P.content()
        assert Q2.content() == Q.content()
        # one cycling step rotates the content of the recording tableau
        P3, Q3 = iota2(P, Q)
        assert P3.content() == P.content()
        c = Q.content()
        assert Q3.content() == c[1:] + c[:1]


def test_shape_contract_mixed_alphabets():
    rng = random.Random(18)
    for _ in range(40):
        P, Q = random_mixed_pair(rng)
        P2, Q2 = skew_rsk(P, Q)
        assert P2.n == P.n and Q2.n == Q.n
        assert P2.shape.outer == Q2.shape.outer
        la, rho = P.shape.classical_pair()
        mu, _ = Q.shape.classical_pair()
        la2, inner_p = P2.shape.classical_pair()
        _, inner_q = Q2.shape.classical_pair()
        assert inner_p == mu
        assert inner_q == la
        assert P2.content() == P.content()
        assert Q2.content() == Q.content()


def test_standardization_commutes_with_cycling():
    rng = random.Random(19)
    for _ in range(50):
        P, Q = random_classical_pair(rng)
        for op, counter in ((iota2, Q), (iota1, P)):
            reps = counter.content()[0]  # number of 1-cells driving the step
            spair = (standardize(P), standardize(Q))
            for _ in range(reps):
                spair = op(*spair)
            P2, Q2 = op(P, Q)
            assert (standardize(P2), standardize(Q2)) == spair


def test_standard_pair_matches_array_oracle():
    rng = random.Random(20)
    for _ in range(60):
        P, Q = random_classical_pair(rng)
        SP, SQ = standardize(P), standardize(Q)
        a, b = rc_array(SP), rc_array(SQ)
        P2, Q2 = skew_rsk(SP, SQ)
        assert (rc_array(P2), rc_array(Q2)) == rs_arrays_oracle(a, b)
        P3, Q3 = iota2(SP, SQ)
        assert (rc_array(P3), rc_array(Q3)) == iota2_arrays_oracle(a, b)


def test_run_dynamics_composition():
    rng = random.Random(21)
    for _ in range(15):
        P, Q = random_classical_pair(rng)
        assert run_dynamics(P, Q, 0) == (P, Q)
        assert run_dynamics(P, Q, 3) == run_dynamics(*run_dynamics(P, Q, 2), 1)
        fwd = run_dynamics(P, Q, 2)
        assert run_dynamics(*fwd, -2) == (P, Q)
        back = run_dynamics(P, Q, -2)
        assert run_dynamics(*back, 2) == (P, Q)
        assert skew_rsk_inverse(*skew_rsk(P, Q)) == (P, Q)


def test_trace_records_row_moves():
    trace = []
    skew_rsk(P0, Q0, trace=trace)
    assert trace, "bumping moves should be recorded"
    for level, value, src, dst in trace:
        assert 1 <= level <= Q0.n
        assert 1 <= value <= P0.n
        assert dst == src + 1


def test_empty_pair():
    empty = SkewTableau.empty(3)
    assert skew_rsk(empty, empty) == (empty, empty)
    assert run_dynamics(empty, empty, 4) == (empty, empty)
    assert run_dynamics(empty, empty, -4) == (empty, empty)


def test_swap_helper():
    assert swap((P0, Q0)) == (Q0, P0)
