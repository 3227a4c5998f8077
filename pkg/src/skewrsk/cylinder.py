"""Lattice local rules, matrix forms of the insertion maps, and the
periodic shadow-line dynamics on the twisted cylinder.

Edges carry either plain integers or finitely supported count sequences
over colors, stored as {color: positive count} dicts.  Each face turns its
west and south values into east and north values; sweeping a rectangle
column by column realizes the matrix form of row insertion, and gluing
faces by the twisted identification (j, i) ~ (j + kn, i - kn) extends the
picture to the cylinder, where the color-t meeting points reproduce the
shadow-line dynamics of weighted matrices.
"""

from __future__ import annotations

import heapq

from .biwords import MatrixBar
from .engine import default_step_cap
from .insertion import skew_rsk, skew_rsk_inverse
from .partitions import Partition
from .tableaux import (
    GeneralizedSkewShape,
    RowCoordMatrix,
    SkewTableau,
    kernel_pair,
    rc_matrix,
)


# ------------------------------------------------------------ the cylinder


def canonical_face(j, i, n):
    """Representative of the face (j, i) with column in 1..n."""
    j0 = (j - 1) % n + 1
    return j0, i + (j - j0)


class CylinderPoint:
    """A face of the twisted cylinder, kept in canonical coordinates."""

    __slots__ = ("j", "i", "n")

    def __init__(self, j, i, n):
        if n < 1:
            raise ValueError("modulus must be positive")
        j0, i0 = canonical_face(int(j), int(i), int(n))
        object.__setattr__(self, "j", j0)
        object.__setattr__(self, "i", i0)
        object.__setattr__(self, "n", int(n))

    def __setattr__(self, name, value):
        raise AttributeError("CylinderPoint is immutable")

    def shift(self, dj=0, di=0):
        return CylinderPoint(self.j + dj, self.i + di, self.n)

    def __eq__(self, other):
        return (
            isinstance(other, CylinderPoint)
            and (self.j, self.i, self.n) == (other.j, other.i, other.n)
        )

    def __hash__(self):
        return hash((self.j, self.i, self.n))

    def __repr__(self):
        return f"CylinderPoint(j={self.j}, i={self.i}, n={self.n})"


# ------------------------------------------------------------- local rules


def _clean_counts(value):
    out = {}
    for k, c in dict(value).items():
        c = int(c)
        if c < 0:
            raise ValueError("edge counts must be nonnegative")
        if c:
            out[int(k)] = c
    return out


def _face_forward(west, south):
    """(east, north, bullets) of one face.

    Integer edges: equal values k turn into k+1 on both outgoing edges and
    leave one bullet of color k+1; unequal values pass through.  Counting
    edges: for every color, the matched part of west and south is peeled
    off and re-emitted one color higher, leaving that many bullets of the
    higher color."""
    if isinstance(west, dict) != isinstance(south, dict):
        raise ValueError("edge kinds of a face must agree")
    if not isinstance(west, dict):
        if west == south:
            return west + 1, west + 1, {west + 1: 1}
        return west, south, {}
    keys = set(west) | set(south)
    meet = {}
    for k in keys:
        m = min(west.get(k, 0), south.get(k, 0))
        if m:
            meet[k] = m
    east, north = {}, {}
    for k in keys | {k + 1 for k in meet}:
        e = west.get(k, 0) - meet.get(k, 0) + meet.get(k - 1, 0)
        n = south.get(k, 0) - meet.get(k, 0) + meet.get(k - 1, 0)
        if e:
            east[k] = e
        if n:
            north[k] = n
    return east, north, {k + 1: m for k, m in meet.items()}


def _face_backward(east, north):
    """Unique (west, south) a face maps to the given (east, north)."""
    if isinstance(east, dict) != isinstance(north, dict):
        raise ValueError("edge kinds of a face must agree")
    if not isinstance(east, dict):
        if east == north:
            return east - 1, east - 1
        return east, north
    keys = set(east) | set(north)
    meet = {}
    for k in keys:
        m = min(east.get(k, 0), north.get(k, 0))
        if m:
            meet[k] = m
    west, south = {}, {}
    for k in keys | {k - 1 for k in meet}:
        w = east.get(k, 0) - meet.get(k, 0) + meet.get(k + 1, 0)
        s = north.get(k, 0) - meet.get(k, 0) + meet.get(k + 1, 0)
        if w:
            west[k] = w
        if s:
            south[k] = s
    return west, south


def apply_local_rule(west, south):
    """East edge, north edge, and bullets of the face with the given
    west/south edge values."""
    if isinstance(west, dict):
        west = _clean_counts(west)
    if isinstance(south, dict):
        south = _clean_counts(south)
    return _face_forward(west, south)


def apply_local_rule_inverse(east, north):
    """West and south edge values of the face with the given east/north."""
    if isinstance(east, dict):
        east = _clean_counts(east)
    if isinstance(north, dict):
        north = _clean_counts(north)
    return _face_backward(east, north)


def _face_bullets(west, south):
    if not isinstance(west, dict):
        return {west + 1: 1} if west == south else {}
    return _face_forward(west, south)[2]


# --------------------------------------------------------- configurations


class EdgeConfig:
    """Per-face edge records of a swept lattice window.

    faces maps (j, i) to {"W": v, "S": v, "E": v, "N": v}.  On a plain
    rectangle the coordinates are local (columns 1..m, rows 1..n) and
    modulus is None; on a cylinder window they are canonical twisted
    coordinates and modulus is the gluing period.
    """

    def __init__(self, faces, modulus=None):
        self.faces = {
            (int(j), int(i)): dict(rec) for (j, i), rec in dict(faces).items()
        }
        self.modulus = modulus

    def _canon(self, j, i):
        if self.modulus is None:
            return j, i
        return canonical_face(j, i, self.modulus)

    def validate(self):
        """Check the face rule at every face and edge agreement between
        neighboring faces; raises on the first defect."""
        for (j, i), rec in sorted(self.faces.items()):
            east, north, _ = _face_forward(rec["W"], rec["S"])
            if east != rec["E"] or north != rec["N"]:
                raise ValueError(f"face ({j},{i}) breaks the local rule")
            right = self.faces.get(self._canon(j + 1, i))
            if right is not None and right["W"] != rec["E"]:
                raise ValueError(f"east edge of ({j},{i}) disagrees with its neighbor")
            above = self.faces.get(self._canon(j, i + 1))
            if above is not None and above["S"] != rec["N"]:
                raise ValueError(f"north edge of ({j},{i}) disagrees with its neighbor")
        return True

    def bullets(self):
        """Meeting points: {(j, i, color): count} over all faces."""
        out = {}
        for (j, i), rec in self.faces.items():
            for k, c in _face_bullets(rec["W"], rec["S"]).items():
                out[(j, i, k)] = out.get((j, i, k), 0) + c
        return out

    def pair_at(self, corner):
        """The matrix pair read from the window with base corner c:
        alpha rows are the west edges of c, c+e2, ..., and beta rows the
        south edges of c, c+e1, ...; requires a cylinder window."""
        if self.modulus is None:
            raise ValueError("window reads need a cylinder configuration")
        n = self.modulus
        j0, i0 = corner
        a_support, b_support = {}, {}
        for i in range(1, n + 1):
            west = self.faces[self._canon(j0, i0 + i - 1)]["W"]
            south = self.faces[self._canon(j0 + i - 1, i0)]["S"]
            for k, c in west.items():
                a_support[(i, k)] = c
            for k, c in south.items():
                b_support[(i, k)] = c
        return RowCoordMatrix(n, a_support), RowCoordMatrix(n, b_support)

    def to_records(self):
        """JSON-ready per-face records, sorted by face coordinates."""

        def render(value):
            if isinstance(value, dict):
                return [[k, c] for k, c in sorted(value.items())]
            return value

        return [
            {
                "j": j,
                "i": i,
                "W": render(rec["W"]),
                "S": render(rec["S"]),
                "E": render(rec["E"]),
                "N": render(rec["N"]),
            }
            for (j, i), rec in sorted(self.faces.items())
        ]


def _sweep_rectangle(west, south, j_offset=0, i_offset=0):
    """Fill the rectangle with the given west column (bottom to top) and
    south row (left to right); returns (east, north, faces, bullets) with
    face coordinates shifted by the offsets."""
    east = list(west)
    north = []
    faces = {}
    bullets = {}
    for j, s0 in enumerate(south, start=1):
        vert = s0
        for i in range(1, len(west) + 1):
            w = east[i - 1]
            e, n, b = _face_forward(w, vert)
            faces[(j + j_offset, i + i_offset)] = {"W": w, "S": vert, "E": e, "N": n}
            for k, c in b.items():
                key = (j + j_offset, i + i_offset, k)
                bullets[key] = bullets.get(key, 0) + c
            east[i - 1] = e
            vert = n
        north.append(vert)
    return east, north, faces, bullets


def rs_map_arrays(a, b):
    """Array form of row insertion: west boundary a, south boundary b;
    returns the east and north boundaries."""
    east, north, _, _ = _sweep_rectangle([int(x) for x in a], [int(x) for x in b])
    return tuple(east), tuple(north)


def rs_edge_config(a, b):
    """Full integer-valued rectangle configuration for (a, b)."""
    _, _, faces, _ = _sweep_rectangle([int(x) for x in a], [int(x) for x in b])
    return EdgeConfig(faces)


def _matrix_rows(alpha):
    """Per-letter color counts of a row coordinate matrix, as a list over
    letters 1..n of {color: count} dicts."""
    rows = [dict() for _ in range(alpha.n)]
    for (i, k), c in alpha.support.items():
        rows[i - 1][k] = rows[i - 1].get(k, 0) + c
    return rows


def _rows_matrix(rows, n):
    support = {}
    for i, counts in enumerate(rows, start=1):
        for k, c in counts.items():
            if c:
                support[(i, k)] = c
    return RowCoordMatrix(n, support)


def rsk_map_matrices(alpha, beta):
    """Matrix form of the insertion map: sweep the rectangle whose west
    boundary carries alpha's letter rows and whose south boundary carries
    beta's; returns (alpha', beta', bullets) with bullets mapping
    (j, i, color) to the number of meeting points at face (j, i)."""
    east, north, _, bullets = _sweep_rectangle(_matrix_rows(alpha), _matrix_rows(beta))
    return _rows_matrix(east, alpha.n), _rows_matrix(north, beta.n), bullets


def rsk_edge_config(alpha, beta):
    """Full counting-valued rectangle configuration for (alpha, beta)."""
    _, _, faces, _ = _sweep_rectangle(_matrix_rows(alpha), _matrix_rows(beta))
    return EdgeConfig(faces)


def matrix_rsk_inverse(alpha, beta):
    """Inverse of rsk_map_matrices: peel the rectangle from its east and
    north boundaries back to west and south."""
    east = _matrix_rows(alpha)
    brows = _matrix_rows(beta)
    south = [None] * beta.n
    for j in range(beta.n, 0, -1):
        vert = brows[j - 1]
        for i in range(alpha.n, 0, -1):
            w, s = _face_backward(east[i - 1], vert)
            east[i - 1] = w
            vert = s
        south[j - 1] = vert
    return _rows_matrix(east, alpha.n), _rows_matrix(south, beta.n)


def iota2_matrices(alpha, beta):
    """Matrix form of the column-cycling map: alpha's rows pass one face
    each against beta's first row, beta's remaining rows shift up, and the
    sweep's north output closes the new beta."""
    vert = _matrix_rows(beta)[0]
    new_a = []
    for w in _matrix_rows(alpha):
        e, n, _ = _face_forward(w, vert)
        new_a.append(e)
        vert = n
    new_b = _matrix_rows(beta)[1:] + [vert]
    return _rows_matrix(new_a, alpha.n), _rows_matrix(new_b, beta.n)


def iota2_matrices_inverse(alpha, beta):
    brows = _matrix_rows(beta)
    vert = brows[-1]
    arows = _matrix_rows(alpha)
    for i in range(alpha.n, 0, -1):
        w, s = _face_backward(arows[i - 1], vert)
        arows[i - 1] = w
        vert = s
    new_b = [vert] + brows[:-1]
    return _rows_matrix(arows, alpha.n), _rows_matrix(new_b, beta.n)


def iota1_matrices(alpha, beta):
    b2, a2 = iota2_matrices(beta, alpha)
    return a2, b2


def iota1_matrices_inverse(alpha, beta):
    b2, a2 = iota2_matrices_inverse(beta, alpha)
    return a2, b2


# ------------------------------------------- weighted matrix <-> tableaux


def weight_shift(mbar, c):
    """Add c to every weight of the matrix."""
    return MatrixBar(
        mbar.n,
        mbar.m,
        {(i, j, k + c): cnt for (i, j, k), cnt in mbar.support.items()},
    )


def shift_rows(T, delta):
    """Move every cell of T from row r to row r + delta; shifting down
    pads fully empty rows on top so the base row stays at most 1."""
    shape = T.shape
    if not shape.outer:
        return T
    new_base = shape.base_row + delta
    outer, inner = list(shape.outer), list(shape.inner)
    rows = list(T.rows)
    if new_base > 1:
        pad = new_base - 1
        top = outer[0]
        outer = [top] * pad + outer
        inner = [top] * pad + inner
        rows = [()] * pad + rows
        new_base = 1
    # Trim in lockstep with the shape constructor so the label rows stay
    # aligned: zero-length tail rows, then label-free leading rows while
    # they sit at non-positive indices.
    while outer and outer[-1] == 0:
        outer.pop()
        inner.pop()
        rows.pop()
    while outer and new_base <= 0 and inner[0] == outer[0]:
        outer.pop(0)
        inner.pop(0)
        rows.pop(0)
        new_base += 1
    if not outer:
        return SkewTableau.empty(T.n)
    return SkewTableau(GeneralizedSkewShape(new_base, outer, inner), rows, T.n)


def _max_labeled_row(T):
    return max(r for r, row in zip(T.shape.rows, T.rows) if row)


def ss_backward(pair, cap=None):
    """Project a same-shape pair to its weighted matrix and kernel.

    The inverse dynamics runs until every labeled cell sits at a row <= 0;
    replaying forward, a value-i cell entering row 1 while level-j cells
    are processed during replay step s contributes an entry (i, j, T-1-s),
    T being the number of backward steps.  The kernel partition rides
    along for classical pairs and is empty otherwise."""
    P, Q = pair
    if P.shape != Q.shape:
        raise ValueError("the correspondence needs tableaux of equal shape")
    if P.n != Q.n:
        raise ValueError("the correspondence needs a common alphabet")
    n = P.n
    nu = kernel_pair(P, Q) if P.shape.is_classical else Partition(())
    if P.size == 0:
        return MatrixBar(n, n, {}), nu
    limit = default_step_cap(pair) if cap is None else cap
    T = 0
    cur = pair
    while _max_labeled_row(cur[0]) >= 1:
        cur = skew_rsk_inverse(*cur)
        T += 1
        if T > limit:
            raise RuntimeError(
                f"no fully withdrawn state within {limit} steps; raise the cap "
                "if the input is unusually tall"
            )
    support = {}
    seen = 0
    s = 0
    replay_limit = 2 * (limit + T) + 4
    while seen < P.size:
        if s > replay_limit:
            raise RuntimeError(
                f"replay exceeded {replay_limit} steps without collecting "
                "every cell; raise the cap if the input is unusually tall"
            )
        events = []
        cur = skew_rsk(*cur, trace=events)
        for level, value, _, to_row in events:
            if to_row == 1:
                key = (value, level, T - 1 - s)
                support[key] = support.get(key, 0) + 1
                seen += 1
        s += 1
    return MatrixBar(n, n, support), nu


def ss_forward(mbar, nu=()):
    """Rebuild the pair from nonnegative-weight matrix data: starting from
    the label-free pair of shape nu/nu, insert the entries of each weight
    level from the largest weight down; within a level the letters j of
    the second alphabet are treated in increasing order, internal moves
    first, then the level's first-alphabet letters enter row 1 in
    increasing order."""
    if mbar.n != mbar.m:
        raise ValueError("square weighted matrix required")
    if not mbar.is_nonnegative():
        raise ValueError("negative weights cannot be inserted directly")
    n = mbar.n
    nu = Partition(nu)
    if len(nu):
        shape = GeneralizedSkewShape(1, tuple(nu), tuple(nu))
        P = SkewTableau(shape, [()] * len(shape.outer), n)
    else:
        P = SkewTableau.empty(n)
    Q = P
    if not mbar.support:
        return P, Q
    w_max = max(k for (_, _, k) in mbar.support)
    for w in range(w_max, -1, -1):
        externals = {}
        for (i, j, k), c in sorted(mbar.support.items()):
            if k == w:
                externals.setdefault(j, []).extend([i] * c)
        P, Q = skew_rsk(P, Q, externals=externals)
    return P, Q


# ------------------------------------------------------- shadow dynamics


def _mbar_pair(mbar):
    """The tableau pair whose matrix projection is mbar (kernel empty)."""
    c = max(0, -min(k for (_, _, k) in mbar.support))
    pair = ss_forward(weight_shift(mbar, c), ())
    for _ in range(c):
        pair = skew_rsk_inverse(*pair)
    return pair


def matrices_of_mbar(mbar):
    """The balanced matrix pair carrying the same data as mbar: the row
    coordinates of its associated tableau pair."""
    if mbar.n != mbar.m:
        raise ValueError("square weighted matrix required")
    if not mbar.support:
        return RowCoordMatrix(mbar.n, {}), RowCoordMatrix(mbar.n, {})
    P, Q = _mbar_pair(mbar)
    return rc_matrix(P), rc_matrix(Q)


def viennot_map(mbar, direct=False):
    """One generation of the periodic shadow-line dynamics.

    Reference route: realize the matrix as a tableau pair, move every cell
    up one row, and project back; weights are shifted to nonnegative
    values first, which commutes with the construction.  With direct=True
    the ray-propagation construction also runs and both results are
    checked against each other."""
    out = _viennot_reference(mbar, -1)
    if direct:
        alt = viennot_map_direct(mbar)
        if alt != out:
            raise AssertionError(
                "shadow-line propagation disagrees with the reference map"
            )
    return out


def viennot_inverse(mbar):
    """Inverse generation: move every cell of the realizing pair down one
    row and project back."""
    return _viennot_reference(mbar, 1)


def _viennot_reference(mbar, delta):
    if mbar.n != mbar.m:
        raise ValueError("square weighted matrix required")
    if not mbar.support:
        return mbar
    c = max(0, -min(k for (_, _, k) in mbar.support))
    P, Q = ss_forward(weight_shift(mbar, c), ())
    P, Q = shift_rows(P, delta), shift_rows(Q, delta)
    out, _ = ss_backward((P, Q))
    return weight_shift(out, -c)


def viennot_map_direct(mbar):
    """Shadow-line route on the cylinder: every point emits one ray north
    and one ray east; where horizontal and vertical rays meet they cancel
    pairwise and each cancellation leaves one next-generation point.  Rays
    wrap east past column n onto column 1, n rows higher.  Faces are
    processed in an order compatible with propagation, which is possible
    because n*i + j strictly increases along every ray."""
    if mbar.n != mbar.m:
        raise ValueError("square weighted matrix required")
    n = mbar.n
    sources = mbar.map_support()
    if not sources:
        return mbar
    total = sum(sources.values())
    horiz, vert, out = {}, {}, {}
    heap = []
    queued = set()
    processed = set()

    def push(face):
        if face in processed:
            raise RuntimeError("a ray reached an already settled face")
        if face not in queued:
            queued.add(face)
            j, i = face
            heapq.heappush(heap, (n * i + j, face))

    for face in sources:
        push(face)
    born = 0
    limit = 4 * n * (total + 2) ** 2 + 16 * n * n
    steps = 0
    while heap:
        steps += 1
        if steps > limit:
            raise RuntimeError("ray propagation exceeded the safety cap")
        _, face = heapq.heappop(heap)
        queued.discard(face)
        processed.add(face)
        w = horiz.pop(face, 0)
        s = vert.pop(face, 0)
        src = sources.get(face, 0)
        meet = min(w, s)
        if meet:
            out[face] = out.get(face, 0) + meet
            born += meet
        east = w - meet + src
        north = s - meet + src
        j, i = face
        if east:
            nxt = canonical_face(j + 1, i, n)
            horiz[nxt] = horiz.get(nxt, 0) + east
            push(nxt)
        if north:
            nxt = canonical_face(j, i + 1, n)
            vert[nxt] = vert.get(nxt, 0) + north
            push(nxt)
    if born != total:
        raise RuntimeError("ray propagation lost or invented points")
    return MatrixBar.from_map(n, n, out)


# ------------------------------------------------------- cylinder windows


def build_edge_config(alpha, beta=None, t_lo=1, t_hi=2):
    """Materialize the cylinder configuration of a balanced matrix pair
    over the blocks t_lo..t_hi, block t covering faces {1..n} x
    {(t-1)n+1..tn}; block 2's west and south boundaries read (alpha,
    beta).  A single weighted matrix may be passed instead, in which case
    its associated pair supplies the boundaries."""
    if beta is None:
        alpha, beta = matrices_of_mbar(alpha)
    if alpha.n != beta.n:
        raise ValueError("matrix pair must share its size")
    if t_lo > t_hi:
        raise ValueError("empty block range")
    n = alpha.n
    # data[t] = boundary pair (west, south) of block t+1
    data = {1: (alpha, beta)}
    for t in range(2, t_hi):
        a, b = data[t - 1]
        a2, b2, _ = rsk_map_matrices(a, b)
        data[t] = (a2, b2)
    for t in range(0, t_lo - 2, -1):
        data[t] = matrix_rsk_inverse(*data[t + 1])
    faces = {}
    for t in range(t_lo, t_hi + 1):
        a, b = data[t - 1]
        _, _, block_faces, _ = _sweep_rectangle(
            _matrix_rows(a), _matrix_rows(b), i_offset=(t - 1) * n
        )
        faces.update(block_faces)
    return EdgeConfig(faces, modulus=n)
