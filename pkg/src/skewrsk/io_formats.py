"""Shared text and JSON views of the package's data.

Tableau text format: a header line ``base <r0> n <alphabet>`` followed by
one line per row ``<inner_count>: l1 l2 ...`` where the label list may be
empty.  The JSON mirror carries the fields base_row, inner, rows, n.
Weighted biwords are JSON arrays of [q, p, w] triples plus the alphabet
sizes.
"""

import json

from .tableaux import SkewTableau
from .biwords import MatrixBar, WeightedBiword


def tableau_to_text(T):
    lines = [f"base {T.shape.base_row} n {T.n}"]
    for r in T.shape.rows:
        labels = " ".join(str(x) for x in T.row_word(r))
        inner = T.shape.inner_at(r)
        lines.append(f"{inner}:" + (f" {labels}" if labels else ""))
    return "\n".join(lines) + "\n"


def tableau_from_text(text):
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines or not lines[0].startswith("base "):
        raise ValueError("missing 'base <r0> n <alphabet>' header")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "base" or head[2] != "n":
        raise ValueError(f"malformed header: {lines[0]!r}")
    base_row, n = int(head[1]), int(head[3])
    row_data = []
    for line in lines[1:]:
        inner_part, _, label_part = line.partition(":")
        labels = [int(x) for x in label_part.split()]
        row_data.append((int(inner_part),) + tuple(labels))
    return SkewTableau.from_rows(row_data, n, base_row=base_row)


def tableau_to_json(T):
    return {
        "base_row": T.shape.base_row,
        "inner": list(T.shape.inner),
        "rows": [list(row) for row in T.rows],
        "n": T.n,
    }


def tableau_from_json(data):
    row_data = [
        (inner,) + tuple(row) for inner, row in zip(data["inner"], data["rows"])
    ]
    return SkewTableau.from_rows(row_data, data["n"], base_row=data["base_row"])


def pair_to_json(pair):
    P, Q = pair
    return {"P": tableau_to_json(P), "Q": tableau_to_json(Q)}


def pair_from_json(data):
    return tableau_from_json(data["P"]), tableau_from_json(data["Q"])


def biword_to_json(pi):
    return {
        "n": pi.n,
        "m": pi.m,
        "entries": [[q, p, w] for (q, p, w) in pi],
    }


def biword_from_json(data):
    entries = [tuple(e) for e in data["entries"]]
    return WeightedBiword(data["n"], data["m"], entries)


def matrixbar_to_json(mbar):
    return {
        "n": mbar.n,
        "m": mbar.m,
        "entries": [
            [i, j, k, c] for (i, j, k), c in sorted(mbar.support.items())
        ],
    }


def matrixbar_from_json(data):
    support = {}
    for i, j, k, c in data["entries"]:
        support[(i, j, k)] = support.get((i, j, k), 0) + c
    return MatrixBar(data["n"], data["m"], support)


def dump(obj, fp=None):
    """Serialize a JSON-ready object, to a string or to a file object."""
    if fp is None:
        return json.dumps(obj, indent=2, sort_keys=True)
    json.dump(obj, fp, indent=2, sort_keys=True)
    return None


def load(text_or_fp):
    if hasattr(text_or_fp, "read"):
        return json.load(text_or_fp)
    return json.loads(text_or_fp)
