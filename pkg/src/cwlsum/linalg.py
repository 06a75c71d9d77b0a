"""Exact rank over the rationals.

Rows are eliminated fraction-free: a row is replaced by
``p * row - c * pivot_row`` and then divided by the gcd of its entries, so
every intermediate value stays an integer and entries stay small on the
sparse 0/±1 matrices this package produces.  Characteristic 0 throughout.
"""
from math import gcd


def _normalize(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for k in row:
            row[k] //= g
    return row


def rank_sparse(rows):
    """Rank of a matrix given as a list of ``{column: nonzero int}`` dicts."""
    pivots = {}  # column -> reduced row with that leading column
    rank = 0
    for r in rows:
        row = {k: v for k, v in r.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = _normalize(row)
                rank += 1
                break
            p, q = piv[c], row[c]
            new = {k: p * v for k, v in row.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - q * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _normalize(new)
    return rank


def rank(matrix):
    """Rank of a dense integer (or rational-free) matrix, list of lists."""
    return rank_sparse([{j: v for j, v in enumerate(row) if v} for row in matrix])
