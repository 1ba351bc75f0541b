"""Pure-Python versions of the hot loops in ``_kernels.pyx``."""
from __future__ import annotations


def rank_mod_p(rows, ncols, p):
    """Rank of an integer matrix over GF(p), p prime.

    ``rows`` is a list of rows, each a list of ``ncols`` integers.
    """
    pivots = {}  # pivot column -> reduced row (pivot entry 1)
    for row in rows:
        r = [x % p for x in row]
        for col in range(ncols):
            x = r[col]
            if not x:
                continue
            prow = pivots.get(col)
            if prow is None:
                inv = pow(x, p - 2, p)
                pivots[col] = [(y * inv) % p for y in r]
                break
            for k in range(col, ncols):
                if prow[k]:
                    r[k] = (r[k] - x * prow[k]) % p
    return len(pivots)


def pascal_mod(n, p):
    """Rows 0..n of Pascal's triangle reduced mod p."""
    table = [[1]]
    for m in range(1, n + 1):
        prev = table[-1]
        row = [1] * (m + 1)
        for k in range(1, m):
            row[k] = (prev[k - 1] + prev[k]) % p
        table.append(row)
    return table
