"""Exact rank computation for small dense integer matrices.

Ranks over the rationals are computed by fraction-free (Bareiss)
elimination, so every intermediate value is an integer and no floating
point ever enters the homology engine.  Ranks over GF(p) reduce mod p.
"""

from __future__ import annotations


def rank(rows: list[list[int]], p: int = 0) -> int:
    """Rank of an integer matrix over Q (p=0) or over GF(p)."""
    if not rows or not rows[0]:
        return 0
    if p:
        return _rank_mod_p(rows, p)
    return _rank_bareiss(rows)


def _rank_bareiss(rows: list[list[int]]) -> int:
    m = [row[:] for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col, ncols):
                # Exact by Sylvester's identity: prev divides the product.
                row_r[c] = (row_r[c] * pivot - factor * row_p[c]) // prev
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[v % p for v in row] for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank
