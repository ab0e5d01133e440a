# cython: language_level=3
"""Compiled integer Gauss-Jordan elimination.

Twin of ``_rowred_py.py``: same algorithm, same deterministic pivoting,
same output.  Entries stay arbitrary-precision Python integers; the win
comes from typed loop indices and no interpreter dispatch in the inner
row update.
"""

from math import gcd

BACKEND = "cython"


def reduce_rows(list rows, Py_ssize_t ncols):
    """Row reduce integer ``rows`` in place to Gauss-Jordan form.

    Returns ``(pivot_rows, pivots)`` exactly as the pure-Python twin.
    """
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, i, j, pivot_row
    cdef list prow, row
    cdef object p, f, g, v
    pivots = []
    for col in range(ncols):
        pivot_row = -1
        for i in range(rank, m):
            if (<list>rows[i])[col] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        if pivot_row != rank:
            rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        prow = <list>rows[rank]
        p = prow[col]
        for i in range(m):
            if i == rank:
                continue
            row = <list>rows[i]
            f = row[col]
            if f == 0:
                continue
            g = 0
            for j in range(ncols):
                v = p * row[j] - f * prow[j]
                row[j] = v
                if g != 1:
                    g = gcd(g, v)
            if g > 1:
                for j in range(ncols):
                    row[j] //= g
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots
