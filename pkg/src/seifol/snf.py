"""Smith normal form over the integers, plus abelian-group helpers.

Used as the independent oracle for first-homology computations: the
closed-form order elsewhere in the package is cross-checked against the
invariant factors computed here.
"""

from __future__ import annotations

from math import prod


def smith_normal_form(matrix) -> list[int]:
    """Return the diagonal of the Smith normal form of an integer matrix.

    The result has length min(rows, cols); entries are nonnegative, each
    divides the next, and trailing zeros indicate rank deficiency.
    """
    rows = [list(map(int, r)) for r in matrix]
    m = len(rows)
    n = len(rows[0]) if m else 0
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    size = min(m, n)
    diag: list[int] = []
    t = 0
    while t < size:
        pivot = _smallest_nonzero(rows, t, m, n)
        if pivot is None:
            break
        _move_pivot(rows, t, pivot)
        while True:
            _make_pivot_positive(rows, t)
            if _clear_column(rows, t, m):
                continue
            if _clear_row(rows, t, n):
                continue
            offender = _divisibility_offender(rows, t, m, n)
            if offender is not None:
                rows[t] = [x + y for x, y in zip(rows[t], rows[offender])]
                continue
            break
        diag.append(abs(rows[t][t]))
        t += 1
    diag.extend([0] * (size - len(diag)))
    return diag


def _smallest_nonzero(rows, t, m, n):
    best = None
    for i in range(t, m):
        for j in range(t, n):
            v = abs(rows[i][j])
            if v and (best is None or v < abs(rows[best[0]][best[1]])):
                best = (i, j)
    return best


def _move_pivot(rows, t, pivot):
    i, j = pivot
    rows[t], rows[i] = rows[i], rows[t]
    if j != t:
        for r in rows:
            r[t], r[j] = r[j], r[t]


def _make_pivot_positive(rows, t):
    if rows[t][t] < 0:
        rows[t] = [-x for x in rows[t]]


def _clear_column(rows, t, m):
    """One pass of column clearing; returns True if the pivot shrank."""
    for i in range(m):
        if i == t or not rows[i][t]:
            continue
        q = rows[i][t] // rows[t][t]
        rows[i] = [x - q * y for x, y in zip(rows[i], rows[t])]
        if rows[i][t]:
            rows[t], rows[i] = rows[i], rows[t]
            return True
    return False


def _clear_row(rows, t, n):
    for j in range(n):
        if j == t or not rows[t][j]:
            continue
        q = rows[t][j] // rows[t][t]
        for r in rows:
            r[j] -= q * r[t]
        if rows[t][j]:
            for r in rows:
                r[t], r[j] = r[j], r[t]
            return True
    return False


def _divisibility_offender(rows, t, m, n):
    p = abs(rows[t][t])
    for i in range(t + 1, m):
        for j in range(t + 1, n):
            if rows[i][j] % p:
                return i
    return None


def cokernel_order(matrix, generators: int) -> int | None:
    """Order of Z^generators modulo the row lattice; None when infinite.

    ``matrix`` has one row per relation and ``generators`` columns.  The
    quotient is finite exactly when the row lattice has full rank.
    """
    if generators == 0:
        return 1
    if not matrix:
        return None
    d = smith_normal_form(matrix)
    nonzero = [x for x in d if x]
    if len(nonzero) < generators:
        return None
    return prod(nonzero)
