"""Integer Smith normal form and linear solving modulo 1.

The solver answers "does A x = d have a rational solution x modulo Z^m"
exactly, which is the coboundary-solving primitive: A is the integer
coboundary matrix, d the target angles with denominators cleared into the
rational right-hand side.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _swap_rows(m: Matrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: Matrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: Matrix, src: int, dst: int, factor: int) -> None:
    row_s, row_d = m[src], m[dst]
    for k in range(len(row_d)):
        row_d[k] += factor * row_s[k]


def _add_col(m: Matrix, src: int, dst: int, factor: int) -> None:
    for row in m:
        row[dst] += factor * row[src]


def smith_normal_form(a: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix]:
    """Return (s, u, v) with u*a*v = s, u and v unimodular, s diagonal.

    Diagonal entries are nonnegative and each divides the next.
    """
    s = [list(map(int, row)) for row in a]
    rows = len(s)
    cols = len(s[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)

    def pivot_search(start: int) -> Optional[Tuple[int, int]]:
        best = None
        best_abs = None
        for i in range(start, rows):
            row = s[i]
            for j in range(start, cols):
                e = row[j]
                if e != 0 and (best_abs is None or abs(e) < best_abs):
                    best = (i, j)
                    best_abs = abs(e)
        return best

    t = 0
    while t < min(rows, cols):
        found = pivot_search(t)
        if found is None:
            break
        pi, pj = found
        if pi != t:
            _swap_rows(s, t, pi)
            _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(s, t, pj)
            _swap_cols(v, t, pj)
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if s[i][t] != 0:
                    q = s[i][t] // s[t][t]
                    _add_row(s, t, i, -q)
                    _add_row(u, t, i, -q)
                    if s[i][t] != 0:
                        _swap_rows(s, t, i)
                        _swap_rows(u, t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if s[t][j] != 0:
                    q = s[t][j] // s[t][t]
                    _add_col(s, t, j, -q)
                    _add_col(v, t, j, -q)
                    if s[t][j] != 0:
                        _swap_cols(s, t, j)
                        _swap_cols(v, t, j)
                        dirty = True
            if not dirty:
                break
        # divisibility: fold any non-multiple into the pivot position
        pivot = s[t][t]
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if s[i][j] % pivot != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _add_row(s, offender, t, 1)
            _add_row(u, offender, t, 1)
            continue
        if pivot < 0:
            for k in range(cols):
                s[t][k] = -s[t][k]
            for k in range(rows):
                u[t][k] = -u[t][k]
        t += 1
    return s, u, v


def solve_mod1(
    a: Sequence[Sequence[int]], d: Sequence[Fraction]
) -> Optional[List[Fraction]]:
    """Solve a*x = d modulo 1 for rational x, or return None.

    Solutions are sought over all of Q/Z, so witness denominators may be
    finer than those appearing in d.
    """
    rows = len(a)
    if rows != len(d):
        raise ValueError("right-hand side length does not match matrix rows")
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return []
    s, u, _v = (None, None, None)
    s, u, v = smith_normal_form(a)
    rank = 0
    while rank < min(rows, cols) and s[rank][rank] != 0:
        rank += 1
    ud = []
    for i in range(rows):
        acc = Fraction(0)
        row = u[i]
        for j in range(rows):
            if row[j]:
                acc += row[j] * d[j]
        ud.append(acc)
    for i in range(rank, rows):
        if ud[i].denominator != 1:
            return None
    y = [Fraction(0)] * cols
    for i in range(rank):
        y[i] = ud[i] / s[i][i]
    x = []
    for i in range(cols):
        acc = Fraction(0)
        row = v[i]
        for j in range(cols):
            if row[j] and y[j]:
                acc += row[j] * y[j]
        x.append(acc % 1)
    return x
