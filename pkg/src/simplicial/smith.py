"""
Smith normal form over the integers.

Two entry points:

``smith_normal_form``
    Full decomposition ``U @ A @ V == D`` with unimodular ``U`` and ``V``.
    Dense, and meant for small matrices and for verification.

``invariant_factors``
    Only the nonzero diagonal of ``D``.  Works on a sparse row/column
    representation and never forms ``U`` or ``V``, which is what homology
    needs.  On boundary matrices almost every pivot is a unit, so the
    cost is dominated by fill-in rather than arithmetic.

Both pick pivots of smallest absolute value to keep entries small.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .matrix import IntegerMatrix


@dataclass(frozen=True)
class SmithDecomposition:
    D: IntegerMatrix
    U: IntegerMatrix
    V: IntegerMatrix
    rank: int

    @property
    def invariant_factors(self) -> list[int]:
        return [self.D[k, k] for k in range(self.rank)]


def _normalize_diagonal(diag: list[int]) -> list[int]:
    """Turn absolute values of a diagonal form into a divisibility chain.

    Uses Z/a + Z/b = Z/gcd(a, b) + Z/lcm(a, b).
    """
    units = sum(1 for x in diag if x == 1)
    rest = sorted(x for x in diag if x != 1)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            g = gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    return [1] * units + sorted(rest)


def invariant_factors(A: IntegerMatrix) -> list[int]:
    """Nonzero invariant factors of ``A`` in divisibility order."""
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), x in A.nonzero().items():
        rows.setdefault(i, {})[j] = x
        cols.setdefault(j, set()).add(i)

    def drop(i, j):
        del rows[i][j]
        cols[j].discard(i)
        if not cols[j]:
            del cols[j]

    def axpy(target, factor, src):
        # rows[target] -= factor * rows[src]
        tr = rows[target]
        for j, x in rows[src].items():
            v = tr.get(j, 0) - factor * x
            if v:
                if j not in tr:
                    cols[j].add(target)
                tr[j] = v
            elif j in tr:
                del tr[j]
                cols[j].discard(target)
                if not cols[j]:
                    del cols[j]

    def choose_pivot():
        best = None
        for i, r in rows.items():
            for j, x in r.items():
                key = (abs(x), (len(r) - 1) * (len(cols[j]) - 1))
                if best is None or key < best[0]:
                    best = (key, i, j)
                    if key == (1, 0):
                        return i, j
        return best[1], best[2]

    diag = []
    while rows:
        p, q = choose_pivot()
        while True:
            a = rows[p][q]
            # clear column q below/above the pivot with row operations
            for r in list(cols[q]):
                if r != p:
                    axpy(r, rows[r][q] // a, p)
            if len(cols[q]) > 1:
                # remainders survived; the smallest becomes the new pivot
                p = min((r for r in cols[q] if r != p), key=lambda r: abs(rows[r][q]))
                continue
            # column q is now just the pivot, so column operations touch row p only
            for j in list(rows[p]):
                if j == q:
                    continue
                v = rows[p][j] % a
                if v:
                    rows[p][j] = v
                else:
                    drop(p, j)
            if len(rows[p]) > 1:
                q = min((j for j in rows[p] if j != q), key=lambda j: abs(rows[p][j]))
                continue
            diag.append(abs(a))
            drop(p, q)
            del rows[p]
            break
        for i in [i for i, r in rows.items() if not r]:
            del rows[i]
    return _normalize_diagonal(diag)


def smith_normal_form(A: IntegerMatrix) -> SmithDecomposition:
    """Smith decomposition ``U @ A @ V == D`` of an integer matrix."""
    m, n = A.shape
    D = A.to_lists()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for M in (D, V):
            for row in M:
                row[j], row[k] = row[k], row[j]

    def add_row(target, factor, src):
        for M in (D, U):
            t, s = M[target], M[src]
            for c in range(len(t)):
                t[c] += factor * s[c]

    def add_col(target, factor, src):
        for M in (D, V):
            for row in M:
                row[target] += factor * row[src]

    rank = 0
    for t in range(min(m, n)):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            a = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, -(D[i][t] // a), t)
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, -(D[t][j] // a), t)
            rem = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
            rem += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
            if rem:
                _, i, j = min(rem)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # row and column are clear; enforce divisibility of the rest
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % a), None)
            if bad is None:
                break
            add_row(t, 1, bad[0])
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]
        rank += 1

    return SmithDecomposition(
        D=IntegerMatrix(m, n, D),
        U=IntegerMatrix(m, m, U),
        V=IntegerMatrix(n, n, V),
        rank=rank,
    )
