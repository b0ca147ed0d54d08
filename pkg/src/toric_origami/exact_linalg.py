"""Exact integer and rational linear algebra.

Matrices are plain lists of rows. Integers are Python ints and rationals are
:class:`fractions.Fraction`, so nothing here ever rounds.
"""

from fractions import Fraction
from math import gcd

from .errors import DimensionError

Rational = Fraction


def _shape(m):
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise DimensionError("ragged matrix")
    return rows, cols


def determinant(m):
    """Determinant of a square integer matrix by Bareiss elimination.

    Every intermediate quotient is exact, so entries stay integers and grow
    only polynomially.
    """
    n, cols = _shape(m)
    if n != cols:
        raise DimensionError(f"determinant needs a square matrix, got {n}x{cols}")
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(m):
    """Rank over the rationals, computed by fraction-free row reduction."""
    rows, cols = _shape(m)
    a = [list(map(int, row)) for row in m]
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r]
        for i in range(r + 1, rows):
            q = a[i][c]
            if q:
                row = a[i]
                a[i] = [p[c] * x - q * y for x, y in zip(row, p)]
                g = 0
                for x in a[i]:
                    g = gcd(g, x)
                if g > 1:
                    a[i] = [x // g for x in a[i]]
        r += 1
        if r == rows:
            break
    return r


def solve_rational(a, b):
    """Unique solution of ``a x = b`` or ``None`` when ``a`` is singular."""
    n, cols = _shape(a)
    if n != cols:
        raise DimensionError(f"solve_rational needs a square matrix, got {n}x{cols}")
    if len(b) != n:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {n}")
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n] for row in aug]


def smith_normal_form(m):
    """Nonzero invariant factors ``d1 | d2 | ... | dk`` of an integer matrix.

    Pivots are chosen as the smallest nonzero absolute value in the remaining
    block; ``k`` is the rank.
    """
    rows, cols = _shape(m)
    a = [list(map(int, row)) for row in m]
    factors = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                if abs(p) == 1:
                    break
                bad = next(
                    (i for i in range(t + 1, rows)
                     if any(a[i][j] % p for j in range(t + 1, cols))),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            # a remainder survived: move the smallest entry of row/column t
            # into the pivot position and sweep again
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        factors.append(abs(a[t][t]))
        t += 1
    return factors


def _fm_feasible(ineqs, nvars):
    """Fourier-Motzkin test: is ``{x : c.x + d >= 0 for (c, d) in ineqs}`` nonempty?"""
    system = [(list(c), d) for c, d in ineqs]
    for k in range(nvars):
        pos, neg, rest = [], [], []
        for c, d in system:
            (pos if c[k] > 0 else neg if c[k] < 0 else rest).append((c, d))
        combined = {}
        for cp, dp in pos:
            for cn, dn in neg:
                wp, wn = -cn[k], cp[k]
                c = [wp * x + wn * y for x, y in zip(cp, cn)]
                d = wp * dp + wn * dn
                combined[_normalize_ineq(c, d)] = None
        system = rest + [(list(c), d) for c, d in combined]
    return all(d >= 0 for _, d in system)


def _normalize_ineq(c, d):
    scale = max((abs(x) for x in c), default=0) or abs(d) or 1
    return tuple(Fraction(x) / scale for x in c), Fraction(d) / scale


def positively_spans(normals, n):
    """True iff the only ``x`` with ``<a_i, x> >= 0`` for every ``a_i`` is zero.

    Equivalently the vectors positively span R^n, which is exactly the
    boundedness of any polyhedron with these inward facet normals.
    """
    for a in normals:
        if len(a) != n:
            raise DimensionError(f"vector {tuple(a)} does not have length {n}")
    if n == 0:
        return True
    for j in range(n):
        for s in (1, -1):
            # look for a nonzero solution normalised to x_j = s
            rest = [k for k in range(n) if k != j]
            ineqs = [([a[k] for k in rest], a[j] * s) for a in normals]
            if _fm_feasible(ineqs, n - 1):
                return False
    return True


def in_row_space(rows, v):
    """Whether ``v`` is a rational combination of ``rows``."""
    if not rows:
        return not any(v)
    return rank(list(rows) + [list(v)]) == rank(rows)


def ext_gcd(a, b):
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0
