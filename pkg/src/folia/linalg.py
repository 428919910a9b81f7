"""Exact Gaussian elimination over the rationals."""

from fractions import Fraction


def _copy(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rank(rows):
    m = _copy(rows)
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] * inv
                row_i, row_r = m[i], m[r]
                for j in range(c, ncols):
                    row_i[j] -= f * row_r[j]
        r += 1
        if r == len(m):
            break
    return r


def det(rows):
    m = _copy(rows)
    n = len(m)
    sign = 1
    acc = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        acc *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                for j in range(c, n):
                    m[i][j] -= f * m[c][j]
    return sign * acc


def solve(a, b):
    """Solve a x = b for square nonsingular a; raises ValueError if singular."""
    n = len(a)
    m = [row + [Fraction(rhs)] for row, rhs in zip(_copy(a), b)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        m[c], m[pivot] = m[pivot], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


def leading_minors(a):
    return [det([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def is_negative_definite(a):
    """Sylvester's criterion: the k-th leading minor has sign (-1)**k."""
    return all((m < 0) if k % 2 else (m > 0) for k, m in enumerate(leading_minors(a), start=1))
