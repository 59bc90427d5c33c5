"""Small dense matrices over any exact commutative ring (lists of rows)."""
from itertools import permutations

__all__ = ["identity", "transpose", "matmul", "matvec", "det", "adjugate", "is_zero_matrix"]


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(row) for row in zip(*a)]


def matmul(a, b, zero=0):
    bt = transpose(b)
    out = []
    for row in a:
        new = []
        for col in bt:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def matvec(a, v, zero=0):
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def _perm_sign(p):
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def det(a, zero=0):
    """Leibniz expansion; meant for the small pivot blocks only."""
    n = len(a)
    if n == 0:
        return 1
    total = zero
    for p in permutations(range(n)):
        term = _perm_sign(p)
        for i in range(n):
            term = a[i][p[i]] * term
            if not term:
                break
        if term:
            total = total + term
    return total


def adjugate(a, zero=0):
    n = len(a)
    if n == 1:
        return [[1]]
    adj = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[a[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cof = det(minor, zero)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def is_zero_matrix(a) -> bool:
    return not any(x for row in a for x in row)
