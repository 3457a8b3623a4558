"""Small exact linear algebra over Q (lists of Fractions)."""

from fractions import Fraction


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(A, B):
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def det(M):
    """Determinant by fraction-exact Gaussian elimination."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if A[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            A[col], A[pivot] = A[pivot], A[col]
            result = -result
        p = A[col][col]
        result *= p
        for r in range(col + 1, n):
            if A[r][col]:
                f = A[r][col] / p
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return result


def solve(M, B):
    """Solve M X = B for square invertible M; B is a list of column vectors."""
    n = len(M)
    aug = [[Fraction(x) for x in M[i]] + [Fraction(b[i]) for b in B] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [[aug[i][n + k] for i in range(n)] for k in range(len(B))]


def char_poly(A):
    """Characteristic polynomial det(X I - A), constant term first (Faddeev-LeVerrier)."""
    n = len(A)
    coeffs = [Fraction(0)] * n + [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    I = identity(n)
    for k in range(1, n + 1):
        M = [[m + coeffs[n - k + 1] * i for m, i in zip(mr, ir)] for mr, ir in zip(matmul(A, M), I)]
        AM = matmul(A, M)
        coeffs[n - k] = -sum(AM[i][i] for i in range(n)) / k
    return coeffs
