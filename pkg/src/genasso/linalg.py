"""Dense linear algebra over a ``Field`` (exact Scalars or floats)."""

from __future__ import annotations


class SingularMatrix(ArithmeticError):
    pass


def solve(field, A, b):
    """Solve the square system ``A x = b`` by Gaussian elimination.

    Exact fields pivot on the first nonzero entry; the float field uses partial
    pivoting. Raises ``SingularMatrix`` when there is no unique solution.
    """
    n = len(A)
    M = [list(row) + [rhs] for row, rhs in zip(A, b)]
    for col in range(n):
        if field.exact:
            piv = next((r for r in range(col, n) if M[r][col]), None)
        else:
            piv = max(range(col, n), key=lambda r: abs(M[r][col]))
            if field.is_zero(M[piv][col]):
                piv = None
        if piv is None:
            raise SingularMatrix("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        prow = [x * inv for x in M[col]]
        M[col] = prow
        for r in range(n):
            if r != col:
                f = M[r][col]
                if f:
                    M[r] = [x - f * y for x, y in zip(M[r], prow)]
    return [M[r][n] for r in range(n)]


def solve_many(field, A, columns):
    return [solve(field, A, col) for col in columns]


def inverse(field, A):
    n = len(A)
    one, zero = field.coerce(1), field.coerce(0)
    cols = [solve(field, A, [one if i == j else zero for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def det(field, A):
    n = len(A)
    M = [list(row) for row in A]
    result = field.coerce(1)
    for col in range(n):
        if field.exact:
            piv = next((r for r in range(col, n) if M[r][col]), None)
        else:
            piv = max(range(col, n), key=lambda r: abs(M[r][col]))
            if field.is_zero(M[piv][col]):
                piv = None
        if piv is None:
            return field.coerce(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            result = -result
        result = result * M[col][col]
        inv = 1 / M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] * inv
            if f:
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return result


def matvec(M, v):
    return tuple(sum((a * x for a, x in zip(row, v)), 0 * v[0]) for row in M)


def matmul(A, B):
    cols = list(zip(*B))
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), 0 * row[0]) for col in cols) for row in A)


def leading_minors_positive(field, G) -> bool:
    n = len(G)
    return all(field.sign(det(field, [row[:k] for row in G[:k]])) > 0 for k in range(1, n + 1))
