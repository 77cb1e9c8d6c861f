"""Dense exact linear algebra over any of the fields in :mod:`specht.arith`.

Matrices are lists of rows. Modules are right modules, so a matrix acts on
row vectors: row ``i`` of ``G`` is the image of basis vector ``i``.
Products skip zero entries, which keeps the sparse seminormal matrices cheap.
"""

from __future__ import annotations

from .arith import Field

Matrix = list[list]


def zeros(field: Field, rows: int, cols: int | None = None) -> Matrix:
    z = field.zero
    return [[z] * (rows if cols is None else cols) for _ in range(rows)]


def identity(field: Field, n: int) -> Matrix:
    out = zeros(field, n)
    for i in range(n):
        out[i][i] = field.one
    return out


def matmul(field: Field, a: Matrix, b: Matrix) -> Matrix:
    is_zero = field.is_zero
    cols = len(b[0]) if b else 0
    out = zeros(field, len(a), cols)
    for i, row in enumerate(a):
        acc = out[i]
        for k, x in enumerate(row):
            if is_zero(x):
                continue
            for j, y in enumerate(b[k]):
                if not is_zero(y):
                    acc[j] = acc[j] + x * y
    return out


def vecmat(field: Field, vec: list, mat: Matrix) -> list:
    return matmul(field, [vec], mat)[0]


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def add_scalar(field: Field, a: Matrix, c) -> Matrix:
    """``a + c*I``."""
    out = [list(row) for row in a]
    for i in range(len(out)):
        out[i][i] = out[i][i] + c
    return out


def is_zero_matrix(field: Field, a: Matrix) -> bool:
    return all(field.is_zero(x) for row in a for x in row)


def equal(field: Field, a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(field.is_zero(x - y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def first_difference(field: Field, a: Matrix, b: Matrix):
    for i, (ra, rb) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if not field.is_zero(x - y):
                return i, j
    return None


def rref(field: Field, a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with positional (first nonzero) pivoting."""
    m = [list(row) for row in a]
    pivots: list[int] = []
    if not m:
        return m, pivots
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not field.is_zero(m[i][c])), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(field: Field, a: Matrix) -> int:
    return len(rref(field, a)[1])


def solve(field: Field, a: Matrix, b: list) -> list:
    """Solve ``a x = b`` for square invertible ``a``."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, pivots = rref(field, aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [red[i][n] for i in range(n)]


def kernel(field: Field, a: Matrix) -> Matrix:
    """Basis of ``{x : a x = 0}`` as a list of vectors."""
    if not a:
        return []
    cols = len(a[0])
    red, pivots = rref(field, a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * cols
        x[f] = field.one
        for i, p in enumerate(pivots):
            x[p] = -red[i][f]
        basis.append(x)
    return basis


def inverse(field: Field, a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(field, n))]
    red, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def unitriangular_inverse(field: Field, a: Matrix) -> Matrix:
    """Inverse of a lower unitriangular matrix by forward substitution."""
    n = len(a)
    inv = identity(field, n)
    for i in range(n):
        for j in range(i):
            if field.is_zero(a[i][j]):
                continue
            coeff = a[i][j]
            row_j = inv[j]
            row_i = inv[i]
            for k in range(j + 1):
                if not field.is_zero(row_j[k]):
                    row_i[k] = row_i[k] - coeff * row_j[k]
    return inv


def in_span(field: Field, basis: Matrix, vec: list) -> bool:
    """Whether ``vec`` is a combination of the rows of ``basis``."""
    if all(field.is_zero(x) for x in vec):
        return True
    if not basis:
        return False
    return rank(field, basis + [vec]) == rank(field, basis)


def conjugate(field: Field, p: Matrix, g: Matrix, p_inv: Matrix) -> Matrix:
    return matmul(field, matmul(field, p, g), p_inv)


def map_entries(func, a: Matrix) -> Matrix:
    return [[func(x) for x in row] for row in a]
