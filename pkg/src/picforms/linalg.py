"""Small exact linear algebra over field elements.

Matrices are tuples of row tuples of FieldElement.  Everything here is
plain Gaussian elimination with exact division; sizes never exceed a few
rows, so no pivoting strategy beyond "first nonzero" is needed, and that
choice keeps every result deterministic.
"""

from __future__ import annotations


def identity(field, n):
    one, zero = field.one(), field.zero()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a))


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(dot(row, v) for row in a)


def dot(u, v):
    it = zip(u, v)
    x, y = next(it)
    acc = x * y
    for x, y in it:
        acc = acc + x * y
    return acc


def scale_vec(c, v):
    return tuple(c * x for x in v)


def add_vec(u, v):
    return tuple(x + y for x, y in zip(u, v))


def sub_vec(u, v):
    return tuple(x - y for x, y in zip(u, v))


def row_reduce(rows, field):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(rows, field):
    return len(row_reduce(rows, field)[1])


def kernel_basis(rows, field, ncols):
    """Deterministic basis of {x : rows @ x = 0}, one vector per free column."""
    reduced, pivots = row_reduce(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    zero, one = field.zero(), field.one()
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][fc]
        basis.append(tuple(vec))
    return basis


def solve(rows, rhs, field):
    """One solution of rows @ x = rhs (free variables set to 0), or None."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = row_reduce(aug, field)
    zero = field.zero()
    for row in reduced[len(pivots):]:
        if row[-1]:
            return None
    if pivots and pivots[-1] == ncols:  # pivot in the rhs column
        return None
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = reduced[r][-1]
    return tuple(x)


def express_in_rows(basis_rows, target, field):
    """Coefficients c with sum(c_i * basis_rows[i]) = target, or None."""
    cols = transpose(basis_rows)
    return solve(cols, target, field)


def det(rows, field):
    rows = [list(r) for r in rows]
    n = len(rows)
    acc = field.one()
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            return field.zero()
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            acc = -acc
        acc = acc * rows[c][c]
        inv = rows[c][c].inverse()
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return acc


def invert(rows, field):
    """Matrix inverse, or None when singular."""
    n = len(rows)
    aug = [list(r) + list(e) for r, e in zip(rows, identity(field, n))]
    reduced, pivots = row_reduce(aug, field)
    if tuple(pivots) != tuple(range(n)):
        return None
    return tuple(tuple(row[n:]) for row in reduced)
