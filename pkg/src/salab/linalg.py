"""Dense exact linear algebra over a coefficient field.

Matrices are lists of row lists holding field elements. Everything here is
Gaussian elimination in one guise or another; sizes stay small (pencils of
Gram matrices, Jacobians, unit cancellation in resolutions), so clarity
beats asymptotics.
"""

from .errors import DomainError
from .field import Field


def zeros(field: Field, rows: int, cols: int):
    return [[field.zero] * cols for _ in range(rows)]


def identity(field: Field, n: int):
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def mat_copy(m):
    return [row[:] for row in m]


def row_echelon(field: Field, m, augment=None):
    """In-place forward elimination with partial pivoting by column order.

    Returns (pivot_columns, rank). When `augment` is given it is a second
    matrix with the same row count that receives the same row operations.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not field.is_zero(m[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        if augment is not None:
            augment[r], augment[pivot] = augment[pivot], augment[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, v) for v in m[r]]
        if augment is not None:
            augment[r] = [field.mul(inv, v) for v in augment[r]]
        for i in range(rows):
            if i != r and not field.is_zero(m[i][c]):
                factor = m[i][c]
                m[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(m[i], m[r])]
                if augment is not None:
                    augment[i] = [
                        field.sub(a, field.mul(factor, b))
                        for a, b in zip(augment[i], augment[r])
                    ]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots, r


def rank(field: Field, m) -> int:
    if not m:
        return 0
    work = mat_copy(m)
    _, r = row_echelon(field, work)
    return r


def nullspace(field: Field, m):
    """Basis of the right kernel, as a list of vectors."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    work = mat_copy(m)
    pivots, _ = row_echelon(field, work)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [field.zero] * cols
        v[free] = field.one
        for r_idx, pc in enumerate(pivots):
            v[pc] = field.neg(work[r_idx][free])
        basis.append(v)
    return basis


def solve(field: Field, a, b):
    """One solution x of a x = b, or None when inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    work = mat_copy(a)
    aug = [[v] for v in b]
    pivots, _ = row_echelon(field, work, aug)
    x = [field.zero] * cols
    for r_idx, pc in enumerate(pivots):
        x[pc] = aug[r_idx][0]
    # rows past the pivot count must have zero rhs
    for i in range(len(pivots), rows):
        if not field.is_zero(aug[i][0]):
            return None
    # verify (cheap and guards the pivotless-column bookkeeping)
    for i in range(rows):
        acc = field.zero
        for j in range(cols):
            acc = field.add(acc, field.mul(a[i][j], x[j]))
        if not field.is_zero(field.sub(acc, b[i])):
            return None
    return x


def matmul(field: Field, a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = zeros(field, rows, cols)
    for i in range(rows):
        for k in range(inner):
            v = a[i][k]
            if field.is_zero(v):
                continue
            for j in range(cols):
                out[i][j] = field.add(out[i][j], field.mul(v, b[k][j]))
    return out


def invert(field: Field, m):
    """Inverse of a square matrix, or None if singular."""
    n = len(m)
    work = mat_copy(m)
    aug = identity(field, n)
    pivots, r = row_echelon(field, work, aug)
    if r < n:
        return None
    return aug


def det(field: Field, m):
    """Determinant by fraction-free-ish elimination (field version)."""
    n = len(m)
    work = mat_copy(m)
    sign = False
    result = field.one
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if not field.is_zero(work[i][c]):
                pivot = i
                break
        if pivot is None:
            return field.zero
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            sign = not sign
        result = field.mul(result, work[c][c])
        inv = field.inv(work[c][c])
        for i in range(c + 1, n):
            if field.is_zero(work[i][c]):
                continue
            factor = field.mul(work[i][c], inv)
            work[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(work[i], work[c])]
    return field.neg(result) if sign else result


def congruence_diagonalize(field: Field, gram):
    """Lagrange diagonalization of a symmetric matrix by rank peeling.

    Returns (coeffs, forms) with x^T gram x = sum_i coeffs[i]*(forms[i].x)^2,
    exactly rank(gram) summands, and linearly independent forms (each form
    is a row vector of field elements). Needs characteristic != 2.
    """
    if field.p == 2:
        raise DomainError("characteristic 2 not supported")
    n = len(gram)
    g = mat_copy(gram)
    coeffs = []
    out_forms = []
    two_inv = field.inv(field.from_int(2))
    while True:
        diag = next((i for i in range(n) if not field.is_zero(g[i][i])), None)
        if diag is not None:
            i = diag
            a = g[i][i]
            v = [field.div(g[i][k], a) for k in range(n)]
            coeffs.append(a)
            out_forms.append(v)
            # peel a * v v^T; row and column i become zero
            for r in range(n):
                if field.is_zero(v[r]):
                    continue
                avr = field.mul(a, v[r])
                g[r] = [field.sub(g[r][c], field.mul(avr, v[c])) for c in range(n)]
            continue
        off = None
        for i in range(n):
            for j in range(i + 1, n):
                if not field.is_zero(g[i][j]):
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            break  # g is now zero
        i, j = off
        b = g[i][j]
        u = g[i][:]
        w = g[j][:]
        # 2/b*(u.x)(w.x) = 1/(2b)*((u+w).x)^2 - 1/(2b)*((u-w).x)^2, and the
        # symmetric matrix (u^T w + w^T u)/b agrees with g on rows/cols i, j
        c1 = field.mul(two_inv, field.inv(b))
        coeffs.append(c1)
        out_forms.append([field.add(x, y) for x, y in zip(u, w)])
        coeffs.append(field.neg(c1))
        out_forms.append([field.sub(x, y) for x, y in zip(u, w)])
        binv = field.inv(b)
        for r in range(n):
            if field.is_zero(u[r]) and field.is_zero(w[r]):
                continue
            g[r] = [
                field.sub(
                    g[r][c],
                    field.mul(binv, field.add(field.mul(u[r], w[c]), field.mul(w[r], u[c]))),
                )
                for c in range(n)
            ]
    return coeffs, out_forms
