"""Exact linear algebra over a :class:`~pyhopf.fields.core.Field`.

Matrices are numpy object arrays (or nested lists, which are converted) holding
:class:`~pyhopf.fields.core.FieldElem` entries. Everything is computed by Gauss-Jordan elimination, so results are
exact and deterministic given the row order.
"""

import numpy as np

from .core import FieldElem
from ..errors import DimensionMismatch, NoSolution, SingularMatrix


def _infer_field(entries):
    for x in entries:
        if isinstance(x, FieldElem):
            return x.field
    raise ValueError("Cannot infer the field of a matrix without FieldElem entries, pass field= explicitly")


def as_matrix(rows, field=None, ncols=None):
    """Convert ``rows`` to a 2d object array over ``field``.

    :param rows: nested sequence or array.
    :param field: field of the entries; inferred from the first :class:`FieldElem` entry when omitted.
    :param ncols: column count, only needed when ``rows`` is empty.
    """
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for idx, r in enumerate(rows):
        if len(r) != ncols:
            raise DimensionMismatch(f"Row {idx} has {len(r)} entries, expected {ncols}")
    if field is None:
        field = _infer_field(x for r in rows for x in r)
    out = np.empty((len(rows), ncols), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            out[i, j] = field.convert(x)
    return out


def as_vector(vec, field=None):
    vec = list(vec)
    if field is None:
        field = _infer_field(vec)
    out = np.empty(len(vec), dtype=object)
    for i, x in enumerate(vec):
        out[i] = field.convert(x)
    return out


def identity(n, field):
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = field.one() if i == j else field.zero()
    return out


def zeros(shape, field):
    out = np.empty(shape, dtype=object)
    for idx in np.ndindex(*out.shape):
        out[idx] = field.zero()
    return out


def rref(matrix, field=None):
    """Reduced row echelon form.

    :returns: ``(R, pivots)``, with ``R`` an object array of the same shape and ``pivots`` the list of pivot columns.
    """
    a = as_matrix(matrix, field=field)
    nrows, ncols = a.shape
    r = [list(row) for row in a]
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        pivot = next((k for k in range(row, nrows) if not r[k][col].is_zero()), None)
        if pivot is None:
            continue
        r[row], r[pivot] = r[pivot], r[row]
        inv = r[row][col].inverse()
        r[row] = [x * inv for x in r[row]]
        for k in range(nrows):
            if k != row and not r[k][col].is_zero():
                factor = r[k][col]
                r[k] = [x - factor * y for x, y in zip(r[k], r[row])]
        pivots.append(col)
        row += 1
    out = np.empty((nrows, ncols), dtype=object)
    for i in range(nrows):
        for j in range(ncols):
            out[i, j] = r[i][j]
    return out, pivots


def rank(matrix, field=None):
    return len(rref(matrix, field=field)[1])


def kernel(matrix, field=None, ncols=None):
    """Basis of the right null space ``{x : A x = 0}``.

    The basis is returned in reduced echelon form (as the rows of an RREF matrix), so it only depends on the
    null space itself.

    :param ncols: column count, needed together with ``field`` for a matrix without rows.
    :returns: list of tuples of :class:`FieldElem`.
    """
    a = as_matrix(matrix, field=field, ncols=ncols)
    n = a.shape[1]
    if a.shape[0] == 0:
        return [tuple(row) for row in identity(n, field)]
    if field is None:
        field = a.flat[0].field
    r, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    vectors = []
    for f in free:
        v = [field.zero()] * n
        v[f] = field.one()
        for row, p in enumerate(pivots):
            v[p] = -r[row, f]
        vectors.append(v)
    if not vectors:
        return []
    basis, _ = rref(vectors, field=field)
    return [tuple(row) for row in basis]


def solve(matrix, rhs, field=None):
    """One solution ``x`` of ``A x = rhs`` (free variables set to zero).

    :raises NoSolution: if the system is inconsistent.
    :raises DimensionMismatch: if ``rhs`` does not have one entry per row.
    """
    a = as_matrix(matrix, field=field)
    if field is None:
        field = a.flat[0].field
    nrows, ncols = a.shape
    rhs = list(rhs)
    if len(rhs) != nrows:
        raise DimensionMismatch(f"Right-hand side has {len(rhs)} entries, matrix has {nrows} rows")
    augmented = [list(a[i]) + [field.convert(rhs[i])] for i in range(nrows)]
    r, pivots = rref(augmented, field=field)
    if ncols in pivots:
        raise NoSolution("Linear system is inconsistent")
    x = [field.zero()] * ncols
    for row, p in enumerate(pivots):
        x[p] = r[row, ncols]
    return tuple(x)


def linear_solve(matrix, mode="kernel", rhs=None, field=None):
    """Dispatch to :func:`kernel` or :func:`solve`.

    :param mode: ``"kernel"`` or ``"solve"``; ``"solve"`` needs ``rhs``.
    """
    if mode == "kernel":
        return kernel(matrix, field=field)
    elif mode == "solve":
        if rhs is None:
            raise ValueError("mode='solve' requires a right-hand side")
        return solve(matrix, rhs, field=field)
    else:
        raise ValueError(f"Unknown linear_solve mode {mode!r}")


def inverse(matrix, field=None):
    a = as_matrix(matrix, field=field)
    n, m = a.shape
    if n != m:
        raise DimensionMismatch(f"Only square matrices can be inverted, got shape {a.shape}")
    if field is None:
        field = a.flat[0].field
    augmented = np.concatenate([a, identity(n, field)], axis=1)
    r, pivots = rref(augmented, field=field)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix(f"{n}x{n} matrix is singular over {field}")
    return r[:, n:]


def matmul(a, b):
    """Exact matrix product of two object arrays."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatch(f"Cannot multiply shapes {a.shape} and {b.shape}")
    return np.dot(a, b)


def transpose(a):
    return np.asarray(a, dtype=object).T.copy()
