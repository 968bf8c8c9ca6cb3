"""
Exact Linear Algebra Module
Dense vectors, matrices and rank-3/4 tensors as numpy object arrays of
ScalarFraction entries, with exact inverse, rank and signature
"""

import logging
from dataclasses import dataclass

import numpy as np

from errors import SingularMatrixError, ValidationError
from scalar import sign_of

logger = logging.getLogger(__name__)

INDETERMINATE = "indeterminate"


def zeros(table, *shape):
    """Object array of the given shape filled with exact zeros"""
    out = np.empty(shape, dtype=object)
    zero = table.element(0)
    for index in np.ndindex(*shape):
        out[index] = zero
    return out


def identity(table, n):
    out = zeros(table, n, n)
    one = table.element(1)
    for i in range(n):
        out[i, i] = one
    return out


def vector(values, table):
    """
    Build a coordinate vector

    Args:
        values: iterable of ints, Fractions, expression strings or scalars
        table: SymbolTable the entries belong to

    Returns:
        1-d object array of ScalarFraction
    """
    values = list(values)
    out = np.empty(len(values), dtype=object)
    for i, value in enumerate(values):
        out[i] = table.element(value)
    return out


def matrix(rows, table):
    """Build a matrix from nested rows of scalar-like values"""
    rows = [list(row) for row in rows]
    width = len(rows[0]) if rows else 0
    if any(len(row) != width for row in rows):
        raise ValidationError("matrix rows have different lengths")
    out = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            out[i, j] = table.element(value)
    return out


def diagonal(values, table):
    values = list(values)
    out = zeros(table, len(values), len(values))
    for i, value in enumerate(values):
        out[i, i] = table.element(value)
    return out


def basis_vector(table, n, i):
    out = zeros(table, n)
    out[i] = table.element(1)
    return out


def outer(u, v):
    out = np.empty((len(u), len(v)), dtype=object)
    for i in range(len(u)):
        for j in range(len(v)):
            out[i, j] = u[i] * v[j]
    return out


def dot(u, v):
    """Plain coordinate contraction sum_i u_i v_i"""
    if len(u) != len(v):
        raise ValidationError("dimension mismatch in contraction")
    total = u[0] * v[0]
    for i in range(1, len(u)):
        total = total + u[i] * v[i]
    return total


def bilinear(G, u, v):
    """Value of the bilinear form with Gram matrix G on vectors u and v"""
    return dot(u, G @ v)


def all_zero(array):
    return all(entry.is_zero() for entry in np.asarray(array, dtype=object).flat)


def equal(left, right):
    """Exact entrywise comparison of two arrays of the same shape"""
    left = np.asarray(left, dtype=object)
    right = np.asarray(right, dtype=object)
    if left.shape != right.shape:
        return False
    return all((x - y).is_zero() for x, y in zip(left.flat, right.flat))


def is_symmetric(M):
    return equal(M, M.T)


def transform(array, fn):
    """Apply fn to every entry, returning a new object array"""
    array = np.asarray(array, dtype=object)
    out = np.empty(array.shape, dtype=object)
    for index in np.ndindex(*array.shape):
        out[index] = fn(array[index])
    return out


def to_strings(array):
    """Nested lists of expression strings (JSON form)"""
    array = np.asarray(array, dtype=object)
    return transform(array, str).tolist()


def from_strings(nested, table, field=None):
    """Parse nested lists of expression strings into an object array"""
    raw = np.asarray(nested, dtype=object)
    out = np.empty(raw.shape, dtype=object)
    for index in np.ndindex(*raw.shape):
        where = field + "".join(f"[{i}]" for i in index) if field else None
        out[index] = table.parse(raw[index], field=where) if isinstance(raw[index], str) \
            else table.element(raw[index])
    return out


def mat_inverse(M):
    """
    Exact inverse by Gauss-Jordan elimination

    Pivot is the first entry in the column whose normal form is nonzero.

    Args:
        M: square object array of ScalarFraction

    Returns:
        Inverse as an object array

    Raises:
        SingularMatrixError: when no pivot exists in some column
    """
    n, m = M.shape
    if n != m:
        raise ValidationError(f"cannot invert a {n}x{m} matrix")
    table = M[0, 0].table
    work = np.concatenate([M.copy(), identity(table, n)], axis=1)

    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r, col].is_zero()), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular (zero determinant normal form)")
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        scale = work[col, col].inv()
        work[col] = np.array([entry * scale for entry in work[col]], dtype=object)
        for r in range(n):
            if r == col or work[r, col].is_zero():
                continue
            factor = work[r, col]
            work[r] = np.array(
                [x - factor * y for x, y in zip(work[r], work[col])], dtype=object
            )
    return work[:, n:]


def rank(M):
    """Rank by row reduction over fractions"""
    work = np.array(M, dtype=object)
    if work.ndim == 1:
        work = work.reshape(1, -1)
    rows, cols = work.shape
    pivot_row = 0
    for col in range(cols):
        pivot = next((r for r in range(pivot_row, rows) if not work[r, col].is_zero()), None)
        if pivot is None:
            continue
        if pivot != pivot_row:
            work[[pivot_row, pivot]] = work[[pivot, pivot_row]]
        lead = work[pivot_row, col]
        for r in range(pivot_row + 1, rows):
            if work[r, col].is_zero():
                continue
            factor = work[r, col] / lead
            work[r] = np.array(
                [x - factor * y for x, y in zip(work[r], work[pivot_row])], dtype=object
            )
        pivot_row += 1
        if pivot_row == rows:
            break
    return pivot_row


def in_span(vectors, v):
    """True when v is a linear combination of the given vectors"""
    vectors = list(vectors)
    if not vectors:
        return all_zero(v)
    base = np.array(vectors, dtype=object)
    return rank(np.vstack([base, v])) == rank(base)


@dataclass
class SignatureResult:
    """Rank of a symmetric form and its signature (positive, negative) or INDETERMINATE"""

    rank: int
    signature: object

    @property
    def determinate(self):
        return self.signature != INDETERMINATE


def sym_rank_and_signature(M):
    """
    Rank and signature of a symmetric matrix by symmetric (congruence) elimination

    Args:
        M: symmetric square object array

    Returns:
        SignatureResult; the signature is INDETERMINATE when some pivot has
        no decidable sign
    """
    if not is_symmetric(M):
        raise ValidationError("signature requested for a non-symmetric matrix")
    work = np.array(M, dtype=object)
    active = list(range(work.shape[0]))
    found, positive, negative, determinate = 0, 0, 0, True

    while active:
        pivot = next((i for i in active if not work[i, i].is_zero()), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in active for j in active if i < j and not work[i, j].is_zero()),
                None,
            )
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + e_j gives the pivot 2*A[i, j]
            work[i, :] = work[i, :] + work[j, :]
            work[:, i] = work[:, i] + work[:, j]
            pivot = i

        lead = work[pivot, pivot]
        sign = sign_of(lead)
        if sign is None:
            determinate = False
        elif sign > 0:
            positive += 1
        else:
            negative += 1
        found += 1

        active.remove(pivot)
        for r in active:
            if work[r, pivot].is_zero():
                continue
            factor = work[r, pivot] / lead
            work[r, :] = work[r, :] - factor * work[pivot, :]
            work[:, r] = work[:, r] - factor * work[:, pivot]

    signature = (positive, negative) if determinate else INDETERMINATE
    logger.debug("symmetric elimination: rank %d, signature %s", found, signature)
    return SignatureResult(found, signature)
