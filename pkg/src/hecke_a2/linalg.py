"""Dense linear algebra over a :class:`FieldSpec`, on integer arrays of codes.

Matrices act on column vectors.  Most routines accept a leading batch axis so
that many small eliminations can run in one numpy pass.
"""
from __future__ import annotations

import numpy as np

from .errors import NotInvertible
from .gf import FieldSpec

DTYPE = np.int64


def asmat(field: FieldSpec, rows) -> np.ndarray:
    """Build a code matrix from nested lists of ints / FFElems / coordinate lists."""
    out = [[field(x).code for x in row] for row in rows]
    return np.array(out, dtype=DTYPE).reshape(len(out), -1)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=DTYPE)


def matmul(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a @ b`` with broadcasting over leading axes."""
    if field.k == 1:
        return (a @ b) % field.p
    acc = field.vmul(a[..., :, 0:1], b[..., 0:1, :])
    for l in range(1, a.shape[-1]):
        acc = field.vfma(acc, a[..., :, l:l + 1], b[..., l:l + 1, :])
    return acc


def matprod(field: FieldSpec, *mats: np.ndarray) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        out = matmul(field, out, m)
    return out


def add(field: FieldSpec, a, b):
    return field.vadd(np.asarray(a, dtype=DTYPE), np.asarray(b, dtype=DTYPE))


def sub(field: FieldSpec, a, b):
    return field.vsub(np.asarray(a, dtype=DTYPE), np.asarray(b, dtype=DTYPE))


def scale(field: FieldSpec, c: int, a):
    return field.vmul(np.asarray(a, dtype=DTYPE), c)


def rref(field: FieldSpec, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form of a batch of matrices.

    ``x`` has shape (..., m, n).  Returns ``(r, rank)`` where ``r`` has the
    same shape with the nonzero rows first, and ``rank`` has shape (...).
    """
    x = np.array(x, dtype=DTYPE, copy=True)
    batch_shape = x.shape[:-2]
    m, n = x.shape[-2:]
    x = x.reshape(-1, m, n)
    nb = x.shape[0]
    rank = np.zeros(nb, dtype=np.intp)
    rows = np.arange(m)
    for c in range(n):
        cand = (x[:, :, c] != 0) & (rows[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        piv = np.argmax(cand[b], axis=1)
        r = rank[b]
        prow = x[b, piv].copy()
        x[b, piv] = x[b, r]
        prow = field.vmul(prow, field.vinv(prow[:, c])[:, None])
        x[b, r] = prow
        f = x[b, :, c].copy()
        f[np.arange(len(b)), r] = 0
        if field.k == 1:
            x[b] = (x[b] - f[:, :, None] * prow[:, None, :]) % field.p
        else:
            x[b] = field.vfma(x[b], f[:, :, None], prow[:, None, :], subtract=True)
        rank[b] += 1
        if np.all(rank >= m):
            break
    return x.reshape(batch_shape + (m, n)), rank.reshape(batch_shape)


def rank(field: FieldSpec, x: np.ndarray):
    return rref(field, x)[1]


def row_space(field: FieldSpec, x: np.ndarray) -> np.ndarray:
    """Canonical basis (RREF rows) of the span of the rows of a single matrix."""
    r, k = rref(field, x)
    return r[: int(k)]


def inverse(field: FieldSpec, a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([np.asarray(a, dtype=DTYPE), identity(n)], axis=1)
    r, _ = rref(field, aug)
    if not np.array_equal(r[:, :n], identity(n)):
        raise NotInvertible("matrix is singular")
    return r[:, n:]


def is_invertible(field: FieldSpec, a: np.ndarray) -> bool:
    return int(rank(field, a)) == a.shape[0]


def nullspace(field: FieldSpec, a: np.ndarray) -> np.ndarray:
    """Basis of {x : a x = 0}, one basis vector per row."""
    m, n = a.shape
    r, k = rref(field, a)
    k = int(k)
    pivots = []
    for i in range(k):
        pivots.append(int(np.nonzero(r[i])[0][0]))
    free = [j for j in range(n) if j not in pivots]
    basis = np.zeros((len(free), n), dtype=DTYPE)
    for t, j in enumerate(free):
        basis[t, j] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = field.neg(int(r[i, j]))
    return basis


def complete_basis(field: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """Extend RREF rows to a basis of F^n by unit vectors on the non-pivot columns."""
    n = rows.shape[1]
    pivots = {int(np.nonzero(r)[0][0]) for r in rows}
    extra = [np.eye(n, dtype=DTYPE)[j] for j in range(n) if j not in pivots]
    if not extra:
        return rows.copy()
    return np.vstack([rows] + extra)


def is_scalar(a: np.ndarray) -> bool:
    n = a.shape[0]
    return bool(np.array_equal(a, a[0, 0] * identity(n)))
