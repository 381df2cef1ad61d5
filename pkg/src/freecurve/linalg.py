"""Dense exact linear algebra over Q and prime fields.

Three operations back every graded dimension computed by this package:
`rank`, `kernel_basis` and `solve_exact`.  All arithmetic is exact:

* over Q, ranks use fraction-free (Bareiss) elimination on row-scaled
  integer matrices, which keeps intermediate entries at minor size;
  reduced forms finish the integer echelon with rational back-elimination;
* over a prime field, ordinary Gaussian elimination; when p^2 < 2^63 the
  elimination runs vectorised on int64 arrays (still exact integer
  arithmetic, just batched), otherwise element-wise on Python ints.

Pivoting is pinned: columns are scanned left to right and the topmost
nonzero entry of the current column is the pivot.  This makes every
reduced form, kernel basis and particular solution bit-deterministic and
canonical for a given matrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from .fields import Field, PrimeField


class ExactMatrix:
    """A rows x cols matrix over an exact field.

    Internally a prime-field matrix whose modulus fits the vectorised path
    is stored as an int64 ndarray; everything else as a list of row lists.
    """

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, rows: int, cols: int, data):
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "ExactMatrix":
        m = len(rows)
        n = len(rows[0]) if m else 0
        for r in rows:
            if len(r) != n:
                raise ValueError("ragged rows")
        if _use_numpy(field):
            data = np.array(rows, dtype=np.int64) % field.p if m else np.zeros((0, n), dtype=np.int64)
        else:
            data = [list(r) for r in rows]
        return cls(field, m, n, data)

    @classmethod
    def zeros(cls, field: Field, m: int, n: int) -> "ExactMatrix":
        if _use_numpy(field):
            return cls(field, m, n, np.zeros((m, n), dtype=np.int64))
        return cls(field, m, n, [[field.zero] * n for _ in range(m)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "ExactMatrix":
        out = cls.zeros(field, n, n)
        for i in range(n):
            out.set(i, i, field.one)
        return out

    def set(self, i: int, j: int, value) -> None:
        if isinstance(self._data, np.ndarray):
            self._data[i, j] = value % self.field.p
        else:
            self._data[i][j] = value

    def get(self, i: int, j: int):
        if isinstance(self._data, np.ndarray):
            return int(self._data[i, j])
        return self._data[i][j]

    def row_lists(self) -> list[list]:
        if isinstance(self._data, np.ndarray):
            return [[int(v) for v in row] for row in self._data]
        return [list(r) for r in self._data]

    def transpose(self) -> "ExactMatrix":
        if isinstance(self._data, np.ndarray):
            return ExactMatrix(self.field, self.cols, self.rows, self._data.T.copy())
        data = [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return ExactMatrix(self.field, self.cols, self.rows, data)

    def __repr__(self):
        return f"ExactMatrix({self.field.name}, {self.rows}x{self.cols})"


def _use_numpy(field: Field) -> bool:
    return isinstance(field, PrimeField) and field.fits_int64()


# ---------------------------------------------------------------------------
# prime-field elimination, vectorised


def _np_rank(a: np.ndarray, p: int) -> int:
    a = a.copy()
    m, n = a.shape
    r = 0
    for col in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, col])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, col]), p - 2, p)
        below = a[r + 1 :, col]
        nzb = np.nonzero(below)[0]
        if nzb.size:
            rows_idx = r + 1 + nzb
            factors = below[nzb] * inv % p
            # products stay below p^2 < 2^63: exact in int64
            a[rows_idx, col:] = (a[rows_idx, col:] - factors[:, None] * a[r, col:][None, :]) % p
        r += 1
    return r


def _np_rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = a.copy()
    m, n = a.shape
    r = 0
    pivots: list[int] = []
    for col in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, col])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, col]), p - 2, p)
        a[r, col:] = a[r, col:] * inv % p
        colv = a[:, col].copy()
        colv[r] = 0
        other = np.nonzero(colv)[0]
        if other.size:
            a[other, col:] = (a[other, col:] - colv[other, None] * a[r, col:][None, :]) % p
        pivots.append(col)
        r += 1
    return a, pivots


# ---------------------------------------------------------------------------
# rational elimination


def _scaled_int_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    """Scale each row to coprime integers; rank-preserving."""
    out = []
    for row in rows:
        denlcm = 1
        for v in row:
            d = v.denominator
            denlcm = denlcm // gcd(denlcm, d) * d
        ints = [int(v * denlcm) for v in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _bareiss_echelon(a: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form in place; returns (rows, pivot cols)."""
    m = len(a)
    n = len(a[0]) if m else 0
    pivots: list[int] = []
    piv = 0
    prev = 1
    for col in range(n):
        if piv == m:
            break
        pr = None
        for i in range(piv, m):
            if a[i][col]:
                pr = i
                break
        if pr is None:
            continue
        if pr != piv:
            a[piv], a[pr] = a[pr], a[piv]
        prow = a[piv]
        pval = prow[col]
        for i in range(piv + 1, m):
            row = a[i]
            ival = row[col]
            if ival:
                for j in range(col + 1, n):
                    pj = prow[j]
                    rj = row[j]
                    if rj or pj:
                        row[j] = (pval * rj - ival * pj) // prev
                row[col] = 0
            elif pval != prev:
                # Bareiss updates every row below the pivot, including ones
                # already zero in the pivot column, to keep exact divisibility.
                for j in range(col + 1, n):
                    if row[j]:
                        row[j] = pval * row[j] // prev
        pivots.append(col)
        prev = pval
        piv += 1
    return a, pivots


def _rref_fraction_from_echelon(ech: list[list[int]], pivots: list[int], n: int) -> list[list[Fraction]]:
    """Normalise an integer echelon to the unique rational RREF."""
    r = len(pivots)
    rows = [[Fraction(v) for v in ech[i]] for i in range(r)]
    for i in range(r - 1, -1, -1):
        pc = pivots[i]
        inv = 1 / rows[i][pc]
        rows[i] = [v * inv for v in rows[i]]
        for k in range(i):
            c = rows[k][pc]
            if c:
                rows[k] = [a - c * b for a, b in zip(rows[k], rows[i])]
    return rows


def _rref_generic(rows: list[list], field: Field) -> tuple[list[list], list[int]]:
    """Gauss-Jordan over an arbitrary field; returns nonzero RREF rows and pivots."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    rows = [list(r) for r in rows]
    r = 0
    pivots: list[int] = []
    for col in range(n):
        if r == m:
            break
        pr = None
        for i in range(r, m):
            if not field.is_zero(rows[i][col]):
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [field.mul(inv, v) for v in rows[r]]
        for i in range(m):
            if i != r and not field.is_zero(rows[i][col]):
                c = rows[i][col]
                prow = rows[r]
                rows[i] = [field.sub(a, field.mul(c, b)) for a, b in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def _rref(M: ExactMatrix) -> tuple[list[list], list[int]]:
    """Unique RREF of M (nonzero rows only) plus pivot columns."""
    if M.rows == 0 or M.cols == 0:
        return [], []
    if isinstance(M._data, np.ndarray):
        rr, pivots = _np_rref(M._data, M.field.p)
        return [[int(v) for v in rr[i]] for i in range(len(pivots))], pivots
    if isinstance(M.field, PrimeField):
        return _rref_generic(M._data, M.field)
    ech, pivots = _bareiss_echelon(_scaled_int_rows(M._data))
    return _rref_fraction_from_echelon(ech, pivots, M.cols), pivots


# ---------------------------------------------------------------------------
# public operations


def rank(M: ExactMatrix) -> int:
    """Exact rank; deterministic for a fixed input."""
    if M.rows == 0 or M.cols == 0:
        return 0
    if isinstance(M._data, np.ndarray):
        return _np_rank(M._data, M.field.p)
    if isinstance(M.field, PrimeField):
        return len(_rref_generic(M._data, M.field)[1])
    return len(_bareiss_echelon(_scaled_int_rows(M._data))[1])


def kernel_basis(M: ExactMatrix) -> list[tuple]:
    """Canonical basis of the right null space {v : Mv = 0}.

    The returned vectors, stacked as rows, form the unique reduced echelon
    basis of the kernel, so the output is canonical for a given matrix.
    Basis size is cols - rank.
    """
    field = M.field
    if M.cols == 0:
        return []
    rr, pivots = _rref(M)
    pivset = set(pivots)
    free = [c for c in range(M.cols) if c not in pivset]
    vecs = []
    for fcol in free:
        v = [field.zero] * M.cols
        v[fcol] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(rr[i][fcol])
        vecs.append(v)
    if not vecs:
        return []
    canon, _ = _rref_generic(vecs, field)
    return [tuple(row) for row in canon]


INCONSISTENT = None  # sentinel returned by solve_exact for unsolvable systems


def solve_exact(M: ExactMatrix, b: Sequence):
    """Some x with Mx = b, or None when the system is inconsistent.

    When solutions form an affine family the canonical echelon particular
    solution is returned (free coordinates set to zero).
    """
    if len(b) != M.rows:
        raise ValueError("right-hand side length must equal row count")
    field = M.field
    aug_rows = []
    data = M.row_lists()
    for i in range(M.rows):
        bi = b[i]
        if isinstance(field, PrimeField):
            bi = bi % field.p
        aug_rows.append(data[i] + [bi])
    if M.rows == 0:
        return tuple([field.zero] * M.cols)
    aug = ExactMatrix.from_rows(field, aug_rows)
    rr, pivots = _rref(aug)
    if pivots and pivots[-1] == M.cols:
        return INCONSISTENT
    x = [field.zero] * M.cols
    for i, pc in enumerate(pivots):
        x[pc] = rr[i][M.cols]
    return tuple(x)
