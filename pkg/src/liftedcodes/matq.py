"""Dense matrices over a finite field, plus counting matrices by rank."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import Field


class MatQ:
    """Immutable rows x cols matrix with entries encoded as field integers."""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            if arr.size == 0:
                arr = arr.reshape(0, 0)
            else:
                raise ValueError("matrix entries must form a 2-d grid")
        if arr.size and (arr.min() < 0 or arr.max() >= field.order):
            raise ValueError(f"entries must lie in 0..{field.order - 1}")
        arr.flags.writeable = False
        self.field = field
        self.entries = arr

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> MatQ:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: Field, size: int) -> MatQ:
        return cls(field, np.eye(size, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def T(self) -> MatQ:
        return MatQ(self.field, self.entries.T)

    def __getitem__(self, idx):
        return self.entries[idx]

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatQ) and self.field == other.field
                and self.shape == other.shape
                and bool(np.array_equal(self.entries, other.entries)))

    def __hash__(self):
        return hash((self.field, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"MatQ({self.rows}x{self.cols} over GF({self.field.order}), {self.tolist()})"

    def __add__(self, other: MatQ) -> MatQ:
        self._same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return MatQ(self.field, self.field.add_table[self.entries, other.entries])

    def __sub__(self, other: MatQ) -> MatQ:
        self._same(other)
        neg = self.field.neg_table[other.entries]
        return MatQ(self.field, self.field.add_table[self.entries, neg])

    def __matmul__(self, other: MatQ) -> MatQ:
        self._same(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return MatQ(self.field, matmul(self.field, self.entries, other.entries))

    def scale(self, c: int) -> MatQ:
        return MatQ(self.field, self.field.mul_table[c, self.entries])

    def _same(self, other):
        if not isinstance(other, MatQ) or other.field != self.field:
            raise ValueError("field mismatch")

    def rank(self) -> int:
        return rank(self)


def matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    add, mul = field.add_table, field.mul_table
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = add[out, mul[a[:, k][:, None], b[k][None, :]]]
    return out


def _rref(field: Field, grid: np.ndarray, track: bool = False):
    """Row-reduce; returns (R, pivot columns, A) with A @ grid == R if tracked."""
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    R = np.array(grid, dtype=np.int64)
    rows, cols = R.shape
    A = np.eye(rows, dtype=np.int64) if track else None
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        p = row + int(nz[0])
        if p != row:
            R[[row, p]] = R[[p, row]]
            if track:
                A[[row, p]] = A[[p, row]]
        scale = inv[R[row, col]]
        R[row] = mul[scale, R[row]]
        if track:
            A[row] = mul[scale, A[row]]
        for other in range(rows):
            if other != row and R[other, col]:
                f = neg[R[other, col]]
                R[other] = add[R[other], mul[f, R[row]]]
                if track:
                    A[other] = add[A[other], mul[f, A[row]]]
        pivots.append(col)
        row += 1
    return R, pivots, A


def rref(M: MatQ) -> tuple[MatQ, list[int]]:
    R, pivots, _ = _rref(M.field, M.entries)
    return MatQ(M.field, R), pivots


def rank(M: MatQ) -> int:
    return len(_rref(M.field, M.entries)[1])


def nullspace(M: MatQ) -> MatQ:
    """Basis (as rows) of {x : M x^T = 0}."""
    F = M.field
    R, pivots, _ = _rref(F, M.entries)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = np.zeros((len(free), M.cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = F.neg_table[R[row, f]]
    return MatQ(F, basis)


def inverse(M: MatQ) -> MatQ:
    if M.rows != M.cols:
        raise ValueError("only square matrices are invertible")
    R, pivots, A = _rref(M.field, M.entries, track=True)
    if len(pivots) != M.rows:
        raise ZeroDivisionError("matrix is singular")
    return MatQ(M.field, A)


def rank_normal_form(M: MatQ) -> tuple[MatQ, MatQ, MatQ]:
    """Nonsingular A, B with P = A M B diagonal, ones on the first rank(M) places."""
    F = M.field
    R, pivots, A = _rref(F, M.entries, track=True)
    m, l = M.cols, len(pivots)
    order = pivots + [c for c in range(m) if c not in pivots]
    perm = np.zeros((m, m), dtype=np.int64)
    for new, old in enumerate(order):
        perm[old, new] = 1
    # clear the non-pivot part of the pivot rows by column operations
    clear = np.eye(m, dtype=np.int64)
    RP = matmul(F, R, perm)
    for i in range(l):
        for j in range(l, m):
            clear[i, j] = F.neg_table[RP[i, j]]
    B = matmul(F, perm, clear)
    P = matmul(F, R, B)
    return MatQ(F, A), MatQ(F, B), MatQ(F, P)


def rank_factorization(M: MatQ) -> tuple[MatQ, MatQ]:
    """M = U V with U (rows x l) of full column rank and V (l x cols) of full row rank."""
    R, pivots, _ = _rref(M.field, M.entries)
    l = len(pivots)
    U = M.entries[:, pivots].reshape(M.rows, l)
    V = R[:l].reshape(l, M.cols)
    return MatQ(M.field, U), MatQ(M.field, V)


# counting

def m_q(k: int, t: int, q: int) -> int:
    """Number of injective linear maps F_q^k -> F_q^t."""
    if not 1 <= k <= t:
        raise ValueError(f"need 1 <= k <= t, got k={k}, t={t}")
    out = 1
    for i in range(k):
        out *= q ** t - q ** i
    return out


def count_rank(q: int, r: int, m: int, k: int) -> int:
    """Number of r x m matrices over F_q of rank k."""
    if not 0 <= k <= min(r, m):
        raise ValueError(f"rank {k} impossible for {r}x{m} matrices")
    if k == 0:
        return 1
    num = m_q(k, r, q) * m_q(k, m, q)
    den = m_q(k, k, q)
    assert num % den == 0
    return num // den


def count_rank_one_freedom(q: int, r: int, m: int, k: int) -> int:
    """(q^r - q^(k-1)) (q^m - q^(k-1)) / (q - 1)."""
    if not 1 <= k <= min(r, m) + 1:
        raise ValueError(f"k must lie in 1..{min(r, m) + 1}, got {k}")
    num = (q ** r - q ** (k - 1)) * (q ** m - q ** (k - 1))
    assert num % (q - 1) == 0
    return num // (q - 1)


@dataclass(frozen=True)
class RankCensus:
    q: int
    r: int
    m: int
    k: int
    count: int


def rank_census(q: int, r: int, m: int) -> list[RankCensus]:
    return [RankCensus(q, r, m, k, count_rank(q, r, m, k)) for k in range(min(r, m) + 1)]
