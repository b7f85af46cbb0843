"""Exact integer linear algebra on numpy object arrays.

Entries are Python ints, so every operation is arbitrary precision. Column echelon
forms give lattice bases and kernels; the Smith normal form reads off invariant
factors and keeps the unimodular transforms together with their inverses.
"""

import logging
from dataclasses import dataclass

import numpy as np

from errors import DomainError

logger = logging.getLogger(__name__)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def eye(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def as_object(matrix) -> np.ndarray:
    out = np.array(matrix, dtype=object)
    if out.ndim == 1:
        out = out.reshape(-1, 1)
    return out


def column_echelon(matrix: np.ndarray, limit: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Unimodular column reduction of rows ``0..limit-1``.

    Returns the reduced copy and the pivot rows. Columns ``0..r-1`` (r = number of
    pivots) are in echelon form: column j vanishes above row ``pivots[j]``, its pivot
    is positive, and every later column vanishes on rows up to ``pivots[j]``.
    Columns ``r..`` vanish on all processed rows.
    """
    E = np.array(matrix, dtype=object, copy=True)
    rows, cols = E.shape
    limit = rows if limit is None else limit
    pivots: list[int] = []
    r = 0
    for i in range(limit):
        if r == cols:
            break
        while True:
            row = E[i, r:]
            nz = np.flatnonzero(row)
            if nz.size == 0:
                break
            k = r + int(min(nz, key=lambda t: abs(row[t])))
            if k != r:
                E[:, [r, k]] = E[:, [k, r]]
            piv = E[i, r]
            rest = np.flatnonzero(E[i, r + 1 :])
            if rest.size == 0:
                if piv < 0:
                    E[:, r] = -E[:, r]
                pivots.append(i)
                r += 1
                break
            targets = rest + r + 1
            q = E[i, targets] // piv
            E[:, targets] -= np.multiply.outer(E[:, r], q)
    return E, pivots


def integer_kernel(matrix: np.ndarray) -> np.ndarray:
    """Basis (as columns) of {v : M v = 0} over the integers."""
    M = as_object(matrix)
    rows, cols = M.shape
    stacked = np.vstack([M, eye(cols)]) if rows else eye(cols)
    E, pivots = column_echelon(stacked, limit=rows)
    return E[rows:, len(pivots) :]


class LatticeBasis:
    """Echelon basis of the lattice spanned by the columns of a generator matrix."""

    def __init__(self, generators: np.ndarray):
        G = as_object(generators)
        self.dimension = G.shape[0]
        E, pivots = column_echelon(G)
        self.basis = E[:, : len(pivots)]
        self.pivots = pivots

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve_many(self, vectors: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Coordinates of each column in the basis, plus a mask of columns that lie in the lattice."""
        R = np.array(vectors, dtype=object, copy=True)
        count = R.shape[1]
        coords = zeros(self.rank, count)
        ok = np.ones(count, dtype=bool)
        for j, p in enumerate(self.pivots):
            row = R[p, :]
            nz = np.flatnonzero(row)
            if nz.size == 0:
                continue
            piv = self.basis[p, j]
            values = row[nz]
            ok[nz[(values % piv != 0).astype(bool)]] = False
            x = values // piv
            coords[j, nz] = x
            R[p:, nz] -= np.multiply.outer(self.basis[p:, j], x)
        if R.size:
            ok &= ~(R != 0).astype(bool).any(axis=0)
        return coords, ok

    def solve(self, vector) -> np.ndarray:
        coords, ok = self.solve_many(as_object(vector))
        if not ok[0]:
            raise DomainError("vector is not in the lattice")
        return coords[:, 0]

    def contains(self, vector) -> bool:
        return bool(self.solve_many(as_object(vector))[1][0])


@dataclass
class SmithForm:
    """U · M · V = D with U, V unimodular and D diagonal, d₁ | d₂ | …."""

    D: np.ndarray
    U: np.ndarray | None
    V: np.ndarray | None
    U_inv: np.ndarray | None
    V_inv: np.ndarray | None

    @property
    def diagonal(self) -> list[int]:
        k = min(self.D.shape)
        return [int(self.D[i, i]) for i in range(k) if self.D[i, i] != 0]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(matrix, track: bool = True) -> SmithForm:
    """Smallest-pivot Smith reduction in exact integers."""
    A = as_object(matrix).copy()
    m, n = A.shape
    U, U_inv = (eye(m), eye(m)) if track else (None, None)
    V, V_inv = (eye(n), eye(n)) if track else (None, None)

    def swap_rows(i: int, j: int):
        A[[i, j], :] = A[[j, i], :]
        if track:
            U[[i, j], :] = U[[j, i], :]
            U_inv[:, [i, j]] = U_inv[:, [j, i]]

    def swap_cols(i: int, j: int):
        A[:, [i, j]] = A[:, [j, i]]
        if track:
            V[:, [i, j]] = V[:, [j, i]]
            V_inv[[i, j], :] = V_inv[[j, i], :]

    def bring_min_to(t: int, region: np.ndarray, offset_r: int, offset_c: int) -> bool:
        nz = np.argwhere(region != 0)
        if nz.size == 0:
            return False
        best = min(nz, key=lambda rc: abs(region[rc[0], rc[1]]))
        r, c = int(best[0]) + offset_r, int(best[1]) + offset_c
        if r != t:
            swap_rows(t, r)
        if c != t:
            swap_cols(t, c)
        return True

    t = 0
    while t < min(m, n):
        if not bring_min_to(t, A[t:, t:], t, t):
            break
        while True:
            piv = A[t, t]
            below = np.flatnonzero(A[t + 1 :, t])
            if below.size:
                rows = below + t + 1
                q = A[rows, t] // piv
                A[rows, :] -= np.multiply.outer(q, A[t, :])
                if track:
                    U[rows, :] -= np.multiply.outer(q, U[t, :])
                    U_inv[:, t] += U_inv[:, rows].dot(q)
            right = np.flatnonzero(A[t, t + 1 :])
            if right.size:
                cols = right + t + 1
                q = A[t, cols] // piv
                A[:, cols] -= np.multiply.outer(A[:, t], q)
                if track:
                    V[:, cols] -= np.multiply.outer(V[:, t], q)
                    V_inv[t, :] += q.dot(V_inv[cols, :])
            column_left = np.flatnonzero(A[t + 1 :, t]).size
            row_left = np.flatnonzero(A[t, t + 1 :]).size
            if column_left or row_left:
                # Remainders are smaller than the pivot: move the smallest into place
                cross = zeros(m - t, n - t)
                cross[:, 0] = A[t:, t]
                cross[0, :] = A[t, t:]
                bring_min_to(t, cross, t, t)
                continue
            rest = A[t + 1 :, t + 1 :]
            bad = np.argwhere((rest % piv != 0).astype(bool)) if rest.size else np.empty((0, 2))
            if len(bad):
                r = int(bad[0][0]) + t + 1
                A[t, :] += A[r, :]
                if track:
                    U[t, :] += U[r, :]
                    U_inv[:, r] -= U_inv[:, t]
                continue
            break
        if A[t, t] < 0:
            A[t, :] = -A[t, :]
            if track:
                U[t, :] = -U[t, :]
                U_inv[:, t] = -U_inv[:, t]
        t += 1
    logger.debug("smith form of %dx%d matrix: rank %d", m, n, t)
    return SmithForm(A, U, V, U_inv, V_inv)


SCREEN_PRIME = 1_000_003


def rank_mod_prime(matrix: np.ndarray, p: int = SCREEN_PRIME) -> int:
    """Rank over Z_p. Never exceeds the rank over Q."""
    A = np.array(np.asarray(matrix, dtype=object) % p, dtype=np.int64)
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(A[rank:, c])
        if nz.size == 0:
            continue
        pivot_row = rank + int(nz[0])
        if pivot_row != rank:
            A[[rank, pivot_row], :] = A[[pivot_row, rank], :]
        inv = pow(int(A[rank, c]), -1, p)
        A[rank, :] = (A[rank, :] * inv) % p
        below = rank + 1 + np.flatnonzero(A[rank + 1 :, c])
        if below.size:
            A[below, :] = (A[below, :] - np.outer(A[below, c], A[rank, :])) % p
        rank += 1
    return rank
