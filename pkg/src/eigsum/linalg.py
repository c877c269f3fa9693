"""Dense symmetric eigensolving and compound / additive compound matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np


@dataclass(frozen=True)
class SymMatrix:
    """Dense real symmetric matrix; symmetry is enforced entrywise at construction."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if arr.shape[0] < 1:
            raise ValueError("matrix order must be >= 1")
        if not np.array_equal(arr, arr.T):
            raise ValueError("matrix is not exactly symmetric")
        object.__setattr__(self, "data", arr)

    @property
    def order(self):
        return self.data.shape[0]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending; their sum matches the source trace."""

    values: tuple
    order: int

    def __post_init__(self):
        if any(self.values[i] < self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ValueError("spectrum values must be sorted descending")

    def top_sum(self, k):
        if not 1 <= k <= self.order:
            raise ValueError(f"k must be in 1..{self.order}, got {k}")
        return float(sum(self.values[:k]))


def _as_square_array(a, dtype=None):
    arr = a.data if isinstance(a, SymMatrix) else np.asarray(a)
    if dtype is not None:
        arr = arr.astype(dtype)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def eig_sym(a, vectors=False):
    """Descending eigenvalues of a real symmetric matrix (LAPACK backend).

    With ``vectors=True`` also returns the matrix V whose columns match the
    descending order, satisfying A = V diag(values) V^T up to solver tolerance.
    """
    arr = _as_square_array(a, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    if not np.array_equal(arr, arr.T):
        raise ValueError("matrix is not exactly symmetric")
    vals, vecs = np.linalg.eigh(arr)
    spectrum = Spectrum(tuple(float(v) for v in vals[::-1]), arr.shape[0])
    if vectors:
        return spectrum, vecs[:, ::-1]
    return spectrum


@dataclass(frozen=True)
class KSubsetIndex:
    """All k-subsets of {1..n} in lexicographic order, with position lookup."""

    n: int
    k: int
    sets: tuple

    def position(self, subset):
        """1-based position of ``subset`` in the lexicographic order."""
        key = tuple(sorted(subset))
        try:
            return self._index[key]
        except AttributeError:
            object.__setattr__(
                self, "_index", {s: i + 1 for i, s in enumerate(self.sets)}
            )
            return self._index[key]


def ksubsets_lex(n, k):
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}")
    sets = tuple(combinations(range(1, n + 1), k))
    assert len(sets) == math.comb(n, k)
    return KSubsetIndex(n, k, sets)


def compound(a, k):
    """k-th compound matrix: entry (i, j) is det of the rows-S_i, columns-S_j submatrix."""
    arr = _as_square_array(a, dtype=float)
    n = arr.shape[0]
    subsets = ksubsets_lex(n, k).sets
    size = len(subsets)
    out = np.empty((size, size))
    idx = [np.array([x - 1 for x in s]) for s in subsets]
    for i in range(size):
        rows = arr[idx[i], :]
        for j in range(size):
            out[i, j] = np.linalg.det(rows[:, idx[j]])
    return out


def additive_compound(a, k):
    """k-th additive compound, assembled in closed form.

    Entry (i, i) sums the diagonal of A over S_i.  Entry (i, j) with
    |S_i ∩ S_j| = k-1 is ±A[r][c] for r = S_i \\ S_j, c = S_j \\ S_i with sign
    (-1)^(pos(r in S_i) + pos(c in S_j)); all other entries vanish.  Integer
    input yields an exactly integer result.
    """
    arr = a.data if isinstance(a, SymMatrix) else np.asarray(a)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    subsets = ksubsets_lex(n, k).sets
    size = len(subsets)
    rows = []
    for i in range(size):
        si = subsets[i]
        seti = set(si)
        row = [0] * size
        row[i] = sum(arr[x - 1, x - 1] for x in si)
        for j in range(size):
            if j == i:
                continue
            sj = subsets[j]
            inter = seti.intersection(sj)
            if len(inter) != k - 1:
                continue
            r = next(x for x in si if x not in inter)
            c = next(x for x in sj if x not in inter)
            sign = -1 if (si.index(r) + sj.index(c)) % 2 else 1
            row[j] = sign * arr[r - 1, c - 1]
        rows.append(row)
    return np.array(rows)


def numeric_derivative_compound(a, k, t):
    """Finite-difference oracle (C_k(I + tA) - C_k(I)) / t for the additive compound."""
    if t == 0:
        raise ValueError("step t must be nonzero")
    arr = _as_square_array(a, dtype=float)
    n = arr.shape[0]
    size = math.comb(n, k)
    return (compound(np.eye(n) + t * arr, k) - np.eye(size)) / t
