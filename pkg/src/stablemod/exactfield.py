"""Exact linear algebra over a prime field Z/p.

Matrices are plain ``numpy`` int64 arrays holding canonical residues in
``[0, p)``.  Every basis produced here is in reduced row-echelon form, so
results are deterministic and byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DimensionMismatch, InputError

DEFAULT_PRIME = 101
# keeps every product of two residues (plus accumulation) inside int64
MAX_PRIME = 2**31 - 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not is_prime(int(self.p)):
            raise InputError(f"field modulus {self.p!r} is not prime")
        if self.p > MAX_PRIME:
            raise InputError(f"field modulus {self.p} exceeds {MAX_PRIME}")

    def matrix(self, entries, shape: Optional[tuple[int, int]] = None) -> np.ndarray:
        """Coerce ``entries`` into a canonical matrix, reshaping empty input."""
        a = np.array(entries, dtype=np.int64)
        if shape is not None:
            if a.size == 0:
                a = np.zeros(shape, dtype=np.int64)
            elif a.shape != tuple(shape):
                raise DimensionMismatch(f"expected shape {tuple(shape)}, got {a.shape}")
        return a % self.p

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def inv(self, x: int) -> int:
        return pow(int(x) % self.p, -1, self.p)

    def random_matrix(self, rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
        return rng.integers(0, self.p, size=(rows, cols), dtype=np.int64)


def frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if p < 2**15:
        return (a @ b) % p
    # split the inner dimension so partial sums stay below 2**63
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = (out + np.outer(a[:, k], b[k, :]) % p) % p
    return out


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over Z/p.

    Returns ``(R, pivots)``; the rank is ``len(pivots)``.
    """
    r_mat = np.array(m, dtype=np.int64) % p
    rows, cols = r_mat.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(r_mat[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            r_mat[[r, k]] = r_mat[[k, r]]
        r_mat[r] = (r_mat[r] * pow(int(r_mat[r, c]), -1, p)) % p
        col = r_mat[:, c].copy()
        col[r] = 0
        if col.any():
            r_mat = (r_mat - np.outer(col, r_mat[r]) % p) % p
        pivots.append(c)
        r += 1
    return r_mat, pivots


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{x : a @ x = 0}`` as the rows of an RREF matrix."""
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r_mat, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-r_mat[row, fc]) % p
    if not free:
        return basis
    canon, _ = rref(basis, p)
    return canon


def solve(a: np.ndarray, b: np.ndarray, p: int) -> Optional[tuple[np.ndarray, np.ndarray]]:
    """Solve ``a @ X = b``.

    Returns ``(X0, N)`` where ``X0`` is the canonical particular solution
    (free coordinates set to zero) and the columns of ``N`` span the kernel
    of ``a``; returns ``None`` when the system is inconsistent.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatch(f"solve: {a.shape[0]} equations but rhs has {b.shape[0]} rows")
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.zeros((n, b.shape[1]), dtype=np.int64), np.eye(n, dtype=np.int64)
    r_mat, pivots = rref(np.hstack([a, b]), p)
    if pivots and pivots[-1] >= n:
        return None
    x0 = np.zeros((n, b.shape[1]), dtype=np.int64)
    for row, pc in enumerate(pivots):
        x0[pc] = r_mat[row, n:]
    kernel = np.ascontiguousarray(nullspace(a, p).T)
    return x0, kernel


def solve_vector(a: np.ndarray, b: np.ndarray, p: int) -> Optional[np.ndarray]:
    """Canonical solution of ``a @ x = b`` for a single right-hand side, or None."""
    res = solve(a, b.reshape(-1, 1), p)
    if res is None:
        return None
    return res[0][:, 0]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of ``F_p^ambient`` held by its canonical RREF basis."""

    ambient: int
    basis: np.ndarray
    pivots: tuple[int, ...]
    p: int

    @classmethod
    def span(cls, vectors, ambient: int, p: int) -> "Subspace":
        """Row span of ``vectors`` (a k x ambient matrix or iterable of vectors)."""
        v = np.array(vectors, dtype=np.int64).reshape(-1, ambient) if ambient else np.zeros((0, 0), dtype=np.int64)
        if v.shape[0] == 0 or ambient == 0:
            return cls.zero(ambient, p)
        r_mat, pivots = rref(v, p)
        return cls(ambient, frozen(r_mat[: len(pivots)].copy()), tuple(pivots), p)

    @classmethod
    def zero(cls, ambient: int, p: int) -> "Subspace":
        return cls(ambient, frozen(np.zeros((0, ambient), dtype=np.int64)), (), p)

    @classmethod
    def full(cls, ambient: int, p: int) -> "Subspace":
        return cls(ambient, frozen(np.eye(ambient, dtype=np.int64)), tuple(range(ambient)), p)

    @classmethod
    def column_space(cls, m: np.ndarray, p: int) -> "Subspace":
        return cls.span(m.T, m.shape[0], p)

    @classmethod
    def kernel_of(cls, m: np.ndarray, p: int) -> "Subspace":
        ns = nullspace(m, p)
        return cls(m.shape[1], frozen(ns), tuple(_leading(ns)), p)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient, self.pivots, self.p) == (other.ambient, other.pivots, other.p) and np.array_equal(
            self.basis, other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.pivots, self.basis.tobytes()))

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise DimensionMismatch(f"ambient dimensions differ: {self.ambient} vs {other.ambient}")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(np.vstack([self.basis, other.basis]), self.ambient, self.p)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient, self.p)
        # x = a V = b W  <=>  [V^T | -W^T] (a, b) = 0
        stacked = np.hstack([self.basis.T, (-other.basis.T) % self.p])
        ns = nullspace(stacked, self.p)
        return Subspace.span(matmul(ns[:, : self.dim], self.basis, self.p), self.ambient, self.p)

    def contains(self, other: "Subspace") -> bool:
        """True iff ``other`` is a subspace of ``self``."""
        self._check(other)
        return all(self.contains_vector(v) for v in other.basis)

    def contains_vector(self, v: np.ndarray) -> bool:
        v = np.asarray(v, dtype=np.int64) % self.p
        return not self.reduce(v).any()

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Canonical representative of ``v`` modulo this subspace (zero on pivots)."""
        v = np.asarray(v, dtype=np.int64) % self.p
        if self.dim == 0:
            return v
        return (v - v[list(self.pivots)] @ self.basis) % self.p

    def coordinates(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of ``v`` (assumed to lie in the span) in the RREF basis."""
        return np.asarray(v, dtype=np.int64)[list(self.pivots)] % self.p

    def complement(self) -> "Subspace":
        """Span of the standard vectors at the non-pivot coordinates."""
        free = self.free_coordinates()
        basis = np.zeros((len(free), self.ambient), dtype=np.int64)
        for i, c in enumerate(free):
            basis[i, c] = 1
        return Subspace(self.ambient, frozen(basis), tuple(free), self.p)

    def free_coordinates(self) -> list[int]:
        piv = set(self.pivots)
        return [c for c in range(self.ambient) if c not in piv]

    def quotient_map(self) -> np.ndarray:
        """Matrix of ``F^ambient -> F^ambient / self`` in complement coordinates."""
        free = self.free_coordinates()
        red = np.eye(self.ambient, dtype=np.int64)
        if self.dim:
            sel = np.zeros((self.dim, self.ambient), dtype=np.int64)
            for r, c in enumerate(self.pivots):
                sel[r, c] = 1
            red = (red - self.basis.T @ sel) % self.p
        return red[free, :].copy()

    def quotient_section(self) -> np.ndarray:
        """Lift of quotient coordinates back to the ambient space."""
        return self.complement().basis.T.copy()


def _leading(rows: np.ndarray) -> Iterable[int]:
    for row in rows:
        nz = np.flatnonzero(row)
        yield int(nz[0])


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out
