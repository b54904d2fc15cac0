"""Exact linear algebra over a prime field F_p.

Matrices are ``numpy`` integer arrays with entries in ``range(p)``.  Vectors are
rows; a linear map ``F_p^n -> F_p^m`` is an ``m x n`` matrix acting on columns,
so the image of row vectors ``V`` is ``V @ A.T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

import numpy as np

SUPPORTED_PRIMES = (2, 3, 5)


def check_prime(p: int) -> int:
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"unsupported field size {p}; expected one of {SUPPORTED_PRIMES}")
    return p


def as_matrix(rows, p: int, ncols: int | None = None) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.size == 0:
        return np.zeros((0 if a.ndim < 2 else a.shape[0], ncols or 0), dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return np.mod(a, p)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p and pivot columns; zero rows dropped."""
    m = np.mod(np.array(a, dtype=np.int64, copy=True), p)
    if m.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        others = np.nonzero(m[:, c])[0]
        for i in others:
            if i != r:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of ``{v : a @ v = 0}``."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    r, piv = rref(a, p)
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(piv):
            basis[i, pc] = (-r[row, f]) % p
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^n stored by its reduced row echelon basis."""

    p: int
    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors, p: int, n: int) -> "Subspace":
        a = as_matrix(vectors, p, n)
        if a.shape[0] == 0:
            return cls(p, n, ())
        if a.shape[1] != n:
            raise ValueError(f"vectors have length {a.shape[1]}, expected {n}")
        r, _ = rref(a, p)
        return cls(p, n, tuple(tuple(int(v) for v in row) for row in r))

    @classmethod
    def zero(cls, p: int, n: int) -> "Subspace":
        return cls(p, n, ())

    @classmethod
    def full(cls, p: int, n: int) -> "Subspace":
        return cls.span(np.eye(n, dtype=np.int64), p, n)

    @classmethod
    def coordinate(cls, p: int, n: int, coords) -> "Subspace":
        e = np.eye(n, dtype=np.int64)
        return cls.span([e[i] for i in sorted(coords)], p, n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        if not self.basis:
            return np.zeros((0, self.n), dtype=np.int64)
        return np.array(self.basis, dtype=np.int64)

    def contains_vector(self, v) -> bool:
        v = np.mod(np.asarray(v, dtype=np.int64), self.p)
        if not v.any():
            return True
        return rank(np.vstack([self.matrix(), v]), self.p) == self.dim

    def __le__(self, other: "Subspace") -> bool:
        self._same_ambient(other)
        return all(other.contains_vector(v) for v in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.dim < other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace.span(np.vstack([self.matrix(), other.matrix()]), self.p, self.n)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of ``[A; -B]``."""
        self._same_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.p, self.n)
        a, b = self.matrix(), other.matrix()
        stacked = np.vstack([a, (-b) % self.p])
        ker = nullspace(stacked.T, self.p)
        if ker.shape[0] == 0:
            return Subspace.zero(self.p, self.n)
        return Subspace.span((ker[:, : self.dim] @ a) % self.p, self.p, self.n)

    def image(self, a: np.ndarray) -> "Subspace":
        """Image under the linear map with matrix ``a`` (shape m x n)."""
        m = a.shape[0]
        if self.dim == 0:
            return Subspace.zero(self.p, m)
        return Subspace.span((self.matrix() @ a.T) % self.p, self.p, m)

    def project(self, coords) -> "Subspace":
        coords = list(coords)
        if self.dim == 0:
            return Subspace.zero(self.p, len(coords))
        return Subspace.span(self.matrix()[:, coords], self.p, len(coords))

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """All p^dim elements."""
        b = self.matrix()
        for coeffs in product(range(self.p), repeat=self.dim):
            if self.dim == 0:
                yield (0,) * self.n
            else:
                yield tuple(int(v) for v in (np.array(coeffs) @ b) % self.p)

    def _same_ambient(self, other: "Subspace") -> None:
        if self.p != other.p or self.n != other.n:
            raise ValueError("subspaces live in different ambient spaces")

    def __str__(self) -> str:
        if not self.basis:
            return "0"
        return "<" + ", ".join("".join(map(str, row)) for row in self.basis) + ">"


def all_subspaces(p: int, n: int) -> list[Subspace]:
    """Every subspace of F_p^n, ordered by dimension then basis.

    Generated directly as reduced echelon forms: pick pivot columns, then fill
    the non-pivot entries to the right of each pivot freely.
    """
    out: list[Subspace] = []
    for k in range(n + 1):
        found = []
        for pivots in combinations(range(n), k):
            free = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
            for values in product(range(p), repeat=len(free)):
                m = np.zeros((k, n), dtype=np.int64)
                for i, pc in enumerate(pivots):
                    m[i, pc] = 1
                for (i, c), v in zip(free, values):
                    m[i, c] = v
                found.append(Subspace(p, n, tuple(tuple(int(v) for v in row) for row in m)))
        out.extend(sorted(found, key=lambda s: s.basis, reverse=True))
    return out


def gaussian_binomial_total(p: int, n: int) -> int:
    """Number of subspaces of F_p^n (sum of Gaussian binomials)."""
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total
