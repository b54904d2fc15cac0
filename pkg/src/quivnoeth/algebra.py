"""Path algebras over F_p.

Multiplication follows right-to-left composition: for basis paths,
``phi * psi`` is "apply psi, then phi" when ``s(phi) == t(psi)`` and zero
otherwise.  (The other convention gives the opposite algebra.)

For a quiver with an oriented cycle the algebra is infinite-dimensional; a
truncation keeps the paths of length at most L as a window onto it.  Products
that leave the window raise :class:`TruncationOverflow` instead of being
silently set to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np

from .gf import check_prime
from .linrep import Representation, enumerate_subrepresentations, free_representation, DIMENSION_GUARD
from .noetherian import finite_quiver_criterion
from .quiver import Path, Quiver, QuiverError, cycle_vertices, iter_paths

__all__ = [
    "PathAlgebra",
    "TruncationOverflow",
    "build_algebra",
    "multiply",
    "algebra_noetherian",
    "regular_representation",
    "rep_module_correspondence",
    "ModuleCheck",
]

_ZERO = -1
_OVERFLOW = -2


class TruncationOverflow(ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class PathAlgebra:
    quiver: Quiver
    p: int
    basis: tuple[Path, ...]
    truncation: Optional[int]
    table: np.ndarray  # table[i, j] = index of basis[i] * basis[j], or _ZERO / _OVERFLOW
    index: Mapping[Path, int] = field(repr=False)

    @property
    def truncated(self) -> bool:
        return self.truncation is not None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, coeffs: Mapping[Path, int] | None = None) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        for path, c in (coeffs or {}).items():
            v[self.index[path]] = (v[self.index[path]] + c) % self.p
        return v

    def basis_element(self, path: Path) -> np.ndarray:
        return self.element({path: 1})

    def idempotent(self, v: str) -> np.ndarray:
        return self.basis_element(self.quiver.trivial_path(v))

    def idempotents(self) -> dict[str, np.ndarray]:
        return {v: self.idempotent(v) for v in sorted(self.quiver.vertices)}

    def one(self) -> np.ndarray:
        return sum(self.idempotents().values()) % self.p

    def describe(self, u: np.ndarray) -> str:
        terms = [f"{c}*{self.basis[i].word()}" if c != 1 else self.basis[i].word()
                 for i, c in enumerate(u) if c]
        return " + ".join(terms) if terms else "0"


def build_algebra(q: Quiver, p: int, L: Optional[int] = None) -> PathAlgebra:
    check_prime(p)
    if q.has_rays:
        raise QuiverError("path algebras are built for ray-free quivers")
    cyclic = bool(cycle_vertices(q))
    if cyclic and L is None:
        raise QuiverError("quiver has an oriented cycle; a truncation length is required")
    if cyclic and L < 0:
        raise ValueError("truncation must be nonnegative")
    # acyclic: every path has fewer arrows than there are vertices
    bound = L if cyclic else len(q.vertices)
    paths = [ph for v in sorted(q.vertices) for ph in iter_paths(q, v, bound)]
    paths.sort(key=lambda ph: (len(ph), ph.start, ph.arrows))
    index = {ph: i for i, ph in enumerate(paths)}
    n = len(paths)
    table = np.full((n, n), _ZERO, dtype=np.int64)
    for i, phi in enumerate(paths):
        for j, psi in enumerate(paths):
            if phi.start != psi.target:
                continue
            prod = psi.followed_by(phi)
            table[i, j] = index.get(prod, _OVERFLOW)
    return PathAlgebra(q, p, tuple(paths), L if cyclic else None, table, index)


def multiply(alg: PathAlgebra, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Bilinear extension of ``phi * psi = phi . psi``."""
    out = np.zeros(alg.dim, dtype=np.int64)
    for i in np.nonzero(u)[0]:
        for j in np.nonzero(v)[0]:
            k = alg.table[i, j]
            if k == _ZERO:
                continue
            if k == _OVERFLOW:
                raise TruncationOverflow(
                    f"{alg.basis[i].word()} * {alg.basis[j].word()} is longer than {alg.truncation}"
                )
            out[k] = (out[k] + u[i] * v[j]) % alg.p
    return out


def regular_representation(q: Quiver, p: int) -> Representation:
    """The direct sum of the free representations ``F_p[Q(x,-)]`` over all x.

    Its subrepresentations are the left ideals of the path algebra.
    """
    frees = [free_representation(q, x, p) for x in sorted(q.vertices)]
    dims = {v: sum(F.rep.dims[v] for F in frees) for v in q.vertices}
    maps = {}
    for a in q.arrows:
        blocks = [F.rep.maps[a.id] for F in frees]
        mat = np.zeros((dims[a.target], dims[a.source]), dtype=np.int64)
        r = c = 0
        for b in blocks:
            mat[r: r + b.shape[0], c: c + b.shape[1]] = b
            r += b.shape[0]
            c += b.shape[1]
        maps[a.id] = mat
    return Representation(q, p, dims, maps)


def algebra_noetherian(q: Quiver, p: int) -> bool:
    """Left noetherian iff one arrow starts at each vertex on an oriented cycle.

    For acyclic quivers the algebra is finite-dimensional; when the regular
    representation fits the enumeration guard its left ideals are listed as a
    cross-check that the ideal lattice is finite.
    """
    check_prime(p)
    verdict = finite_quiver_criterion(q)
    if not cycle_vertices(q):
        if not verdict:
            raise AssertionError("acyclic quiver judged non-noetherian")
        reg = regular_representation(q, p)
        if reg.total_dim <= DIMENSION_GUARD[p]:
            ideals = enumerate_subrepresentations(reg)
            if not ideals:
                raise AssertionError("left ideal lattice is empty")
    return verdict


@dataclass(frozen=True)
class ModuleCheck:
    dim: int
    expected_dim: int
    identity_ok: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.identity_ok and not self.failures and self.dim == self.expected_dim


def action_matrix(alg: PathAlgebra, M: Representation, path: Path) -> np.ndarray:
    """How a basis path acts on the module ``M(v1) + M(v2) + ...`` (sorted vertices)."""
    verts = sorted(M.quiver.vertices)
    offs, total = {}, 0
    for v in verts:
        offs[v] = total
        total += M.dims[v]
    out = np.zeros((total, total), dtype=np.int64)
    block = M.path_map(path)
    s, t = path.start, path.target
    out[offs[t]: offs[t] + M.dims[t], offs[s]: offs[s] + M.dims[s]] = block
    return out


def rep_module_correspondence(q: Quiver, p: int, M: Representation) -> ModuleCheck:
    """Check that ``M`` turns into a left module over the path algebra.

    Every basis pair (u, v) must satisfy ``act(u * v) = act(u) act(v)`` and the
    sum of the idempotents must act as the identity.
    """
    if cycle_vertices(q) or q.has_rays:
        raise QuiverError("module correspondence is checked for acyclic ray-free quivers")
    if M.quiver != q or M.p != p:
        raise QuiverError("representation is over a different quiver or field")
    alg = build_algebra(q, p)
    acts = [action_matrix(alg, M, b) for b in alg.basis]
    n = M.total_dim
    failures = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            k = alg.table[i, j]
            lhs = np.zeros((n, n), dtype=np.int64) if k == _ZERO else acts[k]
            rhs = (acts[i] @ acts[j]) % p
            if not np.array_equal(lhs, rhs):
                failures.append(f"({alg.basis[i].word()})({alg.basis[j].word()})")
    one = sum(acts[alg.index[q.trivial_path(v)]] for v in q.vertices) % p if q.vertices else np.zeros((0, 0))
    identity_ok = np.array_equal(one, np.eye(n, dtype=np.int64))
    return ModuleCheck(n, M.total_dim, identity_ok, tuple(failures))
