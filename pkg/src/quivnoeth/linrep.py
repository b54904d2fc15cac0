"""Finite-dimensional representations of quivers over F_p.

A representation assigns ``F_p^{dims[v]}`` to each vertex and a matrix of
shape ``dims[t] x dims[s]`` to each arrow ``s -> t``.  Only ray-free quivers
carry representations here; free representations are built on the part of
the quiver reachable from their base vertex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional

import numpy as np

from .gf import Subspace, all_subspaces, check_prime, nullspace
from .groebner import PathOrder
from .noetherian import is_left_finite_at
from .poset import PathIdeal, ideal_membership
from .quiver import Path, Quiver, QuiverError, iter_paths, reachable_subquiver

__all__ = [
    "Representation",
    "Subrepresentation",
    "FreeRepresentation",
    "RepresentationError",
    "free_representation",
    "hom_representations",
    "compose_morphisms",
    "enumerate_subrepresentations",
    "leading_submodule",
    "ideal_embedding",
    "random_representation",
    "zero_representation",
    "parse_representation",
    "serialize_representation",
    "DIMENSION_GUARD",
]

# total dimension allowed for subrepresentation enumeration, per field size
DIMENSION_GUARD = {2: 10, 3: 6, 5: 6}


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Representation:
    quiver: Quiver
    p: int
    dims: Mapping[str, int]
    maps: Mapping[str, np.ndarray]

    def __post_init__(self):
        check_prime(self.p)
        q = self.quiver
        if q.has_rays:
            raise RepresentationError("representations need a ray-free quiver")
        dims = {v: int(self.dims.get(v, 0)) for v in q.vertices}
        if any(d < 0 for d in dims.values()):
            raise RepresentationError("dimensions must be nonnegative")
        extra = set(self.dims) - set(q.vertices)
        if extra:
            raise RepresentationError(f"dimension given for unknown vertices {sorted(extra)}")
        maps = {}
        for a in q.arrows:
            shape = (dims[a.target], dims[a.source])
            m = self.maps.get(a.id)
            m = np.zeros(shape, dtype=np.int64) if m is None else np.mod(np.asarray(m, dtype=np.int64), self.p)
            if m.size == 0:
                m = np.zeros(shape, dtype=np.int64)
            if m.shape != shape:
                raise RepresentationError(f"map {a.id} has shape {m.shape}, expected {shape}")
            m.setflags(write=False)
            maps[a.id] = m
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", maps)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def path_map(self, path: Path) -> np.ndarray:
        m = np.eye(self.dims[path.start], dtype=np.int64)
        for aid in path.arrows:
            m = (self.maps[aid] @ m) % self.p
        return m

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.quiver == other.quiver and self.p == other.p and self.dims == other.dims
            and all(np.array_equal(self.maps[a], other.maps[a]) for a in self.maps)
        )

    def __hash__(self):
        return hash((self.quiver, self.p, tuple(sorted(self.dims.items()))))


@dataclass(frozen=True)
class Subrepresentation:
    """Subspaces ``spaces[v]`` of each ``M(v)``, closed under every arrow."""

    spaces: tuple[tuple[str, Subspace], ...]

    @classmethod
    def build(cls, rep: Representation, spaces: Mapping[str, Subspace], check: bool = True):
        sub = cls(tuple(sorted(spaces.items())))
        if check and not sub.is_closed(rep):
            raise RepresentationError("subspaces are not closed under the arrow maps")
        return sub

    def __getitem__(self, v: str) -> Subspace:
        return dict(self.spaces)[v]

    def as_dict(self) -> dict[str, Subspace]:
        return dict(self.spaces)

    def is_closed(self, rep: Representation) -> bool:
        s = self.as_dict()
        return all(s[a.source].image(rep.maps[a.id]) <= s[a.target] for a in rep.quiver.arrows)

    @property
    def dim(self) -> int:
        return sum(s.dim for _, s in self.spaces)

    def dims(self) -> dict[str, int]:
        return {v: s.dim for v, s in self.spaces}

    def __le__(self, other: "Subrepresentation") -> bool:
        o = other.as_dict()
        return all(s <= o[v] for v, s in self.spaces)

    def __lt__(self, other: "Subrepresentation") -> bool:
        return self <= other and self != other

    def __and__(self, other: "Subrepresentation") -> "Subrepresentation":
        o = other.as_dict()
        return Subrepresentation(tuple((v, s & o[v]) for v, s in self.spaces))

    def __add__(self, other: "Subrepresentation") -> "Subrepresentation":
        o = other.as_dict()
        return Subrepresentation(tuple((v, s + o[v]) for v, s in self.spaces))

    def __str__(self) -> str:
        return "(" + ", ".join(f"{v}: {s}" for v, s in self.spaces) + ")"


@dataclass(frozen=True, eq=False)
class FreeRepresentation:
    """``F_p^m [Q(x,-)]``: coordinates at y are pairs (path in Q(x,y), k)."""

    rep: Representation
    base: str
    m: int
    index: Mapping[str, tuple[Path, ...]]

    def coordinate(self, path: Path, k: int = 0) -> int:
        return self.index[path.target].index(path) * self.m + k

    def coordinates(self, path: Path) -> list[int]:
        c = self.coordinate(path)
        return list(range(c, c + self.m))

    @property
    def quiver(self) -> Quiver:
        return self.rep.quiver


def zero_representation(q: Quiver, p: int) -> Representation:
    return Representation(q, p, {v: 0 for v in q.vertices}, {})


def free_representation(q: Quiver, x: str, p: int, m: int = 1) -> FreeRepresentation:
    """Basis ``e_{phi,k}`` at y for phi in Q(x,y); arrow a sends it to ``e_{a phi,k}``."""
    check_prime(p)
    if m < 1:
        raise ValueError("generator dimension must be at least 1")
    if not is_left_finite_at(q, x):
        raise RepresentationError(f"Q({x}) is infinite, so the free representation is infinite-dimensional")
    if q.has_rays:
        q = reachable_subquiver(q, x)
    paths = list(iter_paths(q, x, len(q.vertices)))
    index = {v: tuple(ph for ph in paths if ph.target == v) for v in q.vertices}
    dims = {v: len(index[v]) * m for v in q.vertices}
    maps = {}
    for a in q.arrows:
        mat = np.zeros((dims[a.target], dims[a.source]), dtype=np.int64)
        for i, ph in enumerate(index[a.source]):
            j = index[a.target].index(ph.then(a))
            for k in range(m):
                mat[j * m + k, i * m + k] = 1
        maps[a.id] = mat
    return FreeRepresentation(Representation(q, p, dims, maps), x, m, index)


def hom_representations(M: Representation, N: Representation) -> list[dict[str, np.ndarray]]:
    """Basis of Hom(M, N): families f_v with f_t M(a) = N(a) f_s for every arrow.

    Unknowns are the row-major entries of each f_v; with that layout
    ``vec(A X B) = (A kron B^T) vec(X)``.
    """
    if M.quiver != N.quiver or M.p != N.p:
        raise RepresentationError("representations over different quivers or fields")
    q, p = M.quiver, M.p
    verts = sorted(q.vertices)
    offsets, total = {}, 0
    for v in verts:
        offsets[v] = total
        total += N.dims[v] * M.dims[v]
    blocks = []
    for a in q.arrows:
        s, t = a.source, a.target
        rows = N.dims[t] * M.dims[s]
        if rows == 0:
            continue
        eq = np.zeros((rows, total), dtype=np.int64)
        lt = np.kron(np.eye(N.dims[t], dtype=np.int64), M.maps[a.id].T)
        rt = np.kron(N.maps[a.id], np.eye(M.dims[s], dtype=np.int64))
        eq[:, offsets[t]: offsets[t] + lt.shape[1]] += lt
        eq[:, offsets[s]: offsets[s] + rt.shape[1]] -= rt
        blocks.append(eq % p)
    system = np.vstack(blocks) if blocks else np.zeros((0, total), dtype=np.int64)
    basis = nullspace(system, p) if total else np.zeros((0, 0), dtype=np.int64)
    out = []
    for vec in basis:
        f = {}
        for v in verts:
            n_, m_ = N.dims[v], M.dims[v]
            f[v] = vec[offsets[v]: offsets[v] + n_ * m_].reshape(n_, m_) % p
        out.append(f)
    return out


def compose_morphisms(g: Mapping[str, np.ndarray], f: Mapping[str, np.ndarray], p: int) -> dict[str, np.ndarray]:
    """``g . f`` vertexwise."""
    return {v: (g[v] @ f[v]) % p for v in f}


def enumerate_subrepresentations(M: Representation) -> list[Subrepresentation]:
    """Every subrepresentation exactly once.

    Candidate subspace tuples are explored vertex by vertex (sorted ids) and a
    partial tuple is dropped as soon as an arrow between assigned vertices
    fails closure, so the output order is the lexicographic order of tuples.
    """
    limit = DIMENSION_GUARD[M.p]
    if M.total_dim > limit:
        raise RepresentationError(f"total dimension {M.total_dim} exceeds the enumeration guard {limit}")
    verts = sorted(M.quiver.vertices)
    cands = {v: all_subspaces(M.p, M.dims[v]) for v in verts}
    pos = {v: i for i, v in enumerate(verts)}
    # arrows checked once both endpoints are assigned
    due: dict[int, list] = {i: [] for i in range(len(verts))}
    for a in M.quiver.arrows:
        due[max(pos[a.source], pos[a.target])].append(a)

    out: list[Subrepresentation] = []
    chosen: dict[str, Subspace] = {}

    def extend(i: int) -> None:
        if i == len(verts):
            out.append(Subrepresentation(tuple(sorted(chosen.items()))))
            return
        v = verts[i]
        for s in cands[v]:
            chosen[v] = s
            if all(chosen[a.source].image(M.maps[a.id]) <= chosen[a.target] for a in due[i]):
                extend(i + 1)
        chosen.pop(v, None)

    extend(0)
    return out


def leading_submodule(F: FreeRepresentation, order: PathOrder, U: Subrepresentation, phi: Path) -> Subspace:
    """``U_phi``: part of U(y) supported on paths at or above phi, read at phi."""
    if phi.start != F.base:
        raise QuiverError(f"{phi} does not start at the base vertex {F.base}")
    y = phi.target
    above = [psi for psi in F.index[y] if order.compare(phi, psi) <= 0]
    n = F.rep.dims[y]
    support = Subspace.coordinate(F.rep.p, n, [c for psi in above for c in F.coordinates(psi)])
    return (U[y] & support).project(F.coordinates(phi))


def ideal_embedding(F: FreeRepresentation, ideal: PathIdeal) -> Subrepresentation:
    """``F_p^m [I(x,-)]``: coordinates of the paths in the ideal."""
    if ideal.poset.base != F.base:
        raise QuiverError("ideal and free representation have different base vertices")
    spaces = {}
    for y, paths in F.index.items():
        coords = [c for psi in paths if ideal_membership(ideal, psi) for c in F.coordinates(psi)]
        spaces[y] = Subspace.coordinate(F.rep.p, F.rep.dims[y], coords)
    return Subrepresentation.build(F.rep, spaces)


def full_subrepresentation(M: Representation) -> Subrepresentation:
    return Subrepresentation(tuple((v, Subspace.full(M.p, d)) for v, d in sorted(M.dims.items())))


def random_representation(q: Quiver, p: int, dims: Mapping[str, int], rng: np.random.Generator) -> Representation:
    maps = {a.id: rng.integers(0, p, size=(dims.get(a.target, 0), dims.get(a.source, 0))) for a in q.arrows}
    return Representation(q, p, dims, maps)


_REP_LINE = {
    "field": re.compile(r"^field\s+(\d+)$"),
    "dim": re.compile(r"^dim\s+(\S+)\s+(\d+)$"),
    "map": re.compile(r"^map\s+(\S+)\s*=\s*(.*)$"),
}


def parse_representation(q: Quiver, text: str) -> Representation:
    """Read ``field p``, ``dim v n`` and ``map a = r1; r2; ...`` (rows, entries mod p)."""
    p = None
    dims: dict[str, int] = {}
    rows: dict[str, list[list[int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kw = line.split(None, 1)[0]
        pat = _REP_LINE.get(kw)
        m = pat.match(line) if pat else None
        if m is None:
            raise RepresentationError(f"line {lineno}: syntax error: {raw.strip()!r}")
        if kw == "field":
            p = int(m.group(1))
        elif kw == "dim":
            if not q.is_core_vertex(m.group(1)):
                raise RepresentationError(f"line {lineno}: unknown vertex {m.group(1)}")
            dims[m.group(1)] = int(m.group(2))
        else:
            aid = m.group(1)
            try:
                q.arrow(aid)
            except QuiverError:
                raise RepresentationError(f"line {lineno}: unknown arrow {aid}") from None
            body = m.group(2).strip()
            rows[aid] = [[int(t) for t in r.split()] for r in body.split(";") if r.strip()] if body else []
    if p is None:
        raise RepresentationError("missing 'field' line")
    check_prime(p)
    maps = {}
    for a in q.arrows:
        shape = (dims.get(a.target, 0), dims.get(a.source, 0))
        r = rows.get(a.id, [])
        if not r:
            maps[a.id] = np.zeros(shape, dtype=np.int64)
            continue
        if len({len(x) for x in r}) != 1:
            raise RepresentationError(f"map {a.id}: ragged rows")
        maps[a.id] = np.array(r, dtype=np.int64)
    return Representation(q, p, dims, maps)


def serialize_representation(M: Representation) -> str:
    lines = [f"field {M.p}"]
    lines += [f"dim {v} {d}" for v, d in sorted(M.dims.items())]
    for a in sorted(M.quiver.arrows, key=lambda a: a.id):
        mat = M.maps[a.id]
        body = "; ".join(" ".join(str(int(v)) for v in row) for row in mat) if mat.size else ""
        lines.append(f"map {a.id} = {body}".rstrip())
    return "\n".join(lines) + "\n"
