"""Gröbner enrichments: path orders on Q(x) and finite categories.

Path orders here are given by sort keys, so ``compare`` is always a strict
weak order.  The order used throughout is degree-lexicographic: a longer path
is smaller, and among paths of equal length the one whose first differing
arrow has the lower rank is greater.  Longer-is-smaller makes it refine the
divisibility order (``phi <= psi`` implies ``phi`` precedes ``psi``), and
comparing lengths first keeps it compatible with postcomposition (G1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .quiver import Path, Quiver, QuiverError, iter_paths

__all__ = [
    "GroebnerOrder",
    "DictionaryOrder",
    "ReversedDegreeOrder",
    "Counterexample",
    "compare_paths",
    "check_g1",
    "check_g2",
    "check_refinement",
    "FiniteCategory",
    "CategoryError",
    "CategoryReport",
    "parse_category",
    "load_category",
    "check_finite_category",
    "path_category",
]


class PathOrder:
    """Base class: an order on paths determined by integer sort keys.

    Subclasses implement :meth:`encode`, which turns a block of rank rows
    (padded with -1 beyond each path's length) into rows of integers whose
    lexicographic order is the path order, and :meth:`key_from_ranks`, the
    same key for a single path as a tuple.
    """

    def __init__(self, arrow_rank: Sequence[str], ray_ids: Sequence[str] = ()):
        ranks = {a: i for i, a in enumerate(arrow_rank)}
        if len(ranks) != len(arrow_rank):
            raise ValueError("arrow ranking lists an arrow twice")
        self.arrow_rank = tuple(arrow_rank)
        self.ray_ids = {r: i for i, r in enumerate(ray_ids)}
        self._ranks = ranks

    @classmethod
    def default(cls, q: Quiver):
        """Arrows ranked by declaration order, ray arrows after them."""
        return cls([a.id for a in q.arrows], [r for r, _ in q.rays])

    def rank(self, arrow_id: str) -> int:
        r = self._ranks.get(arrow_id)
        if r is not None:
            return r
        ray, _, k = arrow_id.partition(":")
        if ray in self.ray_ids and k.isdigit():
            # ray arrows: after every listed arrow, by ray then position
            return len(self._ranks) + (self.ray_ids[ray] << 32) + int(k)
        raise QuiverError(f"arrow {arrow_id} is not ranked by this order")

    def ranks(self, path: Path) -> tuple[int, ...]:
        return tuple(self.rank(a) for a in path.arrows)

    def encode(self, ranks: np.ndarray, lengths: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def key(self, path: Path) -> tuple[int, ...]:
        return self.key_from_ranks(self.ranks(path))

    def key_from_ranks(self, r: tuple[int, ...]) -> tuple[int, ...]:
        raise NotImplementedError

    def compare(self, phi: Path, psi: Path) -> int:
        if phi.start != psi.start:
            raise QuiverError(f"paths {phi} and {psi} have different start vertices")
        a, b = self.key(phi), self.key(psi)
        return (a > b) - (a < b)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.arrow_rank)})"


class GroebnerOrder(PathOrder):
    """Degree-lexicographic order: longer is smaller, then lower rank is greater."""

    def encode(self, ranks, lengths):
        return np.hstack([-lengths.reshape(-1, 1), -ranks])

    def key_from_ranks(self, r):
        return (-len(r),) + tuple(-v for v in r)


class DictionaryOrder(PathOrder):
    """Plain dictionary order by rank, a proper prefix being smaller.

    Not compatible with postcomposition; kept as a known-bad order.
    """

    def encode(self, ranks, lengths):
        return ranks

    def key_from_ranks(self, r):
        return r


class ReversedDegreeOrder(PathOrder):
    """Shorter is smaller; does not refine the divisibility order."""

    def encode(self, ranks, lengths):
        return np.hstack([lengths.reshape(-1, 1), -ranks])

    def key_from_ranks(self, r):
        return (len(r),) + tuple(-v for v in r)


def _rows_increasing(keys: np.ndarray) -> np.ndarray:
    """For consecutive rows, whether row i+1 is lexicographically above row i."""
    if keys.shape[0] < 2:
        return np.ones(0, dtype=bool)
    a, b = keys[:-1], keys[1:]
    diff = a != b
    first = diff.argmax(axis=1)
    rows = np.arange(a.shape[0])
    return diff.any(axis=1) & (b[rows, first] > a[rows, first])


def compare_paths(order: PathOrder, phi: Path, psi: Path) -> int:
    """-1, 0 or 1 as ``phi`` is less than, equal to or greater than ``psi``."""
    return order.compare(phi, psi)


@dataclass(frozen=True)
class Counterexample:
    axiom: str
    paths: tuple
    reason: str

    def __str__(self):
        return f"{self.axiom}: {self.reason} [{', '.join(str(p) for p in self.paths)}]"

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "paths": [str(p) for p in self.paths], "reason": self.reason}


def _by_target(q: Quiver, x: str, L: int) -> dict[str, list[Path]]:
    groups: dict[str, list[Path]] = {}
    for p in iter_paths(q, x, L):
        groups.setdefault(p.target, []).append(p)
    return groups


def check_g1(order: PathOrder, q: Quiver, x: str, L: int) -> Optional[Counterexample]:
    """Postcomposition keeps strict inequalities, on paths of length at most L.

    Within each Q(x,y) the paths are sorted; since key orders are transitive
    it suffices that every omega keeps each pair of neighbours strictly
    increasing.  For each omega all neighbours are compared at once on encoded
    keys.  The reported counterexample is the one with the smallest neighbour
    index, then the earliest omega.  Returns None when the axiom holds.
    """
    if L < 1:
        raise ValueError("truncation must be at least 1")
    for y, group in sorted(_by_target(q, x, L).items()):
        ranked = sorted(group, key=order.key)
        keys = [order.key(p) for p in ranked]
        strict = [keys[i] < keys[i + 1] for i in range(len(ranked) - 1)]
        if len(ranked) < 2 or not any(strict):
            continue
        omegas = list(iter_paths(q, y, L))
        lengths = np.array([len(p) for p in ranked], dtype=np.int64)
        base = np.full((len(ranked), int(lengths.max()) + L), -1, dtype=np.int64)
        for i, p in enumerate(ranked):
            base[i, : len(p)] = order.ranks(p)
        rows = np.arange(len(ranked))[:, None]
        best = None
        for j, omega in enumerate(omegas):
            w = np.array(order.ranks(omega), dtype=np.int64)
            block = base.copy()
            block[rows, lengths[:, None] + np.arange(len(w))[None, :]] = w
            ok = _rows_increasing(order.encode(block, lengths + len(w)))
            bad = [i for i in np.nonzero(~ok)[0] if strict[i]]
            if bad and (best is None or bad[0] < best[0]):
                best = (bad[0], j)
        if best is not None:
            i, j = best
            return Counterexample(
                "G1", (ranked[i], ranked[i + 1], omegas[j]),
                "phi < psi but omega.phi is not below omega.psi",
            )
    return None


def g1_violated(order: PathOrder, phi: Path, psi: Path, omega: Path) -> bool:
    """Whether the single instance (phi, psi, omega) breaks G1 in either direction."""
    c = order.compare(phi, psi)
    if c == 0:
        return False
    lo, hi = (phi, psi) if c < 0 else (psi, phi)
    return order.compare(lo.followed_by(omega), hi.followed_by(omega)) >= 0


def check_g2(order: PathOrder, q: Quiver, x: str, L: int) -> Optional[Counterexample]:
    """Each truncated Q(x,y) is totally ordered.

    For key orders the order is automatically transitive and antisymmetric on
    keys, so totality reduces to distinct paths having distinct keys.  The
    maximal-element clause for the full, infinite Q(x,y) is certified
    structurally for degree-lex: any nonempty subset has a least length, and
    the finitely many paths of that length contain a greatest one.  Other
    orders are only checked on the truncation.
    """
    if L < 1:
        raise ValueError("truncation must be at least 1")
    for y, group in sorted(_by_target(q, x, L).items()):
        seen: dict = {}
        for p in group:
            k = order.key(p)
            if k in seen:
                return Counterexample("G2", (seen[k], p), "distinct paths are incomparable")
            seen[k] = p
    return None


def check_refinement(order: PathOrder, q: Quiver, x: str, L: int) -> Optional[Counterexample]:
    """``phi <= psi`` implies ``phi`` precedes-or-equals ``psi`` for lengths at most L."""
    if L < 1:
        raise ValueError("truncation must be at least 1")
    for phi in iter_paths(q, x, L):
        for n in range(len(phi.arrows)):
            psi = Path(phi.start, phi.arrows[:n], q.arrow(phi.arrows[n]).source)
            if order.compare(phi, psi) > 0:
                return Counterexample("refinement", (phi, psi), "phi <= psi but phi is above psi")
    return None


# --------------------------------------------------------------------------
# finite categories given by composition tables


class CategoryError(ValueError):
    pass


@dataclass
class FiniteCategory:
    """A finite category with candidate orders on its hom-sets.

    ``compose[(g, f)]`` is ``g . f`` (``f`` first).  ``hom_orders[(x, y)]``
    is a list of chains ``[m1, m2, ...]`` meaning ``m1 < m2 < ...``; the order
    on C(x,y) is their transitive closure.
    """

    objects: tuple[str, ...]
    morphisms: dict[str, tuple[str, str]]
    identities: dict[str, str]
    compose: dict[tuple[str, str], str]
    hom_orders: dict[tuple[str, str], list[list[str]]] = field(default_factory=dict)

    def __post_init__(self):
        self.validate()

    def dom(self, m: str) -> str:
        return self.morphisms[m][0]

    def cod(self, m: str) -> str:
        return self.morphisms[m][1]

    def hom(self, x: str, y: str) -> list[str]:
        return sorted(m for m, (s, t) in self.morphisms.items() if s == x and t == y)

    def starting_at(self, x: str) -> list[str]:
        return sorted(m for m, (s, _) in self.morphisms.items() if s == x)

    def validate(self) -> None:
        objs = set(self.objects)
        for m, (s, t) in self.morphisms.items():
            if s not in objs or t not in objs:
                raise CategoryError(f"morphism {m} has unknown endpoint")
        for x in self.objects:
            i = self.identities.get(x)
            if i is None:
                raise CategoryError(f"object {x} has no identity")
            if self.morphisms.get(i) != (x, x):
                raise CategoryError(f"identity {i} is not an endomorphism of {x}")
        for (g, f), h in list(self.compose.items()):
            for m in (g, f, h):
                if m not in self.morphisms:
                    raise CategoryError(f"unknown morphism {m} in composition table")
            if self.cod(f) != self.dom(g):
                raise CategoryError(f"{g} . {f} is not composable")
            if self.morphisms[h] != (self.dom(f), self.cod(g)):
                raise CategoryError(f"{g} . {f} = {h} has the wrong domain or codomain")
        for m, (s, t) in self.morphisms.items():
            for key, expect in (((self.identities[t], m), m), ((m, self.identities[s]), m)):
                got = self.compose.setdefault(key, expect)
                if got != expect:
                    raise CategoryError(f"identity is not neutral: {key[0]} . {key[1]} = {got}")
        for f, (a, b) in self.morphisms.items():
            for g, (b2, c) in self.morphisms.items():
                if b2 == b and (g, f) not in self.compose:
                    raise CategoryError(f"composition {g} . {f} missing from the table")
        for f in self.morphisms:
            for g in self.morphisms:
                if self.dom(g) != self.cod(f):
                    continue
                gf = self.compose[(g, f)]
                for h in self.morphisms:
                    if self.dom(h) != self.cod(g):
                        continue
                    left = self.compose[(h, gf)]
                    right = self.compose[(self.compose[(h, g)], f)]
                    if left != right:
                        raise CategoryError(f"composition is not associative at ({h}, {g}, {f})")
        for (x, y), chains in self.hom_orders.items():
            homs = set(self.hom(x, y))
            for chain in chains:
                for m in chain:
                    if m not in homs:
                        raise CategoryError(f"order on C({x},{y}) mentions foreign morphism {m}")

    def less_than(self, x: str, y: str) -> set[tuple[str, str]]:
        """Strict relation on C(x,y): transitive closure of the declared chains."""
        rel = set()
        for chain in self.hom_orders.get((x, y), []):
            rel.update(zip(chain, chain[1:]))
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for c, d in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        return rel


@dataclass(frozen=True)
class CategoryReport:
    g1: Optional[tuple]
    g2: Optional[tuple]
    acc: bool
    lattice_height: dict[str, int]
    ideal_counts: dict[str, int]

    @property
    def ok(self) -> bool:
        return self.g1 is None and self.g2 is None and self.acc

    def to_json(self) -> dict:
        return {
            "g1": "pass" if self.g1 is None else list(self.g1),
            "g2": "pass" if self.g2 is None else list(self.g2),
            "acc": "pass" if self.acc else "fail",
            "lattice_height": self.lattice_height,
            "ideal_counts": self.ideal_counts,
        }


def _left_ideals(c: FiniteCategory, x: str) -> list[frozenset[str]]:
    """Nonempty subsets of C(x) closed under postcomposition."""
    def close(s: frozenset[str]) -> frozenset[str]:
        out = set(s)
        for f in s:
            for g in c.starting_at(c.cod(f)):
                out.add(c.compose[(g, f)])
        return frozenset(out)

    principal = {close(frozenset([f])) for f in c.starting_at(x)}
    ideals = set(principal)
    frontier = set(principal)
    while frontier:
        new = {a | b for a in frontier for b in principal} - ideals
        ideals |= new
        frontier = new
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def _height(ideals: list[frozenset[str]]) -> int:
    longest: dict[frozenset[str], int] = {}
    for s in ideals:  # sorted by size, so proper subsets come first
        longest[s] = 1 + max((longest[t] for t in longest if t < s), default=0)
    return max(longest.values(), default=0)


def check_finite_category(c: FiniteCategory) -> CategoryReport:
    g1 = g2 = None
    strict = {(x, y): c.less_than(x, y) for x in c.objects for y in c.objects}
    for x in c.objects:
        for y in c.objects:
            homs = c.hom(x, y)
            rel = strict[(x, y)]
            if g2 is None:
                for a in homs:
                    if (a, a) in rel:
                        g2 = ("G2", x, y, a, a, "order is not antisymmetric")
                        break
                for a, b in combinations(homs, 2):
                    if g2 is None and (a, b) not in rel and (b, a) not in rel:
                        g2 = ("G2", x, y, a, b, "incomparable pair")
            if g1 is None:
                for phi, psi in sorted(rel):
                    for omega in c.starting_at(y):
                        z = c.cod(omega)
                        lhs, rhs = c.compose[(omega, phi)], c.compose[(omega, psi)]
                        if (lhs, rhs) not in strict[(x, z)]:
                            g1 = ("G1", phi, psi, omega, f"{lhs} is not below {rhs}")
                            break
                    if g1 is not None:
                        break
    heights, counts = {}, {}
    for x in c.objects:
        ideals = _left_ideals(c, x)
        heights[x] = _height(ideals)
        counts[x] = len(ideals)
    # the ideal lattices are finite, so every ascending chain has at most
    # `height` distinct terms; the heights are the evidence
    acc = all(counts[x] >= 1 for x in c.objects)
    return CategoryReport(g1, g2, acc, heights, counts)


_CAT_PATTERNS = {
    "object": re.compile(r"^object\s+(\S+)$"),
    "morphism": re.compile(r"^morphism\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$"),
    "identity": re.compile(r"^identity\s+(\S+)\s+at\s+(\S+)$"),
    "compose": re.compile(r"^compose\s+(\S+)\s+(\S+)\s*=\s*(\S+)$"),
    "order": re.compile(r"^order\s+(\S+)\s+(\S+)\s*:\s*(.+)$"),
}


def parse_category(text: str) -> FiniteCategory:
    """Read ``object``/``morphism``/``identity``/``compose``/``order`` lines."""
    objects: list[str] = []
    morphisms: dict[str, tuple[str, str]] = {}
    identities: dict[str, str] = {}
    compose: dict[tuple[str, str], str] = {}
    orders: dict[tuple[str, str], list[list[str]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kw = line.split(None, 1)[0]
        pat = _CAT_PATTERNS.get(kw)
        m = pat.match(line) if pat else None
        if m is None:
            raise CategoryError(f"line {lineno}: syntax error: {raw.strip()!r}")
        g = m.groups()
        if kw == "object":
            if g[0] in objects:
                raise CategoryError(f"line {lineno}: duplicate object {g[0]}")
            objects.append(g[0])
        elif kw in ("morphism", "identity"):
            name = g[0]
            ends = (g[1], g[2]) if kw == "morphism" else (g[1], g[1])
            if name in morphisms:
                raise CategoryError(f"line {lineno}: duplicate morphism {name}")
            for o in ends:
                if o not in objects:
                    raise CategoryError(f"line {lineno}: unknown object {o}")
            morphisms[name] = ends
            if kw == "identity":
                if g[1] in identities:
                    raise CategoryError(f"line {lineno}: second identity at {g[1]}")
                identities[g[1]] = name
        elif kw == "compose":
            key = (g[0], g[1])
            if key in compose and compose[key] != g[2]:
                raise CategoryError(f"line {lineno}: conflicting entry for {g[0]} . {g[1]}")
            compose[key] = g[2]
        else:
            chain = [s.strip() for s in g[2].split("<")]
            if any(not s for s in chain):
                raise CategoryError(f"line {lineno}: malformed order chain")
            orders.setdefault((g[0], g[1]), []).append(chain)
    try:
        return FiniteCategory(tuple(objects), morphisms, identities, compose, orders)
    except CategoryError:
        raise
    except KeyError as exc:
        raise CategoryError(f"unknown morphism {exc.args[0]}") from None


def load_category(path) -> FiniteCategory:
    with open(path, encoding="utf-8") as fh:
        return parse_category(fh.read())


def path_category(q: Quiver, order: Optional[PathOrder] = None) -> FiniteCategory:
    """The path category of an acyclic ray-free quiver, hom-sets ordered by ``order``."""
    from .noetherian import is_left_finite_at

    if q.has_rays or not all(is_left_finite_at(q, v) for v in q.vertices):
        raise QuiverError("path category is finite only for acyclic ray-free quivers")
    order = order or GroebnerOrder.default(q)
    paths = [p for v in q.vertices for p in iter_paths(q, v, len(q.vertices))]
    name = {p: (f"e_{p.start}" if p.is_trivial else "_".join(p.arrows)) for p in paths}
    morphisms = {name[p]: (p.start, p.target) for p in paths}
    identities = {v: f"e_{v}" for v in q.vertices}
    compose = {}
    for f in paths:
        for g in paths:
            if g.start == f.target:
                compose[(name[g], name[f])] = name[f.followed_by(g)]
    homs: dict[tuple[str, str], list[Path]] = {}
    for p in paths:
        homs.setdefault((p.start, p.target), []).append(p)
    orders = {k: [[name[p] for p in sorted(v, key=order.key)]] for k, v in homs.items()}
    return FiniteCategory(tuple(q.vertices), morphisms, identities, compose, orders)
