"""Quivers with a finite core plus finitely many attached rays.

A ray ``ray r at v`` stands for an infinite linear quiver
``r.0 -> r.1 -> r.2 -> ...`` together with a connecting arrow ``v -> r.0``.
Ray vertices are named ``r.k``; the connecting arrow is ``r:0`` and the arrow
``r.(k-1) -> r.k`` is ``r:k``.  Declared identifiers may not contain ``.`` or
``:`` so synthesised names never collide with them.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx

__all__ = [
    "Arrow",
    "Path",
    "MaximalPath",
    "Quiver",
    "QuiverError",
    "QuiverParseError",
    "parse_quiver",
    "serialize_quiver",
    "load_quiver",
    "opposite",
    "reachable_subquiver",
    "cycle_vertices",
    "enumerate_paths",
    "parse_path",
]

_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_IDENT_RE = re.compile(rf"^{_IDENT}$")
_RAY_VERTEX_RE = re.compile(rf"^({_IDENT})\.(\d+)$")
_RAY_ARROW_RE = re.compile(rf"^({_IDENT}):(\d+)$")


class QuiverError(ValueError):
    """Raised for structurally invalid quivers or paths."""


class QuiverParseError(QuiverError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A path stored in application order: ``arrows[0]`` is applied first.

    ``str(path)`` gives the report form ``x: a.b.c``; :meth:`word` gives the
    right-to-left composite ``c b a`` used when writing paths as products.
    """

    start: str
    arrows: tuple[str, ...]
    target: str

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        return f"{self.start}: {'.'.join(self.arrows) if self.arrows else '-'}"

    def word(self) -> str:
        if not self.arrows:
            return f"e_{self.start}"
        return " ".join(reversed(self.arrows))

    def then(self, arrow: Arrow) -> "Path":
        if arrow.source != self.target:
            raise QuiverError(f"arrow {arrow.id} does not start at {self.target}")
        return Path(self.start, self.arrows + (arrow.id,), arrow.target)

    def followed_by(self, other: "Path") -> "Path":
        """The composite ``other . self`` (self first)."""
        if other.start != self.target:
            raise QuiverError(f"cannot compose {self} with {other}")
        return Path(self.start, self.arrows + other.arrows, other.target)

    def sort_key(self) -> tuple:
        return (len(self.arrows), self.arrows)


@dataclass(frozen=True)
class MaximalPath:
    """A path that cannot be extended.

    ``tail`` is ``"none"`` (the prefix ends at a sink), ``"cycle"`` (``cycle``
    is repeated forever after the prefix) or ``"ray"`` (``ray`` is entered
    from the prefix target and followed forever).
    """

    prefix: Path
    tail: str = "none"
    cycle: Optional[Path] = None
    ray: Optional[str] = None

    def __str__(self) -> str:
        if self.tail == "cycle":
            return f"{self.prefix} then ({'.'.join(self.cycle.arrows)})^inf"
        if self.tail == "ray":
            return f"{self.prefix} then ray {self.ray}"
        return str(self.prefix)

    def to_json(self) -> dict:
        out = {"prefix": str(self.prefix), "tail": self.tail}
        if self.cycle is not None:
            out["cycle"] = str(self.cycle)
        if self.ray is not None:
            out["ray"] = self.ray
        return out


class Quiver:
    """Immutable quiver: declared vertices and arrows plus rays.

    Declaration order is kept (it fixes the default arrow ranking); equality
    ignores it.
    """

    __slots__ = ("vertices", "arrows", "rays", "_arrow_by_id", "_out", "_ray_at", "_vertex_set")

    def __init__(
        self,
        vertices: Iterable[str],
        arrows: Iterable[Arrow | tuple[str, str, str]] = (),
        rays: Iterable[tuple[str, str]] = (),
    ):
        vertices = tuple(vertices)
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in arrows)
        rays = tuple((str(r), str(v)) for r, v in rays)

        for name in vertices + tuple(a.id for a in arrows) + tuple(r for r, _ in rays):
            if not _IDENT_RE.match(name):
                raise QuiverError(f"invalid identifier {name!r}")
        _check_unique(vertices, "vertex")
        _check_unique([a.id for a in arrows], "arrow")
        _check_unique([r for r, _ in rays], "ray")
        vset = frozenset(vertices)
        for a in arrows:
            for v in (a.source, a.target):
                if v not in vset:
                    raise QuiverError(f"arrow {a.id}: unknown vertex {v}")
        for r, v in rays:
            if v not in vset:
                raise QuiverError(f"ray {r}: unknown vertex {v}")

        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "_vertex_set", vset)
        object.__setattr__(self, "_arrow_by_id", {a.id: a for a in arrows})
        object.__setattr__(self, "_ray_at", dict(rays))
        out: dict[str, list[Arrow]] = {v: [] for v in vertices}
        for a in sorted(arrows, key=lambda a: a.id):
            out[a.source].append(a)
        for r, v in sorted(rays):
            out[v].append(Arrow(f"{r}:0", v, f"{r}.0"))
        object.__setattr__(self, "_out", {v: tuple(arrs) for v, arrs in out.items()})

    def __setattr__(self, name, value):
        raise AttributeError("Quiver is immutable")

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return (
            self._vertex_set == other._vertex_set
            and frozenset(self.arrows) == frozenset(other.arrows)
            and frozenset(self.rays) == frozenset(other.rays)
        )

    def __hash__(self):
        return hash((self._vertex_set, frozenset(self.arrows), frozenset(self.rays)))

    def __repr__(self):
        return (
            f"Quiver(vertices={list(self.vertices)}, "
            f"arrows={[(a.id, a.source, a.target) for a in self.arrows]}, rays={list(self.rays)})"
        )

    @property
    def has_rays(self) -> bool:
        return bool(self.rays)

    def is_core_vertex(self, v: str) -> bool:
        return v in self._vertex_set

    def ray_vertex(self, v: str) -> Optional[tuple[str, int]]:
        m = _RAY_VERTEX_RE.match(v)
        if m and m.group(1) in self._ray_at:
            return m.group(1), int(m.group(2))
        return None

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set or self.ray_vertex(v) is not None

    def require_vertex(self, v: str) -> None:
        if not self.has_vertex(v):
            raise QuiverError(f"unknown vertex {v}")

    def arrow(self, arrow_id: str) -> Arrow:
        if arrow_id in self._arrow_by_id:
            return self._arrow_by_id[arrow_id]
        m = _RAY_ARROW_RE.match(arrow_id)
        if m and m.group(1) in self._ray_at:
            r, k = m.group(1), int(m.group(2))
            src = self._ray_at[r] if k == 0 else f"{r}.{k - 1}"
            return Arrow(arrow_id, src, f"{r}.{k}")
        raise QuiverError(f"unknown arrow {arrow_id}")

    def out_arrows(self, v: str) -> tuple[Arrow, ...]:
        """Arrows starting at ``v`` sorted by id, ray connectors last."""
        if v in self._out:
            return self._out[v]
        rv = self.ray_vertex(v)
        if rv is None:
            raise QuiverError(f"unknown vertex {v}")
        r, k = rv
        return (Arrow(f"{r}:{k + 1}", v, f"{r}.{k + 1}"),)

    def out_degree(self, v: str) -> int:
        return len(self.out_arrows(v))

    def connector(self, ray_id: str) -> Arrow:
        return self.arrow(f"{ray_id}:0")

    def trivial_path(self, v: str) -> Path:
        self.require_vertex(v)
        return Path(v, (), v)

    def path(self, start: str, arrows: Sequence[str] = ()) -> Path:
        """Build a path from ``start`` through ``arrows`` (application order)."""
        p = self.trivial_path(start)
        for aid in arrows:
            p = p.then(self.arrow(aid))
        return p

    def contains_path(self, p: Path) -> bool:
        try:
            return self.path(p.start, p.arrows) == p
        except QuiverError:
            return False

    def to_networkx(self) -> nx.MultiDiGraph:
        """The finite core as a multigraph; ray tails are omitted."""
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows:
            g.add_edge(a.source, a.target, key=a.id)
        return g


def _check_unique(names, kind):
    seen = set()
    for n in names:
        if n in seen:
            raise QuiverError(f"duplicate {kind} id {n}")
        seen.add(n)


_LINE_PATTERNS = {
    "vertex": re.compile(rf"^vertex\s+({_IDENT})$"),
    "arrow": re.compile(rf"^arrow\s+({_IDENT})\s*:\s*({_IDENT})\s*->\s*({_IDENT})$"),
    "ray": re.compile(rf"^ray\s+({_IDENT})\s+at\s+({_IDENT})$"),
}


def parse_quiver(text: str) -> Quiver:
    """Parse the line format ``vertex``/``arrow``/``ray``; ``#`` starts a comment.

    Declarations may appear in any order; every error carries its line number.
    """
    vertices: list[tuple[int, str]] = []
    arrows: list[tuple[int, Arrow]] = []
    rays: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword = line.split(None, 1)[0]
        pattern = _LINE_PATTERNS.get(keyword)
        m = pattern.match(line) if pattern else None
        if m is None:
            raise QuiverParseError(lineno, f"syntax error: {raw.strip()!r}")
        if keyword == "vertex":
            vertices.append((lineno, m.group(1)))
        elif keyword == "arrow":
            arrows.append((lineno, Arrow(*m.groups())))
        else:
            rays.append((lineno, *m.groups()))

    seen: dict[str, int] = {}
    for lineno, v in vertices:
        if v in seen:
            raise QuiverParseError(lineno, f"duplicate vertex id {v}")
        seen[v] = lineno
    seen_arrows: set[str] = set()
    for lineno, a in arrows:
        if a.id in seen_arrows:
            raise QuiverParseError(lineno, f"duplicate arrow id {a.id}")
        seen_arrows.add(a.id)
        for v in (a.source, a.target):
            if v not in seen:
                raise QuiverParseError(lineno, f"unknown vertex {v}")
    seen_rays: set[str] = set()
    for lineno, r, v in rays:
        if r in seen_rays:
            raise QuiverParseError(lineno, f"duplicate ray id {r}")
        seen_rays.add(r)
        if v not in seen:
            raise QuiverParseError(lineno, f"unknown vertex {v}")
    return Quiver(
        [v for _, v in vertices],
        [a for _, a in arrows],
        [(r, v) for _, r, v in rays],
    )


def serialize_quiver(q: Quiver) -> str:
    lines = [f"vertex {v}" for v in sorted(q.vertices)]
    lines += [f"arrow {a.id} : {a.source} -> {a.target}" for a in sorted(q.arrows, key=lambda a: a.id)]
    lines += [f"ray {r} at {v}" for r, v in sorted(q.rays)]
    return "\n".join(lines) + "\n"


def load_quiver(path) -> Quiver:
    with open(path, encoding="utf-8") as fh:
        return parse_quiver(fh.read())


def parse_path(q: Quiver, text: str) -> Path:
    """Parse the report form ``x: a.b.c`` (``x: -`` for the trivial path)."""
    if ":" not in text:
        raise QuiverError(f"malformed path {text!r}")
    start, rest = text.split(":", 1)
    start, rest = start.strip(), rest.strip()
    # ray arrows contain ':' themselves, e.g. "x: r:0.r:1"
    arrows = [] if rest in ("", "-") else rest.split(".")
    return q.path(start, arrows)


def opposite(q: Quiver) -> Quiver:
    if q.has_rays:
        raise QuiverError("opposite quiver is unsupported in the presence of rays")
    return Quiver(q.vertices, [Arrow(a.id, a.target, a.source) for a in q.arrows])


def _reachable_core(q: Quiver, x: str) -> list[str]:
    if not q.is_core_vertex(x):
        raise QuiverError(f"{x} is not a declared vertex")
    seen = {x}
    order = [x]
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for a in q.out_arrows(v):
            w = a.target
            if q.is_core_vertex(w) and w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def reachable_subquiver(q: Quiver, x: str) -> Quiver:
    """The full subquiver on all vertices reachable from ``x`` (rays included)."""
    reach = set(_reachable_core(q, x))
    return Quiver(
        [v for v in q.vertices if v in reach],
        [a for a in q.arrows if a.source in reach],
        [(r, v) for r, v in q.rays if v in reach],
    )


def cycle_vertices(q: Quiver) -> frozenset[str]:
    """Vertices lying on an oriented cycle of the finite core."""
    g = q.to_networkx()
    found: set[str] = set()
    for comp in nx.strongly_connected_components(g):
        if len(comp) > 1:
            found |= comp
        else:
            (v,) = comp
            if g.has_edge(v, v):
                found.add(v)
    return frozenset(found)


def iter_paths(q: Quiver, x: str, max_len: int) -> Iterator[Path]:
    """Paths from ``x`` of length at most ``max_len`` in length-then-lex order."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    layer = [q.trivial_path(x)]
    for length in range(max_len + 1):
        yield from layer
        if length == max_len:
            break
        layer = [p.then(a) for p in layer for a in q.out_arrows(p.target)]
        layer.sort(key=Path.sort_key)


def enumerate_paths(q: Quiver, x: str, max_len: int, y: Optional[str] = None) -> list[Path]:
    paths = iter_paths(q, x, max_len)
    if y is not None:
        q.require_vertex(y)
        return [p for p in paths if p.target == y]
    return list(paths)
