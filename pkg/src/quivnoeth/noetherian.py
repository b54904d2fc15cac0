"""Deciding when Q(x) is noetherian, with evidence either way.

The decision reads the branching condition graph-theoretically: Q(x) is
noetherian iff every vertex reachable from x that lies on an oriented cycle
has exactly one outgoing arrow (ray connectors count).  A positive verdict
comes with the finite list of maximal paths; a negative one with a cycle that
can be left through a second arrow, which yields a strictly ascending chain of
ideals.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .poset import PathIdeal, PathPoset, SUBSET, ideal_compare, normalize_generators
from .quiver import (
    MaximalPath,
    Path,
    Quiver,
    QuiverError,
    cycle_vertices,
    opposite,
    reachable_subquiver,
)

__all__ = [
    "NonNoetherianWitness",
    "NoetherianReport",
    "Decomposition",
    "NotNoetherianError",
    "is_left_noetherian_at",
    "is_left_noetherian",
    "is_right_noetherian",
    "maximal_paths",
    "branch_paths",
    "decompose",
    "is_left_finite_at",
    "is_right_finite_at",
    "finite_quiver_criterion",
    "pumping_oracle",
    "witness_chain",
]


@dataclass(frozen=True)
class NonNoetherianWitness:
    """A cycle at ``u`` reached by ``access`` and left through ``branch``."""

    quiver: Quiver
    base: str
    access: Path
    cycle: Path
    branch: str

    def generator(self, i: int) -> Path:
        """``branch . cycle^i . access``."""
        q = self.quiver
        p = self.access
        for _ in range(i):
            p = p.followed_by(self.cycle)
        return p.then(q.arrow(self.branch))

    def chain(self, n: int) -> PathIdeal:
        poset = PathPoset(self.quiver, self.base)
        return PathIdeal(poset, tuple(self.generator(i) for i in range(n + 1)))

    def to_json(self) -> dict:
        return {"access": str(self.access), "cycle": str(self.cycle), "branch": self.branch}


@dataclass(frozen=True)
class NoetherianReport:
    vertex: str
    verdict: bool
    maximal_paths: tuple[MaximalPath, ...] = ()
    branching_paths: int = 0  # n: paths ending where more than one arrow starts
    branching_degree: int = 0  # d: the largest such out-degree
    witness: Optional[NonNoetherianWitness] = None

    @property
    def bound(self) -> int:
        return self.branching_degree ** self.branching_paths

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "verdict": self.verdict,
            "maximal_paths": [m.to_json() for m in self.maximal_paths],
            "bound": {"d": self.branching_degree, "n": self.branching_paths, "d^n": self.bound}
            if self.verdict else None,
            "witness": self.witness.to_json() if self.witness else None,
        }


class NotNoetherianError(QuiverError):
    def __init__(self, report: NoetherianReport):
        self.report = report
        w = report.witness
        super().__init__(
            f"Q({report.vertex}) is not noetherian: cycle {w.cycle} reached by {w.access} "
            f"branches off along {w.branch}"
        )


@dataclass(frozen=True)
class Decomposition:
    core: Quiver
    rays: tuple[str, ...]
    connectors: tuple[str, ...]


def _violations(q: Quiver, x: str) -> list[str]:
    qx = reachable_subquiver(q, x)
    cyc = cycle_vertices(qx)
    return [v for v in sorted(cyc) if q.out_degree(v) != 1]


def _shortest_path(q: Quiver, src: str, dst: str, nontrivial: bool = False) -> Optional[Path]:
    """Least path ``src -> dst`` in length-then-lex order (core vertices only)."""
    start = q.trivial_path(src)
    if src == dst and not nontrivial:
        return start
    seen = set()
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for a in q.out_arrows(p.target):
            if not q.is_core_vertex(a.target):
                continue
            np_ = p.then(a)
            if a.target == dst:
                return np_
            if a.target not in seen:
                seen.add(a.target)
                queue.append(np_)
    return None


def _witness(q: Quiver, x: str, u: str) -> NonNoetherianWitness:
    access = _shortest_path(q, x, u)
    cycle = _shortest_path(q, u, u, nontrivial=True)
    first = cycle.arrows[0]
    branch = next(a.id for a in q.out_arrows(u) if a.id != first)
    return NonNoetherianWitness(q, x, access, cycle, branch)


def _cycle_at(q: Quiver, v: str) -> Path:
    """The unique cycle at ``v`` when every vertex on it has out-degree one."""
    p = q.trivial_path(v)
    while True:
        (a,) = q.out_arrows(p.target)
        p = p.then(a)
        if p.target == v:
            return p


def _walk(q: Quiver, x: str):
    """Maximal paths and branching statistics; assumes the criterion holds."""
    cyc = cycle_vertices(reachable_subquiver(q, x))
    result: list[MaximalPath] = []
    n_branch = 0
    d = 0
    stack = [q.trivial_path(x)]
    while stack:
        p = stack.pop()
        v = p.target
        if v in cyc:
            result.append(MaximalPath(p, "cycle", cycle=_cycle_at(q, v)))
            continue
        outs = q.out_arrows(v)
        if len(outs) > 1:
            n_branch += 1
            d = max(d, len(outs))
        if not outs:
            result.append(MaximalPath(p, "none"))
        for a in reversed(outs):
            if not q.is_core_vertex(a.target):
                result.append(MaximalPath(p, "ray", ray=a.id.split(":")[0]))
            else:
                stack.append(p.then(a))
    result.sort(key=lambda m: (m.prefix.sort_key(), m.tail, m.ray or ""))
    return tuple(result), n_branch, d


def is_left_noetherian_at(q: Quiver, x: str) -> NoetherianReport:
    bad = _violations(q, x)
    if bad:
        return NoetherianReport(x, False, witness=_witness(q, x, bad[0]))
    paths, n, d = _walk(q, x)
    return NoetherianReport(x, True, paths, n, d)


def is_left_noetherian(q: Quiver) -> dict[str, NoetherianReport]:
    return {v: is_left_noetherian_at(q, v) for v in sorted(q.vertices)}


def is_right_noetherian(q: Quiver) -> dict[str, NoetherianReport]:
    return is_left_noetherian(opposite(q))


def _require_noetherian(q: Quiver, x: str) -> NoetherianReport:
    report = is_left_noetherian_at(q, x)
    if not report.verdict:
        raise NotNoetherianError(report)
    return report


def maximal_paths(q: Quiver, x: str) -> list[MaximalPath]:
    return list(_require_noetherian(q, x).maximal_paths)


def branch_paths(q: Quiver, x: str) -> tuple[int, int]:
    """``(n, d)``: number of branching paths from x and their largest out-degree."""
    r = _require_noetherian(q, x)
    return r.branching_paths, r.branching_degree


def decompose(q: Quiver, x: str) -> Decomposition:
    _require_noetherian(q, x)
    qx = reachable_subquiver(q, x)
    core = Quiver(qx.vertices, qx.arrows)
    rays = tuple(r for r, _ in sorted(qx.rays))
    connectors = tuple(f"{r}:0" for r in rays)

    cyc = cycle_vertices(core)
    for v in cyc:
        if qx.out_degree(v) != 1:
            raise AssertionError(f"cycle vertex {v} has out-degree {qx.out_degree(v)}")
    for c in connectors:
        src = q.arrow(c).source
        if src in cyc or not core.is_core_vertex(src):
            raise AssertionError(f"connector {c} starts at cycle vertex {src}")
    if any(not core.is_core_vertex(a.target) for a in core.arrows):
        raise AssertionError("core is not closed")
    return Decomposition(core, rays, connectors)


def is_left_finite_at(q: Quiver, x: str) -> bool:
    qx = reachable_subquiver(q, x)
    return not qx.has_rays and not cycle_vertices(qx)


def is_right_finite_at(q: Quiver, x: str) -> bool:
    return is_left_finite_at(opposite(q), x)


def finite_quiver_criterion(q: Quiver) -> bool:
    """One arrow starting at each vertex on an oriented cycle."""
    if q.has_rays:
        raise QuiverError("the finite-quiver criterion needs finitely many vertices (no rays)")
    return all(q.out_degree(v) == 1 for v in cycle_vertices(q))


def pumping_oracle(q: Quiver, x: str) -> bool:
    """Brute-force NON-noetherian test, independent of cycle detection.

    True iff some path from x of length at most 2|Q0| revisits a vertex and
    ends where at least two arrows start.  The search runs over states
    (vertex, visited set, revisited) so equal prefixes are not re-walked.
    """
    if not q.is_core_vertex(x):
        raise QuiverError(f"{x} is not a declared vertex")
    limit = 2 * len(q.vertices)
    frontier = {(x, frozenset([x]), False)}
    for _ in range(limit):
        nxt = set()
        for v, visited, revisited in frontier:
            for a in q.out_arrows(v):
                w = a.target
                if not q.is_core_vertex(w):
                    continue  # ray vertices never repeat and never branch
                again = revisited or w in visited
                if again and q.out_degree(w) >= 2:
                    return True
                nxt.add((w, frozenset() if again else visited | {w}, again))
        frontier = nxt
    return False


def witness_chain(w: NonNoetherianWitness, n: int) -> list[PathIdeal]:
    """``chain(0) < chain(1) < ... < chain(n)``, each strictness checked."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if w.branch == w.cycle.arrows[0]:
        raise ValueError("branch arrow coincides with the first arrow of the cycle")
    if w.cycle.start != w.cycle.target or not w.cycle.arrows or w.access.target != w.cycle.start:
        raise ValueError("malformed witness")
    chain = [w.chain(i) for i in range(n + 1)]
    poset = chain[0].poset
    for ideal in chain:
        if normalize_generators(poset, ideal.generators).generators != tuple(
            sorted(ideal.generators, key=Path.sort_key)
        ):
            raise AssertionError(f"generators of {ideal} do not form an antichain")
    for a, b in zip(chain, chain[1:]):
        if ideal_compare(a, b) != SUBSET:
            raise AssertionError(f"{a} is not strictly contained in {b}")
    return chain
