"""The poset Q(x) of paths starting at x and its ideals.

``phi <= psi`` holds when ``phi`` extends ``psi``, i.e. the arrows of ``psi``
form a prefix of the arrows of ``phi`` (application order).  The trivial path
is therefore the maximum.  Ideals (= left ideals of paths) are down-sets; they
are kept as finite antichains of generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .quiver import Path, Quiver, QuiverError, iter_paths

__all__ = [
    "PathPoset",
    "PathIdeal",
    "PeriodicPathSequence",
    "path_leq",
    "ideal_membership",
    "normalize_generators",
    "ideal_compare",
    "enumerate_ideals",
    "nu_extract",
    "EQUAL",
    "SUBSET",
    "SUPERSET",
    "INCOMPARABLE",
]

EQUAL = "equal"
SUBSET = "subset"  # I is strictly contained in J
SUPERSET = "superset"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class PathPoset:
    quiver: Quiver
    base: str

    def __post_init__(self):
        if not self.quiver.is_core_vertex(self.base):
            raise QuiverError(f"{self.base} is not a declared vertex")

    def check(self, path: Path) -> None:
        if path.start != self.base:
            raise QuiverError(f"path {path} does not start at base vertex {self.base}")

    def top(self) -> Path:
        return self.quiver.trivial_path(self.base)


@dataclass(frozen=True)
class PathIdeal:
    poset: PathPoset
    generators: tuple[Path, ...]

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __contains__(self, path: Path) -> bool:
        return ideal_membership(self, path)


@dataclass(frozen=True)
class PeriodicPathSequence:
    """The infinite sequence ``preamble + period + period + ...``."""

    preamble: tuple[Path, ...]
    period: tuple[Path, ...]

    def __post_init__(self):
        object.__setattr__(self, "preamble", tuple(self.preamble))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("period must be nonempty")
        starts = {p.start for p in self.preamble + self.period}
        if len(starts) != 1:
            raise QuiverError("all paths of a sequence must share their start vertex")

    @property
    def base(self) -> str:
        return self.period[0].start

    def __getitem__(self, i: int) -> Path:
        if i < 0:
            raise IndexError(i)
        if i < len(self.preamble):
            return self.preamble[i]
        return self.period[(i - len(self.preamble)) % len(self.period)]

    def occurs_infinitely_often_below(self, path: Path) -> bool:
        """Whether ``x_j <= path`` holds for infinitely many ``j``."""
        return any(path_leq(p, path) for p in self.period)


def path_leq(phi: Path, psi: Path) -> bool:
    """``phi <= psi`` iff ``phi = chi psi`` for some path ``chi``."""
    if phi.start != psi.start:
        raise QuiverError(f"paths {phi} and {psi} have different start vertices")
    n = len(psi.arrows)
    return len(phi.arrows) >= n and phi.arrows[:n] == psi.arrows


def ideal_membership(ideal: PathIdeal, phi: Path) -> bool:
    ideal.poset.check(phi)
    return any(path_leq(phi, g) for g in ideal.generators)


def _antichain(gens: Iterable[Path]) -> tuple[Path, ...]:
    gens = sorted(set(gens), key=Path.sort_key)
    kept: list[Path] = []
    # sorted by length, so a generator can only extend an earlier one
    for g in gens:
        if not any(path_leq(g, h) for h in kept):
            kept.append(g)
    return tuple(kept)


def normalize_generators(poset: PathPoset, gens: Iterable[Path]) -> PathIdeal:
    gens = list(gens)
    if not gens:
        raise ValueError("an ideal needs at least one generator")
    for g in gens:
        poset.check(g)
        if not poset.quiver.contains_path(g):
            raise QuiverError(f"{g} is not a path of the quiver")
    return PathIdeal(poset, _antichain(gens))


def ideal_contains(big: PathIdeal, small: PathIdeal) -> bool:
    return all(ideal_membership(big, g) for g in small.generators)


def ideal_compare(i: PathIdeal, j: PathIdeal) -> str:
    """One of ``EQUAL``, ``SUBSET`` (I < J), ``SUPERSET`` (J < I), ``INCOMPARABLE``."""
    if i.poset != j.poset:
        raise QuiverError("ideals live in different posets")
    i_in_j = ideal_contains(j, i)
    j_in_i = ideal_contains(i, j)
    if i_in_j and j_in_i:
        return EQUAL
    if i_in_j:
        return SUBSET
    if j_in_i:
        return SUPERSET
    return INCOMPARABLE


def enumerate_ideals(poset: PathPoset, max_len: int | None = None) -> list[PathIdeal]:
    """All ideals of a finite Q(x), one per nonempty antichain.

    ``max_len`` defaults to the number of declared vertices, which bounds the
    length of every path when Q(x) is finite; a longer path means Q(x) is
    infinite and is rejected.
    """
    q = poset.quiver
    bound = len(q.vertices) if max_len is None else max_len
    paths = list(iter_paths(q, poset.base, bound + 1))
    if any(len(p) > bound for p in paths):
        raise QuiverError(f"Q({poset.base}) is infinite; ideals cannot be listed")

    comparable = {
        (a, b) for a, b in combinations(range(len(paths)), 2)
        if path_leq(paths[a], paths[b]) or path_leq(paths[b], paths[a])
    }
    out: list[PathIdeal] = []

    def extend(chosen: list[int], start: int) -> None:
        if chosen:
            out.append(PathIdeal(poset, tuple(paths[k] for k in chosen)))
        for k in range(start, len(paths)):
            if all((c, k) not in comparable for c in chosen):
                chosen.append(k)
                extend(chosen, k + 1)
                chosen.pop()

    extend([], 0)
    return out


def nu_extract(poset: PathPoset, seq: PeriodicPathSequence, k: int) -> list[tuple[int, Path]]:
    """First ``k`` values of the subsequence map nu, with the selected paths.

    nu(0) is the least i with x_j <= x_i for infinitely many j; nu(n) is the
    least i > nu(n-1) with x_j <= x_i <= x_nu(n-1) for infinitely many j.
    Indices increase strictly and the selected paths decrease weakly.
    """
    from .noetherian import NotNoetherianError, is_left_noetherian_at

    if seq.base != poset.base:
        raise QuiverError(f"sequence lives in Q({seq.base}), not Q({poset.base})")
    for p in seq.preamble + seq.period:
        if not poset.quiver.contains_path(p):
            raise QuiverError(f"{p} is not a path of the quiver")
    report = is_left_noetherian_at(poset.quiver, poset.base)
    if not report.verdict:
        raise NotNoetherianError(report)

    # beyond the preamble candidates repeat with the period, so one extra
    # period past the previous index settles each step
    span = len(seq.preamble) + len(seq.period)
    out: list[tuple[int, Path]] = []
    prev: int | None = None
    for _ in range(k):
        lo = 0 if prev is None else prev + 1
        for i in range(lo, max(lo, len(seq.preamble)) + span):
            x_i = seq[i]
            if prev is not None and not path_leq(x_i, seq[prev]):
                continue
            if seq.occurs_infinitely_often_below(x_i):
                break
        else:  # pragma: no cover - excluded by the noetherian check
            raise RuntimeError("no admissible index found")
        out.append((i, x_i))
        prev = i
    return out


def principal(poset: PathPoset, path: Path) -> PathIdeal:
    return normalize_generators(poset, [path])


def ideal_from_paths(q: Quiver, base: str, words: Sequence[Sequence[str]]) -> PathIdeal:
    poset = PathPoset(q, base)
    return normalize_generators(poset, [q.path(base, w) for w in words])
