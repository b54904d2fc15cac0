"""Exhaustive families of small quivers, one per isomorphism class."""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations
from typing import Iterator

from .quiver import Quiver


def _canonical(n: int, edges: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    best = None
    for perm in permutations(range(n)):
        img = tuple(sorted((perm[s], perm[t]) for s, t in edges))
        if best is None or img < best:
            best = img
    return best


def _acyclic(n: int, edges) -> bool:
    indeg = [0] * n
    for _, t in edges:
        indeg[t] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for s, t in edges:
            if s == v:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
    return seen == n


def small_quivers(max_vertices: int, max_arrows: int, acyclic: bool = False) -> Iterator[Quiver]:
    """All quivers with 1..max_vertices vertices and at most max_arrows arrows.

    Arrows are unlabelled up to relabelling and vertices up to permutation;
    vertices are named ``v0, v1, ...`` and arrows ``a0, a1, ...``.
    """
    for n in range(1, max_vertices + 1):
        pairs = [(s, t) for s in range(n) for t in range(n)]
        seen = set()
        for k in range(max_arrows + 1):
            for edges in combinations_with_replacement(pairs, k):
                if acyclic and not _acyclic(n, edges):
                    continue
                canon = _canonical(n, edges)
                if canon in seen:
                    continue
                seen.add(canon)
                yield Quiver(
                    [f"v{i}" for i in range(n)],
                    [(f"a{j}", f"v{s}", f"v{t}") for j, (s, t) in enumerate(canon)],
                )
