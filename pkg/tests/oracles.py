"""Slow, independent reference computations used to pin derived values.

Nothing here calls the row-reduction code of the package: subspaces are
found as vector sets closed under the field operations, hom-spaces by
trying every family of matrices, and path counts by adjacency powers.
"""

from itertools import product
import math

import numpy as np


def vectors(p, n):
    return [tuple(v) for v in product(range(p), repeat=n)]


def closure(gens, p, n):
    """Smallest set of vectors containing gens, closed under + and scaling."""
    span = {(0,) * n}
    frontier = list(span)
    gens = list(gens)
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                for c in range(1, p):
                    w = tuple((a + c * b) % p for a, b in zip(v, g))
                    if w not in span:
                        span.add(w)
                        nxt.append(w)
        frontier = nxt
    return frozenset(span)


def brute_subspaces(p, n):
    """Every subspace of F_p^n as a frozenset of vectors."""
    found = set()
    vs = [v for v in vectors(p, n) if any(v)]
    # every subspace of F_p^n is spanned by at most n vectors
    for k in range(n + 1):
        for gens in product(vs, repeat=k):
            found.add(closure(gens, p, n))
    return found


def apply(mat, v, p):
    return tuple(int(x) for x in (np.asarray(mat, dtype=np.int64) @ np.array(v, dtype=np.int64)) % p) \
        if len(v) else (0,) * mat.shape[0]


def brute_subrep_count(M):
    """Count tuples of vector subsets closed under the arrow maps."""
    verts = sorted(M.quiver.vertices)
    subs = {v: brute_subspaces(M.p, M.dims[v]) for v in verts}
    count = 0
    for choice in product(*(subs[v] for v in verts)):
        pick = dict(zip(verts, choice))
        ok = all(
            apply(M.maps[a.id], vec, M.p) in pick[a.target]
            for a in M.quiver.arrows
            for vec in pick[a.source]
        )
        count += ok
    return count


def brute_hom_dim(M, N):
    """dim Hom(M, N) by trying every family of matrices; only for tiny inputs."""
    p = M.p
    verts = sorted(M.quiver.vertices)
    shapes = [(N.dims[v], M.dims[v]) for v in verts]
    sizes = [r * c for r, c in shapes]
    solutions = 0
    for entries in product(range(p), repeat=sum(sizes)):
        f, k = {}, 0
        for v, (r, c), s in zip(verts, shapes, sizes):
            f[v] = np.array(entries[k: k + s], dtype=np.int64).reshape(r, c)
            k += s
        if all(
            np.array_equal((f[a.target] @ M.maps[a.id]) % p, (N.maps[a.id] @ f[a.source]) % p)
            for a in M.quiver.arrows
        ):
            solutions += 1
    return round(math.log(solutions, p))


def adjacency(q):
    verts = sorted(q.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    a = np.zeros((len(verts), len(verts)), dtype=np.int64)
    for arr in q.arrows:
        a[pos[arr.source], pos[arr.target]] += 1
    return verts, a


def path_count(q, max_len):
    """Number of paths of length at most max_len, all start vertices together."""
    verts, a = adjacency(q)
    total, power = 0, np.eye(len(verts), dtype=np.int64)
    for _ in range(max_len + 1):
        total += int(power.sum())
        power = power @ a
    return total


def nu_by_horizon(leq, seq, k, horizon=400):
    """The subsequence recursion on a finite prefix of an eventually periodic sequence.

    "Infinitely many j" is read as "some j in the second half of the
    horizon", which is exact once the period fits into that half.
    """
    xs = [seq[i] for i in range(horizon)]
    tail = xs[horizon // 2:]
    out, prev = [], None
    for _ in range(k):
        lo = 0 if prev is None else prev + 1
        for i in range(lo, horizon // 2):
            if prev is not None and not leq(xs[i], xs[prev]):
                continue
            if any(leq(x, xs[i]) for x in tail):
                break
        else:
            raise AssertionError("horizon too short")
        out.append(i)
        prev = i
    return tuple(out)
