"""Hypothesis strategies for small quivers and periodic sequences."""

from hypothesis import strategies as st

from quivnoeth import Quiver


@st.composite
def quivers(draw, max_vertices=4, max_arrows=6, acyclic=False, rays=False):
    n = draw(st.integers(1, max_vertices))
    verts = [f"v{i}" for i in range(n)]
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    edges = draw(st.lists(pairs, max_size=max_arrows))
    if acyclic:
        edges = [(s, t) for s, t in edges if s < t]
    arrows = [(f"a{j}", f"v{s}", f"v{t}") for j, (s, t) in enumerate(edges)]
    ray_list = []
    if rays:
        for k, v in enumerate(draw(st.lists(st.integers(0, n - 1), max_size=2))):
            ray_list.append((f"r{k}", f"v{v}"))
    return Quiver(verts, arrows, ray_list)
