"""
Free representations over F_p
=============================

For a vertex with finitely many outgoing paths, F_p[Q(x,-)] is a finite
dimensional representation.  Its subrepresentations contain the images of
the ideals of Q(x), and leading submodules read off where they live.
"""

from pathlib import Path

import numpy as np

from quivnoeth import (
    GroebnerOrder,
    PathPoset,
    enumerate_subrepresentations,
    free_representation,
    hom_representations,
    ideal_embedding,
    leading_submodule,
    load_quiver,
)
from quivnoeth.linrep import random_representation
from quivnoeth.poset import enumerate_ideals

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
kron = load_quiver(CORPUS / "kronecker.quiver")

F = free_representation(kron, "x", 2)
print("dims", F.rep.dims)
subs = enumerate_subrepresentations(F.rep)
print(len(subs), "subrepresentations")

for ideal in enumerate_ideals(PathPoset(kron, "x")):
    print(f"  {str(ideal):16s} -> {ideal_embedding(F, ideal)}")

# leading submodules of U = span(e_a + e_b) at y
order = GroebnerOrder(["a", "b"])
U = next(u for u in subs if u["y"].basis == ((1, 1),) and u["x"].dim == 0)
for arrow in ("a", "b"):
    print("U_" + arrow, "=", leading_submodule(F, order, U, kron.path("x", [arrow])))

# Hom out of a free representation is evaluation at x.
rng = np.random.default_rng(1)
M = random_representation(kron, 3, {"x": 2, "y": 3}, rng)
F3 = free_representation(kron, "x", 3, m=2)
print("dim Hom =", len(hom_representations(F3.rep, M)), "expected", 2 * M.dims["x"])
