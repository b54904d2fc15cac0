"""
Ascending chains from a witness
===============================

When a cycle at u can be left through another arrow, the paths
branch . cycle^i . access form an antichain, and the ideals generated by
their first n+1 members never stabilise.
"""

from pathlib import Path

from quivnoeth import decompose, ideal_compare, is_left_noetherian_at, load_quiver, witness_chain

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

q = load_quiver(CORPUS / "cycle_branch.quiver")
w = is_left_noetherian_at(q, "x").witness
print("access", w.access, "| cycle", w.cycle, "| branch", w.branch)

chain = witness_chain(w, 4)
for i, ideal in enumerate(chain):
    print(f"I_{i} =", ideal)
print("consecutive comparisons:", {ideal_compare(a, b) for a, b in zip(chain, chain[1:])})

# On the noetherian side the reachable part splits into a finite core and rays.
d = decompose(load_quiver(CORPUS / "ray_simple.quiver"), "x")
print("core", sorted(d.core.vertices), "rays", d.rays, "connectors", d.connectors)
