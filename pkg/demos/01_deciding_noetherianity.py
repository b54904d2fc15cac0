"""
Deciding noetherianity
======================

A quiver is left noetherian at x when every ideal of paths out of x is
finitely generated.  The decision only looks at the oriented cycles that can
be reached from x: each vertex on them must have exactly one outgoing arrow.
"""

from pathlib import Path

from quivnoeth import is_left_noetherian_at, load_quiver, maximal_paths, parse_quiver, pumping_oracle

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

# The Jordan quiver: one vertex, one loop.  Its path algebra is k[t].
jordan = load_quiver(CORPUS / "jordan.quiver")
report = is_left_noetherian_at(jordan, "x")
print("jordan at x:", report.verdict, [str(m) for m in report.maximal_paths])

# Adding a second loop breaks it; the report carries a witness instead.
two = load_quiver(CORPUS / "two_loops.quiver")
w = is_left_noetherian_at(two, "x").witness
print("two loops at x:", w.to_json())

# A vertex that only reaches a loop through a branch is still fine,
# as long as the branch happens before the cycle.
q = load_quiver(CORPUS / "branch_loop.quiver")
for m in maximal_paths(q, "x"):
    print("  maximal:", m)

# Rays model infinite linear tails; a ray hanging off a cycle vertex
# is a second way out of the cycle.
for text in ("vertex x\nvertex y\narrow a : x -> y\nray r at y\n",
             "vertex x\narrow l : x -> x\nray r at x\n"):
    q = parse_quiver(text)
    r = is_left_noetherian_at(q, "x")
    print(repr(text.splitlines()[-1]), "->", r.verdict, "(oracle says non-noetherian:", pumping_oracle(q, "x"), ")")
