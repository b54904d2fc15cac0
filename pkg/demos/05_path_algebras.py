"""
Path algebras
=============

Basis paths multiply by composition, "apply the right factor first".
For quivers with cycles only a truncation is built, and products that leave
it raise instead of vanishing.
"""

from pathlib import Path

from quivnoeth import TruncationOverflow, algebra_noetherian, build_algebra, load_quiver, multiply

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

a2 = load_quiver(CORPUS / "a2.quiver")
alg = build_algebra(a2, 2)
a, ex, ey = alg.basis_element(a2.path("x", ["a"])), alg.idempotent("x"), alg.idempotent("y")
print("dim", alg.dim, "| a*e_x =", alg.describe(multiply(alg, a, ex)),
      "| e_x*a =", alg.describe(multiply(alg, ex, a)), "| e_y*a =", alg.describe(multiply(alg, ey, a)))

jordan = load_quiver(CORPUS / "jordan.quiver")
t = build_algebra(jordan, 5, 3)
l = t.basis_element(jordan.path("x", ["l"]))
l3 = multiply(t, multiply(t, l, l), l)
print("truncated dim", t.dim, "| l^3 =", t.describe(l3))
try:
    multiply(t, l3, l)
except TruncationOverflow as exc:
    print("overflow:", exc)

for name in ("jordan", "two_loops", "a2", "cycle_branch"):
    print(name, "left noetherian:", algebra_noetherian(load_quiver(CORPUS / f"{name}.quiver"), 2))
