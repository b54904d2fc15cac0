"""
Orders on paths
===============

Degree-lex (longer paths smaller, ties broken at the first differing arrow,
lower rank winning) is compatible with postcomposition and refines the
divisibility order.  Plain dictionary order is not.
"""

from pathlib import Path

from quivnoeth import (
    DictionaryOrder,
    GroebnerOrder,
    ReversedDegreeOrder,
    check_finite_category,
    check_g1,
    check_g2,
    check_refinement,
    load_category,
    load_quiver,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
two = load_quiver(CORPUS / "two_loops.quiver")

for order in (GroebnerOrder(["a", "b"]), DictionaryOrder(["a", "b"]), ReversedDegreeOrder(["a", "b"])):
    results = [check(order, two, "x", 4) for check in (check_g1, check_g2, check_refinement)]
    print(f"{type(order).__name__:20s}", ["pass" if r is None else str(r) for r in results])

# Finite categories come as composition tables with candidate hom orders.
for name in ("a2_path.category", "monoid.category"):
    rep = check_finite_category(load_category(CORPUS / name))
    print(name, rep.to_json())
