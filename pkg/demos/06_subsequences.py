"""
Descending subsequences
=======================

In a noetherian Q(x) every sequence has a subsequence that decreases weakly.
The recursion picks, at each step, the first admissible index.
"""

from pathlib import Path

from quivnoeth import PathPoset, PeriodicPathSequence, load_quiver, nu_extract

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
jordan = load_quiver(CORPUS / "jordan.quiver")


def power(n):
    return jordan.path("x", ["l"] * n)


seq = PeriodicPathSequence([power(3), power(1), power(4), power(1)], [power(1), power(5)])
print("first terms:", [len(seq[i]) for i in range(10)])
for i, p in nu_extract(PathPoset(jordan, "x"), seq, 4):
    print(f"  nu picks x_{i} = {p}")
