"""The F2 chain complex of a nice diagram.

A finger move on the genus one diagram of S^3 creates two extra generators
and a nonzero differential; the homology still has rank one.
"""
from shd import corpus
from shd.floer import differential, f2_rank

for name in ("s3", "s3-finger", "s1s2-admissible", "torus-grid"):
    cx = differential(corpus.load(name))
    n = len(cx.generators)
    print(f"{name}: {n} generators, rank {n - 2 * f2_rank(cx.matrix)}")
    for line in cx.sparse_text().splitlines():
        print(f"  {line}")
