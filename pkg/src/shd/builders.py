"""Constructors for standard diagram families."""
from __future__ import annotations

from .diagram import ALPHA, BETA, Curve, Region, Side, SuturedDiagram


def lens_space_diagram(p, punctured=(0,), name=None):
    """Genus-one diagram with alpha of slope (1, 0) and beta of slope (1, p).

    The torus is cut into ``p`` parallelograms ``R0 .. R{p-1}``; the regions
    listed in ``punctured`` each receive one boundary circle.  With a single
    puncture this presents L(p, 1) minus a ball (S^3 for p = 1); with two it
    presents the complement of a simple knot in L(p, 1).
    """
    if p < 1:
        raise ValueError("p must be positive")
    q = [f"q{j + 1}" for j in range(p)]

    def nxt(j, step=1):
        return q[(j + step) % p]

    regions = []
    suture = 0
    for j in range(p):
        sides = [
            Side("a1", q[j], nxt(j), 1),
            Side("b1", nxt(j), nxt(j, 2), 1),
            Side("a1", nxt(j), nxt(j, 2), -1),
            Side("b1", q[j], nxt(j), -1),
        ]
        outer = j in punctured
        if outer:
            sides.append(Side(suture=suture))
            suture += 1
        regions.append(Region(f"R{j}", outer, tuple(sides)))
    if name is None:
        name = "s3" if p == 1 else f"lens{p}"
    return SuturedDiagram(name, (Curve("a1", ALPHA, tuple(q)),),
                          (Curve("b1", BETA, tuple(q)),), tuple(regions))
