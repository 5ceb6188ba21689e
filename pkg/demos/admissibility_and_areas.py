"""Admissibility of two diagrams of S^1 x S^2.

The annulus diagram has a periodic domain with no negative coefficients, so
no positive areas can balance it.  Adding a finger move splits the annulus
into two bigons with opposite multiplicities, and unit areas work.
"""
from shd import corpus
from shd.admissibility import is_admissible, signed_area
from shd.lattice import periodic_domain_basis

for name in ("s1s2-inadmissible", "s1s2-admissible"):
    d = corpus.load(name)
    L = periodic_domain_basis(d)
    verdict = is_admissible(d)
    print(f"{name}: periodic domains {[dict(P) for P in L.basis]}")
    if verdict.admissible:
        areas = verdict.certificate.areas
        print(f"  admissible, areas {dict(areas)}")
        for P in L.basis:
            print(f"  signed area of {dict(P)} = {signed_area(verdict.certificate, P)}")
    else:
        print(f"  not admissible, nonnegative periodic domain {dict(verdict.witness)}")
