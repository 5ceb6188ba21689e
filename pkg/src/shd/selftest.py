"""Invariant suites run by ``shd selftest``.

Each check yields ``(name, passed, detail)``.  The suites only use the public
operations plus the reference computations in :mod:`shd.oracles`.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .admissibility import (AreaCertificate, is_admissible, nonnegative_element,
                            positive_orthogonal, signed_area)
from .classify import classify
from .diagram import intersection_matrix, parse_diagram, serialize, validate
from .floer import (differential, domains_from_paths, f2_rank, is_nice, maslov_index,
                    positive_domains)
from .generators import count_generators_permanent, enumerate_generators, permanent
from .lattice import (DomainVector, constraint_matrix, h1_order, is_periodic,
                      periodic_domain_basis)
from .oracles import brute_force_domains, brute_force_permanent, rational_rank
from .tangle import build_full_tangle, enumerate_sign_assignments, verify_null_homology

BRUTE_FORCE_REGION_LIMIT = 12


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _check(name, cond, detail=""):
    return Check(name, bool(cond), "" if cond else detail)


def farkas_exclusive(rows, n):
    """Exactly one of: a nonnegative nonzero lattice element, a positive orthogonal vector."""
    w = nonnegative_element(rows)
    a = positive_orthogonal(rows, n)
    if (w is None) == (a is None):
        return False
    if w is not None:
        return all(v >= 0 for v in w) and any(w) and rational_rank(rows + [w]) == rational_rank(rows)
    return all(v >= 1 for v in a) and all(sum(x * y for x, y in zip(r, a)) == 0 for r in rows)


def diagram_checks(d):
    name = d.name
    out = []
    rep = validate(d)
    out.append(_check(f"{name}: valid", rep.ok, "; ".join(rep.violations)))
    if not rep.ok:
        return out
    out.append(_check(f"{name}: round trip", serialize(parse_diagram(serialize(d))) == serialize(d)))
    corners = sum(len(c) for c in d.corners.values())
    out.append(_check(f"{name}: corners/4 = points", corners == 4 * len(d.points),
                      f"{corners} corners, {len(d.points)} points"))

    L = periodic_domain_basis(d)
    out.append(_check(f"{name}: basis periodic",
                      all(is_periodic(d, P) and is_periodic(d, -P) for P in L.basis)))
    rows = constraint_matrix(d)
    n = len(L.regions)
    expected = n - (rational_rank(rows) if rows else 0)
    out.append(_check(f"{name}: lattice rank", L.rank == expected, f"{L.rank} != {expected}"))

    verdict = is_admissible(d)
    if L.rank == 0:
        out.append(_check(f"{name}: trivial lattice admissible", verdict.admissible))
    if verdict.admissible:
        areas = verdict.certificate.areas
        out.append(_check(f"{name}: certificate sound",
                          all(areas.get(r, 0) >= 1 for r in L.regions)
                          and all(signed_area(verdict.certificate, P) == 0 for P in L.basis)))
        tangle = build_full_tangle(d, verdict.certificate)
        out.append(_check(f"{name}: tangle nullhomologous", verify_null_homology(tangle, L)))
    else:
        w = verdict.witness
        out.append(_check(f"{name}: witness sound", w and w.is_nonnegative() and w in L))
    out.append(_check(f"{name}: Farkas alternative", farkas_exclusive(L.matrix(), n)))

    gens = enumerate_generators(d)
    perm = count_generators_permanent(d)
    out.append(_check(f"{name}: generators = permanent", len(gens) == perm,
                      f"{len(gens)} != {perm}"))
    out.append(_check(f"{name}: generator bijections", all(
        sorted(g.permutation) == list(range(d.k))
        and all(d.points[p].alpha == i and d.points[p].beta == g.permutation[i]
                for i, p in enumerate(g.points)) for g in gens)))
    signs = enumerate_sign_assignments(d)
    out.append(_check(f"{name}: sign assignments = generators",
                      sorted(map(sorted, (a.minus_points for a in signs)))
                      == sorted(sorted(g.points) for g in gens)))

    if is_nice(d) and verdict.admissible:
        out.extend(floer_checks(d, gens))
    return out


def floer_checks(d, gens):
    name = d.name
    out = []
    cx = differential(d)  # raises if d∘d != 0
    out.append(Check(f"{name}: d^2 = 0", True))
    rank = len(gens) - 2 * f2_rank(cx.matrix)
    out.append(_check(f"{name}: rank bounds",
                      rank <= len(gens) and (rank == len(gens)) == cx.is_zero))
    if len(d.interior_regions) <= BRUTE_FORCE_REGION_LIMIT:
        agree = all(positive_domains(d, x, y) == brute_force_domains(d, x, y)
                    for x in gens for y in gens)
        out.append(_check(f"{name}: domain enumeration = brute force", agree))
    additive = True
    for x in gens:
        for y in gens:
            for D1 in domains_from_paths(d, x, y):
                for z in gens:
                    for D2 in domains_from_paths(d, y, z):
                        lhs = maslov_index(d, D1 + D2, x, z)
                        if lhs != maslov_index(d, D1, x, y) + maslov_index(d, D2, y, z):
                            additive = False
    out.append(_check(f"{name}: index additivity", additive))
    c = classify(d)
    h1 = h1_order(d)
    if c.strong_diagram and c.closed_manifold_diagram and h1 != math.inf:
        out.append(_check(f"{name}: |H1| <= rk SFH <= |S|",
                          h1 <= c.sfh_rank <= c.generator_count))
    return out


def random_checks(seed=0, lattices=100, matrices=200):
    rng = random.Random(seed)
    farkas_ok = 0
    for _ in range(lattices):
        n = rng.randint(1, 6)
        r = rng.randint(1, n)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(r)]
        farkas_ok += farkas_exclusive(rows, n)
    perm_ok = 0
    for _ in range(matrices):
        k = rng.randint(0, 5)
        m = [[rng.randint(0, 3) for _ in range(k)] for _ in range(k)]
        perm_ok += permanent(m) == brute_force_permanent(m)
    return [_check("random lattices: Farkas alternative", farkas_ok == lattices,
                   f"{farkas_ok}/{lattices}"),
            _check("random matrices: Ryser = permutation sum", perm_ok == matrices,
                   f"{perm_ok}/{matrices}")]


def run(diagrams, seed=0):
    checks = []
    for d in diagrams:
        checks.extend(diagram_checks(d))
    checks.extend(random_checks(seed))
    return checks
