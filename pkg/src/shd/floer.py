"""
Sutured Floer complexes of nice diagrams over F2.

In a nice diagram (every interior region a bigon or a rectangle) the
differential counts empty embedded bigons and rectangles, which are exactly
the positive 0/1 domains of Maslov index one.

Boundary compatibility
----------------------
Write ``m0..m3`` for the multiplicities of a domain D in the quadrants at a
point ``q`` (labels as in :mod:`shd.diagram`) and ``s`` for the sign of
``q``.  The alpha part of the boundary of D jumps at ``q`` by::

    s * (m1 + m3 - m0 - m2)

and D connects generator x to generator y exactly when this jump equals
``[q in y] - [q in x]`` at every intersection point.  The beta jump is the
negative of the alpha jump, so one table covers both curves.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .admissibility import NotAdmissible, is_admissible
from .generators import enumerate_generators
from .lattice import DomainVector


class NotNice(ValueError):
    pass


class NotConnecting(ValueError):
    pass


class DifferentialError(RuntimeError):
    """The computed differential does not square to zero."""


def is_nice(d):
    """Every interior region is a disk with 2 or 4 corners."""
    return all(len(d.corners[r]) in (2, 4) and len(d.cycles[r]) == 1
               for r in d.interior_regions)


def quadrant_multiplicities(d, domain, point):
    return [domain.get(r, 0) for r in d.quadrants[point]]


def alpha_jump(d, domain, point):
    m0, m1, m2, m3 = quadrant_multiplicities(d, domain, point)
    return d.points[point].sign * (m1 + m3 - m0 - m2)


def connects(d, domain, x, y):
    xs, ys = set(x.points), set(y.points)
    return all(alpha_jump(d, domain, p) == (p in ys) - (p in xs) for p in d.points)


def point_measure(d, domain, points):
    """Sum over ``points`` of the average of the four quadrant multiplicities."""
    return sum((Fraction(sum(quadrant_multiplicities(d, domain, p)), 4) for p in points),
               Fraction(0))


def region_euler_measure(d, region):
    return d.region_euler(region) - Fraction(len(d.corners[region]), 4)


def euler_measure(d, domain):
    return sum((c * region_euler_measure(d, r) for r, c in domain.items()), Fraction(0))


def maslov_index(d, domain, x, y):
    """Index of a domain from x to y: Euler measure plus both point measures."""
    if not connects(d, domain, x, y):
        raise NotConnecting(f"{domain.to_json()} does not connect {x.label} to {y.label}")
    return euler_measure(d, domain) + point_measure(d, domain, x.points) \
        + point_measure(d, domain, y.points)


def _path_chains(d, curve, start, end, sign):
    """The two simple paths on ``curve`` with boundary ``sign * (end - start)``.

    Returned as ``{arc index: coefficient}``: the forward path from start to
    end, and minus the forward path from end to start.
    """
    arcs = d.arcs_of(curve.id)
    pts = curve.points
    i, j = pts.index(start), pts.index(end)
    m = len(pts)
    forward = [arcs[(i + t) % m] for t in range((j - i) % m)]
    backward = [arcs[(j + t) % m] for t in range((i - j) % m)]
    return [{a: sign for a in forward}, {a: -sign for a in backward}]


def _solve_domain(d, coeffs):
    """Multiplicities with the given arc coefficients and zero on outer regions."""
    adj = {r.id: [] for r in d.regions}
    for i in range(len(d.arcs)):
        left, right = d.left_right(i)
        c = coeffs.get(i, 0)
        adj[left].append((right, -c))
        adj[right].append((left, c))
    mult = {r.id: 0 for r in d.regions if r.outer}
    queue = deque(mult)
    while queue:
        r = queue.popleft()
        for nbr, delta in adj[r]:
            val = mult[r] + delta
            if nbr not in mult:
                mult[nbr] = val
                queue.append(nbr)
            elif mult[nbr] != val:
                return None
    if len(mult) != len(adj):
        return None
    return DomainVector({r: c for r, c in mult.items() if c})


def domains_from_paths(d, x, y):
    """Domains from x to y whose boundary is a simple path on each moving curve.

    For each moving alpha and beta curve there are two simple paths between
    the coordinates of x and y.  Each choice fixes the boundary, and the
    domain is then recovered by propagating multiplicities out from the outer
    regions.  Multiplicities may be of any sign.
    """
    moving_a = [(c, x.points[i], y.points[i]) for i, c in enumerate(d.alpha)
                if x.points[i] != y.points[i]]
    xb = {d.points[p].beta: p for p in x.points}
    yb = {d.points[p].beta: p for p in y.points}
    moving_b = [(c, xb[j], yb[j]) for j, c in enumerate(d.beta) if xb[j] != yb[j]]

    options = [_path_chains(d, c, s, t, 1) for c, s, t in moving_a]
    options += [_path_chains(d, c, t, s, 1) for c, s, t in moving_b]
    found = set()
    for combo in product(*options):
        coeffs = {}
        for chain in combo:
            coeffs.update(chain)
        D = _solve_domain(d, coeffs)
        if D is not None:
            found.add(D)
    return sorted(found, key=lambda D: sorted(D.items()))


def positive_domains(d, x, y):
    """Positive 0/1 domains of index one from x to y.

    Such a domain is an embedded bigon or rectangle, so x and y differ in one
    or two coordinates and its boundary is a simple path on each moving curve.
    """
    if not is_nice(d):
        raise NotNice(f"{d.name} is not nice")
    moving = sum(a != b for a, b in zip(x.points, y.points))
    if moving not in (1, 2):
        return []
    return [D for D in domains_from_paths(d, x, y)
            if D and all(c == 1 for c in D.values())
            and connects(d, D, x, y) and maslov_index(d, D, x, y) == 1]


@dataclass(frozen=True)
class FloerComplex:
    generators: tuple
    matrix: np.ndarray
    maslov_data: dict

    @property
    def is_zero(self):
        return not self.matrix.any()

    def sparse_text(self):
        """One line ``y <- x`` per nonzero entry of the differential."""
        lines = []
        for j, x in enumerate(self.generators):
            for i, y in enumerate(self.generators):
                if self.matrix[i, j]:
                    lines.append(f"{y.label} <- {x.label}")
        return "\n".join(lines)


def f2_rank(matrix):
    M = (np.asarray(matrix, dtype=np.uint8) & 1).copy()
    rows, cols = M.shape if M.size else (0, 0)
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if M[r, c]), None)
        if pivot is None:
            continue
        M[[rank, pivot]] = M[[pivot, rank]]
        for r in range(rows):
            if r != rank and M[r, c]:
                M[r] ^= M[rank]
        rank += 1
    return rank


def differential(d):
    """The F2 complex; entry (y, x) is the parity of the index-one domains x -> y."""
    if not is_nice(d):
        raise NotNice(f"{d.name} is not nice")
    verdict = is_admissible(d)
    if not verdict.admissible:
        raise NotAdmissible(verdict.witness)
    gens = tuple(enumerate_generators(d))
    n = len(gens)
    M = np.zeros((n, n), dtype=np.uint8)
    audit = {}
    for j, x in enumerate(gens):
        for i, y in enumerate(gens):
            doms = positive_domains(d, x, y)
            if doms:
                M[i, j] = len(doms) % 2
                audit[(x.label, y.label)] = [
                    {"domain": D.to_json(),
                     "euler": euler_measure(d, D),
                     "n_x": point_measure(d, D, x.points),
                     "n_y": point_measure(d, D, y.points)} for D in doms]
    if ((M.astype(np.int64) @ M) % 2).any():
        raise DifferentialError(f"{d.name}: differential does not square to zero")
    return FloerComplex(gens, M, audit)


def sfh_rank(d):
    """Rank over F2 of the homology of the complex."""
    cx = differential(d)
    return len(cx.generators) - 2 * f2_rank(cx.matrix)
