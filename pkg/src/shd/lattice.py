"""
Exact integer linear algebra on a diagram: domains, the periodic-domain
lattice, and the order of first homology for closed-manifold diagrams.

No floating point is used anywhere in this module.
"""
from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass

from .diagram import natural_key, signed_intersection_matrix


class DomainVector(Mapping):
    """Integer multiplicities on interior regions; absent regions count as 0."""

    __slots__ = ("_items",)

    def __init__(self, mults=()):
        items = dict(mults)
        self._items = tuple(sorted(((r, int(c)) for r, c in items.items() if c),
                                   key=lambda rc: natural_key(rc[0])))

    def __getitem__(self, region):
        for r, c in self._items:
            if r == region:
                return c
        raise KeyError(region)

    def get(self, region, default=0):
        return dict(self._items).get(region, default)

    def __iter__(self):
        return (r for r, _ in self._items)

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        if isinstance(other, DomainVector):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self == DomainVector(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return f"DomainVector({dict(self._items)})"

    def __add__(self, other):
        out = dict(self._items)
        for r, c in other.items():
            out[r] = out.get(r, 0) + c
        return DomainVector(out)

    def __neg__(self):
        return DomainVector({r: -c for r, c in self._items})

    def __sub__(self, other):
        return self + (-DomainVector(other))

    def __mul__(self, n):
        return DomainVector({r: n * c for r, c in self._items})

    __rmul__ = __mul__

    def dot(self, other):
        return sum(c * other.get(r, 0) for r, c in self._items)

    def is_nonnegative(self):
        return all(c >= 0 for _, c in self._items)

    def as_vector(self, regions):
        return [self.get(r, 0) for r in regions]

    def to_json(self):
        return dict(self._items)


# ---------------------------------------------------------------------------
# Integer matrix routines
# ---------------------------------------------------------------------------

def hermite_rows(rows, ncols=None):
    """Row-style Hermite normal form, restricted to the first ``ncols`` columns.

    Returns ``(H, rank)`` where ``H`` is the transformed list of rows: the
    first ``rank`` rows are in echelon form with positive pivots and entries
    above each pivot reduced into ``[0, pivot)``, and the remaining rows vanish
    on the first ``ncols`` columns.  Only unimodular row operations are used,
    so the row lattice is preserved.
    """
    H = [list(r) for r in rows]
    if not H:
        return H, 0
    if ncols is None:
        ncols = len(H[0])
    piv_row = 0
    pivots = []
    for col in range(ncols):
        if piv_row >= len(H):
            break
        while True:
            nz = [i for i in range(piv_row, len(H)) if H[i][col]]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(H[i][col]))
            H[piv_row], H[i_min] = H[i_min], H[piv_row]
            p = H[piv_row][col]
            done = True
            for i in range(piv_row + 1, len(H)):
                if H[i][col]:
                    q = H[i][col] // p
                    H[i] = [a - q * b for a, b in zip(H[i], H[piv_row])]
                    if H[i][col]:
                        done = False
            if done:
                break
        if piv_row < len(H) and H[piv_row][col]:
            if H[piv_row][col] < 0:
                H[piv_row] = [-a for a in H[piv_row]]
            pivots.append((piv_row, col))
            piv_row += 1
    for r, col in pivots:
        p = H[r][col]
        for i in range(r):
            q = H[i][col] // p
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
    return H, piv_row


def integer_kernel(matrix, n):
    """Lattice basis of ``{v in Z^n : matrix v = 0}`` in Hermite normal form."""
    r = len(matrix)
    aug = [[matrix[i][j] for i in range(r)] + [int(j == jj) for jj in range(n)]
           for j in range(n)]
    H, rank = hermite_rows(aug, ncols=r)
    basis = [row[r:] for row in H[rank:]]
    K, _ = hermite_rows(basis)
    return [row for row in K if any(row)]


def integer_det(matrix):
    """Determinant by fraction-free (Bareiss) elimination."""
    M = [list(map(int, row)) for row in matrix]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Periodic domains
# ---------------------------------------------------------------------------

def arc_coefficients(d, domain):
    """Coefficient of each arc in the boundary of ``domain``.

    The coefficient of an arc is (multiplicity of the region on its left)
    minus (multiplicity of the region on its right); outer regions count 0.
    """
    coeffs = []
    for i in range(len(d.arcs)):
        left, right = d.left_right(i)
        coeffs.append(domain.get(left, 0) - domain.get(right, 0))
    return coeffs


def constraint_matrix(d):
    """Rows ``coef(arc_i) - coef(arc_0)`` for consecutive arcs of each curve.

    Columns are the interior regions in natural order.  A domain is periodic
    iff it lies in the kernel.
    """
    regions = d.interior_regions
    col = {r: n for n, r in enumerate(regions)}

    def arc_row(i):
        row = [0] * len(regions)
        left, right = d.left_right(i)
        if left in col:
            row[col[left]] += 1
        if right in col:
            row[col[right]] -= 1
        return row

    rows = []
    for c in d.curves:
        arcs = d.arcs_of(c.id)
        base = arc_row(arcs[0])
        for i in arcs[1:]:
            rows.append([a - b for a, b in zip(arc_row(i), base)])
    return rows


def is_periodic(d, domain):
    coeffs = arc_coefficients(d, domain)
    for c in d.curves:
        vals = {coeffs[i] for i in d.arcs_of(c.id)}
        if len(vals) > 1:
            return False
    return True


def curve_multiplicities(d, domain):
    """For a periodic domain, the coefficient of each whole curve in its boundary."""
    coeffs = arc_coefficients(d, domain)
    return {c.id: coeffs[d.arcs_of(c.id)[0]] for c in d.curves}


@dataclass(frozen=True)
class PeriodicLattice:
    regions: tuple[str, ...]
    basis: tuple[DomainVector, ...]

    @property
    def rank(self):
        return len(self.basis)

    def matrix(self):
        """Basis vectors as rows over ``regions``."""
        return [b.as_vector(self.regions) for b in self.basis]

    def coordinates(self, domain):
        """Integer coefficients expressing ``domain`` in the basis, or ``None``.

        The basis is in Hermite form, so the coefficients are read off the
        pivot columns one at a time.
        """
        vec = domain.as_vector(self.regions)
        coeffs = []
        for row in self.matrix():
            piv = next(j for j, a in enumerate(row) if a)
            if vec[piv] % row[piv]:
                return None
            q = vec[piv] // row[piv]
            coeffs.append(q)
            vec = [a - q * b for a, b in zip(vec, row)]
        return coeffs if not any(vec) else None

    def __contains__(self, domain):
        return self.coordinates(domain) is not None


def periodic_domain_basis(d):
    """Canonical lattice basis of the periodic domains of ``d``.

    The basis is the Hermite normal form of the integer kernel of the
    arc-difference constraints, so rows come ordered by pivot region.
    """
    regions = d.interior_regions
    kernel = integer_kernel(constraint_matrix(d), len(regions))
    basis = tuple(DomainVector(zip(regions, row)) for row in kernel)
    return PeriodicLattice(tuple(regions), basis)


def h1_rel_trivial(d):
    """True iff there are no nontrivial periodic domains (H_1(M, dM; Q) = 0)."""
    return periodic_domain_basis(d).rank == 0


def h1_order(d):
    """``|det|`` of the signed intersection matrix, or ``math.inf`` when it vanishes.

    Meaningful when ``d`` presents a closed manifold with a ball removed.
    """
    det = abs(integer_det(signed_intersection_matrix(d).tolist()))
    return det if det else math.inf
