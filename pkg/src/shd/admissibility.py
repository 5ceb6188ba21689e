"""
Admissibility of a diagram, decided by exact LP feasibility.

By Stiemke's alternative, exactly one of the following holds for the
periodic lattice L spanned by the columns of B:

* some nonzero ``w = B @ lam`` is everywhere >= 0 (the diagram is not
  admissible, ``w`` is the witness);
* some ``a`` with every ``a_i >= 1`` is orthogonal to L (an area
  certificate).

Both sides are computed by independent LPs, so each verdict is checked
against the other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice import DomainVector, periodic_domain_basis
from .simplex import OPTIMAL, solve_lp


class NotAdmissible(Exception):
    """Raised when a certificate is requested for an inadmissible diagram."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"diagram is not admissible: periodic domain "
                         f"{witness.to_json()} is nonnegative")


class FarkasMismatch(RuntimeError):
    """Both or neither alternative was found; indicates a solver bug."""


@dataclass(frozen=True)
class AreaCertificate:
    areas: DomainVector

    def to_json(self):
        return self.areas.to_json()


@dataclass(frozen=True)
class AdmissibilityVerdict:
    admissible: bool
    certificate: AreaCertificate | None = None
    witness: DomainVector | None = None


def primitive_integer_vector(values):
    """Scale a nonnegative rational vector to the smallest integer multiple."""
    values = [Fraction(v) for v in values]
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in values]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints] if g else ints


def nonnegative_element(basis_rows):
    """Find a nonzero nonnegative rational combination of the rows, or ``None``.

    Solves ``B lam - w = 0, sum(w) = 1, w >= 0`` with ``lam`` split into
    positive and negative parts.  Returns the primitive integer vector ``w``.
    """
    r = len(basis_rows)
    if r == 0:
        return None
    n = len(basis_rows[0])
    A, b = [], []
    for i in range(n):
        col = [row[i] for row in basis_rows]
        A.append(col + [-v for v in col] + [-int(j == i) for j in range(n)])
        b.append(0)
    A.append([0] * (2 * r) + [1] * n)
    b.append(1)
    res = solve_lp(A, b, [0] * (2 * r + n))
    if res.status != OPTIMAL:
        return None
    return primitive_integer_vector(res.x[2 * r:])


def positive_orthogonal(basis_rows, n):
    """Minimal-total integer vector ``a >= 1`` orthogonal to all rows, or ``None``.

    Substitutes ``a = 1 + s`` and minimizes ``sum(s)``; the optimal vertex is
    then scaled to the smallest integer multiple.
    """
    if not basis_rows:
        return [1] * n
    A = [list(row) for row in basis_rows]
    b = [-sum(row) for row in basis_rows]
    res = solve_lp(A, b, [1] * n)
    if res.status != OPTIMAL:
        return None
    return primitive_integer_vector([1 + s for s in res.x])


def _lattice_rows(d):
    L = periodic_domain_basis(d)
    return L, L.matrix()


def is_admissible(d):
    """Admissibility verdict with its witness (certificate or nonnegative domain)."""
    L, rows = _lattice_rows(d)
    regions = L.regions
    if L.rank == 0:
        return AdmissibilityVerdict(True, AreaCertificate(DomainVector(
            {r: 1 for r in regions})))
    w = nonnegative_element(rows)
    a = positive_orthogonal(rows, len(regions))
    if (w is None) == (a is None):
        raise FarkasMismatch(f"{d.name}: witness={w} certificate={a}")
    if w is not None:
        return AdmissibilityVerdict(False, witness=DomainVector(zip(regions, w)))
    return AdmissibilityVerdict(True, AreaCertificate(DomainVector(zip(regions, a))))


def area_certificate(d):
    """Positive integer areas making every periodic domain have signed area 0.

    Raises :class:`NotAdmissible` carrying a nonnegative periodic domain when
    no such areas exist.
    """
    verdict = is_admissible(d)
    if not verdict.admissible:
        raise NotAdmissible(verdict.witness)
    return verdict.certificate


def signed_area(cert, domain):
    areas = cert.areas if isinstance(cert, AreaCertificate) else cert
    return domain.dot(areas)
