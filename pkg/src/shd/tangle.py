"""
Full tangles from area certificates, the sign-assignment decomposition, and
the resulting upper bound on sutured instanton homology.

A full tangle places ``a_i`` vertical strands in each interior region. The
strands are nullhomologous exactly when every periodic domain has signed area
zero. Removing them splits the tangle complement into one summand per tuple
of signs on the intersection points. A summand survives exactly when every
alpha curve and every beta curve carries a single minus sign. The minus
points then form a generator.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .admissibility import AreaCertificate, is_admissible
from .diagram import natural_key
from .generators import enumerate_generators
from .lattice import periodic_domain_basis

MAX_SIGN_POINTS = 62


class EmptyCertificateOnInteriorRegions(ValueError):
    pass


class TooManyPoints(ValueError):
    pass


@dataclass(frozen=True)
class FullTangle:
    points_per_region: dict
    total_strands: int
    source_certificate: AreaCertificate


@dataclass(frozen=True)
class SignAssignment:
    signs: tuple[tuple[str, str], ...]

    @property
    def minus_points(self):
        """The set q(I) of points carrying a minus sign."""
        return frozenset(p for p, s in self.signs if s == "-")

    def word(self):
        return "".join(s for _, s in self.signs)


def build_full_tangle(d, cert):
    areas = cert.areas
    missing = [r for r in d.interior_regions if areas.get(r, 0) < 1]
    if missing:
        raise EmptyCertificateOnInteriorRegions(
            f"certificate gives no strands to regions {missing}")
    per_region = {r: areas[r] for r in d.interior_regions}
    return FullTangle(per_region, sum(per_region.values()), cert)


def verify_null_homology(tangle, lattice):
    """Whether the tangle meets every periodic 2-cycle algebraically zero times."""
    return all(sum(c * tangle.points_per_region.get(r, 0) for r, c in P.items()) == 0
               for P in lattice.basis)


def enumerate_sign_assignments(d):
    """Sign tuples with exactly one minus on each alpha and each beta curve."""
    points = d.point_ids
    if len(points) > MAX_SIGN_POINTS:
        raise TooManyPoints(f"{len(points)} intersection points exceed {MAX_SIGN_POINTS}")
    index = {p: n for n, p in enumerate(points)}
    on_alpha = [[index[p] for p in c.points] for c in d.alpha]
    beta_of = [d.points[p].beta for p in points]

    out = []

    def choose(i, mask, betas):
        if i == len(on_alpha):
            if len(betas) == len(d.beta):
                out.append(mask)
            return
        for n in on_alpha[i]:
            b = beta_of[n]
            if b not in betas:
                choose(i + 1, mask | 1 << n, betas | {b})

    choose(0, 0, frozenset())
    assignments = [SignAssignment(tuple((p, "-" if m >> index[p] & 1 else "+")
                                        for p in points)) for m in out]
    assignments.sort(key=lambda a: sorted(natural_key(p) for p in a.minus_points))
    return assignments


@dataclass(frozen=True)
class BoundReport:
    admissible: bool
    bound: int | None = None
    certificate: AreaCertificate | None = None
    tangle: FullTangle | None = None
    null_homologous: bool | None = None
    sign_count: int | None = None
    generator_count: int | None = None
    witness: object = None
    notes: tuple[str, ...] = field(default=())


def shi_upper_bound(d):
    """Run admissibility, certificate, tangle, and sign count, then bound dim SHI.

    No bound is asserted for inadmissible diagrams.
    """
    verdict = is_admissible(d)
    gens = enumerate_generators(d)
    if not verdict.admissible:
        return BoundReport(False, witness=verdict.witness, generator_count=len(gens),
                           notes=("diagram is not admissible; the generator count "
                                  "is not an upper bound",))
    tangle = build_full_tangle(d, verdict.certificate)
    null = verify_null_homology(tangle, periodic_domain_basis(d))
    signs = enumerate_sign_assignments(d)
    gen_keys = {frozenset(g.points) for g in gens}
    sign_keys = [a.minus_points for a in signs]
    if len(set(sign_keys)) != len(sign_keys) or set(sign_keys) != gen_keys:
        raise AssertionError("sign assignments are not in bijection with generators")
    if not null:
        raise AssertionError("tangle from a valid certificate is not nullhomologous")
    return BoundReport(True, bound=len(gens), certificate=verdict.certificate,
                       tangle=tangle, null_homologous=null, sign_count=len(signs),
                       generator_count=len(gens))
