import pytest

from shd import corpus
from shd.admissibility import AreaCertificate, is_admissible
from shd.lattice import DomainVector, periodic_domain_basis
from shd.tangle import (EmptyCertificateOnInteriorRegions, FullTangle, build_full_tangle,
                        enumerate_sign_assignments, shi_upper_bound, verify_null_homology)


def test_full_tangle_from_certificate():
    d = corpus.load("s1s2-admissible")
    t = build_full_tangle(d, is_admissible(d).certificate)
    assert t.points_per_region == {"B1": 1, "B2": 1}
    assert t.total_strands == 2
    assert verify_null_homology(t, periodic_domain_basis(d))


def test_unbalanced_tangle_is_not_null_homologous():
    d = corpus.load("s1s2-admissible")
    cert = AreaCertificate(DomainVector({"B1": 2, "B2": 1}))
    assert not verify_null_homology(FullTangle({"B1": 2, "B2": 1}, 3, cert),
                                    periodic_domain_basis(d))


def test_tangle_needs_every_region():
    d = corpus.load("s1s2-admissible")
    with pytest.raises(EmptyCertificateOnInteriorRegions):
        build_full_tangle(d, AreaCertificate(DomainVector({"B1": 1})))


def test_sign_assignments_rp3():
    words = [a.word() for a in enumerate_sign_assignments(corpus.load("rp3"))]
    assert words == ["-+", "+-"]


def test_sign_assignments_torus_grid():
    signs = enumerate_sign_assignments(corpus.load("torus-grid"))
    assert [sorted(a.minus_points) for a in signs] == [["q11", "q22"], ["q12", "q21"]]


@pytest.mark.parametrize("name, bound", [
    ("s3", 1), ("rp3", 2), ("lens3", 3), ("lens4", 4), ("lens5", 5), ("s1s2-admissible", 2)])
def test_bound_equals_generator_and_sign_counts(name, bound):
    b = shi_upper_bound(corpus.load(name))
    assert b.admissible and b.null_homologous
    assert b.bound == b.generator_count == b.sign_count == bound


def test_no_bound_without_admissibility():
    b = shi_upper_bound(corpus.load("s1s2-inadmissible"))
    assert not b.admissible and b.bound is None
    assert b.generator_count == 0
    assert dict(b.witness) == {"R_int": 1}
