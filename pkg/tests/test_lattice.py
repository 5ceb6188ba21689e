import math
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shd import corpus
from shd.lattice import (DomainVector, constraint_matrix, h1_order, h1_rel_trivial,
                         hermite_rows, integer_det, integer_kernel, is_periodic,
                         periodic_domain_basis)
from shd.oracles import rational_rank

small_ints = st.integers(-3, 3)


def matrices(max_rows=5, max_cols=6):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n),
                           min_size=1, max_size=max_rows).map(lambda m: (m, n)))


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        prod = 1
        for i, j in enumerate(perm):
            prod *= m[i][j]
        total += (-1) ** inv * prod
    return total


@pytest.mark.parametrize("name, basis", [
    ("s1s2-admissible", [{"B1": 1, "B2": -1}]),
    ("s1s2-inadmissible", [{"R_int": 1}]),
    ("torus-grid", [{"R01": 1, "R10": -1}]),
    ("rp3", []),
    ("s3-finger", []),
])
def test_periodic_basis(name, basis):
    L = periodic_domain_basis(corpus.load(name))
    assert [dict(P) for P in L.basis] == basis


@pytest.mark.parametrize("name, order", [
    ("s3", 1), ("rp3", 2), ("lens3", 3), ("lens4", 4), ("lens5", 5),
    ("s1s2-admissible", math.inf), ("s1s2-inadmissible", math.inf),
])
def test_h1_order(name, order):
    assert h1_order(corpus.load(name)) == order


def test_h1_rel_trivial():
    assert h1_rel_trivial(corpus.load("lens5"))
    assert not h1_rel_trivial(corpus.load("s1s2-admissible"))


def test_non_periodic_domain():
    d = corpus.load("s3-finger")
    assert not is_periodic(d, DomainVector({"B_top": 1}))


def test_lattice_membership_and_coordinates():
    L = periodic_domain_basis(corpus.load("torus-grid"))
    P = DomainVector({"R01": -3, "R10": 3})
    assert P in L
    assert L.coordinates(P) == [-3]
    assert DomainVector({"R01": 1}) not in L


def test_domain_vector_algebra():
    a = DomainVector({"A": 1, "B": 2})
    b = DomainVector({"B": -2, "C": 1})
    assert dict(a + b) == {"A": 1, "C": 1}
    assert a - a == DomainVector()
    assert dict(a * 3) == {"A": 3, "B": 6}
    assert a.dot(b) == -4
    assert not b.is_nonnegative()


@pytest.mark.parametrize("name", corpus.corpus_names())
def test_lattice_rank_against_rational_rank(name):
    d = corpus.load(name)
    L = periodic_domain_basis(d)
    rows = constraint_matrix(d)
    assert L.rank == len(L.regions) - (rational_rank(rows) if rows else 0)
    assert all(is_periodic(d, P) for P in L.basis)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_kernel_is_full_and_exact(data):
    m, n = data
    K = integer_kernel(m, n)
    assert len(K) == n - rational_rank(m)
    for v in K:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    if K:
        assert rational_rank(K) == len(K)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_hermite_form_shape(data):
    m, n = data
    H, rank = hermite_rows(m, n)
    assert rank == rational_rank(m)
    pivots = [next(j for j, v in enumerate(row) if v) for row in H[:rank]]
    assert pivots == sorted(set(pivots))
    assert all(H[i][p] > 0 for i, p in enumerate(pivots))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 5).flatmap(
    lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(m):
    assert integer_det(m) == leibniz_det(m)


def test_rational_rank_oracle():
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[Fraction(1, 2), 0], [0, 3]]) == 2
