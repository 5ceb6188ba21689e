import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shd import corpus
from shd.generators import count_generators_permanent, enumerate_generators, permanent
from shd.oracles import brute_force_permanent

from conftest import relabel

COUNTS = {"ball": 1, "s3": 1, "rp3": 2, "lens2": 2, "lens3": 3, "lens4": 4, "lens5": 5,
          "s1s2-admissible": 2, "s1s2-inadmissible": 0, "s3-finger": 3, "torus-grid": 2,
          "lens3-simple-knot": 3}


@pytest.mark.parametrize("name", sorted(COUNTS))
def test_generator_counts(name):
    d = corpus.load(name)
    gens = enumerate_generators(d)
    assert len(gens) == COUNTS[name] == count_generators_permanent(d)


def test_generator_labels_are_sorted():
    gens = enumerate_generators(corpus.load("torus-grid"))
    assert [g.label for g in gens] == ["{q11,q22}", "{q12,q21}"]


def test_generators_use_each_curve_once():
    d = corpus.load("torus-grid")
    for g in enumerate_generators(d):
        assert sorted(d.points[p].alpha for p in g.points) == [0, 1]
        assert sorted(d.points[p].beta for p in g.points) == [0, 1]


def test_permanent_small():
    assert permanent([[1, 2], [2, 1]]) == 5
    assert permanent([]) == 1
    assert permanent([[0]]) == 0


def test_count_invariant_under_relabeling():
    d = corpus.load("lens5")
    e = relabel(d, {p: f"x{i}" for i, p in enumerate(reversed(d.point_ids))})
    assert len(enumerate_generators(e)) == 5


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 5).flatmap(lambda k: st.lists(
    st.lists(st.integers(0, 3), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_ryser_matches_permutation_sum(m):
    assert permanent(m) == brute_force_permanent(m)
