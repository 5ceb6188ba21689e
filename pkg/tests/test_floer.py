import math
from fractions import Fraction

import numpy as np
import pytest

from shd import corpus
from shd.classify import classify, trajectory_min
from shd.floer import (NotConnecting, NotNice, differential, domains_from_paths,
                       euler_measure, f2_rank, is_nice, maslov_index, point_measure,
                       positive_domains, sfh_rank)
from shd.generators import enumerate_generators
from shd.lattice import DomainVector
from shd.oracles import brute_force_domains

NICE = ["ball", "s3", "rp3", "lens2", "lens3", "lens4", "lens5", "s1s2-admissible",
        "s3-finger", "torus-grid", "lens3-simple-knot"]


def gen(d, label):
    return next(g for g in enumerate_generators(d) if g.label == label)


def test_bigon_index():
    d = corpus.load("s1s2-admissible")
    x, y = gen(d, "{q1}"), gen(d, "{q2}")
    D = DomainVector({"B1": 1})
    assert euler_measure(d, D) == Fraction(1, 2)
    assert point_measure(d, D, x.points) == Fraction(1, 4)
    assert point_measure(d, D, y.points) == Fraction(1, 4)
    assert maslov_index(d, D, x, y) == 1


def test_constant_domain_index_zero():
    d = corpus.load("rp3")
    x = gen(d, "{q1}")
    assert maslov_index(d, DomainVector(), x, x) == 0


def test_non_connecting_domain_rejected():
    d = corpus.load("rp3")
    with pytest.raises(NotConnecting):
        maslov_index(d, DomainVector({"R1": 1}), gen(d, "{q1}"), gen(d, "{q2}"))


def test_two_bigons_from_q1_to_q2():
    d = corpus.load("s1s2-admissible")
    doms = positive_domains(d, gen(d, "{q1}"), gen(d, "{q2}"))
    assert sorted(map(dict, doms), key=sorted) == [{"B1": 1}, {"B2": 1}]


def test_finger_move_differential():
    cx = differential(corpus.load("s3-finger"))
    assert cx.sparse_text().splitlines() == ["{q2} <- {q1}", "{q2} <- {q3}"]
    assert f2_rank(cx.matrix) == 1


@pytest.mark.parametrize("name, rank", [
    ("s3", 1), ("rp3", 2), ("lens3", 3), ("lens4", 4), ("lens5", 5),
    ("s1s2-admissible", 2), ("torus-grid", 2), ("s3-finger", 1)])
def test_sfh_rank(name, rank):
    assert sfh_rank(corpus.load(name)) == rank


@pytest.mark.parametrize("name", NICE)
def test_differential_squares_to_zero(name):
    cx = differential(corpus.load(name))
    M = cx.matrix.astype(np.int64)
    assert not ((M @ M) % 2).any()


def test_not_nice():
    d = corpus.load("s1s2-inadmissible")
    assert not is_nice(d)
    with pytest.raises(NotNice):
        differential(d)


def test_f2_rank():
    assert f2_rank(np.array([[1, 1], [1, 1]], dtype=np.uint8)) == 1
    assert f2_rank(np.eye(3, dtype=np.uint8)) == 3
    assert f2_rank(np.zeros((0, 0), dtype=np.uint8)) == 0


@pytest.mark.parametrize("name", NICE)
def test_domains_match_brute_force(name):
    d = corpus.load(name)
    gens = enumerate_generators(d)
    for x in gens:
        for y in gens:
            assert positive_domains(d, x, y) == brute_force_domains(d, x, y)


@pytest.mark.parametrize("name", ["s3-finger", "torus-grid", "s1s2-admissible"])
def test_index_is_additive(name):
    d = corpus.load(name)
    gens = enumerate_generators(d)
    for x in gens:
        for y in gens:
            for D1 in domains_from_paths(d, x, y):
                for z in gens:
                    for D2 in domains_from_paths(d, y, z):
                        assert (maslov_index(d, D1 + D2, x, z)
                                == maslov_index(d, D1, x, y) + maslov_index(d, D2, y, z))


@pytest.mark.parametrize("name, p", [("rp3", 2), ("lens3", 3), ("lens4", 4), ("lens5", 5)])
def test_strong_lspace_classification(name, p):
    c = classify(corpus.load(name))
    assert c.strong_diagram and c.strong_lspace_witness
    assert c.generator_count == c.h1 == c.sfh_rank == p
    assert any("instanton L-space" in s for s in c.statements)


def test_finger_diagram_is_not_strong():
    c = classify(corpus.load("s3-finger"))
    assert c.strong_diagram is False and not c.strong_lspace_witness
    assert c.implied_instanton_bound == 3


def test_inadmissible_classification():
    c = classify(corpus.load("s1s2-inadmissible"))
    assert not c.admissible and c.implied_instanton_bound is None
    assert c.h1 == math.inf


def test_trajectory_min():
    assert trajectory_min([corpus.load("s3")]).min == 1
    t = trajectory_min([corpus.load("s1s2-inadmissible"), corpus.load("s1s2-admissible")])
    assert t.min == 2
    assert [r["skipped"] for r in t.per_diagram] == [True, False]
    assert trajectory_min([]).min is None
    assert trajectory_min([corpus.load("s3-finger"), corpus.load("s3")]).min == 1
