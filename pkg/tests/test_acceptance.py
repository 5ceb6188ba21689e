"""Acceptance criteria, one test per criterion.

Each test records one PASS/FAIL line, printed in the terminal summary, and
asserts the same condition.
"""
import random
import subprocess
import sys

import numpy as np

from shd import corpus
from shd.admissibility import is_admissible
from shd.classify import classify
from shd.floer import differential, is_nice, positive_domains, sfh_rank
from shd.generators import count_generators_permanent, enumerate_generators, permanent
from shd.lattice import h1_order, periodic_domain_basis
from shd.oracles import brute_force_domains, brute_force_permanent
from shd.selftest import farkas_exclusive
from shd.tangle import enumerate_sign_assignments, shi_upper_bound

LENS = {f"lens{p}": p for p in (3, 4, 5)} | {"rp3": 2}


RESULTS = []


def report(label, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail and not ok else "")
    RESULTS.append(line)
    print(line)
    assert ok, detail


def test_criterion_1_inadmissible_annulus():
    d = corpus.load("s1s2-inadmissible")
    v = is_admissible(d)
    b = shi_upper_bound(d)
    cli = subprocess.run([sys.executable, "-m", "shd.cli", "bound", "s1s2-inadmissible"],
                         capture_output=True, text=True)
    ok = (not v.admissible and dict(v.witness) == {"R_int": 1}
          and len(enumerate_generators(d)) == 0 and b.bound is None
          and cli.returncode == 1 and "no bound" in cli.stderr)
    report("1 inadmissible annulus: witness, zero generators, bound refused", ok)


def test_criterion_2_bound_pipeline():
    expected = {"s3": 1, "rp3": 2, "lens2": 2, "lens3": 3, "lens4": 4, "lens5": 5,
                "s1s2-admissible": 2}
    bad = []
    for name, n in expected.items():
        b = shi_upper_bound(corpus.load(name))
        if not (b.admissible and b.bound == b.generator_count == b.sign_count == n):
            bad.append(name)
    report("2 bound = generator count = sign-assignment count", not bad, str(bad))


def test_criterion_3_strong_lspace():
    bad = []
    for name, p in LENS.items() | {("lens2", 2)}:
        c = classify(corpus.load(name))
        if not (c.strong_diagram and c.strong_lspace_witness and c.generator_count == c.h1 == p
                and any("instanton L-space" in s for s in c.statements)):
            bad.append(name)
    report("3 lens fixtures are strong L-space witnesses with |S| = |H1| = p", not bad, str(bad))


def test_criterion_4_farkas():
    bad = []
    for d in corpus.load_all():
        L = periodic_domain_basis(d)
        if not farkas_exclusive(L.matrix(), len(L.regions)):
            bad.append(d.name)
    rng = random.Random(2024)
    trials = 150
    for _ in range(trials):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(1, n))]
        if not farkas_exclusive(rows, n):
            bad.append(rows)
    report(f"4 Farkas alternative on corpus and {trials} random lattices", not bad, str(bad[:3]))


def test_criterion_5_permanent():
    bad = [d.name for d in corpus.load_all()
           if len(enumerate_generators(d)) != count_generators_permanent(d)]
    rng = random.Random(99)
    for _ in range(250):
        k = rng.randint(0, 5)
        m = [[rng.randint(0, 3) for _ in range(k)] for _ in range(k)]
        if permanent(m) != brute_force_permanent(m):
            bad.append(m)
    report("5 backtracking = Ryser = permutation sum", not bad, str(bad[:3]))


def test_criterion_6_floer():
    bad = []
    for d in corpus.load_all():
        if is_nice(d) and is_admissible(d).admissible:
            M = differential(d).matrix.astype(np.int64)
            if ((M @ M) % 2).any():
                bad.append(d.name)
    expected = {"s3": 1, "rp3": 2, "lens2": 2, "lens3": 3, "lens4": 4, "lens5": 5,
                "s1s2-admissible": 2}
    bad += [n for n, r in expected.items() if sfh_rank(corpus.load(n)) != r]
    report("6 d^2 = 0 and expected SFH ranks", not bad, str(bad))


def test_criterion_7_domain_enumeration():
    bad = []
    for d in corpus.load_all():
        if len(d.interior_regions) > 12 or not is_nice(d):
            continue
        gens = enumerate_generators(d)
        for x in gens:
            for y in gens:
                if positive_domains(d, x, y) != brute_force_domains(d, x, y):
                    bad.append((d.name, x.label, y.label))
    report("7 positive domains = 0/1-subset brute force", not bad, str(bad[:3]))


def test_criterion_8_inequality_chain():
    bad, checked = [], 0
    for d in corpus.load_all():
        c = classify(d)
        if c.strong_diagram and c.h1 != float("inf"):
            checked += 1
            if not (h1_order(d) <= c.sfh_rank <= c.generator_count):
                bad.append(d.name)
    report(f"8 h1 <= sfh_rank <= |S| on {checked} strong diagrams", not bad and checked > 0,
           str(bad))


def test_criterion_9_determinism():
    bad = []
    for name in corpus.corpus_names():
        outs = [subprocess.run([sys.executable, "-m", "shd.cli", "report", name, "--json"],
                               capture_output=True).stdout for _ in range(2)]
        if outs[0] != outs[1] or not outs[0]:
            bad.append(name)
    report("9 --json reports byte-identical across runs", not bad, str(bad))
