"""The generator set: k-tuples of intersection points, one on each alpha and each beta curve."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagram import intersection_matrix, natural_key


@dataclass(frozen=True)
class Generator:
    """``points[i]`` lies on alpha_i and beta_{permutation[i]}."""

    points: tuple[str, ...]
    permutation: tuple[int, ...]

    @property
    def key(self):
        return tuple(sorted(self.points, key=natural_key))

    @property
    def label(self):
        return "{" + ",".join(self.key) + "}"


def _generator_sort_key(g):
    return [natural_key(p) for p in g.key]


def enumerate_generators(d):
    """All generators in canonical order; the k = 0 diagram has one empty generator."""
    by_alpha = [[] for _ in range(d.k)]
    for p in d.point_ids:
        pt = d.points[p]
        if pt.alpha >= 0 and pt.beta >= 0:
            by_alpha[pt.alpha].append((p, pt.beta))

    out = []
    chosen = []

    def backtrack(i, used):
        if i == d.k:
            out.append(Generator(tuple(p for p, _ in chosen),
                                 tuple(b for _, b in chosen)))
            return
        for p, b in by_alpha[i]:
            if not used >> b & 1:
                chosen.append((p, b))
                backtrack(i + 1, used | 1 << b)
                chosen.pop()

    backtrack(0, 0)
    return sorted(out, key=_generator_sort_key)


def permanent(matrix):
    """Permanent by Ryser's inclusion-exclusion formula; the empty matrix gives 1."""
    rows = [list(map(int, r)) for r in matrix]
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for size in range(1, n + 1):
        sign = (-1) ** size
        for cols in combinations(range(n), size):
            prod = 1
            for row in rows:
                prod *= sum(row[j] for j in cols)
                if not prod:
                    break
            total += sign * prod
    return (-1) ** n * total


def count_generators_permanent(d):
    return permanent(intersection_matrix(d).tolist())
