"""Slow reference computations used to cross-check the fast paths."""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

from .floer import connects, maslov_index
from .lattice import DomainVector


def brute_force_permanent(matrix):
    n = len(matrix)
    total = 0
    for perm in permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= matrix[i][j]
        total += prod
    return total


def rational_rank(matrix):
    """Rank by Gauss-Jordan elimination over Q."""
    M = [[Fraction(a) for a in row] for row in matrix]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def brute_force_domains(d, x, y):
    """Every 0/1 interior domain connecting x to y with index one."""
    regions = d.interior_regions
    out = []
    for bits in product((0, 1), repeat=len(regions)):
        D = DomainVector(zip(regions, bits))
        if D and connects(d, D, x, y) and maslov_index(d, D, x, y) == 1:
            out.append(D)
    return sorted(out, key=lambda D: sorted(D.items()))
