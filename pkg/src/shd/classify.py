"""Diagram-level classification and corpus minima of the generator count."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .admissibility import is_admissible
from .diagram import presents_closed_manifold
from .floer import differential, f2_rank, is_nice
from .generators import enumerate_generators
from .lattice import h1_order


@dataclass(frozen=True)
class Classification:
    admissible: bool
    nice: bool
    strong_diagram: bool | None  # None: not decidable here (diagram not nice)
    h1: int | float
    closed_manifold_diagram: bool
    generator_count: int
    sfh_rank: int | None
    strong_lspace_witness: bool
    implied_instanton_bound: int | None
    statements: tuple[str, ...] = field(default=())


def _fmt_h1(h1):
    return "infinite" if h1 == math.inf else str(h1)


def classify(d):
    verdict = is_admissible(d)
    nice = is_nice(d)
    count = len(enumerate_generators(d))
    h1 = h1_order(d)
    closed = presents_closed_manifold(d)

    strong = None
    rank = None
    if verdict.admissible and nice:
        cx = differential(d)
        strong = cx.is_zero
        rank = count - 2 * f2_rank(cx.matrix)
    elif not verdict.admissible:
        strong = False

    witness = bool(strong) and closed and h1 != math.inf and count == h1
    statements = []
    if verdict.admissible:
        statements.append(f"dim SHI(M, gamma) <= {count}: generator count of an "
                          f"admissible diagram")
    else:
        statements.append("diagram is not admissible: no bound on dim SHI is implied")
    if strong:
        statements.append(f"strong diagram: dim SHI(M, gamma) <= rk SFH(M, gamma) = {rank}")
    if witness:
        statements.append(f"strong L-space: T(Y(1)) = |H_1(Y)| = {h1}, so Y is an "
                          f"instanton L-space with dim I#(Y) = {h1}")
    return Classification(
        admissible=verdict.admissible,
        nice=nice,
        strong_diagram=strong,
        h1=h1,
        closed_manifold_diagram=closed,
        generator_count=count,
        sfh_rank=rank,
        strong_lspace_witness=witness,
        implied_instanton_bound=count if verdict.admissible else None,
        statements=tuple(statements),
    )


@dataclass(frozen=True)
class TrajectoryResult:
    min: int | None
    per_diagram: tuple[dict, ...]


def trajectory_min(diagrams):
    """Smallest generator count over the admissible members of ``diagrams``.

    The caller is responsible for the diagrams presenting one sutured
    manifold; inadmissible members are reported as skipped.
    """
    rows = []
    best = None
    for d in diagrams:
        admissible = is_admissible(d).admissible
        count = len(enumerate_generators(d))
        rows.append({"name": d.name, "admissible": admissible,
                     "generators": count, "skipped": not admissible})
        if admissible and (best is None or count < best):
            best = count
    return TrajectoryResult(best, tuple(rows))
