import sys

import pytest

from shd import corpus
from shd.diagram import Curve, Region, Side, SuturedDiagram


@pytest.fixture
def load():
    return corpus.load


def relabel(d, point_map=None, region_map=None):
    """Copy of ``d`` with points and regions renamed."""
    pm = point_map or {}
    rm = region_map or {}

    def side(s):
        if s.kind == "arc":
            return Side(s.curve, pm.get(s.start, s.start), pm.get(s.end, s.end), s.orient)
        return s

    alpha = tuple(Curve(c.id, c.kind, tuple(pm.get(p, p) for p in c.points)) for c in d.alpha)
    beta = tuple(Curve(c.id, c.kind, tuple(pm.get(p, p) for p in c.points)) for c in d.beta)
    regions = tuple(Region(rm.get(r.id, r.id), r.outer, tuple(side(s) for s in r.boundary))
                    for r in d.regions)
    return SuturedDiagram(d.name, alpha, beta, regions)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(module.RESULTS, key=lambda s: s.split()[1]):
            terminalreporter.write_line(line)
