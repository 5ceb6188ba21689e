"""
Combinatorial model of a balanced sutured Heegaard diagram (Sigma, alpha, beta).

A diagram is stored as its cell structure: the alpha and beta curves with the
cyclic order of intersection points along each, and the regions of
Sigma - alpha - beta with their oriented boundary sides.  Everything else
(arcs, corners, intersection signs, left/right regions of each arc) is
derived from that data when the diagram is constructed.

Orientation conventions
-----------------------
A region's boundary is listed with the region on its *left*.  A side with
``orient = +1`` runs along its arc in the curve's direction, ``-1`` against.

At an intersection point the four rays are written ``A+`` / ``A-`` (alpha
leaving / entering the point) and ``B+`` / ``B-`` (likewise for beta).  The
quadrants are labelled 0..3 counterclockwise, starting with the quadrant
between ``A+`` and ``B+``.  A point has sign +1 when the counterclockwise
order of rays is ``A+, B+, A-, B-``.  A region corner that leaves the point
along ray ``h_out`` and arrived along ray ``h_in`` occupies the sector swept
counterclockwise from ``h_out`` to ``h_in``; ``CORNER_TABLE`` maps that pair
to ``(sign, label)``.
"""
from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

ALPHA = "alpha"
BETA = "beta"

CORNER_TABLE = {
    (("A", "+"), ("B", "+")): (1, 0),
    (("B", "+"), ("A", "-")): (1, 1),
    (("A", "-"), ("B", "-")): (1, 2),
    (("B", "-"), ("A", "+")): (1, 3),
    (("B", "+"), ("A", "+")): (-1, 0),
    (("A", "+"), ("B", "-")): (-1, 1),
    (("B", "-"), ("A", "-")): (-1, 2),
    (("A", "-"), ("B", "+")): (-1, 3),
}


class DiagramSyntaxError(ValueError):
    """Malformed diagram file."""

    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if path is not None:
            where.append(path)
        if where:
            message = f"{message} ({'; '.join(where)})"
        super().__init__(message)


class UnknownReferenceError(ValueError):
    """A side refers to a curve or point that the diagram does not define."""


def natural_key(token):
    """Sort key that orders ``q2`` before ``q10``."""
    return tuple((0, int(t)) if t.isdigit() else (1, t)
                 for t in re.findall(r"\d+|\D+", token))


@dataclass(frozen=True)
class IntersectionPoint:
    id: str
    alpha: int
    beta: int
    sign: int  # 0 when the corner data does not determine it


@dataclass(frozen=True)
class Curve:
    id: str
    kind: str
    points: tuple[str, ...]

    @property
    def arcs(self):
        """Consecutive point pairs ``(from, to)``; ``[(None, None)]`` for a pointless curve."""
        m = len(self.points)
        if m == 0:
            return [(None, None)]
        return [(self.points[i], self.points[(i + 1) % m]) for i in range(m)]


@dataclass(frozen=True)
class Side:
    """One boundary side of a region: an arc, a whole pointless curve, or a suture circle."""

    curve: str | None = None
    start: str | None = None
    end: str | None = None
    orient: int = 1
    closed: bool = False
    suture: int | None = None

    @property
    def kind(self):
        if self.suture is not None:
            return "suture"
        return "closed" if self.closed else "arc"

    @property
    def head(self):
        return self.start if self.orient == 1 else self.end

    @property
    def tail(self):
        return self.end if self.orient == 1 else self.start


@dataclass(frozen=True)
class Arc:
    curve: str
    index: int
    start: str | None
    end: str | None


@dataclass(frozen=True)
class Region:
    id: str
    outer: bool
    boundary: tuple[Side, ...]


@dataclass(frozen=True)
class SuturedDiagram:
    """A sutured Heegaard diagram together with its derived cell data.

    Construction never fails on inconsistent input; problems found while
    deriving corners and signs are collected in ``defects`` and reported by
    :func:`validate`.
    """

    name: str
    alpha: tuple[Curve, ...]
    beta: tuple[Curve, ...]
    regions: tuple[Region, ...]

    points: dict = field(init=False, repr=False, compare=False)
    arcs: tuple = field(init=False, repr=False, compare=False)
    arc_sides: dict = field(init=False, repr=False, compare=False)
    corners: dict = field(init=False, repr=False, compare=False)
    cycles: dict = field(init=False, repr=False, compare=False)
    quadrants: dict = field(init=False, repr=False, compare=False)
    defects: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _derive(self)

    @property
    def k(self):
        return len(self.alpha)

    @property
    def curves(self):
        return self.alpha + self.beta

    def curve(self, curve_id):
        for c in self.curves:
            if c.id == curve_id:
                return c
        raise UnknownReferenceError(f"unknown curve {curve_id!r}")

    def region(self, region_id):
        for r in self.regions:
            if r.id == region_id:
                return r
        raise UnknownReferenceError(f"unknown region {region_id!r}")

    @property
    def interior_regions(self):
        """Ids of regions disjoint from the boundary, in natural order."""
        return sorted((r.id for r in self.regions if not r.outer), key=natural_key)

    @property
    def point_ids(self):
        return sorted(self.points, key=natural_key)

    @property
    def suture_components(self):
        return sorted({s.suture for r in self.regions for s in r.boundary
                       if s.kind == "suture"})

    def left_right(self, arc_index):
        """Regions to the left and right of an arc (``None`` if missing)."""
        sides = self.arc_sides.get(arc_index, {1: [], -1: []})
        left = sides[1][0] if len(sides[1]) == 1 else None
        right = sides[-1][0] if len(sides[-1]) == 1 else None
        return left, right

    def arcs_of(self, curve_id):
        return [i for i, a in enumerate(self.arcs) if a.curve == curve_id]

    def region_euler(self, region_id):
        """Euler characteristic of the closed region, assuming it is planar."""
        return 2 - len(self.cycles[region_id])

    def euler_characteristic(self):
        v = len(self.points)
        e = sum(1 for a in self.arcs if a.start is not None)
        return v - e + sum(self.region_euler(r.id) for r in self.regions)


def _ray(curve_kind, leaving):
    return ("A" if curve_kind == ALPHA else "B", "+" if leaving else "-")


def _derive(d):
    defects = []
    kind_of = {c.id: c.kind for c in d.curves}

    alpha_of, beta_of = defaultdict(list), defaultdict(list)
    for i, c in enumerate(d.alpha):
        for p in c.points:
            alpha_of[p].append(i)
    for j, c in enumerate(d.beta):
        for p in c.points:
            beta_of[p].append(j)

    arcs = []
    arc_lookup = {}
    for c in d.curves:
        for i, (s, t) in enumerate(c.arcs):
            arc_lookup.setdefault((c.id, s, t), len(arcs))
            arcs.append(Arc(c.id, i, s, t))

    arc_sides = {i: {1: [], -1: []} for i in range(len(arcs))}
    corners = {}
    cycles = {}
    evidence = defaultdict(list)

    for r in d.regions:
        region_cycles = []
        run = []
        for n, s in enumerate(r.boundary):
            if s.kind == "suture":
                if run:
                    region_cycles.append(tuple(run))
                    run = []
                region_cycles.append((n,))
                continue
            key = (s.curve, None, None) if s.closed else (s.curve, s.start, s.end)
            idx = arc_lookup.get(key)
            if idx is None:
                what = "closed curve" if s.closed else f"arc {s.start}->{s.end}"
                defects.append(f"region {r.id}: {what} is not an arc of curve "
                               f"{s.curve} in its declared cyclic order")
            else:
                arc_sides[idx][s.orient].append(r.id)
            if s.closed:
                if run:
                    region_cycles.append(tuple(run))
                    run = []
                region_cycles.append((n,))
            elif run and r.boundary[run[-1]].tail == s.head:
                run.append(n)
            else:
                if run:
                    region_cycles.append(tuple(run))
                run = [n]
        if run:
            region_cycles.append(tuple(run))
        cycles[r.id] = tuple(region_cycles)

        region_corners = []
        for cyc in region_cycles:
            first = r.boundary[cyc[0]]
            if first.kind != "arc":
                continue
            if r.boundary[cyc[-1]].tail != first.head:
                defects.append(f"region {r.id}: boundary cycle starting at side "
                               f"{cyc[0]} does not close up")
                continue
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                s_in, s_out = r.boundary[a], r.boundary[b]
                ka, kb = kind_of.get(s_in.curve), kind_of.get(s_out.curve)
                if ka == kb:
                    defects.append(f"region {r.id}: consecutive sides {a},{b} both "
                                   f"lie on {ka} curves at {s_in.tail}")
                    continue
                h_in = _ray(ka, s_in.orient == -1)
                h_out = _ray(kb, s_out.orient == 1)
                sign, label = CORNER_TABLE[(h_out, h_in)]
                q = s_in.tail
                region_corners.append((q, label))
                evidence[q].append((r.id, label, sign))
        corners[r.id] = tuple(region_corners)

    points = {}
    quadrants = {}
    for p in sorted(set(alpha_of) | set(beta_of), key=natural_key):
        ev = evidence.get(p, [])
        signs = {s for _, _, s in ev}
        labels = sorted(lab for _, lab, _ in ev)
        sign = 0
        if len(ev) != 4 or labels != [0, 1, 2, 3]:
            defects.append(f"point {p}: corner quadrants {labels}, expected [0, 1, 2, 3]")
        elif len(signs) != 1:
            defects.append(f"point {p}: corners disagree about the intersection sign")
        else:
            sign = signs.pop()
            quadrants[p] = tuple(reg for reg, _, _ in sorted(ev, key=lambda e: e[1]))
        a = alpha_of[p][0] if len(alpha_of[p]) == 1 else -1
        b = beta_of[p][0] if len(beta_of[p]) == 1 else -1
        points[p] = IntersectionPoint(p, a, b, sign)

    object.__setattr__(d, "points", points)
    object.__setattr__(d, "arcs", tuple(arcs))
    object.__setattr__(d, "arc_sides", arc_sides)
    object.__setattr__(d, "corners", corners)
    object.__setattr__(d, "cycles", cycles)
    object.__setattr__(d, "quadrants", quadrants)
    object.__setattr__(d, "defects", tuple(defects))


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------

_TOP_KEYS = ("name", "alpha", "beta", "regions")
_REGION_KEYS = ("id", "outer", "boundary")
_ARC_KEYS = ("curve", "from", "to", "orient")
_CLOSED_KEYS = ("curve", "closed", "orient")
_SUTURE_KEYS = ("suture",)


def _expect_keys(obj, allowed, path):
    if not isinstance(obj, dict):
        raise DiagramSyntaxError("expected an object", path=path)
    extra = [k for k in obj if k not in allowed]
    if extra:
        raise DiagramSyntaxError(f"unexpected field(s) {extra}", path=path)
    missing = [k for k in allowed if k not in obj]
    if missing:
        raise DiagramSyntaxError(f"missing field(s) {missing}", path=path)


def _parse_side(obj, path, kind_of, known_points):
    if not isinstance(obj, dict):
        raise DiagramSyntaxError("side must be an object", path=path)
    if "suture" in obj:
        _expect_keys(obj, _SUTURE_KEYS, path)
        idx = obj["suture"]
        if not isinstance(idx, int) or isinstance(idx, bool) or idx < 0:
            raise DiagramSyntaxError("suture index must be a nonnegative integer", path=path)
        return Side(suture=idx)
    keys = _CLOSED_KEYS if "closed" in obj else _ARC_KEYS
    _expect_keys(obj, keys, path)
    curve = obj["curve"]
    if curve not in kind_of:
        raise UnknownReferenceError(f"{path}: unknown curve {curve!r}")
    orient = obj["orient"]
    if orient not in (1, -1) or isinstance(orient, bool):
        raise DiagramSyntaxError("orient must be 1 or -1", path=path)
    if "closed" in obj:
        if obj["closed"] is not True:
            raise DiagramSyntaxError("closed must be true", path=path)
        return Side(curve=curve, orient=orient, closed=True)
    for key in ("from", "to"):
        if not isinstance(obj[key], str):
            raise DiagramSyntaxError(f"{key} must be a point id", path=path)
        if obj[key] not in known_points:
            raise UnknownReferenceError(f"{path}: unknown point {obj[key]!r}")
    return Side(curve=curve, start=obj["from"], end=obj["to"], orient=orient)


def parse_diagram(text):
    """Parse the JSON ``.shd`` format into a :class:`SuturedDiagram`.

    Raises :class:`DiagramSyntaxError` for malformed input (JSON position or
    field path included) and :class:`UnknownReferenceError` for sides naming
    undefined curves or points.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    _expect_keys(obj, _TOP_KEYS, "$")
    if not isinstance(obj["name"], str):
        raise DiagramSyntaxError("name must be a string", path="$.name")

    curves = {}
    for kind, prefix in ((ALPHA, "a"), (BETA, "b")):
        lists = obj[kind]
        if not isinstance(lists, list):
            raise DiagramSyntaxError("expected an array of curves", path=f"$.{kind}")
        out = []
        for i, pts in enumerate(lists):
            path = f"$.{kind}[{i}]"
            if not isinstance(pts, list) or not all(isinstance(p, str) for p in pts):
                raise DiagramSyntaxError("curve must be an array of point ids", path=path)
            if len(set(pts)) != len(pts):
                raise DiagramSyntaxError("curve visits a point twice", path=path)
            out.append(Curve(f"{prefix}{i + 1}", kind, tuple(pts)))
        curves[kind] = tuple(out)
    kind_of = {c.id: c.kind for c in curves[ALPHA] + curves[BETA]}
    known_points = {p for c in curves[ALPHA] + curves[BETA] for p in c.points}

    if not isinstance(obj["regions"], list):
        raise DiagramSyntaxError("expected an array of regions", path="$.regions")
    regions = []
    seen = set()
    for n, robj in enumerate(obj["regions"]):
        path = f"$.regions[{n}]"
        _expect_keys(robj, _REGION_KEYS, path)
        rid = robj["id"]
        if not isinstance(rid, str):
            raise DiagramSyntaxError("region id must be a string", path=path)
        if rid in seen:
            raise DiagramSyntaxError(f"duplicate region id {rid!r}", path=path)
        seen.add(rid)
        if not isinstance(robj["outer"], bool):
            raise DiagramSyntaxError("outer must be a boolean", path=path)
        if not isinstance(robj["boundary"], list):
            raise DiagramSyntaxError("boundary must be an array", path=path)
        sides = tuple(_parse_side(s, f"{path}.boundary[{m}]", kind_of, known_points)
                      for m, s in enumerate(robj["boundary"]))
        regions.append(Region(rid, robj["outer"], sides))

    return SuturedDiagram(obj["name"], curves[ALPHA], curves[BETA], tuple(regions))


def _side_json(s):
    if s.kind == "suture":
        return {"suture": s.suture}
    if s.closed:
        return {"curve": s.curve, "closed": True, "orient": s.orient}
    return {"curve": s.curve, "from": s.start, "to": s.end, "orient": s.orient}


def diagram_to_json(d):
    return {
        "name": d.name,
        "alpha": [list(c.points) for c in d.alpha],
        "beta": [list(c.points) for c in d.beta],
        "regions": [{"id": r.id, "outer": r.outer,
                     "boundary": [_side_json(s) for s in r.boundary]}
                    for r in d.regions],
    }


def serialize(d):
    """Canonical file text: fixed key order, 2-space indentation, trailing newline."""
    return json.dumps(diagram_to_json(d), indent=2, ensure_ascii=False) + "\n"


def load_diagram(path):
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def validate(d):
    """Check every structural invariant; an empty report means a legal diagram."""
    v = list(d.defects)

    if len(d.alpha) != len(d.beta):
        v.append(f"unbalanced: {len(d.alpha)} alpha curves but {len(d.beta)} beta curves")

    for p, pt in d.points.items():
        na = sum(p in c.points for c in d.alpha)
        nb = sum(p in c.points for c in d.beta)
        if na != 1 or nb != 1:
            v.append(f"point {p}: lies on {na} alpha and {nb} beta curves, expected 1 and 1")

    for i, arc in enumerate(d.arcs):
        sides = d.arc_sides[i]
        label = (f"curve {arc.curve}" if arc.start is None
                 else f"arc {arc.curve}:{arc.start}->{arc.end}")
        if len(sides[1]) != 1 or len(sides[-1]) != 1:
            v.append(f"{label}: {len(sides[1])} left and {len(sides[-1])} right "
                     f"region sides, expected exactly one each")

    for r in d.regions:
        sutures = [s for s in r.boundary if s.kind == "suture"]
        if r.outer and not sutures:
            v.append(f"region {r.id}: outer region without a suture marker")
        if not r.outer and sutures:
            v.append(f"region {r.id}: interior region touches the suture")
        if not r.boundary:
            v.append(f"region {r.id}: empty boundary")
        if not r.outer and len(d.corners[r.id]) % 2:
            v.append(f"region {r.id}: odd number of corners")
        for s in r.boundary:
            if s.kind == "closed" and d.curve(s.curve).points:
                v.append(f"region {r.id}: curve {s.curve} has points but is used as closed")

    seen = defaultdict(int)
    for r in d.regions:
        for s in r.boundary:
            if s.kind == "suture":
                seen[s.suture] += 1
    for idx, n in sorted(seen.items()):
        if n != 1:
            v.append(f"suture component {idx} appears {n} times")

    if not seen:
        v.append("surface has no boundary: no suture markers")
    elif d.regions:
        uf = _UnionFind([r.id for r in d.regions])
        cut_alpha = _UnionFind([r.id for r in d.regions])
        cut_beta = _UnionFind([r.id for r in d.regions])
        for i, arc in enumerate(d.arcs):
            left, right = d.left_right(i)
            if left is None or right is None:
                continue
            uf.union(left, right)
            kind = d.curve(arc.curve).kind
            # crossing a beta arc stays inside one component of Sigma - alpha
            (cut_alpha if kind == BETA else cut_beta).union(left, right)
        roots = {uf.find(r.id) for r in d.regions}
        if len(roots) > 1:
            v.append(f"surface is disconnected ({len(roots)} components)")
        for uf_cut, kind in ((cut_alpha, ALPHA), (cut_beta, BETA)):
            touching = {uf_cut.find(r.id) for r in d.regions if r.outer}
            closed = {uf_cut.find(r.id) for r in d.regions} - touching
            if closed:
                v.append(f"Sigma minus the {kind} curves has a component "
                         f"missing the boundary")
        if len(roots) == 1 and not d.defects:
            chi = d.euler_characteristic()
            rest = 2 - len(seen) - chi
            if rest < 0 or rest % 2:
                v.append(f"Euler count {chi} with {len(seen)} boundary components "
                         f"is not an orientable surface")
    return ValidationReport(tuple(v))


def surface_genus(d):
    """Genus of Sigma from the Euler count (valid diagrams only)."""
    return (2 - len(d.suture_components) - d.euler_characteristic()) // 2


def presents_closed_manifold(d):
    """Heuristic flag: one suture circle and genus equal to k, as for Y minus a ball."""
    return len(d.suture_components) == 1 and surface_genus(d) == d.k


def intersection_matrix(d):
    """Unsigned counts ``|alpha_i ∩ beta_j|`` as a k x k integer array."""
    m = np.zeros((d.k, d.k), dtype=np.int64)
    for pt in d.points.values():
        m[pt.alpha, pt.beta] += 1
    return m


def signed_intersection_matrix(d):
    m = np.zeros((d.k, d.k), dtype=np.int64)
    for pt in d.points.values():
        m[pt.alpha, pt.beta] += pt.sign
    return m
