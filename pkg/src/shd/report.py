"""Report sections and their JSON / text rendering.

Every value in a report is an int, bool, string, list or string-keyed map,
so the JSON form is byte-stable for a fixed input and tool version.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction

from . import __version__
from .admissibility import is_admissible
from .classify import classify, trajectory_min
from .diagram import intersection_matrix, signed_intersection_matrix, validate
from .floer import NotNice, differential, f2_rank, is_nice
from .generators import count_generators_permanent, enumerate_generators
from .lattice import h1_order, periodic_domain_basis
from .tangle import shi_upper_bound


def plain(value):
    """Convert a computed value into JSON-safe form."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float) and value == math.inf:
        return "infinite"
    if isinstance(value, Fraction):
        return str(value)
    if hasattr(value, "to_json"):
        return plain(value.to_json())
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if hasattr(value, "tolist"):
        return value.tolist()
    raise TypeError(f"cannot serialize {type(value).__name__}")


def validation_section(d):
    rep = validate(d)
    return {"ok": rep.ok, "violations": list(rep.violations)}


def lattice_section(d):
    L = periodic_domain_basis(d)
    return {"interior_regions": list(L.regions), "rank": L.rank,
            "basis": plain(L.basis), "h1_rel_trivial": L.rank == 0,
            "h1_order": plain(h1_order(d))}


def admissibility_section(d):
    v = is_admissible(d)
    out = {"admissible": v.admissible}
    if v.admissible:
        out["certificate"] = plain(v.certificate)
    else:
        out["witness"] = plain(v.witness)
    return out


def generators_section(d):
    gens = enumerate_generators(d)
    return {"count": len(gens), "permanent": count_generators_permanent(d),
            "intersection_matrix": plain(intersection_matrix(d)),
            "signed_intersection_matrix": plain(signed_intersection_matrix(d)),
            "generators": [g.label for g in gens]}


def tangle_section(d):
    b = shi_upper_bound(d)
    if not b.admissible:
        return {"admissible": False, "bound": None, "witness": plain(b.witness),
                "generator_count": b.generator_count}
    return {"admissible": True, "bound": b.bound,
            "certificate": plain(b.certificate),
            "total_strands": b.tangle.total_strands,
            "null_homologous": b.null_homologous,
            "sign_assignments": b.sign_count,
            "generator_count": b.generator_count}


def floer_section(d):
    cx = differential(d)
    return {"generators": [g.label for g in cx.generators],
            "differential": cx.sparse_text().splitlines(),
            "sfh_rank": len(cx.generators) - 2 * f2_rank(cx.matrix),
            "domains": {f"{x} -> {y}": plain(v) for (x, y), v in cx.maslov_data.items()}}


def classification_section(d):
    c = classify(d)
    return {"admissible": c.admissible, "nice": c.nice,
            "strong_diagram": "unknown" if c.strong_diagram is None else c.strong_diagram,
            "h1": plain(c.h1), "closed_manifold_diagram": c.closed_manifold_diagram,
            "generator_count": c.generator_count,
            "sfh_rank": "unknown" if c.sfh_rank is None else c.sfh_rank,
            "strong_lspace_witness": c.strong_lspace_witness,
            "implied_instanton_bound": c.implied_instanton_bound,
            "statements": list(c.statements)}


def trajectory_section(diagrams):
    t = trajectory_min(diagrams)
    return {"min": t.min, "per_diagram": list(t.per_diagram)}


def full_sections(d):
    """Every section that applies to ``d``."""
    sections = {"validation": validation_section(d),
                "lattice": lattice_section(d),
                "admissibility": admissibility_section(d),
                "generators": generators_section(d),
                "tangle": tangle_section(d)}
    if is_nice(d) and sections["admissibility"]["admissible"]:
        sections["floer"] = floer_section(d)
    else:
        sections["floer"] = {"error": NotNice.__name__ if not is_nice(d) else "NotAdmissible"}
    sections["classification"] = classification_section(d)
    return sections


def make_report(name, sections):
    return {"tool_version": __version__, "diagram_name": name, "sections": sections}


def to_json(report):
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _short(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False)
    if value is None:
        return "-"
    return str(value)


def to_text(report):
    lines = [f"{report['diagram_name']}  (shd {report['tool_version']})"]
    for section, body in report["sections"].items():
        lines.append(f"[{section}]")
        width = max((len(k) for k in body), default=0)
        for key, value in body.items():
            if isinstance(value, list) and value and all(isinstance(v, str) for v in value):
                lines.append(f"  {key.ljust(width)}  {value[0]}")
                lines.extend(f"  {' ' * width}  {v}" for v in value[1:])
            else:
                lines.append(f"  {key.ljust(width)}  {_short(value)}")
    return "\n".join(lines) + "\n"
