"""Command-line interface: ``shd <command> [--json] FILE...``."""
from __future__ import annotations

import argparse
import sys

from . import corpus, report, selftest
from .admissibility import NotAdmissible
from .diagram import DiagramSyntaxError, UnknownReferenceError, validate
from .floer import NotNice, is_nice
from .lattice import DomainVector

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path, require_valid=True):
    try:
        d = corpus.load(path)
    except (OSError, DiagramSyntaxError, UnknownReferenceError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if require_valid:
        rep = validate(d)
        if not rep.ok:
            raise InputError(f"{path}: invalid diagram\n  " + "\n  ".join(rep.violations))
    return d


def _emit(args, name, sections):
    rep = report.make_report(name, sections)
    sys.stdout.write(report.to_json(rep) if args.json else report.to_text(rep))


def cmd_validate(args):
    d = _load(args.file, require_valid=False)
    sec = report.validation_section(d)
    _emit(args, d.name, {"validation": sec})
    return EXIT_OK if sec["ok"] else EXIT_INPUT


def _single(section_fn, key):
    def run(args):
        d = _load(args.file)
        _emit(args, d.name, {key: section_fn(d)})
        return EXIT_OK
    return run


def cmd_areas(args):
    d = _load(args.file)
    sec = report.admissibility_section(d)
    _emit(args, d.name, {"admissibility": sec})
    if not sec["admissible"]:
        raise NotAdmissible(DomainVector(sec["witness"]))
    return EXIT_OK


def cmd_bound(args):
    d = _load(args.file)
    sec = report.tangle_section(d)
    _emit(args, d.name, {"bound": sec})
    if not sec["admissible"]:
        raise NotAdmissible(DomainVector(sec["witness"]))
    return EXIT_OK


def cmd_sfh(args):
    d = _load(args.file)
    if not is_nice(d):
        raise NotNice(f"{d.name} is not nice: some interior region is not a bigon or rectangle")
    _emit(args, d.name, {"floer": report.floer_section(d)})
    return EXIT_OK


def cmd_trajectory(args):
    diagrams = [_load(f) for f in args.files]
    _emit(args, "trajectory", {"trajectory": report.trajectory_section(diagrams)})
    return EXIT_OK


def cmd_report(args):
    d = _load(args.file)
    _emit(args, d.name, report.full_sections(d))
    return EXIT_OK


def cmd_corpus(args):
    if args.action == "list":
        for name in corpus.corpus_names():
            print(f"{name}.shd")
    else:
        if not args.dest:
            raise InputError("corpus export needs a destination directory")
        for p in corpus.export(args.dest):
            print(p)
    return EXIT_OK


def cmd_selftest(args):
    diagrams = [_load(f) for f in args.files] if args.files else corpus.load_all()
    checks = selftest.run(diagrams, seed=args.seed)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        line = f"{status}  {c.name}"
        print(line + (f"  ({c.detail})" if c.detail else ""))
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if not failed else EXIT_DOMAIN


def build_parser():
    parser = argparse.ArgumentParser(prog="shd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, files=False):
        p = sub.add_parser(name, help=help)
        if files:
            p.add_argument("files", nargs="+", metavar="FILE")
        else:
            p.add_argument("file", metavar="FILE")
        p.add_argument("--json", action="store_true", help="emit the report as JSON")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the diagram's structural invariants")
    add("generators", _single(report.generators_section, "generators"),
        "enumerate generators and the permanent cross-check")
    add("lattice", _single(report.lattice_section, "lattice"), "periodic-domain lattice")
    add("admissible", _single(report.admissibility_section, "admissibility"),
        "admissibility verdict with witness")
    add("areas", cmd_areas, "positive integer area certificate")
    add("bound", cmd_bound, "admissibility, certificate, tangle, sign count, bound")
    add("sfh", cmd_sfh, "F2 Floer complex and rank of a nice diagram")
    add("classify", _single(report.classification_section, "classification"),
        "strong diagram and L-space classification")
    add("report", cmd_report, "every section in one report")
    add("trajectory", cmd_trajectory, "minimum generator count over admissible files",
        files=True)

    p = sub.add_parser("corpus", help="list or export the bundled corpus")
    p.add_argument("action", choices=["list", "export"])
    p.add_argument("dest", nargs="?")
    p.set_defaults(func=cmd_corpus, json=False)

    p = sub.add_parser("selftest", help="run every invariant suite")
    p.add_argument("files", nargs="*", metavar="FILE")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest, json=False)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotAdmissible as exc:
        print(f"error: {exc}; no bound is asserted", file=sys.stderr)
        return EXIT_DOMAIN
    except NotNice as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
