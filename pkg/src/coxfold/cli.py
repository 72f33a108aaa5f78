"""Command-line front end.

    coxfold check tD4:rot4
    coxfold fold E6:g --format json
    coxfold roots D4 --depth 99
    coxfold selftest --only affine

Exit status: 0 when the command ran (a "fails" verdict included), 1 for
usage or input errors, 2 when a budget ran out before a verdict.
"""

from __future__ import annotations

import argparse
import json
import os
import platform
import sys
from dataclasses import asdict, dataclass, field

from . import __version__, catalog
from .folding import FoldedOrderUnresolved, compute_F, enumerate_folded_roots, fold, root_orbits
from .graph import (ClosureOverflow, CoxeterGraph, GraphSpecError, SymmetryError, SymmetryGroup, parse_spec,
                    vertex_orbits)
from .roots import RootCapExceeded, enumerate_positive_roots, format_vector
from .scalar import UnsupportedLabel
from .verifier import (DEPTH, Budget, commutation_witness, decide, decide_family, describe,
                       fixed_point_free_witness, witness_search)

COMMANDS = ("roots", "fold", "orbits", "check", "classify", "witness", "selftest")

EXIT_OK, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    depth: int = 12
    orbit_depth: int = 16
    format: str = "text"
    cap_closure: int = 10**6
    cap_order: int = 1000
    cap_roots: int = 200_000
    only: str | None = None
    seeds: list = field(default_factory=list)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.depth < 0 or self.orbit_depth < 0:
            raise UsageError("depths must be >= 0")
        if min(self.cap_closure, self.cap_order, self.cap_roots) <= 0:
            raise UsageError("caps must be positive")
        if self.format not in ("text", "json"):
            raise UsageError("format must be text or json")
        if self.command != "selftest" and not self.input:
            raise UsageError(f"{self.command} needs an input (catalog token or graph-spec file)")

    def budget(self) -> Budget:
        return Budget(root_depth=self.depth, orbit_depth=self.orbit_depth, max_roots=self.cap_roots,
                      cap_order=self.cap_order)


@dataclass
class Loaded:
    graph: CoxeterGraph
    group: SymmetryGroup
    entry: catalog.CatalogEntry | None


def load_input(cfg: RunConfig) -> Loaded:
    text = cfg.input
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            spec = parse_spec(fh.read())
        return Loaded(spec.graph, spec.closure(cfg.cap_closure), None)
    try:
        e = catalog.catalog_graph(text)
    except catalog.CatalogError as exc:
        raise UsageError(f"{text!r} is neither a file nor a catalog token: {exc}") from None
    return Loaded(e.graph, e.group(cfg.cap_closure), e)


def parse_seed(text: str) -> dict[int, object]:
    """'0:1, 2:1, 3:1' -> {0: 1, 2: 1, 3: 1}"""
    from .scalar import parse_scalar
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        v, _, c = part.partition(":")
        try:
            out[int(v)] = parse_scalar(c) if c.strip() else 1
        except ValueError:
            raise UsageError(f"bad seed term {part!r}") from None
    return out


# -- commands --------------------------------------------------------------


def cmd_roots(cfg, ld):
    rs = enumerate_positive_roots(ld.graph, cfg.depth, cfg.cap_roots)
    report = {"graph": ld.graph.display_name(), "count": len(rs), "complete": rs.complete,
              "depth_reached": rs.depth_reached,
              "roots": [{"root": format_vector(r.coords, ld.graph), "depth": r.depth}
                        for r in sorted(rs.roots, key=lambda r: r.depth)]}
    text = [f"{len(rs)} positive roots, complete={str(rs.complete).lower()}, depth reached {rs.depth_reached}"]
    text += [f"  [{r['depth']}] {r['root']}" for r in report["roots"]]
    return report, text, EXIT_OK


def cmd_fold(cfg, ld):
    f = fold(ld.graph, ld.group, cfg.cap_order)
    report = f.to_dict()
    text = [f"folded graph: {f.folded_name}", "generators: " + " ".join(f.generator_names())]
    text.append("folded Coxeter matrix:")
    for row in report["folded_matrix"]:
        text.append("  " + " ".join(f"{x:>3}" for x in row))
    if f.nonspherical_orbits:
        text.append("orbits without a longest element: "
                    + ", ".join(str(sorted(o)) for o in f.nonspherical_orbits))
    return report, text, EXIT_OK


def cmd_orbits(cfg, ld):
    part = vertex_orbits(ld.group)
    report = {"vertex_orbits": [{"orbit": sorted(o), "finite": fin} for o, fin in zip(part.orbits, part.finite)]}
    text = ["vertex orbits: " + " ".join("{" + ",".join(map(str, sorted(o))) + "}" for o in part.orbits)]
    rs = enumerate_positive_roots(ld.graph, cfg.depth, cfg.cap_roots)
    orbits = root_orbits(rs, ld.group)
    report["root_orbits"] = len(orbits)
    report["roots_complete"] = rs.complete
    text.append(f"{len(orbits)} orbits of positive roots (complete={str(rs.complete).lower()})")
    try:
        f = fold(ld.graph, ld.group, cfg.cap_order)
    except ValueError as exc:
        report["F"] = None
        text.append(f"F not computed: {exc}")
        return report, text, EXIT_OK
    fr = enumerate_folded_roots(f, cfg.depth, cfg.cap_roots)
    F = compute_F(f, fr, orbits, rs)
    report["F"] = {"folded_roots": len(fr), "injective": F.injective, "surjective": F.surjective,
                   "complete": F.complete, "edge_checks": F.edge_checks}
    text.append(f"F: {len(fr)} folded roots -> {len(orbits)} orbits, injective={F.injective}, "
                f"surjective={F.surjective}")
    return report, text, EXIT_OK


def _seeds(cfg, ld):
    seeds = list(cfg.seeds)
    if ld.entry is not None:
        seeds += catalog.seeds_for(ld.entry)
    return seeds


def cmd_check(cfg, ld):
    if ld.entry is not None and ld.entry.infinite_family and ld.entry.family != "Ainf" and cfg.input.find("@") < 0:
        v = decide_family(ld.entry, cfg.budget())
    else:
        v = decide(ld.graph, ld.group, cfg.budget(), seeds=_seeds(cfg, ld))
    code = EXIT_UNDECIDED if v.status == DEPTH else EXIT_OK
    return v.to_dict(), describe(v).splitlines(), code


def cmd_classify(cfg, ld):
    c = catalog.classify_entry(ld.entry) if ld.entry is not None else catalog.classify(ld.graph, ld.group)
    text = [f"predicts property: {str(c.predicts).lower()}"]
    for comp in c.components:
        if comp.matches:
            text.append(f"  {comp.graph_type}: listed as {comp.matches}, folded graph {comp.folded_name}")
        else:
            text.append(f"  {comp.graph_type}: {comp.reason}")
    return c.to_dict(), text, EXIT_OK


def cmd_witness(cfg, ld):
    rs = enumerate_positive_roots(ld.graph, cfg.depth, cfg.cap_roots)
    w = witness_search(ld.graph, ld.group, rs, _seeds(cfg, ld))
    if w is None:
        w = commutation_witness(ld.graph, ld.group) or fixed_point_free_witness(ld.graph, ld.group)
    if w is None:
        return {"witness": None, "roots_searched": len(rs)}, [f"no witness among {len(rs)} roots"], EXIT_OK
    d = w.to_dict()
    text = [f"α = {d['root']}", f"g = {d['g']}", f"g(α) = {d['image']}", f"<α, g(α)> = {d['pairing']}"]
    return {"witness": d, "roots_searched": len(rs)}, text, EXIT_OK


def cmd_selftest(cfg, ld):
    from .selftest import run_selftest
    try:
        results = run_selftest(cfg.only)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = all(r.ok for r in results)
    report = {"passed": ok, "criteria": [r.to_dict() for r in results]}
    text = [r.line() for r in results]
    text.append(f"{sum(r.ok for r in results)}/{len(results)} criteria passed")
    return report, text, EXIT_OK


HANDLERS = {"roots": cmd_roots, "fold": cmd_fold, "orbits": cmd_orbits, "check": cmd_check,
            "classify": cmd_classify, "witness": cmd_witness, "selftest": cmd_selftest}


# -- driver ----------------------------------------------------------------


def envelope(cfg: RunConfig, report: dict) -> dict:
    conf = asdict(cfg)
    conf["seeds"] = [{str(k): str(v) for k, v in s.items()} for s in cfg.seeds]
    return {"tool": "coxfold", "version": __version__, "python": platform.python_version(),
            "config": conf, "report": report}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, rendered report)."""
    ld = None if cfg.command == "selftest" else load_input(cfg)
    try:
        report, text, code = HANDLERS[cfg.command](cfg, ld)
    except (RootCapExceeded, ClosureOverflow, FoldedOrderUnresolved) as exc:
        report = {"status": "budget-exhausted", "reason": str(exc)}
        text = [f"budget exhausted: {exc}"]
        code = EXIT_UNDECIDED
    if cfg.format == "json":
        out = json.dumps(envelope(cfg, report), indent=2, sort_keys=True, ensure_ascii=False)
    else:
        out = "\n".join(text)
    return code, out + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxfold", description="Orbit-basis property of Coxeter graphs "
                                "with symmetry groups.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", help="catalog token (e.g. tD4:rot4) or graph-spec file")
    p.add_argument("--depth", type=int, default=12, help="root enumeration depth (default 12)")
    p.add_argument("--orbit-depth", type=int, default=16, help="W^G-orbit search depth (default 16)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cap-closure", type=int, default=10**6, help="max symmetry group order")
    p.add_argument("--cap-order", type=int, default=1000, help="max power when computing folded labels")
    p.add_argument("--cap-roots", type=int, default=200_000, help="max number of enumerated roots")
    p.add_argument("--out", help="write the report to this path instead of stdout")
    p.add_argument("--only", help="selftest: comma-separated criterion name fragments")
    p.add_argument("--seed", action="append", default=[], help="extra root to try first, e.g. '0:1,2:1'")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig(args.command, args.input, args.depth, args.orbit_depth, args.format,
                        args.cap_closure, args.cap_order, args.cap_roots, args.only,
                        [parse_seed(s) for s in args.seed])
        code, out = run(cfg)
    except (UsageError, GraphSpecError, SymmetryError, UnsupportedLabel, OSError) as exc:
        print(f"coxfold: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
