"""Command-line front end.

Exit codes: 0 success / verified, 1 verification failure, 2 usage or parse
error.  Output for fixed inputs and seeds is byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import analysis, constructions, enumeration, files, p3o, svg
from .enumeration import Group
from .orient import OrientationError, family_profile


def _group(text: str) -> Group:
    return Group.RELABEL if text == "relabel" else Group.RELABEL_MIRROR


def _cmd_enumerate(args) -> int:
    workers = int(os.environ.get("THREADS", "1"))
    if args.kind == "t3o":
        report = enumeration.enumerate_t3o(args.n, _group(args.group), workers=workers)
    else:
        report = enumeration.enumerate_p3o(args.n, _group(args.group), workers=workers)
    print(report.class_count)
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, rep in enumerate(report.representatives):
            files.save_system(rep, outdir / f"{args.kind}-n{args.n}-{i:04d}.json")
        (outdir / "summary.txt").write_text(report.summary() + "\n", encoding="utf-8")
    return 0


def _cmd_points(args) -> int:
    report = enumeration.enumerate_point_order_types(
        args.n, samples=args.samples, seed=args.seed, group=_group(args.group)
    )
    print(report.class_count)
    return 0


def _cmd_profile(args) -> int:
    family = files.load_family(args.family)
    system = family_profile(family)
    print(json.dumps(files.system_to_document(system), indent=1))
    return 0


_LAW_RUNNERS = {
    "interiority": p3o.check_interiority,
    "zero-prop": p3o.check_zero_propagation,
    "zero-prop-general": p3o.check_zero_propagation_general,
    "43": p3o.check_43,
    "premise": p3o.check_premise_free,
    "transitivity": p3o.check_interior_transitivity,
}


def _cmd_check(args) -> int:
    system = files.load_system(args.system)
    laws = list(_LAW_RUNNERS) if args.laws == "all" else [args.laws]
    bad = 0
    for law in laws:
        violations = _LAW_RUNNERS[law](system)
        for v in violations:
            print(f"{law} violation: {' '.join(v.witness)}")
        if violations:
            bad += 1
        else:
            print(f"{law}: ok")
    return 1 if bad else 0


def _cmd_gallery(args) -> int:
    entries = constructions.gallery()
    if args.action == "list":
        for e in entries:
            kind = "family+system" if e.family is not None else "system only"
            print(f"{e.id}\t{kind}\t{','.join(e.tags)}\t{e.source}")
        return 0
    if args.action == "verify":
        failed = 0
        for e in entries:
            if e.family is None:
                print(f"{e.id}: SKIP (no family)")
                continue
            report = analysis.verify_realization(e.family, e.system)
            if report.match:
                print(f"{e.id}: PASS")
            else:
                failed += 1
                print(f"{e.id}: FAIL ({len(report.mismatches)} mismatching triples)")
        return 1 if failed else 0
    # export
    if not args.dir:
        print("error: gallery export needs an output directory", file=sys.stderr)
        return 2
    outdir = Path(args.dir)
    outdir.mkdir(parents=True, exist_ok=True)
    index = []
    for e in entries:
        rec = {"id": e.id, "tags": list(e.tags), "source": e.source}
        files.save_system(e.system, outdir / f"{e.id}.system.json")
        rec["system_file"] = f"{e.id}.system.json"
        if e.family is not None:
            files.save_family(e.family, outdir / f"{e.id}.family.json")
            rec["family_file"] = f"{e.id}.family.json"
        index.append(rec)
    with open(outdir / "index.json", "w", encoding="utf-8") as fh:
        json.dump({"entries": index}, fh, indent=1)
        fh.write("\n")
    print(f"exported {len(entries)} entries to {outdir}")
    return 0


def _cmd_gd(args) -> int:
    system = files.load_system(args.system)
    g = analysis.build_gd(system, args.apex)
    for a, b in sorted(g.arcs):
        print(f"{a} -> {b}")
    cycle = analysis.shortest_directed_cycle(g)
    print(f"shortest directed cycle: {cycle if cycle is not None else 'none'}")
    return 0


def _cmd_clique(args) -> int:
    system = files.load_system(args.system)
    size, witness = analysis.max_zero_clique(system)
    print(f"{size}: {' '.join(witness)}")
    return 0


def _cmd_grid(args) -> int:
    system = constructions.grid_hypergraph(args.k)
    print(json.dumps(files.system_to_document(system), indent=1))
    return 0


def _cmd_pentagon(args) -> int:
    family = constructions.pentagon_family(args.sides)
    print(json.dumps(files.family_to_document(family), indent=1))
    return 0


def _cmd_render(args) -> int:
    family = files.load_family(args.family)
    doc = svg.render_svg(family)
    Path(args.out).write_text(doc, encoding="utf-8")
    return 0


def _cmd_thrackle(args) -> int:
    result = analysis.search_thrackle_counterexample(args.n, args.trials, args.seed)
    print(f"best m = {result.best_m} with n = {result.n}")
    if result.counterexample:
        print("counterexample candidate found:")
        for lab, p in result.points:
            print(f"  {lab}: ({p.x}, {p.y})")
        for sub in result.subsets:
            print(f"  subset: {' '.join(sub)}")
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triord",
        description="Orientations of convex-set triples and 3-order analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="count 3-order classes up to symmetry")
    p.add_argument("--kind", choices=("t3o", "p3o"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", choices=("relabel", "relabel-mirror"), default="relabel-mirror")
    p.add_argument("--out", help="directory for representatives and a summary")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("points", help="Monte-Carlo census of point order types")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--group", choices=("relabel", "relabel-mirror"), default="relabel-mirror")
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser("profile", help="orientation profile of a family file")
    p.add_argument("family")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("check", help="combinatorial law checks on a system file")
    p.add_argument("system")
    p.add_argument(
        "--laws",
        choices=("all",) + tuple(_LAW_RUNNERS),
        default="all",
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gallery", help="list, verify or export the gallery")
    p.add_argument("action", choices=("list", "verify", "export"))
    p.add_argument("dir", nargs="?", help="output directory for export")
    p.set_defaults(func=_cmd_gallery)

    p = sub.add_parser("gd", help="trace digraph of a system at an apex")
    p.add_argument("system")
    p.add_argument("--apex", required=True)
    p.set_defaults(func=_cmd_gd)

    p = sub.add_parser("clique", help="maximum zero-clique of a system")
    p.add_argument("system")
    p.set_defaults(func=_cmd_clique)

    p = sub.add_parser("grid", help="grid construction as a system file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_grid)

    p = sub.add_parser("pentagon", help="pentagon family as a family file")
    p.add_argument("--sides", type=int, default=48)
    p.set_defaults(func=_cmd_pentagon)

    p = sub.add_parser("render", help="render a family file to SVG")
    p.add_argument("family")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("thrackle", help="random search on the hull-triple conjecture")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_thrackle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (files.FileFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (p3o.TripleSystemError, OrientationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
