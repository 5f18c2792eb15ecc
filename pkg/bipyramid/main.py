"""
コマンドラインインターフェース

    bipyr analyze <file> [--json]
    bipyr realize 4,8,8,4 [--json]
    bipyr enumerate <n> [--fold-reflections] [--verify] [--json | --csv]
    bipyr table [--n 3,4,5,10,100] [--json]
    bipyr lob <theta> | --argmax
    bipyr maxvol <m>
    bipyr examples [--write-dir DIR]

終了コード: 0 = 成功, 1 = 内部不変条件違反, 2 = 入力エラー
"""
import argparse
import csv
import json
import logging
import math
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from bipyramid.config import get_settings
from bipyramid.errors import InvariantViolation
from bipyramid.schemas.report import AnalyzeOutput, Census
from bipyramid.services.analysis import AnalysisService
from bipyramid.services.diagram import dump_diagram, load_diagram
from bipyramid.services.enumeration import (
    census_rows,
    enumerate_crossings,
    extremal_stats,
    verify_classification,
)
from bipyramid.services.examples import builtin_examples, get_example
from bipyramid.services.realization import realize_output
from bipyramid.services.volume import (
    bipyramid_volumes,
    bound_table,
    lobachevsky,
    lobachevsky_argmax,
    maxvol,
)

logger = logging.getLogger(__name__)

DEFAULT_TABLE_NS = (3, 4, 5, 10, 100)


# ==================== 引数の解釈 ====================

def parse_int_list(text: str) -> Tuple[int, ...]:
    """"4,8,4" -> (4, 8, 4)"""
    parts = [p.strip() for p in text.split(",")]
    try:
        return tuple(int(p) for p in parts if p)
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _join(values: Sequence[int]) -> str:
    return " ".join(str(v) for v in values)


# ==================== 出力 ====================

def render_analysis(output: AnalyzeOutput) -> str:
    lines = [
        f"diagram: {output.name}",
        f"surface: {output.surface} (genus {output.genus}, components {output.component_genera})",
        f"link components: {output.link_components}",
        "",
        "crossings:",
    ]
    for cv in output.volume.per_crossing:
        lines.append(
            f"  {cv.crossing}: levels {_join(cv.levels)}  signature ({_join(cv.sizes)})  "
            f"tetrahedra {sum(cv.sizes)}  bound {_fmt(cv.total)}"
        )
    lines.append("faces:")
    for fv in output.volume.per_face:
        lines.append(f"  {fv.face}: size {fv.size}  bound {_fmt(fv.volume)}")
    lines += [
        "",
        f"tetrahedra: faces {output.face_total}, crossings {output.crossing_total}",
        f"mccb: {_fmt(output.mccb)}",
        f"mfcb: {_fmt(output.mfcb)}",
        f"octahedral: {_fmt(output.octahedral)}",
    ]
    density = output.density
    if density.mccb_per_crossing is not None:
        lines.append(f"mccb per crossing: {_fmt(density.mccb_per_crossing)}")
    if density.triple_density_bound is not None:
        lines.append(
            f"triple density bound: {_fmt(density.triple_density_bound)} "
            f"(reference {_fmt(density.triple_reference)})"
        )
    for warning in output.warnings:
        lines.append(f"warning: {warning}")
    return "\n".join(lines)


def render_census(census: Census) -> str:
    lines = [
        f"n = {census.n}: {census.total} configurations, "
        f"{census.reflection_classes} up to reflection, {len(census.entries)} signatures",
    ]
    for entry in census.entries:
        levels = ", ".join("".join(str(level) for level in ls) if census.n < 10 else _join(ls) for ls in entry.levels)
        lines.append(f"  ({_join(entry.signature)}): {entry.count}  [{levels}]")
    return "\n".join(lines)


def write_census_csv(census: Census, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["levels", "signature", "tetrahedra", "mccb_contribution"])
    for levels, signature in census_rows(census):
        writer.writerow([_join(levels), _join(signature), sum(signature), _fmt(math.fsum(bipyramid_volumes(signature)))])


# ==================== サブコマンド ====================

def cmd_analyze(args: argparse.Namespace) -> int:
    if args.example:
        try:
            diagram = get_example(args.example)
        except KeyError as e:
            raise ValueError(e.args[0]) from None
    elif args.path:
        diagram = load_diagram(args.path)
    else:
        raise ValueError("analyze needs a diagram file or --example NAME")

    output = AnalysisService.analyze(diagram)
    if args.json:
        print(output.model_dump_json(indent=2))
    else:
        print(render_analysis(output))
    return 0


def cmd_realize(args: argparse.Namespace) -> int:
    output = realize_output(parse_int_list(args.sequence))
    if args.json:
        print(output.model_dump_json(indent=2))
    else:
        print(f"levels: {_join(output.levels)}")
        print(f"signature: {_join(output.signature)}")
        print(f"tetrahedra: {output.tetrahedra}")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    census = enumerate_crossings(args.n, fold_reflections=args.fold_reflections)

    extremal = None
    if args.verify:
        report = verify_classification(args.n, None if args.fold_reflections else census)
        if not report.ok:
            raise InvariantViolation(
                f"signatures at n={args.n} differ from admissible sequences: "
                f"missing {report.missing}, unexpected {report.unexpected}"
            )
        extremal = extremal_stats(args.n, census)

    if args.csv:
        write_census_csv(census, sys.stdout)
    elif args.json:
        print(census.model_dump_json(indent=2))
    else:
        print(render_census(census))
        if extremal is not None:
            print(f"classification: ok ({len(census.entries)} admissible sequences)")
            print(f"min mccb: {_fmt(extremal.min_mccb)} ({len(extremal.min_levels)} configurations)")
            print(f"max mccb: {_fmt(extremal.max_mccb)} ({len(extremal.max_levels)} configurations)")
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    ns = parse_int_list(args.n) if args.n else DEFAULT_TABLE_NS
    rows = bound_table(ns)
    if args.json:
        print(json.dumps([row.model_dump() for row in rows], indent=2))
        return 0

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "best_mccb", "worst_mccb", "octahedral"])
    for row in rows:
        writer.writerow([row.n, _fmt(row.best_mccb), _fmt(row.worst_mccb), _fmt(row.octahedral)])
    return 0


def cmd_lob(args: argparse.Namespace) -> int:
    if args.argmax:
        theta = lobachevsky_argmax()
        print(f"{theta!r} {lobachevsky(theta)!r}")
        return 0
    if args.theta is None:
        raise ValueError("theta is required unless --argmax is given")
    print(repr(lobachevsky(args.theta)))
    return 0


def cmd_maxvol(args: argparse.Namespace) -> int:
    print(repr(maxvol(args.m)))
    return 0


def cmd_examples(args: argparse.Namespace) -> int:
    examples = builtin_examples()
    if args.write_dir:
        out = Path(args.write_dir)
        out.mkdir(parents=True, exist_ok=True)
        for name, diagram in examples.items():
            path = out / f"{name}.json"
            path.write_text(dump_diagram(diagram), encoding="utf-8")
            print(path)
        return 0

    for name, diagram in examples.items():
        sizes = ",".join(str(c.size) for c in diagram.crossings)
        print(f"{name}\t{diagram.declared_surface.value}\tcrossings [{sizes}]")
    return 0


# ==================== エントリポイント ====================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bipyr",
        description="Bipyramid decompositions and volume bounds for multicrossing link diagrams",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress at INFO level")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="decompose a diagram and report its volume bounds")
    p.add_argument("path", nargs="?", help="diagram JSON file")
    p.add_argument("--example", help="analyze a built-in example instead of a file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("realize", help="build a crossing with the given signature")
    p.add_argument("sequence", help="comma-separated bipyramid sizes, e.g. 4,8,8,4")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_realize)

    p = sub.add_parser("enumerate", help="census of all n-crossings by signature")
    p.add_argument("n", type=int)
    p.add_argument("--fold-reflections", action="store_true", help="identify crossings up to reflection")
    p.add_argument("--verify", action="store_true", help="check the census against admissible sequences")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("table", help="best, worst and octahedral bounds per n-crossing")
    p.add_argument("--n", help="comma-separated crossing sizes (default 3,4,5,10,100)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("lob", help="Lobachevsky function")
    p.add_argument("theta", type=float, nargs="?")
    p.add_argument("--argmax", action="store_true", help="print the maximiser on (0, π) and the maximum")
    p.set_defaults(handler=cmd_lob)

    p = sub.add_parser("maxvol", help="volume of the regular ideal m-bipyramid")
    p.add_argument("m", type=int)
    p.set_defaults(handler=cmd_maxvol)

    p = sub.add_parser("examples", help="list or export the built-in diagrams")
    p.add_argument("--write-dir", help="write <name>.json files into this directory")
    p.set_defaults(handler=cmd_examples)

    return parser


def configure_logging(verbose: bool) -> None:
    level = logging.INFO if verbose else getattr(logging, get_settings().log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        return args.handler(args)
    except InvariantViolation as e:
        logger.error(f"Internal invariant violated: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
