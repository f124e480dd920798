"""``perfcolor`` command line.

Exit codes: 0 perfectly colorable / check passed, 10 not perfectly
colorable (certificate printed), 11 verification failed, 2 input error,
3 oracle scale exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from pathlib import Path

from . import oracle
from .bench import CSV_HEADER, DEFAULT_SIZES, DEFAULT_TEMPLATE, fit_slope, run_benchmark
from .coloring import ColoringError, format_coloring, parse_coloring, perfect_coloring, verify_proper
from .generators import SpecError, default_seed, generate, parse_spec
from .graph import Graph, GraphError, format_edgelist, parse_graph
from .recognition import CompleteMultipartite, InducedPaw, Neither, recognize

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SCALE = 3
EXIT_NOT_COLORABLE = 10
EXIT_VERIFY_FAILED = 11


class InputError(Exception):
    pass


def _detect_format(path: str, fmt: str) -> str:
    if fmt != "auto":
        return fmt
    return "dimacs" if Path(path).suffix.lower() in (".col", ".dimacs") else "edgelist"


def load_graph(path: str, fmt: str = "auto") -> Graph:
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            g = parse_graph(data, _detect_format(path, fmt))
        for w in caught:
            print(f"warning: {path}: {w.message}", file=sys.stderr)
        return g
    except (GraphError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def certificate_json(cert) -> dict:
    if isinstance(cert, InducedPaw):
        return {"kind": "induced-paw", "vertices": list(cert.vertices)}
    return {"kind": "odd-hole", "vertices": list(cert.cycle)}


def build_report(g: Graph, parse_ns: int):
    """Recognize (and color, when positive); returns (report dict, recognition, coloring)."""
    t0 = time.perf_counter_ns()
    rec = recognize(g)
    t1 = time.perf_counter_ns()
    coloring = None
    if rec.perfectly_colorable:
        coloring = perfect_coloring(g, rec)
    t2 = time.perf_counter_ns()
    components = []
    for cid, (members, cls) in enumerate(zip(rec.labeling.members(), rec.classes)):
        entry = {"id": cid, "class": cls.name, "size": len(members)}
        if isinstance(cls, CompleteMultipartite):
            entry["parts"] = len(cls.parts)
        elif isinstance(cls, Neither):
            entry["certificate"] = certificate_json(cls.certificate)
        components.append(entry)
    report = {
        "verdict": rec.perfectly_colorable,
        "n": g.n,
        "m": g.m,
        "components": components,
        "timing_ns": {"parse": parse_ns, "recognize": t1 - t0, "color": t2 - t1},
    }
    if rec.perfectly_colorable:
        report["palette_size"] = coloring.palette_size
    else:
        report["certificate"] = certificate_json(rec.certificates[0])
    return report, rec, coloring


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _describe_certificate(c: dict) -> str:
    return c["kind"] + " " + " ".join(map(str, c["vertices"]))


def _human(report: dict) -> str:
    lines = [
        "verdict: " + ("perfectly colorable" if report["verdict"] else "not perfectly colorable"),
        f"vertices: {report['n']}  edges: {report['m']}  components: {len(report['components'])}",
    ]
    for comp in report["components"]:
        extra = f", {comp['parts']} parts" if "parts" in comp else ""
        lines.append(f"  component {comp['id']}: {comp['class']} ({comp['size']} vertices{extra})")
        if "certificate" in comp:
            lines.append(f"    certificate: {_describe_certificate(comp['certificate'])}")
    if report["verdict"]:
        lines.append(f"palette size: {report['palette_size']}")
    else:
        lines.append(f"certificate: {_describe_certificate(report['certificate'])}")
    t = report["timing_ns"]
    lines.append(f"time: parse {t['parse']} ns, recognize {t['recognize']} ns, color {t['color']} ns")
    return "\n".join(lines) + "\n"


def _timed_load(path: str, fmt: str) -> tuple[Graph, int]:
    t0 = time.perf_counter_ns()
    g = load_graph(path, fmt)
    return g, time.perf_counter_ns() - t0


# --- subcommands -----------------------------------------------------------


def cmd_recognize(args) -> int:
    g, parse_ns = _timed_load(args.input, args.format)
    report, _, _ = build_report(g, parse_ns)
    sys.stdout.write(dump_report(report) if args.json else _human(report))
    return EXIT_OK if report["verdict"] else EXIT_NOT_COLORABLE


def cmd_color(args) -> int:
    g, parse_ns = _timed_load(args.input, args.format)
    report, _, coloring = build_report(g, parse_ns)
    if coloring is None:
        print(f"not perfectly colorable; certificate: {_describe_certificate(report['certificate'])}", file=sys.stderr)
        if args.json:
            sys.stdout.write(dump_report(report))
        return EXIT_NOT_COLORABLE
    text = format_coloring(coloring)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        print(f"palette size: {coloring.palette_size}", file=sys.stderr)
    else:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
        sys.stdout.write(dump_report(report) if args.json else f"palette size: {coloring.palette_size}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph, args.format)
    try:
        data = Path(args.coloring).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {args.coloring}: {exc.strerror}") from None
    try:
        coloring = parse_coloring(data, g.n)
    except ColoringError as exc:
        raise InputError(f"{args.coloring}: {exc}") from None
    if args.mode == "perfect" and g.n > oracle.ENUMERATE_N:
        print(f"oracle scale exceeded: perfect mode handles at most {oracle.ENUMERATE_N} vertices, got {g.n}", file=sys.stderr)
        return EXIT_SCALE
    ok, edge = verify_proper(g, coloring)
    if not ok:
        u, v = edge
        print(f"improper: edge ({u},{v}) has both endpoints color {coloring.color[u]}")
        return EXIT_VERIFY_FAILED
    if args.mode == "perfect":
        ok, bad = oracle.is_perfect_coloring(g, coloring)
        if not ok:
            colors, omega = oracle.violation_details(g, coloring, bad)
            print("{" + ",".join(map(str, bad)) + f"}}: {colors} colors, clique number {omega}")
            return EXIT_VERIFY_FAILED
    print(f"ok: coloring is {args.mode}")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        spec, seed = parse_spec(args.spec)
        if seed is None:
            seed = args.seed if args.seed is not None else default_seed()
    except SpecError as exc:
        raise InputError(f"bad generator spec: {exc}") from None
    text = format_edgelist(generate(spec, seed))
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        rows = run_benchmark(args.sizes, args.spec_template, args.trials, default_seed())
    except (SpecError, KeyError, IndexError, ValueError) as exc:
        raise InputError(f"benchmark failed: {exc}") from None
    text = CSV_HEADER + "\n" + "".join(r.csv() + "\n" for r in rows)
    slope = fit_slope(rows)
    summary = f"log-log slope of median (recognize + color) time vs n+m: {slope:.3f}"
    if args.csv in (None, "-"):
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    else:
        try:
            Path(args.csv).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.csv}: {exc.strerror}") from None
        print(summary)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = load_graph(args.input, args.format)
    funcs = {
        "clique": oracle.max_clique,
        "chromatic": oracle.chromatic_number,
        "perfect": oracle.is_perfect_bruteforce,
        "colorable": oracle.is_perfectly_colorable_bruteforce,
        "paw": oracle.find_paw_bruteforce,
    }
    try:
        result = funcs[args.query](g)
    except oracle.OracleScaleError as exc:
        print(f"oracle scale exceeded: {exc}", file=sys.stderr)
        return EXIT_SCALE
    if isinstance(result, InducedPaw):
        result = result.describe()
    elif result is None:
        result = "none"
    elif isinstance(result, bool):
        result = str(result).lower()
    print(f"{args.query}: {result}")
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    try:
        return [int(float(x)) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="perfcolor", description="Recognize and color perfectly colorable graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp, name="input"):
        sp.add_argument(name, help="graph file ('-' for stdin)")
        sp.add_argument("--format", choices=("auto", "dimacs", "edgelist"), default="auto",
                        help="input format; auto picks dimacs for .col files")

    sp = sub.add_parser("recognize", help="decide perfect colorability")
    graph_input(sp)
    sp.add_argument("--json", action="store_true", help="emit a JSON report")
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("color", help="write a perfect coloring")
    graph_input(sp)
    sp.add_argument("--out", help="coloring output path (default stdout)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("verify", help="check a coloring file")
    graph_input(sp, "graph")
    sp.add_argument("coloring")
    sp.add_argument("--mode", choices=("proper", "perfect"), default="proper")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="generate a graph in edge-list format")
    sp.add_argument("spec", help="e.g. 'cmp:2,2,2', 'bip:3x3:p=0.5:seed=1'")
    sp.add_argument("--out")
    sp.add_argument("--seed", type=int, help="seed when the spec has none (default $PERFCOLOR_SEED or 0)")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="scaling benchmark for recognize + color")
    sp.add_argument("--sizes", type=_sizes, default=list(DEFAULT_SIZES), help="comma-separated values for {n}")
    sp.add_argument("--spec-template", default=DEFAULT_TEMPLATE)
    sp.add_argument("--trials", type=int, default=3)
    sp.add_argument("--csv", help="CSV output path (default stdout)")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("oracle", help="brute-force reference queries on small graphs")
    sp.add_argument("query", choices=("clique", "chromatic", "perfect", "colorable", "paw"))
    graph_input(sp)
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
