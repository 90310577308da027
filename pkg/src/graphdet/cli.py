"""Command-line front end.

Exit codes: 0 success, 1 identity failure, 2 usage or parse error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import (
    format_formal_sum,
    parse_formal_sum,
    theta,
    universal_codim1,
    universal_det,
)
from .graphs import (
    CapExceeded,
    DirectedGraph,
    GraphFormatError,
    UndirectedGraph,
    classify,
    enumerate_class,
    enumerate_graphs,
    forget,
    parse_graph,
)
from .laplace import laplace
from .poly import Q, V, WeightMatrix, pairing
from .potts import potts, tutte
from .verify import (
    CHECK_FUNCTIONS,
    SuiteConfig,
    VerificationReport,
    run_check,
    run_suite,
)


def _parse_vertex_set(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(sorted({int(tok) for tok in text.replace(",", " ").split()}))
    except ValueError:
        raise SystemExit2(f"bad vertex set {text!r}; expected e.g. '1,3'")


def _parse_minor(text: str) -> tuple[int, int]:
    try:
        i, _, j = text.partition("/")
        return int(i), int(j)
    except ValueError:
        raise SystemExit2(f"bad minor argument {text!r}; expected 'i/j'")


class SystemExit2(Exception):
    """Usage-level error, mapped to exit code 2."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _fmt_set(vs) -> str:
    return "{" + ",".join(str(v) for v in sorted(vs)) + "}"


def cmd_classify(args) -> int:
    g = parse_graph(_read_text(args.input))
    if isinstance(g, UndirectedGraph):
        raise SystemExit2("classify needs a directed graph file (header 'D n k')")
    c = classify(g)
    print(f"n = {g.n}")
    print(f"k = {g.k}")
    print(f"beta0 = {c.beta0}")
    print(f"beta1 = {c.beta1}")
    print(f"strongly_connected = {'yes' if c.strongly_connected else 'no'}")
    print(f"strongly_semiconnected = {'yes' if c.strongly_semiconnected else 'no'}")
    print(f"acyclic = {'yes' if c.acyclic else 'no'}")
    print(f"sinks = {_fmt_set(c.sinks)}")
    print(f"isolated = {_fmt_set(c.isolated)}")
    print(f"loops = {c.loop_count}")
    return 0


def cmd_enumerate(args) -> int:
    if args.cls:
        I = None
        if args.cls.upper() == "SSC" and args.isolated is not None:
            I = _parse_vertex_set(args.isolated)
        if args.cls.upper() == "AC" and args.sinks is not None:
            I = _parse_vertex_set(args.sinks)
        stream = enumerate_class(args.n, args.k, args.cls, I, cap=args.cap)
    else:
        stream = enumerate_graphs(args.n, args.k, cap=args.cap)
    count = 0
    for g in stream:
        count += 1
        if not args.count:
            print(" ; ".join(f"{a} {b}" for a, b in g.edges))
    if args.count:
        print(count)
    return 0


def cmd_det(args) -> int:
    if args.minor:
        i, j = _parse_minor(args.minor)
        s = universal_codim1(args.n, args.k, i, j, cap=args.cap)
    else:
        I = _parse_vertex_set(args.sinks or args.isolated)
        s = universal_det(args.n, args.k, I, cap=args.cap)
    _write_text(args.output, format_formal_sum(s))
    return 0


def cmd_laplace(args) -> int:
    s = parse_formal_sum(_read_text(args.input))
    _write_text(args.output, format_formal_sum(laplace(s)))
    return 0


def cmd_pair(args) -> int:
    s = parse_formal_sum(_read_text(args.input))
    if any(isinstance(g, UndirectedGraph) for g in s.support()):
        raise SystemExit2("pairing is defined for directed sums (header 'FS')")
    W = WeightMatrix.symbolic(s.n)
    print(pairing(W, s))
    return 0


def cmd_potts(args) -> int:
    u = parse_graph(_read_text(args.input))
    if isinstance(u, DirectedGraph):
        u = forget(u)
    z = potts(u, cap=args.cap)
    if args.q is not None or args.v is not None:
        subs = {}
        if args.q is not None:
            subs[Q] = Fraction(args.q)
        if args.v is not None:
            subs[V] = Fraction(args.v)
        print(z.evaluate(subs))
    else:
        print(z)
    return 0


def cmd_tutte(args) -> int:
    u = parse_graph(_read_text(args.input))
    if isinstance(u, DirectedGraph):
        u = forget(u)
    print(tutte(u, cap=args.cap))
    return 0


def cmd_theta(args) -> int:
    th = theta(args.n, cap=args.cap)
    blocks = [format_formal_sum(th.part(k)) for k in th.degrees()]
    _write_text(args.output, "\n".join(blocks))
    return 0


def _report_out(reports: list[VerificationReport], args) -> None:
    payload = [r.to_json_dict() for r in reports]
    if args.json:
        _write_text(args.json, json.dumps(payload, indent=2) + "\n")
    else:
        for r in reports:
            print(r.human())


def cmd_verify(args) -> int:
    name = args.check.replace("-", "_")
    if name not in CHECK_FUNCTIONS:
        raise SystemExit2(
            f"unknown check {args.check!r}; known: {', '.join(sorted(CHECK_FUNCTIONS))}"
        )
    params: dict = {}
    if name in ("direct", "direct_prime", "mobius", "diag", "codim1", "expansion",
                "derivative", "specval", "lapl_tutte", "operator_laws"):
        if args.n is None or args.k is None:
            raise SystemExit2(f"check {args.check!r} needs --n and --k")
        params["n"], params["k"] = args.n, args.k
    if name in ("minor_pairing", "kirchhoff_diag", "theta"):
        if args.n is None:
            raise SystemExit2(f"check {args.check!r} needs --n")
        params["n"] = args.n
    if name == "kirchhoff_codim1":
        if args.n is None or not args.minor:
            raise SystemExit2("kirchhoff_codim1 needs --n and --minor i/j")
        params["n"] = args.n
        params["i"], params["j"] = _parse_minor(args.minor)
    if name == "diag":
        params["I"] = _parse_vertex_set(args.sinks or args.isolated)
    if name == "kirchhoff_diag":
        params["I"] = _parse_vertex_set(args.sinks or args.isolated)
        if not params["I"]:
            raise SystemExit2("kirchhoff_diag needs a nonempty --sinks set")
    if name == "codim1":
        if not args.minor:
            raise SystemExit2("codim1 needs --minor i/j")
        params["i"], params["j"] = _parse_minor(args.minor)
    if name == "derivative":
        if not args.minor and args.m is None:
            raise SystemExit2("derivative needs --minor i/i and --m")
        i, j = _parse_minor(args.minor) if args.minor else (1, 1)
        if i != j:
            raise SystemExit2("derivative differentiates a diagonal entry; use --minor i/i")
        params["i"] = i
        params["m"] = args.m if args.m is not None else 1
    try:
        report = run_check(name, params, cap=args.cap, jobs=args.jobs)
    except (ValueError, KeyError) as exc:
        raise SystemExit2(str(exc))
    _report_out([report], args)
    return 0 if report.ok else 1


def cmd_suite(args) -> int:
    config = SuiteConfig(
        max_n=args.n if args.n is not None else 3,
        max_k=args.k if args.k is not None else 4,
        jobs=args.jobs,
        cap=args.cap,
    )
    reports = run_suite(config)
    _report_out(reports, args)
    bad = [r for r in reports if r.status != "skipped" and not r.ok]
    npass = sum(1 for r in reports if r.status != "skipped" and r.ok)
    nskip = sum(1 for r in reports if r.status == "skipped")
    if not args.json:
        print(f"suite: {npass} ok, {len(bad)} failed, {nskip} skipped")
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="graphdet",
        description="Exact graph-algebra determinants and identity verification.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, needs_nk=False):
        p.add_argument("--cap", type=int, default=None, help="enumeration case cap")

    p = sub.add_parser("classify", help="classify a directed graph file")
    p.add_argument("input", help="graph file path, or - for stdin")
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("enumerate", help="enumerate graphs or a graph class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=["ssc", "ac", "SSC", "AC"])
    p.add_argument("--isolated", help="exact isolated-vertex set for SSC, e.g. '1,3'")
    p.add_argument("--sinks", help="exact sink set for AC")
    p.add_argument("--count", action="store_true", help="print only the count")
    common(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("det", help="write a universal determinant/minor element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sinks", help="vertex set I of the diagonal minor")
    p.add_argument("--isolated", help="synonym for --sinks")
    p.add_argument("--minor", help="i/j for the codimension-1 minor element")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    common(p)
    p.set_defaults(fn=cmd_det)

    p = sub.add_parser("laplace", help="apply the Laplace operator to a formal-sum file")
    p.add_argument("input", help="formal-sum file path, or - for stdin")
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(fn=cmd_laplace)

    p = sub.add_parser("pair", help="pair a formal-sum file with the symbolic matrix")
    p.add_argument("input")
    common(p)
    p.set_defaults(fn=cmd_pair)

    p = sub.add_parser("potts", help="partition function of an undirected graph file")
    p.add_argument("input")
    p.add_argument("--q", help="evaluate at q (exact rational, e.g. -1)")
    p.add_argument("--v", help="evaluate at v")
    common(p)
    p.set_defaults(fn=cmd_potts)

    p = sub.add_parser("tutte", help="Tutte polynomial of an undirected graph file")
    p.add_argument("input")
    common(p)
    p.set_defaults(fn=cmd_tutte)

    p = sub.add_parser("theta", help="write the mixed-degree element for n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(fn=cmd_theta)

    p = sub.add_parser("verify", help="run a single identity check")
    p.add_argument("check", help="check name, e.g. diag, expansion, theta")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--sinks", help="vertex set I where applicable")
    p.add_argument("--isolated", help="synonym for --sinks")
    p.add_argument("--minor", help="i/j where applicable")
    p.add_argument("--m", type=int, help="derivative order")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="write the JSON report to this path")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("suite", help="run the whole desk-scale check grid")
    p.add_argument("--n", type=int, help="maximum vertex count (default 3)")
    p.add_argument("--k", type=int, help="maximum edge count (default 4)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="write the JSON report array to this path")
    common(p)
    p.set_defaults(fn=cmd_suite)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
