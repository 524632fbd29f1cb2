"""Command-line front end.

Exit codes: 0 success / YES / pattern found, 1 NO / absence, 2 usage,
3 parse or I/O error, 4 capacity exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import generators, homogeneous, kernel, patterns, reduction
from .errors import CapacityError, ParseError, UsageError
from .trigraph import format_trigraph, parse_trigraph

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_PARSE, EXIT_CAPACITY = 0, 1, 2, 3, 4


class RunReport:
    def __init__(self, command: str, seed=None):
        self.command = command
        self.seed = seed
        self.inputs: dict[str, str] = {}
        self.outcome: dict = {}
        self.elapsed: float | None = None

    def read_input(self, path) -> str:
        data = Path(path).read_bytes()
        self.inputs[str(path)] = hashlib.sha256(data).hexdigest()
        return data.decode()

    def to_dict(self, timing: bool = False) -> dict:
        d = {"command": self.command, "inputs": self.inputs, "seed": self.seed, "outcome": self.outcome}
        if timing and self.elapsed is not None:
            d["elapsedSeconds"] = round(self.elapsed, 6)
        return d


def _render_text(d, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, value in d.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_text(value, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(value)}")
    return lines


def _emit(report: RunReport, args) -> None:
    d = report.to_dict(timing=args.timing)
    if args.format == "json":
        print(json.dumps(d, indent=2, sort_keys=True))
    else:
        print("\n".join(_render_text(d)))


# -- commands ------------------------------------------------------------


def cmd_detect(args, report):
    t = parse_trigraph(report.read_input(args.path))
    want_any = args.bull or args.holes or args.triangle or args.girth
    out = report.outcome
    found = False
    if args.bull or not want_any:
        w = patterns.find_bull(t)
        out["bull"] = None if w is None else w.to_dict()
        found |= w is not None
    if args.holes:
        holes = {}
        for ell in range(4, args.holes + 1):
            w = patterns.find_hole(t, ell)
            holes[str(ell)] = None if w is None else w.to_dict()
            found |= w is not None
        out["holes"] = holes
    if args.triangle:
        w = patterns.find_triangle(t)
        out["triangle"] = None if w is None else w.to_dict()
        found |= w is not None
    if args.girth:
        g = patterns.girth(t)
        out["girth"] = None if g == float("inf") else int(g)
        found |= g != float("inf")
    return EXIT_OK if found else EXIT_NO


def cmd_decompose(args, report):
    t = parse_trigraph(report.read_input(args.path))
    outcome = homogeneous.find_decomposition(t)
    report.outcome.update(outcome.to_dict())
    return EXIT_NO if outcome.tag == "none" else EXIT_OK


def cmd_solve(args, report):
    t = parse_trigraph(report.read_input(args.path))
    try:
        decision = kernel.solve_wis(t, args.k)
    except kernel.NotBullFreeError as exc:
        report.outcome.update({"refused": "input is not bull-free", "bull": exc.witness.to_dict()})
        return EXIT_USAGE
    report.outcome.update(decision.to_dict())
    if args.k >= 1:
        report.outcome["kernelOutcome"] = kernel.basic_kernel_outcome(t, args.k, cap=args.cap).to_dict()
    return EXIT_OK if decision.yes else EXIT_NO


def cmd_reduce(args, report):
    phi = reduction.parse_cnf(report.read_input(args.path))
    art = reduction.reduce(phi, args.p)
    out = Path(args.output) if args.output else Path(args.path).with_suffix(".tri")
    side = Path(args.sidecar) if args.sidecar else out.with_suffix(".json")
    out.write_text(format_trigraph(art.graph, comment=f"reduction of {Path(args.path).name}, p={art.p}"))
    side.write_text(json.dumps(art.sidecar(), indent=1, sort_keys=True) + "\n")
    sc = art.sidecar()
    report.outcome.update({k: sc[k] for k in ("p", "q", "m", "edgeCountOriginal", "targetK")})
    report.outcome.update(
        {"vertices": art.graph.n, "sparsity": phi.sparsity, "graphFile": str(out), "sidecarFile": str(side)}
    )
    if not args.no_verify:
        rep = reduction.verify_instance(art)
        report.outcome["verification"] = rep.to_dict()
        if not rep.ok:
            return EXIT_NO
    return EXIT_OK


def cmd_bounds(args, report):
    report.outcome.update(kernel.kernel_bounds(args.k, args.p).to_dict())
    return EXIT_OK


def cmd_gen(args, report):
    if args.kind == "trigraph":
        t = generators.gen_random_trigraph(
            args.n, tuple(args.densities), monogamous=args.monogamous, seed=args.seed
        )
        text = format_trigraph(t)
    elif args.kind == "girth":
        t = generators.gen_high_girth(args.n, args.girth, seed=args.seed)
        text = format_trigraph(t)
    else:
        phi = generators.random_cnf(args.vars, args.clauses, seed=args.seed)
        text = phi.to_dimacs()
    if args.output:
        Path(args.output).write_text(text)
        report.outcome["written"] = args.output
    else:
        sys.stdout.write(text)
        return None
    return EXIT_OK


def cmd_verify(args, report):
    t = parse_trigraph(report.read_input(args.path))
    if args.sidecar:
        side = json.loads(report.read_input(args.sidecar))
        art = reduction.artifact_from_sidecar(t, side)
        rep = reduction.verify_instance(art)
    elif args.t1:
        spec = json.loads(report.read_input(args.t1))
        st = kernel.T1Structure.build(spec["X"], spec["cliques"], spec.get("sides"))
        rep = kernel.verify_t1(t, st)
    else:
        raise UsageError("verify needs --sidecar or --t1")
    report.outcome.update(rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_NO


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; work is single-threaded")
    common.add_argument("--timing", action="store_true", help="add wall-clock time to the report")

    ap = argparse.ArgumentParser(prog="bullfree", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", parents=[common], help="look for bulls, holes, triangles")
    p.add_argument("path")
    p.add_argument("--bull", action="store_true")
    p.add_argument("--holes", type=int, metavar="L", help="holes of every length 4..L")
    p.add_argument("--triangle", action="store_true")
    p.add_argument("--girth", action="store_true")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("decompose", parents=[common], help="small pair or minimally-sided homogeneous cut")
    p.add_argument("path")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("solve", parents=[common], help="weighted independent set >= k?")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=None, help="maximal independent set enumeration cap (default n^3)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", parents=[common], help="3-CNF to hole-free independent set instance")
    p.add_argument("path")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--sidecar")
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bounds", parents=[common], help="kernel size bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gen", parents=[common], help="random instances")
    p.add_argument("kind", choices=("trigraph", "girth", "cnf"))
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--densities", type=float, nargs=3, default=(0.4, 0.1, 0.5), metavar=("PLUS", "ZERO", "MINUS"))
    p.add_argument("--monogamous", action="store_true")
    p.add_argument("--girth", type=int, default=5)
    p.add_argument("--vars", type=int, default=5)
    p.add_argument("--clauses", type=int, default=5)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="check a reduction output or a T1 structure")
    p.add_argument("path")
    p.add_argument("--sidecar")
    p.add_argument("--t1")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    report = RunReport(args.command, seed=args.seed)
    start = time.perf_counter()
    try:
        code = args.func(args, report)
    except ParseError as exc:
        report.outcome = {"error": "parse", "message": str(exc)}
        code = EXIT_PARSE
    except OSError as exc:
        report.outcome = {"error": "io", "message": str(exc)}
        code = EXIT_PARSE
    except CapacityError as exc:
        report.outcome = {"error": "capacity", "message": str(exc)}
        code = EXIT_CAPACITY
    except UsageError as exc:
        report.outcome = {"error": "usage", "message": str(exc)}
        code = EXIT_USAGE
    report.elapsed = time.perf_counter() - start
    if code is None:  # raw output already written
        return EXIT_OK
    _emit(report, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
