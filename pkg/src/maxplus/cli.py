"""Command line front end.

    maxplus sf-latest problems/sec41_d1.json
    maxplus min-flow problems/sec44.json --output machine
    maxplus algebra eigen problems/sec44.json

Exit status is 0 for exact and family results, 2 for approximate results
and 1 for any error.
"""
from __future__ import annotations

import argparse
import sys

from . import io
from .core import DEFAULT_TOL
from .errors import MaxPlusError, ValidationError
from .linalg import big_trace, generator, is_irreducible, plus_powers, star, strongly_connected_components
from .scheduling import Feasibility, Objective, solve, verify
from .solvers import eigenvectors, solve_first_kind

EXIT_OK, EXIT_ERROR, EXIT_APPROXIMATE = 0, 1, 2

COMMANDS = {
    "sf-latest": (Objective.LATEST_START, "latest start under Start-to-Finish lags"),
    "ss-earliest": (Objective.EARLIEST_START, "earliest start under Start-to-Start lags"),
    "mixed-latest": (Objective.MIXED, "latest start under both kinds of lags"),
    "min-flow": (Objective.MIN_MAX_FLOW_TIME, "least maximum flow time"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=None,
                        help=f"equality tolerance (default: file option or {DEFAULT_TOL:g})")
    common.add_argument("--output", choices=io.OUTPUT_MODES, default=None)
    common.add_argument("--check", action="store_true",
                        help="re-verify the constraints on the result before printing")

    parser = argparse.ArgumentParser(prog="maxplus", description="Max-plus project scheduling.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")
    p = sub.add_parser("algebra", parents=[common], help="closure, eigen and residual utilities")
    p.add_argument("utility", choices=["closure", "eigen", "residual"])
    p.add_argument("file")
    return parser


def _matrix_doc(M):
    return None if M is None else [[io.number(v) for v in r] for r in M.values]


def run_algebra(utility: str, pf: io.ProblemFile, tol: float, output: str) -> str:
    p = pf.problem
    if "matrix" not in p:
        raise ValidationError("'matrix': missing")
    A = io.parse_matrix(p["matrix"], "matrix")
    doc: dict = {}
    if utility == "closure":
        doc["big_trace"] = io.number(big_trace(A))
        doc["star"] = _matrix_doc(star(A))
        doc["plus"] = _matrix_doc(plus_powers(A))
        try:
            doc["generators"] = _matrix_doc(generator(A, tol))
        except MaxPlusError:
            doc["generators"] = None
        doc["irreducible"] = is_irreducible(A)
        doc["components"] = [[i + 1 for i in c] for c in strongly_connected_components(A)]
    elif utility == "eigen":
        spec = eigenvectors(A, tol)
        doc["eigenvalue"] = io.number(spec.eigenvalue)
        doc["eigen_generators"] = _matrix_doc(spec.eigen_generators)
    else:
        if "vector" not in p:
            raise ValidationError("'vector': missing")
        out = solve_first_kind(A, io.parse_vector(p["vector"], "vector"), tol)
        doc["delta"] = io.number(out.delta)
        for k in ("x0", "y0", "x1", "y1", "x2", "y2"):
            doc[k] = [io.number(v) for v in getattr(out, k).values]
    if output == "machine":
        return io.dumps(doc)
    lines = []
    for k, v in doc.items():
        if isinstance(v, list) and v and isinstance(v[0], list) and k != "components":
            lines.append(f"{k}:")
            lines += ["  " + " ".join("-inf" if c is None else str(c) for c in row) for row in v]
        else:
            lines.append(f"{k} = {v}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        pf = io.load_problem_file(args.file)
        tol = args.tolerance if args.tolerance is not None else pf.tolerance
        output = args.output or pf.output
        if args.command == "algebra":
            sys.stdout.write(run_algebra(args.utility, pf, tol, output))
            return EXIT_OK
        objective, title = COMMANDS[args.command]
        problem = io.to_project_problem(pf, objective)
        result = solve(problem, tol)
        if args.check:
            problems = verify(problem, result, tol)
            if problems:
                for msg in problems:
                    print(f"check failed: {msg}", file=sys.stderr)
                return EXIT_ERROR
        sys.stdout.write(io.emit(result, output, title=title))
    except MaxPlusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_APPROXIMATE if result.feasibility is Feasibility.APPROXIMATE else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
