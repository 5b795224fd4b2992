"""JSON problem files and result documents.

A problem file looks like::

    {
      "version": "1",
      "problem": {
        "objective": "latest_start",
        "sf": [[8, 10, null, null], ...],
        "due": [14, 11, 16, 15]
      },
      "options": {"tolerance": 1e-9, "output": "human"}
    }

``null`` stands for the semiring zero (no constraint).  Recognised problem
keys are ``sf``, ``ss``, ``due``, ``early`` and ``objective``; the algebra
utilities read ``matrix`` and ``vector`` instead.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from numbers import Real

import numpy as np

from .core import DEFAULT_TOL, TropScalar
from .errors import DimensionMismatch, ParseError, ValidationError
from .linalg import TropMatrix, TropVector
from .scheduling import Feasibility, Objective, ProjectProblem, ScheduleResult

FORMAT_VERSION = "1"
OUTPUT_MODES = ("human", "machine")


@dataclass
class ProblemFile:
    version: str
    problem: dict
    options: dict = field(default_factory=dict)

    @property
    def tolerance(self) -> float:
        return self.options.get("tolerance", DEFAULT_TOL)

    @property
    def output(self) -> str:
        return self.options.get("output", "human")


def load_problem_file(path) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return parse_problem_document(doc)


def parse_problem_document(doc) -> ProblemFile:
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    version = str(doc.get("version", FORMAT_VERSION))
    if version != FORMAT_VERSION:
        raise ValidationError(f"'version': unsupported format version {version!r}")
    problem = doc.get("problem")
    if not isinstance(problem, dict):
        raise ValidationError("'problem': expected an object")
    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise ValidationError("'options': expected an object")
    tol = options.get("tolerance", DEFAULT_TOL)
    if not isinstance(tol, Real) or isinstance(tol, bool) or not tol >= 0:
        raise ValidationError("'options.tolerance': expected a non-negative number")
    if options.get("output", "human") not in OUTPUT_MODES:
        raise ValidationError(f"'options.output': expected one of {', '.join(OUTPUT_MODES)}")
    return ProblemFile(version, problem, options)


def _entry(v, where: str):
    if v is None:
        return None
    if isinstance(v, bool) or not isinstance(v, Real) or not math.isfinite(v):
        raise ValidationError(f"'{where}': entries must be finite numbers or null, got {v!r}")
    return float(v)


def parse_matrix(data, name: str) -> TropMatrix:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ValidationError(f"'{name}': expected a non-empty array of rows")
    width = len(data[0])
    if width == 0 or any(len(r) != width for r in data):
        raise ValidationError(f"'{name}': rows must be non-empty and of equal length")
    return TropMatrix([[_entry(v, name) for v in r] for r in data])


def parse_vector(data, name: str) -> TropVector:
    if not isinstance(data, list) or not data:
        raise ValidationError(f"'{name}': expected a non-empty array")
    return TropVector([_entry(v, name) for v in data])


def to_project_problem(pf: ProblemFile, objective: Objective | None = None) -> ProjectProblem:
    """Build a :class:`ProjectProblem`; ``objective`` overrides/validates the file's."""
    p = pf.problem
    unknown = set(p) - {"sf", "ss", "due", "early", "objective"}
    if unknown:
        raise ValidationError(f"'problem': unknown keys {', '.join(sorted(unknown))}")
    declared = p.get("objective")
    if declared is not None:
        try:
            declared = Objective(declared)
        except ValueError:
            choices = ", ".join(o.value for o in Objective)
            raise ValidationError(f"'objective': expected one of {choices}") from None
        if objective is not None and declared is not objective:
            raise ValidationError(f"'objective': file declares {declared.value}, command expects {objective.value}")
    objective = objective or declared
    if objective is None:
        raise ValidationError("'objective': missing")
    sf = parse_matrix(p["sf"], "sf") if p.get("sf") is not None else None
    ss = parse_matrix(p["ss"], "ss") if p.get("ss") is not None else None
    due = parse_vector(p["due"], "due") if p.get("due") is not None else None
    early = parse_vector(p["early"], "early") if p.get("early") is not None else None
    if sf is None and ss is None:
        raise ValidationError("'sf'/'ss': at least one constraint matrix is required")
    n = (sf if sf is not None else ss).shape[0]
    return ProjectProblem(n, objective, sf_matrix=sf, ss_matrix=ss, due_dates=due, early_starts=early)


# -- result documents -------------------------------------------------------

def number(v: float | TropScalar | None):
    """JSON value for a scalar: ``None`` for Zero, else at most 12 significant digits."""
    v = float(v) if v is not None else -math.inf
    if v == -math.inf:
        return None
    r = float(f"{v:.12g}")
    if r == 0:
        return 0
    return int(r) if r.is_integer() and abs(r) < 2**53 else r


def result_to_dict(result: ScheduleResult) -> dict:
    def vec(v):
        return None if v is None else [number(x) for x in v.values]

    return {
        "version": FORMAT_VERSION,
        "feasibility": result.feasibility.value,
        "initiation": vec(result.initiation),
        "completion": vec(result.completion),
        "generators": None if result.generators is None else [[number(x) for x in r] for r in result.generators.values],
        "solutions": {k: vec(v) for k, v in result.solutions.items()},
        "diagnostics": {k: number(v) for k, v in result.diagnostics.items()},
    }


def _render(obj, indent: int) -> str:
    # Flat lists (vectors, matrix rows) stay on one line.
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_render(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and any(isinstance(v, (list, dict)) for v in obj):
        return "[\n" + ",\n".join(inner + _render(v, indent + 2) for v in obj) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def dumps(doc: dict) -> str:
    """Deterministic, newline-terminated JSON."""
    return _render(doc, 0) + "\n"


def emit_machine(result: ScheduleResult) -> str:
    return dumps(result_to_dict(result))


def parse_result(text: str) -> ScheduleResult:
    """Inverse of :func:`emit_machine`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid result document: {exc.msg}") from exc

    def vec(v):
        return None if v is None else TropVector(v)

    try:
        return ScheduleResult(
            initiation=TropVector(doc["initiation"]),
            feasibility=Feasibility(doc["feasibility"]),
            completion=vec(doc["completion"]),
            generators=None if doc["generators"] is None else TropMatrix(doc["generators"]),
            solutions={k: TropVector(v) for k, v in doc["solutions"].items()},
            diagnostics={k: TropScalar.from_float(v) for k, v in doc["diagnostics"].items()},
        )
    except (KeyError, ValueError, DimensionMismatch) as exc:
        raise ParseError(f"malformed result document: {exc}") from exc


def _cell(v: float) -> str:
    return "-inf" if v == -math.inf else f"{v:.12g}"


def emit_human(result: ScheduleResult, title: str | None = None) -> str:
    lines = []
    if title:
        lines.append(title)
    lines.append(f"feasibility: {result.feasibility.value}")
    for k, v in result.diagnostics.items():
        lines.append(f"{k} = {v}")
    lines.append(f"x = {result.initiation}")
    if result.feasibility is Feasibility.APPROXIMATE:
        s = result.solutions
        lines.append("due dates cannot be met exactly; approximate schedules:")
        for i in "012":
            lines.append(f"  x{i} = {s['x' + i]}   y{i} = {s['y' + i]}")
        lines.append(f"adjusted due dates d' with y1 <= d' <= y2 deviate by at most delta; "
                     f"d' = y0 = {s['y0']} is closest")
    x = result.initiation.values
    header = ["activity", "start"]
    rows = [[str(i + 1), _cell(x[i])] for i in range(len(x))]
    if result.completion is not None:
        y = result.completion.values
        header += ["finish", "flow time"]
        for i, r in enumerate(rows):
            flow = y[i] - x[i] if np.isfinite(x[i]) and np.isfinite(y[i]) else -math.inf
            r += [_cell(y[i]), _cell(flow)]
    widths = [max(len(h), *(len(r[c]) for r in rows)) for c, h in enumerate(header)]
    lines.append("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    if result.generators is None:
        lines.append("family: none")
    else:
        extra = {k: v for k, v in result.solutions.items() if k in ("particular", "v")}
        for k, v in extra.items():
            lines.append(f"{k} = {v}")
        lines.append(f"family generators ({result.generators.shape[1]} column(s)):")
        lines += ["  " + row for row in str(result.generators).splitlines()]
    return "\n".join(lines) + "\n"


def emit(result: ScheduleResult, mode: str = "human", title: str | None = None) -> str:
    if mode == "machine":
        return emit_machine(result)
    if mode == "human":
        return emit_human(result, title)
    raise ValueError(f"unknown output mode {mode!r}")
