"""Project scheduling under precedence constraints.

Each problem is turned into a max-plus system and solved in closed form:

* Start-to-Finish lags with due dates, latest start:  ``A x = d``
* Start-to-Start lags with early starts, earliest start:  ``A x (+) b = x``
* both kinds together, latest start:  ``A2 x = x`` and ``A1 x <= d``
* least maximum flow time, optionally with due dates: eigenvectors of ``A``
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_TOL, TropScalar
from .errors import DimensionMismatch, InfeasibleCycles, IrregularInput, ValidationError
from .linalg import (
    TropMatrix,
    TropVector,
    big_trace,
    generator,
    is_irreducible,
    metric,
    residuate,
    star,
)
from .solvers import eigenvectors, solve_bellman, solve_first_kind


class Objective(enum.Enum):
    LATEST_START = "latest_start"
    EARLIEST_START = "earliest_start"
    MIXED = "mixed"
    MIN_MAX_FLOW_TIME = "min_max_flow_time"


class Feasibility(enum.Enum):
    EXACT = "exact"
    APPROXIMATE = "approximate"
    FAMILY = "family"


@dataclass(frozen=True)
class ProjectProblem:
    n_activities: int
    objective: Objective
    sf_matrix: TropMatrix | None = None
    ss_matrix: TropMatrix | None = None
    due_dates: TropVector | None = None
    early_starts: TropVector | None = None

    def __post_init__(self):
        if self.sf_matrix is None and self.ss_matrix is None:
            raise ValidationError("problem needs an 'sf' or an 'ss' constraint matrix")
        n = self.n_activities
        for name, M in (("sf", self.sf_matrix), ("ss", self.ss_matrix)):
            if M is not None and M.shape != (n, n):
                raise ValidationError(f"'{name}' must be {n}x{n}, got {M.shape[0]}x{M.shape[1]}")
        for name, v in (("due", self.due_dates), ("early", self.early_starts)):
            if v is not None and len(v) != n:
                raise ValidationError(f"'{name}' must have {n} entries, got {len(v)}")


@dataclass(frozen=True)
class ScheduleResult:
    """A schedule plus everything needed to audit it.

    ``initiation`` is the concrete schedule.  For ``FAMILY`` results the
    whole solution set is spanned by ``generators`` (see each solver for the
    exact parametrisation); ``solutions`` holds named auxiliary vectors such
    as the approximate triples or the coefficient vector ``v``.
    """

    initiation: TropVector
    feasibility: Feasibility
    completion: TropVector | None = None
    generators: TropMatrix | None = None
    solutions: dict[str, TropVector] = field(default_factory=dict)
    diagnostics: dict[str, TropScalar] = field(default_factory=dict)

    @property
    def delta(self) -> TropScalar | None:
        return self.diagnostics.get("delta")

    def flow_times(self) -> np.ndarray | None:
        if self.completion is None:
            return None
        return self.completion.values - self.initiation.values


def with_zero_self_lags(ss: TropMatrix) -> TropMatrix:
    """Insert ``a_ii = 0`` wherever a Start-to-Start self-lag is absent."""
    a = ss.values.copy()
    diag = np.diag(a).copy()
    diag[np.isneginf(diag)] = 0.0
    np.fill_diagonal(a, diag)
    return TropMatrix(a)


def _check_no_positive_cycles(ss: TropMatrix, tol: float) -> TropScalar:
    tr = big_trace(ss)
    if not tr.is_zero and tr.value > tol:
        raise InfeasibleCycles(f"Start-to-Start lags contain a cycle of positive weight (Tr = {tr})")
    return tr


def latest_start_sf(sf: TropMatrix, d: TropVector, tol: float = DEFAULT_TOL) -> ScheduleResult:
    """Latest start times meeting Start-to-Finish lags and due dates.

    If the due dates cannot be met exactly the result is ``APPROXIMATE``: the
    schedule is the quasi-solution ``x0`` whose completion times ``y0`` are the
    suggested new due dates, and ``y1 <= d' <= y2`` bounds any adjusted due
    dates within ``delta`` of the original ones.
    """
    out = solve_first_kind(sf, d, tol)
    diag = {"delta": out.delta}
    if out.solvable:
        x = out.exact_max_solution
        return ScheduleResult(x, Feasibility.EXACT, completion=sf @ x, diagnostics=diag)
    sols = {"x0": out.x0, "y0": out.y0, "x1": out.x1, "y1": out.y1, "x2": out.x2, "y2": out.y2}
    return ScheduleResult(out.x0, Feasibility.APPROXIMATE, completion=out.y0, solutions=sols, diagnostics=diag)


def earliest_start_ss(ss: TropMatrix, b: TropVector | None = None, tol: float = DEFAULT_TOL) -> ScheduleResult:
    """Earliest start times under Start-to-Start lags and early start bounds.

    Solutions are ``A* b (+) A+ v``; the reported schedule is the least one,
    ``A* b``, or ``A+ (x) 0`` (the row maxima of ``A+``) when no early starts
    are given.
    """
    A = with_zero_self_lags(ss)
    n = A.shape[0]
    if b is None:
        b = TropVector.zeros(n)
    if len(b) != n:
        raise DimensionMismatch(f"early starts have {len(b)} entries, expected {n}")
    tr = _check_no_positive_cycles(A, tol)
    if is_irreducible(A):
        out = solve_bellman(A, b, tol)
        particular, G = out.particular, out.generators
    else:
        # A* b and the critical columns of A+ still solve the equation
        # whenever no cycle is positive.
        particular, G = star(A) @ b, generator(A, tol)
    x = G @ TropVector.ones(G.shape[1]) if b.is_zero_vector else particular
    return ScheduleResult(
        x,
        Feasibility.FAMILY,
        generators=G,
        solutions={"particular": particular},
        diagnostics={"big_trace": tr},
    )


def latest_start_mixed(
    sf: TropMatrix, ss: TropMatrix, d: TropVector, tol: float = DEFAULT_TOL
) -> ScheduleResult:
    """Latest start times under Start-to-Finish and Start-to-Start lags.

    Schedules satisfying ``ss x = x`` are ``G v`` with ``G = ss+``; the latest
    one meeting ``sf x <= d`` uses ``v = (d^- sf G)^-``.  The solution set is
    every ``G v`` with ``v`` below that bound.
    """
    A2 = with_zero_self_lags(ss)
    tr = _check_no_positive_cycles(A2, tol)
    G = generator(A2, tol)
    B = sf @ G
    v = residuate(B, d)
    x = G @ v
    return ScheduleResult(
        x,
        Feasibility.FAMILY,
        completion=sf @ x,
        generators=G,
        solutions={"v": v},
        diagnostics={"big_trace": tr},
    )


def min_flow_time(sf: TropMatrix, d: TropVector | None = None, tol: float = DEFAULT_TOL) -> ScheduleResult:
    """Schedule minimising the largest flow time ``y_i - x_i``.

    Every eigenvector of ``sf`` is optimal, with flow time equal to the
    eigenvalue.  With due dates the latest eigenvector ``x`` having
    ``sf x <= d`` is returned; without them the row maxima of the eigenvector
    generators.
    """
    spec = eigenvectors(sf, tol)
    G = spec.eigen_generators
    if d is None:
        v = TropVector.ones(G.shape[1])
    else:
        if len(d) != sf.shape[0]:
            raise DimensionMismatch(f"due dates have {len(d)} entries, expected {sf.shape[0]}")
        if not d.regular:
            raise IrregularInput("due dates must all be finite")
        v = residuate(sf @ G, d)
    x = G @ v
    y = sf @ x
    diag = {"eigenvalue": spec.eigenvalue}
    if x.regular:
        diag["max_flow_time"] = TropScalar(float(np.max(y.values - x.values)))
        diag["rho"] = metric(y, x)
    return ScheduleResult(
        x,
        Feasibility.FAMILY,
        completion=y,
        generators=G,
        solutions={"v": v},
        diagnostics=diag,
    )


def solve(problem: ProjectProblem, tol: float = DEFAULT_TOL) -> ScheduleResult:
    """Dispatch a :class:`ProjectProblem` on its objective."""
    p = problem
    if p.objective is Objective.LATEST_START:
        _need(p.sf_matrix, "sf")
        _need(p.due_dates, "due")
        return latest_start_sf(p.sf_matrix, p.due_dates, tol)
    if p.objective is Objective.EARLIEST_START:
        _need(p.ss_matrix, "ss")
        return earliest_start_ss(p.ss_matrix, p.early_starts, tol)
    if p.objective is Objective.MIXED:
        for value, name in ((p.sf_matrix, "sf"), (p.ss_matrix, "ss"), (p.due_dates, "due")):
            _need(value, name)
        return latest_start_mixed(p.sf_matrix, p.ss_matrix, p.due_dates, tol)
    _need(p.sf_matrix, "sf")
    return min_flow_time(p.sf_matrix, p.due_dates, tol)


def _need(value, name: str):
    if value is None:
        raise ValidationError(f"missing required field '{name}'")
    return value


def verify(problem: ProjectProblem, result: ScheduleResult, tol: float = DEFAULT_TOL) -> list[str]:
    """Recompute the constraints of ``problem`` on ``result``; return the violations found."""
    x = result.initiation
    errors = []
    p = problem
    if p.objective is Objective.LATEST_START:
        y = p.sf_matrix @ x
        if result.feasibility is Feasibility.EXACT and not y.isclose(p.due_dates, tol):
            errors.append("completion times differ from due dates")
        if result.feasibility is Feasibility.APPROXIMATE:
            lo, hi = result.solutions["y1"].values, result.solutions["y2"].values
            d = p.due_dates.values
            if np.any(lo > d + tol) or np.any(hi < d - tol):
                errors.append("due dates fall outside [y1, y2]")
    elif p.objective is Objective.EARLIEST_START:
        A = with_zero_self_lags(p.ss_matrix)
        b = p.early_starts if p.early_starts is not None else TropVector.zeros(len(x))
        if not np.allclose(np.maximum((A @ x).values, b.values), x.values, atol=tol, rtol=0):
            errors.append("x is not a fixed point of x = A x (+) b")
    else:
        if p.ss_matrix is not None:
            A2 = with_zero_self_lags(p.ss_matrix)
            if not (A2 @ x).isclose(x, tol):
                errors.append("Start-to-Start fixed point violated")
        if p.due_dates is not None:
            if np.any((p.sf_matrix @ x).values > p.due_dates.values + tol):
                errors.append("due dates violated")
        if p.objective is Objective.MIN_MAX_FLOW_TIME:
            lam = result.diagnostics["eigenvalue"]
            if not (p.sf_matrix @ x).isclose(TropVector(x.values + lam.value), tol):
                errors.append("x is not an eigenvector")
    return errors
