"""Max-plus linear algebra and precedence-constrained project scheduling."""
from .core import DEFAULT_TOL, ONE, ZERO, TropScalar, inv, leq, oplus, otimes, power
from .errors import (
    DimensionMismatch,
    InfeasibleCycles,
    InversionOfZero,
    IrregularInput,
    MaxPlusError,
    NoUnitDiagonalColumn,
    NotSquare,
    ParseError,
    ReducibleMatrix,
    ValidationError,
    ZeroToNonpositivePower,
)
from .linalg import (
    TropMatrix,
    TropVector,
    add,
    big_trace,
    conjugate,
    generator,
    is_dependent,
    is_irreducible,
    mat_mul,
    metric,
    plus_powers,
    residuate,
    scale,
    star,
    trace,
)
from .scheduling import (
    Feasibility,
    Objective,
    ProjectProblem,
    ScheduleResult,
    earliest_start_ss,
    latest_start_mixed,
    latest_start_sf,
    min_flow_time,
)
from .solvers import (
    BellmanOutcome,
    Classification,
    FirstKindOutcome,
    SpectralOutcome,
    eigenvalue,
    eigenvectors,
    residual,
    solve_bellman,
    solve_bellman_inequality,
    solve_first_kind,
    solve_first_kind_inequality,
)

__version__ = "0.1.0"
