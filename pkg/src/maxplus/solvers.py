"""Closed-form solvers for max-plus linear systems.

First kind:  ``A x = d`` and ``A x <= d`` (residuation).
Second kind: ``A x (+) b = x`` and ``A x (+) b <= x`` for irreducible ``A``.
Spectral:    ``A x = lambda x`` for irreducible ``A``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import DEFAULT_TOL, TropScalar, inv, power
from .errors import DimensionMismatch, IrregularInput, MaxPlusError, NotSquare
from .linalg import (
    TropMatrix,
    TropVector,
    big_trace,
    conjugate,
    generator,
    matrix_powers,
    require_irreducible,
    residuate,
    scale,
    star,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class FirstKindOutcome:
    """Everything known about ``A x = d`` for regular ``A`` and ``d``.

    ``x1`` is the greatest ``x`` with ``A x <= d``, ``x2`` the least multiple
    of it with ``A x >= d`` and ``x0`` the Chebyshev-closest compromise;
    ``y0``, ``y1``, ``y2`` are the matching completion vectors ``A x``.
    """

    delta: TropScalar
    exact_max_solution: TropVector | None
    x0: TropVector
    x1: TropVector
    x2: TropVector
    y0: TropVector
    y1: TropVector
    y2: TropVector

    @property
    def solvable(self) -> bool:
        return self.exact_max_solution is not None


class Classification(enum.Enum):
    UNIQUE_SOLUTION = "unique_solution"
    SOLUTION_FAMILY = "solution_family"
    ONLY_TRIVIAL = "only_trivial"
    NO_SOLUTION = "no_solution"


@dataclass(frozen=True)
class BellmanOutcome:
    """Solution set of a second-kind equation or inequality.

    For a family the solutions are ``particular (+) generators (x) v`` over all
    vectors ``v`` (equation), or ``generators (x) (b (+) v)`` with
    ``generators = A*`` (inequality).
    """

    big_trace: TropScalar
    classification: Classification
    particular: TropVector | None = None
    generators: TropMatrix | None = None


@dataclass(frozen=True)
class SpectralOutcome:
    eigenvalue: TropScalar
    eigen_generators: TropMatrix


def _check_regular(A: TropMatrix, d: TropVector) -> None:
    if A.shape[0] != len(d):
        raise DimensionMismatch(f"matrix has {A.shape[0]} rows, vector has {len(d)} entries")
    if not A.regular:
        raise IrregularInput("matrix has an all-Zero row")
    if not d.regular:
        raise IrregularInput("vector has a Zero entry")


def _sign(s: TropScalar, tol: float) -> int:
    """-1, 0 or 1 as ``s`` is below, at or above the identity (Zero counts as below)."""
    if s.is_zero or s.value < -tol:
        return -1
    return 1 if s.value > tol else 0


def residual(A: TropMatrix, d: TropVector) -> TropScalar:
    """``(A (d^- A)^-)^- d``; equals 0 exactly when ``A x = d`` is solvable."""
    _check_regular(A, d)
    y1 = A @ residuate(A, d)
    return conjugate(y1) @ d


def solve_first_kind(A: TropMatrix, d: TropVector, tol: float = DEFAULT_TOL) -> FirstKindOutcome:
    _check_regular(A, d)
    x1 = residuate(A, d)
    y1 = A @ x1
    delta = conjugate(y1) @ d
    x0 = scale(power(delta, HALF), x1)
    x2 = scale(delta, x1)
    return FirstKindOutcome(
        delta=delta,
        exact_max_solution=x1 if abs(delta.value) <= tol else None,
        x0=x0,
        x1=x1,
        x2=x2,
        y0=A @ x0,
        y1=y1,
        y2=A @ x2,
    )


def solve_first_kind_inequality(A: TropMatrix, d: TropVector) -> TropVector:
    """Greatest solution of ``A x <= d``; every ``x`` below it is a solution too."""
    return residuate(A, d)


def _bellman_square(A: TropMatrix, b: TropVector) -> None:
    if not A.is_square:
        raise NotSquare(f"expected a square matrix, got {A.shape}")
    if A.shape[0] != len(b):
        raise DimensionMismatch(f"matrix is {A.shape}, vector has {len(b)} entries")


def solve_bellman(A: TropMatrix, b: TropVector, tol: float = DEFAULT_TOL) -> BellmanOutcome:
    """Solve ``A x (+) b = x`` for irreducible ``A``; ``b`` may be the zero vector."""
    _bellman_square(A, b)
    require_irreducible(A)
    tr = big_trace(A)
    sign = _sign(tr, tol)
    homogeneous = b.is_zero_vector
    if sign > 0:
        cls = Classification.ONLY_TRIVIAL if homogeneous else Classification.NO_SOLUTION
        return BellmanOutcome(tr, cls)
    if sign < 0:
        if homogeneous:
            return BellmanOutcome(tr, Classification.ONLY_TRIVIAL)
        return BellmanOutcome(tr, Classification.UNIQUE_SOLUTION, particular=star(A) @ b)
    return BellmanOutcome(
        tr,
        Classification.SOLUTION_FAMILY,
        particular=star(A) @ b,
        generators=generator(A, tol),
    )


def solve_bellman_inequality(A: TropMatrix, b: TropVector, tol: float = DEFAULT_TOL) -> BellmanOutcome:
    """Solve ``A x (+) b <= x`` for irreducible ``A``.

    When ``Tr(A) <= 0`` the solutions are ``A* (b (+) v)``; ``particular`` is
    the least one, ``A* b``, and ``generators`` is ``A*``.
    """
    _bellman_square(A, b)
    require_irreducible(A)
    tr = big_trace(A)
    if _sign(tr, tol) > 0:
        cls = Classification.ONLY_TRIVIAL if b.is_zero_vector else Classification.NO_SOLUTION
        return BellmanOutcome(tr, cls)
    S = star(A)
    return BellmanOutcome(tr, Classification.SOLUTION_FAMILY, particular=S @ b, generators=S)


def eigenvalue(A: TropMatrix) -> TropScalar:
    """Unique eigenvalue of an irreducible matrix: the largest ``tr(A^m) / m``."""
    require_irreducible(A)
    best = -np.inf
    for m, P in enumerate(matrix_powers(A), start=1):
        t = np.max(np.diag(P.values))
        if np.isfinite(t):
            best = max(best, t / m)
    return TropScalar.from_float(best)


def eigenvectors(A: TropMatrix, tol: float = DEFAULT_TOL) -> SpectralOutcome:
    lam = eigenvalue(A)
    if lam.is_zero:
        raise MaxPlusError("matrix has no cycles, so it has no finite eigenvalue")
    return SpectralOutcome(lam, generator(scale(inv(lam), A), tol))


__all__ = [
    "FirstKindOutcome",
    "Classification",
    "BellmanOutcome",
    "SpectralOutcome",
    "residual",
    "solve_first_kind",
    "solve_first_kind_inequality",
    "solve_bellman",
    "solve_bellman_inequality",
    "eigenvalue",
    "eigenvectors",
]
