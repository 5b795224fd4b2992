"""Brute-force reference computations for the test suite.

Nothing else in the package imports this module: the enumerations here are
exponential and only meant for matrices of order ten or less.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import TropScalar
from .errors import IrregularInput, NotSquare, TooLarge
from .linalg import TropMatrix, TropVector

MAX_ORDER = 10


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]
    weight: float

    @property
    def mean(self) -> float:
        return self.weight / len(self.vertices)


def _check_square(A: TropMatrix, limit: int = MAX_ORDER) -> np.ndarray:
    a = A.values
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"expected a square matrix, got {a.shape}")
    if a.shape[0] > limit:
        raise TooLarge(f"order {a.shape[0]} exceeds the oracle limit {limit}")
    return a


def elementary_cycles(A: TropMatrix) -> list[Cycle]:
    """All elementary cycles of the graph with an arc i -> j of weight ``a_ji``.

    Each cycle is reported once, starting from its smallest vertex.  A cycle
    through vertices ``v0 -> v1 -> ... -> v0`` has weight ``a[v1,v0] + ...``.
    """
    a = _check_square(A)
    n = a.shape[0]
    found = []

    def extend(path, weight):
        last = path[-1]
        start = path[0]
        for nxt in range(start, n):
            w = a[nxt, last]
            if w == -math.inf:
                continue
            if nxt == start:
                found.append(Cycle(tuple(path), weight + w))
            elif nxt not in path:
                extend(path + [nxt], weight + w)

    for s in range(n):
        extend([s], 0.0)
    return found


def cycle_mean_oracle(A: TropMatrix) -> TropScalar:
    """Largest mean weight over elementary cycles, Zero for an acyclic graph."""
    cycles = elementary_cycles(A)
    if not cycles:
        return TropScalar(None)
    return TropScalar(max(c.mean for c in cycles))


def max_cycle_weight_oracle(A: TropMatrix) -> TropScalar:
    cycles = elementary_cycles(A)
    if not cycles:
        return TropScalar(None)
    return TropScalar(max(c.weight for c in cycles))


def closed_walk_oracle(A: TropMatrix, limit: int = 6) -> TropScalar:
    """Heaviest closed walk of length 1..n, by enumerating every vertex sequence."""
    a = _check_square(A, limit)
    n = a.shape[0]
    best = -math.inf
    for m in range(1, n + 1):
        for seq in itertools.product(range(n), repeat=m):
            w = sum(a[seq[(k + 1) % m], seq[k]] for k in range(m))
            best = max(best, w)
    return TropScalar.from_float(best)


def matmul_oracle(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    """Triple loop straight from the definition of the product."""
    a, b = A.values, B.values
    m, k = a.shape
    n = b.shape[1]
    out = [[-math.inf] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            for p in range(k):
                if a[i, p] != -math.inf and b[p, j] != -math.inf:
                    out[i][j] = max(out[i][j], a[i, p] + b[p, j])
    return TropMatrix(out)


def definitional_closure(A: TropMatrix) -> tuple[TropMatrix, TropMatrix]:
    """``(A*, A^x)`` accumulated power by power: ``I (+) ... (+) A^(n-1)`` and ``A (+) ... (+) A^n``."""
    a = A.values
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"expected a square matrix, got {a.shape}")
    n = a.shape[0]
    P = TropMatrix.identity(n)
    star_acc = P.values.copy()
    plus_acc = np.full((n, n), -math.inf)
    for m in range(1, n + 1):
        P = matmul_oracle(P, A)
        plus_acc = np.maximum(plus_acc, P.values)
        if m < n:
            star_acc = np.maximum(star_acc, P.values)
    return TropMatrix(star_acc), TropMatrix(plus_acc)


def feasible_sampler(
    A: TropMatrix, d: TropVector, count: int, rng=None, spread: float = 5.0, step: float | None = None
) -> list[TropVector]:
    """Random vectors ``x`` with ``A x <= d``.

    Each is ``(d^- A)^-`` lowered coordinate-wise by a uniform amount in
    ``[0, spread)``, or by a random multiple of ``step`` below ``spread`` when
    ``step`` is given (which leaves some coordinates untouched, so exact
    solutions of ``A x = d`` show up among the samples).  Monotonicity of
    ``A`` keeps every sample feasible.
    """
    if not (A.regular and d.regular):
        raise IrregularInput("sampler needs a regular matrix and vector")
    rng = np.random.default_rng(rng)
    top = -np.max(A.values - d.values[:, None], axis=0)  # (d^- A)^- for regular d
    top[np.isposinf(top)] = -math.inf
    def drop():
        if step is None:
            return rng.uniform(0.0, spread, size=top.shape)
        return step * rng.integers(0, max(1, int(np.ceil(spread / step))), size=top.shape)

    return [TropVector(top - drop()) for _ in range(count)]
