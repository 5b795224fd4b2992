"""Dense max-plus vectors and matrices.

Entries are stored in read-only ``float64`` arrays where ``-inf`` encodes the
semiring zero.  Every kernel here is written so that ``+inf`` and ``NaN`` can
never appear in a stored array; scalars handed out by indexing are tagged
:class:`~maxplus.core.TropScalar` values.

``@`` is max-plus multiplication::

    >>> A = TropMatrix([[8, 10], [None, 5]])
    >>> (A @ TropVector([6, 4])).to_list()
    [14.0, 9.0]
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .core import DEFAULT_TOL, ONE, ZERO, ScalarLike, TropScalar, as_scalar, oplus
from .errors import (
    DimensionMismatch,
    IrregularInput,
    NoUnitDiagonalColumn,
    NotSquare,
    ReducibleMatrix,
)

NEG_INF = -np.inf


def _to_array(data, ndim: int) -> np.ndarray:
    if isinstance(data, (TropMatrix, TropVector)):
        arr = data.values.copy()
    elif isinstance(data, np.ndarray):
        arr = data.astype(np.float64, copy=True)
    else:
        def conv(v):
            if isinstance(v, TropScalar):
                return float(v)
            return NEG_INF if v is None else float(v)

        if ndim == 1:
            arr = np.array([conv(v) for v in data], dtype=np.float64)
        else:
            arr = np.array([[conv(v) for v in row] for row in data], dtype=np.float64)
    if arr.ndim != ndim:
        raise DimensionMismatch(f"expected a {ndim}-d array, got shape {arr.shape}")
    if arr.size == 0:
        raise DimensionMismatch("empty vectors and matrices are not allowed")
    if np.isnan(arr).any():
        raise ValueError("NaN entries are not allowed")
    if np.isposinf(arr).any():
        raise ValueError("+inf entries are not allowed")
    arr.setflags(write=False)
    return arr


def _fmt(v: float) -> str:
    return "-inf" if v == NEG_INF else f"{v:.12g}"


class TropVector:
    """A max-plus vector; a column unless ``row=True``."""

    __slots__ = ("_a", "row")

    def __init__(self, entries, row: bool = False):
        self._a = _to_array(entries, 1)
        self.row = bool(row)

    @classmethod
    def zeros(cls, n: int, row: bool = False) -> TropVector:
        return cls(np.full(n, NEG_INF), row=row)

    @classmethod
    def ones(cls, n: int, row: bool = False) -> TropVector:
        """The vector with every entry equal to the identity 0."""
        return cls(np.zeros(n), row=row)

    @property
    def values(self) -> np.ndarray:
        return self._a

    def __len__(self):
        return self._a.shape[0]

    def __getitem__(self, i) -> TropScalar:
        return TropScalar.from_float(self._a[i])

    def __iter__(self):
        return (TropScalar.from_float(v) for v in self._a)

    @property
    def regular(self) -> bool:
        return bool(np.all(np.isfinite(self._a)))

    @property
    def is_zero_vector(self) -> bool:
        return bool(np.all(self._a == NEG_INF))

    @property
    def T(self) -> TropVector:
        return TropVector(self._a, row=not self.row)

    def to_list(self) -> list:
        return [None if v == NEG_INF else float(v) for v in self._a]

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, TropVector):
            return NotImplemented
        return self.row == other.row and np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash((self.row, self._a.tobytes()))

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        return _isclose(self._a, _to_array(other, 1), tol)

    def __repr__(self):
        kind = "row" if self.row else "col"
        return f"TropVector({kind}: " + ", ".join(_fmt(v) for v in self._a) + ")"

    def __str__(self):
        return "(" + ", ".join(_fmt(v) for v in self._a) + ")"


class TropMatrix:
    """A dense max-plus matrix built from rows; ``None`` or ``-inf`` is Zero."""

    __slots__ = ("_a",)

    def __init__(self, rows):
        self._a = _to_array(rows, 2)

    @classmethod
    def identity(cls, n: int) -> TropMatrix:
        a = np.full((n, n), NEG_INF)
        np.fill_diagonal(a, 0.0)
        return cls(a)

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> TropMatrix:
        return cls(np.full((m, m if n is None else n), NEG_INF))

    @classmethod
    def from_columns(cls, columns: Sequence[TropVector]) -> TropMatrix:
        return cls(np.column_stack([c.values for c in columns]))

    @property
    def values(self) -> np.ndarray:
        return self._a

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def is_square(self) -> bool:
        return self._a.shape[0] == self._a.shape[1]

    @property
    def regular(self) -> bool:
        return bool(np.all(np.any(np.isfinite(self._a), axis=1)))

    @property
    def T(self) -> TropMatrix:
        return TropMatrix(self._a.T)

    def __getitem__(self, ij) -> TropScalar:
        i, j = ij
        return TropScalar.from_float(self._a[i, j])

    def column(self, j: int) -> TropVector:
        return TropVector(self._a[:, j])

    def columns(self) -> list[TropVector]:
        return [self.column(j) for j in range(self._a.shape[1])]

    def row(self, i: int) -> TropVector:
        return TropVector(self._a[i, :], row=True)

    def diagonal(self) -> TropVector:
        return TropVector(np.diag(self._a))

    def to_list(self) -> list:
        return [[None if v == NEG_INF else float(v) for v in row] for row in self._a]

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash((self._a.shape, self._a.tobytes()))

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        return _isclose(self._a, _to_array(other, 2), tol)

    def __repr__(self):
        return "TropMatrix([" + "; ".join(", ".join(_fmt(v) for v in r) for r in self._a) + "])"

    def __str__(self):
        cells = [[_fmt(v) for v in r] for r in self._a]
        w = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)


def _isclose(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    if a.shape != b.shape:
        return False
    za, zb = a == NEG_INF, b == NEG_INF
    if not np.array_equal(za, zb):
        return False
    fin = ~za
    return bool(np.all(np.abs(a[fin] - b[fin]) <= tol))


def _mp_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # -inf + finite and -inf + -inf are both -inf, so no masking is needed.
    out = np.full((a.shape[0], b.shape[1]), NEG_INF)
    for k in range(a.shape[1]):
        np.maximum(out, a[:, k, None] + b[None, k, :], out=out)
    return out


def _square(A: TropMatrix) -> np.ndarray:
    if not A.is_square:
        raise NotSquare(f"expected a square matrix, got {A.shape}")
    return A.values


def mat_mul(X, Y):
    """Max-plus product ``X (x) Y``.

    Accepts matrix-matrix, matrix-column, row-matrix and row-column
    operands; the last returns a :class:`TropScalar`.
    """
    def as2d(Z):
        if isinstance(Z, TropMatrix):
            return Z.values
        if isinstance(Z, TropVector):
            return Z.values[None, :] if Z.row else Z.values[:, None]
        raise TypeError(f"cannot multiply {type(Z).__name__}")

    a, b = as2d(X), as2d(Y)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"inner dimensions differ: {a.shape} x {b.shape}")
    out = _mp_matmul(a, b)
    x_row = isinstance(X, TropVector) and X.row
    y_col = isinstance(Y, TropVector) and not Y.row
    if x_row and y_col:
        return TropScalar.from_float(out[0, 0])
    if y_col:
        return TropVector(out[:, 0])
    if x_row:
        return TropVector(out[0, :], row=True)
    return TropMatrix(out)


def add(X, Y):
    """Entry-wise ``X (+) Y`` for two vectors or two matrices of equal shape."""
    if type(X) is not type(Y) or X.values.shape != Y.values.shape:
        raise DimensionMismatch("operands of (+) must have the same kind and shape")
    out = np.maximum(X.values, Y.values)
    if isinstance(X, TropVector):
        return TropVector(out, row=X.row)
    return TropMatrix(out)


def scale(alpha: ScalarLike, X):
    """Scalar multiple ``alpha (x) X``."""
    alpha = as_scalar(alpha)
    if alpha.is_zero:
        out = np.full(X.values.shape, NEG_INF)
    else:
        out = X.values + alpha.value
    if isinstance(X, TropVector):
        return TropVector(out, row=X.row)
    return TropMatrix(out)


def conjugate(x: TropVector) -> TropVector:
    """``x^-``: negate finite entries, keep Zero entries, flip orientation."""
    a = x.values
    out = np.where(np.isfinite(a), -a, NEG_INF)
    return TropVector(out, row=not x.row)


def residuate(A: TropMatrix, d: TropVector) -> TropVector:
    """Greatest ``x`` with ``A (x) x <= d``.

    For regular ``d`` this is ``(d^- A)^-``.  A component of ``x`` whose column
    in ``A`` is entirely Zero is left unconstrained above and returned as Zero,
    which is what the conjugate formula gives as well.
    """
    a, dv = A.values, d.values
    if a.shape[0] != dv.shape[0]:
        raise DimensionMismatch(f"matrix has {a.shape[0]} rows, vector has {dv.shape[0]} entries")
    finite = np.isfinite(a)
    with np.errstate(invalid="ignore"):
        diff = dv[:, None] - a
    diff[~finite] = np.inf
    x = diff.min(axis=0)
    x[np.isposinf(x)] = NEG_INF
    return TropVector(x)


def metric(a: TropVector, b: TropVector) -> TropScalar:
    """Distance ``b^- a (+) a^- b`` between regular vectors (the Chebyshev distance)."""
    if len(a) != len(b):
        raise DimensionMismatch("vectors differ in length")
    if not (a.regular and b.regular):
        raise IrregularInput("metric is defined for regular vectors only")
    a, b = a.T if a.row else a, b.T if b.row else b
    return oplus(conjugate(b) @ a, conjugate(a) @ b)


def trace(A: TropMatrix) -> TropScalar:
    return TropScalar.from_float(np.max(np.diag(_square(A))))


def matrix_powers(A: TropMatrix, upto: int | None = None) -> Iterable[TropMatrix]:
    """Yield ``A, A^2, ..., A^upto`` (``upto`` defaults to the order of ``A``)."""
    a = _square(A)
    P = a
    for _ in range(a.shape[0] if upto is None else upto):
        yield TropMatrix(P)
        P = _mp_matmul(P, a)


def big_trace(A: TropMatrix) -> TropScalar:
    """``Tr(A)``: the largest trace among ``A, A^2, ..., A^n``."""
    best = NEG_INF
    for P in matrix_powers(A):
        best = max(best, np.max(np.diag(P.values)))
    return TropScalar.from_float(best)


def _mp_power(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    result = np.full((n, n), NEG_INF)
    np.fill_diagonal(result, 0.0)
    base = a
    while p:
        if p & 1:
            result = _mp_matmul(result, base)
        p >>= 1
        if p:
            base = _mp_matmul(base, base)
    return result


def star(A: TropMatrix) -> TropMatrix:
    """Kleene star ``I (+) A (+) ... (+) A^(n-1)``.

    Computed as ``(I (+) A)^(n-1)`` by binary exponentiation; since ``I`` and
    ``A`` commute and addition is idempotent this is the same finite sum, even
    when ``A`` has cycles of positive weight.
    """
    a = _square(A)
    n = a.shape[0]
    ia = a.copy()
    np.fill_diagonal(ia, np.maximum(np.diag(ia), 0.0))
    return TropMatrix(_mp_power(ia, n - 1))


def plus_powers(A: TropMatrix) -> TropMatrix:
    """``A (+) A^2 (+) ... (+) A^n``, obtained as ``A (x) A*``."""
    return A @ star(A)


def is_dependent(c: TropVector, S: TropMatrix, tol: float = DEFAULT_TOL) -> bool:
    """Whether ``c`` is a max-plus combination of the columns of ``S``.

    ``c`` lies in the column span iff the greatest subsolution of
    ``S (x) x <= c`` already reaches it.
    """
    if S.shape[0] != len(c):
        raise DimensionMismatch("vector length does not match the column height")
    x = residuate(S, c)
    return (S @ x).isclose(c, tol)


def _normalize_column(col: np.ndarray) -> np.ndarray:
    finite = np.flatnonzero(np.isfinite(col))
    if finite.size == 0:
        return col
    return col - col[finite[-1]]


def generator(A: TropMatrix, tol: float = DEFAULT_TOL) -> TropMatrix:
    """Generating matrix ``A+`` of the fixed points of ``A``.

    Collects the columns of ``A (+) ... (+) A^n`` whose diagonal entry is 0,
    drops columns that depend on those already kept (left to right), then
    sweeps backwards removing any kept column spanned by the others.  Each
    surviving column is scaled so that its last non-Zero entry is 0.
    """
    X = plus_powers(A).values
    diag = np.diag(X)
    candidates = [i for i in range(X.shape[0]) if np.isfinite(diag[i]) and abs(diag[i]) <= tol]
    if not candidates:
        raise NoUnitDiagonalColumn("no diagonal entry of A (+) ... (+) A^n equals 0")

    def dependent(j, others):
        if not others:
            return False
        return is_dependent(TropVector(X[:, j]), TropMatrix(X[:, others]), tol)

    kept: list[int] = []
    for j in candidates:
        if not dependent(j, kept):
            kept.append(j)
    for j in reversed(list(kept)):
        rest = [k for k in kept if k != j]
        if dependent(j, rest):
            kept = rest
    cols = [_normalize_column(X[:, j]) for j in kept]
    return TropMatrix(np.column_stack(cols))


def strongly_connected_components(A: TropMatrix) -> list[list[int]]:
    """Strongly connected classes of the graph with an arc j -> i for each ``a_ij`` != Zero."""
    a = _square(A)
    _, labels = connected_components(csr_matrix(np.isfinite(a)), directed=True, connection="strong")
    groups: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def is_irreducible(A: TropMatrix) -> bool:
    a = _square(A)
    if a.shape[0] == 1:
        return True
    return len(strongly_connected_components(A)) == 1


def require_irreducible(A: TropMatrix) -> None:
    if not is_irreducible(A):
        raise ReducibleMatrix(strongly_connected_components(A))


__all__ = [
    "TropVector",
    "TropMatrix",
    "mat_mul",
    "add",
    "scale",
    "conjugate",
    "residuate",
    "metric",
    "trace",
    "matrix_powers",
    "big_trace",
    "star",
    "plus_powers",
    "is_dependent",
    "generator",
    "strongly_connected_components",
    "is_irreducible",
    "require_irreducible",
    "ZERO",
    "ONE",
]
