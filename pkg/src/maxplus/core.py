"""Scalars of the idempotent semifield R_max,+.

Addition is ``max``, multiplication is ordinary ``+``, the zero element is
``-inf`` (kept here as an explicit tag) and the identity is ``0``.

>>> oplus(3, 5)
TropScalar(5.0)
>>> otimes(ZERO, 7)
TropScalar(Zero)
>>> power(4, Fraction(1, 2))
TropScalar(2.0)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Rational, Real
from typing import Union

from .errors import InversionOfZero, ZeroToNonpositivePower

DEFAULT_TOL = 1e-9


@total_ordering
@dataclass(frozen=True)
class TropScalar:
    """An element of R_max,+.

    ``value`` is a finite float, or ``None`` for the semiring zero.  The zero
    is never stored as ``-inf`` so that no arithmetic on it can go through
    IEEE infinities; use :meth:`from_float` / ``float()`` at I/O boundaries.
    """

    value: float | None

    def __post_init__(self):
        if self.value is None:
            return
        v = float(self.value)
        if math.isnan(v):
            raise ValueError("NaN is not an element of R_max,+")
        if math.isinf(v):
            raise ValueError("use TropScalar.from_float or ZERO for -inf; +inf is not allowed")
        object.__setattr__(self, "value", v)

    @classmethod
    def from_float(cls, x: float | None) -> TropScalar:
        """Convert an IEEE value (``-inf`` or ``None`` meaning Zero)."""
        if x is None or x == -math.inf:
            return ZERO
        return cls(x)

    @property
    def is_zero(self) -> bool:
        return self.value is None

    def __float__(self) -> float:
        return -math.inf if self.value is None else self.value

    def __lt__(self, other):
        other = as_scalar(other)
        return leq(self, other) and self != other

    def __repr__(self):
        return "TropScalar(Zero)" if self.value is None else f"TropScalar({self.value!r})"

    def __str__(self):
        return "-inf" if self.value is None else f"{self.value:.12g}"

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        other = as_scalar(other)
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return abs(self.value - other.value) <= tol


ScalarLike = Union[TropScalar, Real, None]

ZERO = TropScalar(None)
ONE = TropScalar(0.0)


def as_scalar(x: ScalarLike) -> TropScalar:
    """Coerce numbers (``-inf``/``None`` map to Zero) to :class:`TropScalar`."""
    if isinstance(x, TropScalar):
        return x
    return TropScalar.from_float(x)


def oplus(a: ScalarLike, b: ScalarLike) -> TropScalar:
    a, b = as_scalar(a), as_scalar(b)
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    return a if a.value >= b.value else b


def otimes(a: ScalarLike, b: ScalarLike) -> TropScalar:
    a, b = as_scalar(a), as_scalar(b)
    if a.is_zero or b.is_zero:
        return ZERO
    return TropScalar(a.value + b.value)


def inv(a: ScalarLike) -> TropScalar:
    a = as_scalar(a)
    if a.is_zero:
        raise InversionOfZero("Zero has no multiplicative inverse")
    return TropScalar(-a.value)


def power(a: ScalarLike, q: Rational | int | str) -> TropScalar:
    """Rational power ``a**q``, i.e. ``q * a`` in ordinary arithmetic.

    The exponent is held as an exact fraction; floats are refused so that
    ``power(x, Fraction(1, 2))`` halves exactly.
    """
    if isinstance(q, float):
        raise TypeError("exponent must be rational (int, Fraction or 'p/q' string)")
    q = Fraction(q)
    a = as_scalar(a)
    if a.is_zero:
        if q <= 0:
            raise ZeroToNonpositivePower(f"Zero raised to {q}")
        return ZERO
    if q.denominator == 1:
        return TropScalar(a.value * q.numerator)
    return TropScalar(a.value * q.numerator / q.denominator)


def leq(a: ScalarLike, b: ScalarLike) -> bool:
    """Induced order: ``a <= b`` iff ``a (+) b == b``."""
    return oplus(a, b) == as_scalar(b)
