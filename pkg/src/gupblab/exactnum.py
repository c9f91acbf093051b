"""Exact scalars for representation checks.

An :class:`Exact` value is ``a + b*i`` where ``a`` and ``b`` live in the
real cubic field Q[x]/(x^3 - 3x^2 + x - 2), stored as coefficient
triples of Fractions.  Plain Gaussian rationals are the degree-0 case,
so one scalar type covers every fixture, including the one whose
coefficients involve the cubic irrational.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

# x^3 = 3x^2 - x + 2, and x^4 = 8x^2 - x + 6 follows
_X3 = (Fraction(2), Fraction(-1), Fraction(3))
_X4 = (Fraction(6), Fraction(-1), Fraction(8))

MINPOLY_COEFFS = (-2, 1, -3, 1)  # constant first: -2 + x - 3x^2 + x^3


def _real_root() -> float:
    # Newton iteration on x^3 - 3x^2 + x - 2 from a point beyond the
    # largest root; the polynomial has exactly one real root.
    x = 3.0
    for _ in range(80):
        f = ((x - 3.0) * x + 1.0) * x - 2.0
        df = (3.0 * x - 6.0) * x + 1.0
        x -= f / df
    return x


CUBIC_ROOT = _real_root()  # ~2.893289196304497

_ZERO3 = (Fraction(0), Fraction(0), Fraction(0))


def _poly_add(p, q):
    return (p[0] + q[0], p[1] + q[1], p[2] + q[2])


def _poly_sub(p, q):
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


def _poly_neg(p):
    return (-p[0], -p[1], -p[2])


def _poly_mul(p, q):
    d0 = p[0] * q[0]
    d1 = p[0] * q[1] + p[1] * q[0]
    d2 = p[0] * q[2] + p[1] * q[1] + p[2] * q[0]
    d3 = p[1] * q[2] + p[2] * q[1]
    d4 = p[2] * q[2]
    return (
        d0 + d3 * _X3[0] + d4 * _X4[0],
        d1 + d3 * _X3[1] + d4 * _X4[1],
        d2 + d3 * _X3[2] + d4 * _X4[2],
    )


def _poly_float(p) -> float:
    return float(p[0]) + float(p[1]) * CUBIC_ROOT + float(p[2]) * CUBIC_ROOT**2


Number = Union[int, Fraction, "Exact"]


class Exact:
    __slots__ = ("re", "im")

    def __init__(self, re=_ZERO3, im=_ZERO3):
        self.re = re
        self.im = im

    @staticmethod
    def of(value: Number) -> "Exact":
        if isinstance(value, Exact):
            return value
        if isinstance(value, (int, Fraction)):
            return Exact((Fraction(value), Fraction(0), Fraction(0)))
        raise TypeError(f"cannot build Exact from {type(value).__name__}")

    @staticmethod
    def complex_pair(re: Number, im: Number) -> "Exact":
        return Exact(Exact.of(re).re, Exact.of(im).re)

    @staticmethod
    def cubic_generator() -> "Exact":
        """The real root x of x^3 - 3x^2 + x - 2."""
        return Exact((Fraction(0), Fraction(1), Fraction(0)))

    def __add__(self, other: Number) -> "Exact":
        o = Exact.of(other)
        return Exact(_poly_add(self.re, o.re), _poly_add(self.im, o.im))

    __radd__ = __add__

    def __sub__(self, other: Number) -> "Exact":
        o = Exact.of(other)
        return Exact(_poly_sub(self.re, o.re), _poly_sub(self.im, o.im))

    def __rsub__(self, other: Number) -> "Exact":
        return Exact.of(other) - self

    def __neg__(self) -> "Exact":
        return Exact(_poly_neg(self.re), _poly_neg(self.im))

    def __mul__(self, other: Number) -> "Exact":
        o = Exact.of(other)
        return Exact(
            _poly_sub(_poly_mul(self.re, o.re), _poly_mul(self.im, o.im)),
            _poly_add(_poly_mul(self.re, o.im), _poly_mul(self.im, o.re)),
        )

    __rmul__ = __mul__

    def conjugate(self) -> "Exact":
        return Exact(self.re, _poly_neg(self.im))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.re) and all(c == 0 for c in self.im)

    def is_rational(self) -> bool:
        return (
            self.re[1] == 0 and self.re[2] == 0 and self.im[1] == 0 and self.im[2] == 0
        )

    def to_complex(self) -> complex:
        return complex(_poly_float(self.re), _poly_float(self.im))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (int, Fraction, Exact)):
            return NotImplemented
        return (self - Exact.of(other)).is_zero()

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        def fmt(p):
            terms = []
            for power, c in enumerate(p):
                if c:
                    terms.append(f"{c}" + ("", "*x", "*x^2")[power])
            return " + ".join(terms) if terms else "0"

        if all(c == 0 for c in self.im):
            return fmt(self.re)
        return f"({fmt(self.re)}) + ({fmt(self.im)})i"


ZERO = Exact.of(0)
ONE = Exact.of(1)
I_UNIT = Exact.complex_pair(0, 1)


def exact_vector(components) -> tuple[Exact, ...]:
    return tuple(Exact.of(c) for c in components)


def inner_product(a, b) -> Exact:
    """Hermitian inner product sum_k conj(a_k) * b_k."""
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    acc = ZERO
    for x, y in zip(a, b):
        acc = acc + Exact.of(x).conjugate() * Exact.of(y)
    return acc


def minpoly_residue(value: Exact):
    """Coefficient triple of the value, for tracking residues exactly."""
    return value.re, value.im
