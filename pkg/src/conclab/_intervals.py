"""Certified rational enclosures of cosine values.

The exact machinery in :mod:`conclab.seifert` works on the x-line via
x = 2 cos(2 pi t).  Whenever a rational sample point or a reported jump
position must be compared with an algebraic number of the form
2 cos(2 pi k/d), we use mpmath's rigorous interval arithmetic and convert
the binary endpoints to exact Fractions.  Every decision made from these
enclosures is a strict inequality between disjoint intervals, so precision
only affects how much refinement is needed, never correctness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

DEFAULT_PRECISION_BITS = 128


@dataclass(frozen=True)
class RatInterval:
    """Closed interval with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x: Fraction) -> "RatInterval":
        return RatInterval(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def disjoint_from(self, other: "RatInterval") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def strictly_below(self, other: "RatInterval") -> bool:
        return self.hi < other.lo

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _raw_mpf_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ValueError("non-finite interval endpoint")
    v = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -v if sign else v


def cos_two_pi(t: Fraction, prec_bits: int = DEFAULT_PRECISION_BITS) -> RatInterval:
    """Certified enclosure of cos(2 pi t).

    >>> iv_ = cos_two_pi(Fraction(1, 6), 64)
    >>> iv_.contains(Fraction(1, 2)), float(iv_.width) < 1e-15
    (True, True)
    """
    t = Fraction(t) % 1
    old = iv.prec
    try:
        iv.prec = max(prec_bits, 53)
        angle = 2 * iv.pi * (iv.mpf(t.numerator) / iv.mpf(t.denominator))
        val = iv.cos(angle)
        lo_raw, hi_raw = val._mpi_
        return RatInterval(_raw_mpf_to_fraction(lo_raw), _raw_mpf_to_fraction(hi_raw))
    finally:
        iv.prec = old


def two_cos_two_pi(t: Fraction, prec_bits: int = DEFAULT_PRECISION_BITS) -> RatInterval:
    """Certified enclosure of 2 cos(2 pi t)."""
    c = cos_two_pi(t, prec_bits)
    return RatInterval(2 * c.lo, 2 * c.hi)


def invert_two_cos(x_encl, prec_bits: int = DEFAULT_PRECISION_BITS) -> RatInterval:
    """Enclosure of the t in (0, 1/2) with 2 cos(2 pi t) = x, where x is
    described by a refinable enclosure.

    ``x_encl`` is a callable taking a precision and returning a
    RatInterval around x; it must be able to exclude any rational
    2 cos(2 pi t0) value on request (true for isolating intervals of
    algebraic numbers that are not of that form, and for those that are,
    the bisection simply never asks).
    """
    lo, hi = Fraction(0), Fraction(1, 2)
    target = Fraction(1, 2) ** max(prec_bits, 8)
    prec = max(64, prec_bits)
    x_iv = x_encl(prec)
    while hi - lo > target:
        tm = (lo + hi) / 2
        for _ in range(60):
            c = two_cos_two_pi(tm, prec)
            if c.lo > x_iv.hi:
                # cos at tm above x, so the solution lies to the right
                lo = tm
                break
            if c.hi < x_iv.lo:
                hi = tm
                break
            prec *= 2
            x_iv = x_encl(prec)
        else:
            raise ArithmeticError("could not separate enclosures while inverting cos")
    return RatInterval(lo, hi)
