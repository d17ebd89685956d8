"""Pythagorean stacking of fifths, equal temperament and the overtone series.

Positions live on the unit circle as the fractional part of log2 of a
frequency ratio.  Float comparisons use ``TOL``; convergents are exact.
"""
from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

TOL = 1e-9
FIFTH = math.log2(3 / 2)


@dataclass(frozen=True)
class CirclePoint:
    index: int
    position: float


@dataclass(frozen=True)
class Convergent:
    numerator: int
    denominator: int

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def arc(a: float, b: float) -> float:
    d = abs(a - b) % 1.0
    return min(d, 1.0 - d)


def pythagorean_points(n: int) -> list[CirclePoint]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return [CirclePoint(k, math.fmod(k * FIFTH, 1.0)) for k in range(n)]


def min_adjacent_gap(positions: list[float]) -> float:
    s = sorted(positions)
    gaps = [b - a for a, b in zip(s, s[1:])]
    gaps.append(1.0 - s[-1] + s[0])
    return min(gaps)


# how "the smallest distance seen so far" is measured
READINGS = ("adjacent-gap", "distance-to-origin")


def stopping_points(max_n: int, reading: str = "adjacent-gap") -> list[int]:
    """Counts n at which the next fifth lands close enough to the start to stop.

    With n points placed, stop if point n+1 is nearer the origin than half of
    the reference distance: the smallest gap between circular neighbours
    (``adjacent-gap``) or the nearest earlier approach to the origin
    (``distance-to-origin``).
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    pts = [p.position for p in pythagorean_points(max_n + 1)]
    out = []
    for n in range(2, max_n + 1):
        if reading == "adjacent-gap":
            ref = min_adjacent_gap(pts[:n])
        else:
            ref = min(arc(p, 0.0) for p in pts[1:n])
        if arc(pts[n], 0.0) < 0.5 * ref:
            out.append(n)
    return out


def pythagorean_comma() -> float:
    return 3**12 / 2**19


def equal_temperament_ratio() -> float:
    return 2 ** (7 / 12)


def et_fifth_error(n: int) -> float:
    """Log2 distance from a pure fifth to the nearest step of n-tone ET."""
    if n < 1:
        raise ValueError("n must be at least 1")
    k = round(FIFTH * n)
    return min(arc(FIFTH, j / n) for j in (k - 1, k, k + 1))


def et_error_sweep(lo: int = 1, hi: int = 60) -> list[tuple[int, float]]:
    return [(n, et_fifth_error(n)) for n in range(lo, hi + 1)]


def local_minima(hi: int = 60) -> list[int]:
    err = {n: et_fifth_error(n) for n in range(1, hi + 2)}
    return [n for n in range(2, hi + 1) if err[n] < err[n - 1] and err[n] < err[n + 1]]


def pronounced_minima(hi: int = 60) -> list[int]:
    """Local minima whose error, measured in steps of the division, beats every smaller n."""
    best = math.inf
    out = []
    lm = set(local_minima(hi))
    for n in range(1, hi + 1):
        scaled = n * et_fifth_error(n)
        if scaled < best - TOL:
            best = scaled
            if n in lm:
                out.append(n)
    return out


def continued_fraction(x: Fraction, terms: int) -> list[int]:
    out = []
    for _ in range(terms):
        a = math.floor(x)
        out.append(a)
        frac = x - a
        if frac == 0:
            break
        x = 1 / frac
    return out


def _fifth_fraction(digits: int) -> Fraction:
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        x = Decimal(3).ln() / Decimal(2).ln() - 1
    return Fraction(x)


def fifth_convergents(count: int) -> list[Convergent]:
    """Continued-fraction convergents of log2(3/2).

    Partial quotients come from a high-precision decimal value; precision
    grows with ``count`` so every returned term is trustworthy.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    # each term costs at most a few digits; the last one is dropped as a guard
    terms = continued_fraction(_fifth_fraction(40 + 4 * count), count + 2)[:count + 1]
    # log2(3/2) = [0; 1, 1, 2, 2, 3, 1, 5, 2, ...]; skip the leading 0
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    out = []
    for a in terms:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        if h1:
            out.append(Convergent(h1, k1))
    return out[:count]


def odd_overtone_points(n: int) -> list[CirclePoint]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return [CirclePoint(k, math.log2(2 * k - 1) % 1.0) for k in range(1, n + 1)]


def nearest_et_offset(position: float, steps: int = 12) -> float:
    """Signed distance from a position to the nearest ET tone, in ET steps."""
    x = position * steps
    return x - round(x)


def pythagorean_et_deviation(n: int = 12) -> float:
    """Largest log2 distance between the first n stacked fifths and 12-ET."""
    return max(abs(nearest_et_offset(p.position)) / 12 for p in pythagorean_points(n))
