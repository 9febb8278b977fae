"""Summary statistics for the comparison experiments."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient; errors on degenerate input."""
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise ValueError("need at least two points")
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    if sxx == 0.0 or syy == 0.0:
        raise ValueError("correlation undefined for constant input")
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    r = sxy / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class Moments:
    count: int
    mean: float
    std: float
    skewness: float
    excess_kurtosis: float
    zero_variance: bool


def moments(values: Sequence[float]) -> Moments:
    """Population mean/std plus standardized third and fourth moments.

    Degenerate (constant) samples report zero skewness and excess kurtosis
    with the zero_variance flag set.
    """
    if not values:
        raise ValueError("no values")
    n = len(values)
    mean = sum(values) / n
    m2 = sum((v - mean) ** 2 for v in values) / n
    if m2 == 0.0:
        return Moments(n, mean, 0.0, 0.0, 0.0, True)
    m3 = sum((v - mean) ** 3 for v in values) / n
    m4 = sum((v - mean) ** 4 for v in values) / n
    return Moments(n, mean, math.sqrt(m2), m3 / m2**1.5, m4 / m2**2 - 3.0, False)


def integer_histogram(
    values: Sequence[int], bin_width: int = 1
) -> list[tuple[int, int]]:
    """(lower edge, count) bins with integer edges; counts sum to len(values)."""
    if not values:
        raise ValueError("no values")
    if bin_width < 1:
        raise ValueError("bin_width must be >= 1")
    lo = min(values)
    bins: dict[int, int] = {}
    for v in values:
        edge = lo + ((v - lo) // bin_width) * bin_width
        bins[edge] = bins.get(edge, 0) + 1
    return sorted(bins.items())


def moments_from_histogram(histogram: Sequence[tuple[int, int]], bin_width: int = 1) -> Moments:
    """Moments of a histogram, treating each count as mass at its lower edge.

    At bin width 1 on integer data this matches moments() up to summation
    order, so agreement is to floating-point roundoff, not bitwise.
    """
    values: list[float] = []
    for edge, count in histogram:
        values.extend([edge] * count)
    return moments(values)
