"""Exponential growth fit p(c) ~ a * exp(b * c) for the link counts."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .counts import count_row


@dataclass(frozen=True)
class FitResult:
    """Least-squares fit of ln p against c over rows with p > 0."""

    a: float
    b: float
    r2: float
    c_min: int
    c_max: int
    n_points: int


def fit_points(points: Iterable[tuple[int, int]]) -> FitResult:
    """Ordinary least squares of ln(count) on c over (c, count) pairs.

    Pairs with count <= 0 are dropped; at least 3 usable pairs are required.
    Counts convert to logs at full integer precision.
    """
    usable: Sequence[tuple[int, int]] = sorted((c, p) for c, p in points if p > 0)
    if len(usable) < 3:
        raise ValueError(f"need at least 3 crossing numbers with positive counts, got {len(usable)}")
    xs = [c for c, _ in usable]
    ys = [math.log(p) for _, p in usable]
    n = len(xs)
    x_mean = sum(xs) / n
    y_mean = sum(ys) / n
    sxx = sum((x - x_mean) ** 2 for x in xs)
    sxy = sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean
    ss_res = sum((y - (intercept + slope * x)) ** 2 for x, y in zip(xs, ys))
    ss_tot = sum((y - y_mean) ** 2 for y in ys)
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return FitResult(a=math.exp(intercept), b=slope, r2=r2,
                     c_min=xs[0], c_max=xs[-1], n_points=n)


def fit_growth(min_c: int = 6, max_c: int = 50) -> FitResult:
    """Fit the mirror-pair count p(c) over min_c <= c <= max_c."""
    if min_c >= max_c:
        raise ValueError(f"need min_c < max_c, got {min_c} >= {max_c}")
    rows = (count_row(c) for c in range(min_c, max_c + 1))
    return fit_points((row.c, row.p) for row in rows)
