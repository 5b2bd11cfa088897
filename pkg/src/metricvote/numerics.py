"""Numeric helpers: tolerant comparisons, exact square roots, rendering.

Coordinates and radii may be ints, Fractions, or floats.  Counting and
ratios of counts are always exact; geometric comparisons fall back to an
absolute tolerance TAU when a value is carried as a float.  Exact values
(int/Fraction) are compared exactly first, so rational one-dimensional
instances never lose precision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction, float]

#: Absolute tolerance for float comparisons of distances and radii.
TAU = 1e-9


def is_exact(x: Number) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def approx_leq(a: Number, b: Number, tol: float = TAU) -> bool:
    """a <= b, allowing float slack of tol when either side is inexact."""
    if a <= b:
        return True
    if is_exact(a) and is_exact(b):
        return False
    return float(a) <= float(b) + tol


def approx_eq(a: Number, b: Number, tol: float = TAU) -> bool:
    if a == b:
        return True
    if is_exact(a) and is_exact(b):
        return False
    return abs(float(a) - float(b)) <= tol


def exact_sqrt(x: Number) -> Number:
    """Square root that stays exact for perfect squares of rationals."""
    if isinstance(x, float):
        return math.sqrt(x)
    frac = Fraction(x)
    if frac < 0:
        raise ValueError("square root of a negative number")
    num, den = frac.numerator, frac.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        root = Fraction(rn, rd)
        return int(root) if root.denominator == 1 else root
    return math.sqrt(num / den)


def cluster_sorted(values, tol: float = TAU):
    """Group an ascending list of (key, item) pairs into tolerance clusters.

    Consecutive keys within tol land in the same cluster.  Keys produced by
    the generators sit far from TAU except for intended exact ties, so the
    chaining is harmless.
    """
    clusters: list[list] = []
    last_key = None
    for key, item in values:
        if last_key is not None and approx_eq(key, last_key, tol):
            clusters[-1].append(item)
        else:
            clusters.append([item])
        last_key = key
    return clusters


def tied_extreme(scores, best, tol: float = TAU) -> list[int]:
    """Indices attaining the max (best=True) or min score, ties within tol.

    Exact scores use exact equality; any float in the list switches the
    whole comparison to the tolerant float path.
    """
    indices = list(range(len(scores)))
    exact = all(is_exact(s) for s in scores)
    target = max(scores) if best else min(scores)
    if exact:
        return [i for i in indices if scores[i] == target]
    t = float(target)
    return [i for i in indices if abs(float(scores[i]) - t) <= tol]


def render_number(x: Number) -> str:
    """Human-facing rendering: exact fractions as 'p/q', floats via repr."""
    if x == math.inf:
        return "inf"
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return repr(x)


def encode_number(x: Number):
    """JSON-safe encoding that survives a round trip without precision loss."""
    if isinstance(x, bool):
        raise TypeError("booleans are not numeric payload")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        return x
    raise TypeError(f"cannot encode {type(x).__name__} as a number")


def decode_number(value) -> Number:
    if isinstance(value, bool):
        raise ValueError("booleans are not numeric payload")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        if value == "inf":
            return math.inf
        if "/" in value:
            num, den = value.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(value)
    raise ValueError(f"cannot decode {value!r} as a number")
