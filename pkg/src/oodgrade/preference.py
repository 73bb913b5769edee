"""Weighted power-mean aggregation over unit-interval preference scores.

A preference is a plain float in [0, 1].  A weight vector is a sequence of
floats in (0, 1] summing to 1.  ``aggregate`` is the single aggregation
primitive used everywhere else: the weighted power mean

    M_r(e; w) = (w_1 * e_1**r + ... + w_k * e_k**r) ** (1/r)

whose exponent ``r`` sets the logical character of the block, from pure
conjunction (r -> -inf, the minimum) through the geometric mean (r -> 0)
and the arithmetic mean (r = 1) up to pure disjunction (r -> +inf, the
maximum).
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

__all__ = ["aggregate", "estimate_andness", "check_preference", "check_weights",
           "WEIGHT_SUM_TOLERANCE"]

WEIGHT_SUM_TOLERANCE = 1e-9

# Numerical regime boundaries for aggregate(); see the function body.
_GEOMETRIC_BAND = 1e-9
_LOG_DOMAIN_MIN = 10.0
_MIN_CUTOFF = -50.0
_MAX_CUTOFF = 50.0


def check_preference(value: float, *, what: str = "preference") -> float:
    """Return ``value`` as a float, rejecting anything outside [0, 1]."""
    v = float(value)
    if not 0.0 <= v <= 1.0:  # also rejects NaN
        raise ValueError(f"{what} must lie in [0, 1], got {value!r}")
    return v


def check_weights(weights: Sequence[float]) -> list[float]:
    """Validate a weight vector: non-empty, entries in (0, 1], sum 1.

    The sum is checked to within ``WEIGHT_SUM_TOLERANCE``.
    """
    ws = [float(w) for w in weights]
    if not ws:
        raise ValueError("weight vector must not be empty")
    for w in ws:
        if not 0.0 < w <= 1.0:
            raise ValueError(f"weights must lie in (0, 1], got {w!r}")
    total = math.fsum(ws)
    if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
        raise ValueError(f"weights must sum to 1, got {total!r}")
    return ws


def aggregate(values: Sequence[float], weights: Sequence[float], r: float) -> float:
    """Weighted power mean of preferences with exponent ``r``.

    ``r`` may be any real or +/-inf.  The result always lies between the
    smallest and largest input.  Numerical regimes:

    * r >= 50 (or +inf): exact maximum; r <= -50 (or -inf): exact minimum.
    * |r| < 1e-9: geometric-mean limit, exp(sum w*log(e)).
    * any zero input with r <= 0 annihilates the block to exactly 0.
    * |r| > 10, or r < 0 with very small inputs: log-domain evaluation,
      since direct powering would overflow or underflow.
    * otherwise: direct powering.

    Weighted sums are renormalised by the actual weight total so the
    permitted 1e-9 weight-sum slack cannot leak into the result.
    """
    vals = [check_preference(v) for v in values]
    ws = check_weights(weights)
    if len(vals) != len(ws):
        raise ValueError(f"got {len(vals)} values but {len(ws)} weights")
    if math.isnan(r):
        raise ValueError("exponent r must not be NaN")

    lo = min(vals)
    hi = max(vals)
    if lo == hi:
        return lo
    if r >= _MAX_CUTOFF:
        return hi
    if r <= _MIN_CUTOFF:
        return lo
    if lo == 0.0 and r < _GEOMETRIC_BAND:
        return 0.0

    total = math.fsum(ws)
    if abs(r) < _GEOMETRIC_BAND:
        out = math.exp(math.fsum(w * math.log(v) for v, w in zip(vals, ws)) / total)
    elif abs(r) > _LOG_DOMAIN_MIN or (r < 0.0 and lo < 1e-25):
        # log-sum-exp over r*log(v); zero inputs (possible only for r > 0
        # here) contribute nothing to the power sum.
        terms = [(r * math.log(v), w) for v, w in zip(vals, ws) if v > 0.0]
        peak = max(a for a, _ in terms)
        s = math.fsum(w * math.exp(a - peak) for a, w in terms)
        out = math.exp((peak + math.log(s / total)) / r)
    else:
        s = math.fsum(w * v**r for v, w in zip(vals, ws))
        out = (s / total) ** (1.0 / r)

    # Floating-point safety net; mathematically the mean is internal.
    return min(max(out, lo), hi)


def _power_mean_rows(x: np.ndarray, r: float) -> np.ndarray:
    """Row-wise equal-weight power mean of a 2-D sample matrix."""
    if r >= _MAX_CUTOFF:
        return x.max(axis=1)
    if r <= _MIN_CUTOFF:
        return x.min(axis=1)
    if abs(r) < _GEOMETRIC_BAND:
        return np.exp(np.log(np.clip(x, 1e-300, None)).mean(axis=1))
    if r < 0.0:
        x = np.clip(x, 1e-300, None)
    with np.errstate(over="ignore"):
        # Overflowed rows (tiny input, r < 0) collapse to 0, the correct limit.
        return np.power(x, r).mean(axis=1) ** (1.0 / r)


def estimate_andness(r: float, arity: int, samples: int = 1_000_000,
                     seed: int = 0) -> float:
    """Monte Carlo estimate of the andness of the power mean with exponent ``r``.

    Andness is the position of the mean between the two logical extremes,

        alpha = (E[max] - E[M_r]) / (E[max] - E[min]),

    taken over ``arity`` independent uniform unit-interval inputs with equal
    weights.  E[max] = k/(k+1) and E[min] = 1/(k+1) are exact; E[M_r] is
    estimated from ``samples`` draws.  Deterministic for a given seed.
    """
    k = int(arity)
    if k < 2:
        raise ValueError("andness needs arity >= 2")
    if samples < 100_000:
        raise ValueError("need at least 1e5 samples for a stable estimate")
    rng = np.random.default_rng(seed)
    x = rng.random((int(samples), k))
    mean_of_mean = float(_power_mean_rows(x, float(r)).mean())
    e_max = k / (k + 1.0)
    e_min = 1.0 / (k + 1.0)
    return (e_max - mean_of_mean) / (e_max - e_min)
