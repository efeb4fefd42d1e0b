"""Riemann-Liouville fractional integration with exact weakly singular moments.

The kernel (u - t)^(rho - 1) is integrated in closed form against the hat
basis of the piecewise-linear representation, segment by segment, in the
variable s = u - t. No singular point is ever sampled, and the resulting
quadrature is exact (to roundoff) on the whole representation class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gridmap import GridMap, Selection
from .interval import Interval


def gamma_fn(x: float) -> float:
    """Euler gamma on the positive half-line."""
    if x <= 0:
        raise ValueError(f"gamma_fn requires x > 0, got {x}")
    return math.gamma(x)


def _pow_diff(s0: np.ndarray, s1: np.ndarray, p: float) -> np.ndarray:
    """s0**p - s1**p for 0 <= s1 < s0, stable for small p via expm1."""
    s0 = np.asarray(s0, dtype=float)
    s1 = np.asarray(s1, dtype=float)
    out = s0**p
    pos = s1 > 0
    if pos.any():
        r = np.empty_like(out)
        r[pos] = s1[pos] ** p * np.expm1(p * np.log(s0[pos] / s1[pos]))
        out = np.where(pos, r, out)
    return out


def kernel_hat_weights(c: float, rho: float, ts: np.ndarray) -> np.ndarray:
    """Weights w with sum_i w_i * f(ts_i) = integral of (c - t)^(rho-1) * f(t)
    over [ts[0], ts[-1]] for piecewise-linear f on breakpoints ts.

    Requires c >= ts[-1]; breakpoints may be non-uniform. No 1/Gamma factor.
    """
    ts = np.asarray(ts, dtype=float)
    if ts.size < 2:
        return np.zeros(ts.size)
    if c < ts[-1] - 1e-15 * max(1.0, abs(ts[-1])):
        raise ValueError("kernel target must lie at or beyond the last breakpoint")
    s0 = c - ts[:-1]
    s1 = np.maximum(c - ts[1:], 0.0)
    h = np.diff(ts)
    m0 = _pow_diff(s0, s1, rho) / rho
    d1 = _pow_diff(s0, s1, rho + 1.0) / (rho + 1.0)
    w_left = (d1 - s1 * m0) / h
    w_right = (s0 * m0 - d1) / h
    w = np.zeros(ts.size)
    w[:-1] += w_left
    w[1:] += w_right
    return w


@dataclass(frozen=True)
class QuadratureWeights:
    """Product-integration weights for one target node of a uniform grid.

    sum_j weights[j] * f(u_j) equals (1/Gamma(rho)) * int_a^{u_n}
    (u_n - t)^(rho-1) f(t) dt exactly for piecewise-linear f.
    """

    rho: float
    target_index: int
    weights: np.ndarray


def quadrature_weights(
    a: float, b: float, n_segments: int, rho: float, n: int
) -> QuadratureWeights:
    if rho <= 0:
        raise ValueError(f"fractional order must be positive, got {rho}")
    if not 0 <= n <= n_segments:
        raise ValueError(f"target index {n} outside 0..{n_segments}")
    nodes = np.linspace(a, b, n_segments + 1)
    if n == 0:
        w = np.zeros(1)
    else:
        w = kernel_hat_weights(float(nodes[n]), rho, nodes[: n + 1]) / gamma_fn(rho)
    return QuadratureWeights(rho=rho, target_index=n, weights=w)


def rl_scalar(f: Selection, rho: float, n: int) -> float:
    """Riemann-Liouville integral of order rho of f, evaluated at node n."""
    qw = quadrature_weights(f.a, f.b, f.n_segments, rho, n)
    return float(qw.weights @ f.values[: n + 1])


def rl_weight_matrix(a: float, b: float, n_segments: int, rho: float) -> np.ndarray:
    """Lower-triangular matrix W with (W @ f_values)[n] = rl_scalar(f, rho, n)."""
    if rho <= 0:
        raise ValueError(f"fractional order must be positive, got {rho}")
    nodes = np.linspace(a, b, n_segments + 1)
    g = gamma_fn(rho)
    w = np.zeros((n_segments + 1, n_segments + 1))
    for n in range(1, n_segments + 1):
        w[n, : n + 1] = kernel_hat_weights(float(nodes[n]), rho, nodes[: n + 1]) / g
    return w


def rl_setvalued(f: GridMap, rho: float) -> GridMap:
    """Set-valued RL integral: node intervals spanned by the integrals of the
    two extremal selections. Node values are exact for the representation;
    between nodes the result is the piecewise-linear interpolant (the true
    endpoint functions are smoother, so this is an O(step) approximation).
    """
    w = rl_weight_matrix(f.a, f.b, f.n_segments, rho)
    return GridMap(f.a, f.b, w @ f.lo, w @ f.hi)


def rl_selection_oracle(
    f: GridMap, rho: float, n: int, samples: int, seed: int
) -> tuple[float, ...]:
    """Monte-Carlo image of the integrable-selection family at node n.

    Returns the sorted, deduplicated set of RL integrals of `samples` random
    selections plus both extremal selections (injected so the hull of the
    returned set is tight against rl_setvalued).
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    qw = quadrature_weights(f.a, f.b, f.n_segments, rho, n).weights
    vals = {
        float(qw @ f.lo[: n + 1]),
        float(qw @ f.hi[: n + 1]),
    }
    for k in range(samples):
        vals.add(float(qw @ f.random_selection(seed + k).values[: n + 1]))
    return tuple(sorted(vals))


# -- nonconvex demo -----------------------------------------------------------


def rl_piecewise_constant(
    seg_values: np.ndarray, a: float, b: float, rho: float, c: float
) -> float:
    """(1/Gamma(rho)) * integral of (c - t)^(rho-1) against a piecewise-constant
    function with one value per uniform segment of [a, b]; c >= b."""
    seg_values = np.asarray(seg_values, dtype=float)
    ts = np.linspace(a, b, seg_values.size + 1)
    s0 = c - ts[:-1]
    s1 = np.maximum(c - ts[1:], 0.0)
    m0 = _pow_diff(s0, s1, rho) / rho
    return float((m0 @ seg_values) / gamma_fn(rho))


def chattering_hull(rho: float, depth: int, u: float = 1.0) -> Interval:
    """Hull of RL integrals of chattering selections of the two-point map
    F(t) = {-1, +1} on [0, u], at refinement depth `depth` (2**depth segments).

    Demonstrates the convexifying effect of integration on nonconvex values:
    duty-cycle selections sweep out the interior of
    [-u**rho / Gamma(rho+1), +u**rho / Gamma(rho+1)]. Demo only; two-branch
    maps are not a supported value type.
    """
    n = 2**depth
    vals = []
    for on_count in range(n + 1):
        pattern = _duty_cycle(on_count, n)
        vals.append(rl_piecewise_constant(pattern, 0.0, u, rho, u))
    return Interval(min(vals), max(vals))


def _duty_cycle(on_count: int, n: int) -> np.ndarray:
    """+1/-1 pattern with `on_count` +1 segments spread evenly across n slots."""
    pattern = -np.ones(n)
    if on_count > 0:
        idx = np.floor(np.arange(on_count) * n / on_count).astype(int)
        pattern[idx] = 1.0
    return pattern
