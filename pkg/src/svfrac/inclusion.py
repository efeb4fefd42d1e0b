"""Caputo fractional differential inclusions via the integral-inclusion form.

The inclusion of order alpha in (1, 2) with initial value and slope is solved
on its equivalent integral form by Picard iteration: at each sweep a policy
(lower / upper / midpoint endpoint of the right-hand side) selects a
single-valued integrand, which is fractionally integrated by the exact
product quadrature. Successive approximation converges when the declared
Lipschitz constant of the field makes the integral operator a contraction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .gridmap import GridMap
from .interval import Interval
from .rl import gamma_fn, rl_weight_matrix

POLICIES = ("lower", "upper", "midpoint")

_RHS_BUILTINS = {}


def rhs_builtin(name):
    def register(factory):
        _RHS_BUILTINS[name] = factory
        return factory

    return register


@rhs_builtin("constant")
def _rhs_constant(lo: float = 1.0, hi: float | None = None):
    hi = lo if hi is None else hi
    box = Interval(lo, hi)
    return lambda t, u: box


@rhs_builtin("symmetric")
def _rhs_symmetric(k: float = 1.0):
    box = Interval(-k, k)
    return lambda t, u: box


@rhs_builtin("time_identity")
def _rhs_time_identity(width: float = 0.0):
    return lambda t, u: Interval(t - width, t + width)


@rhs_builtin("affine")
def _rhs_affine(p: float = 0.0, q_lo: float = 0.0, q_hi: float = 0.0):
    return lambda t, u: Interval(p * u + q_lo, p * u + q_hi)


@dataclass
class CaputoProblem:
    """Data of the fractional inclusion of order alpha in (1, 2)."""

    alpha: float
    t0: float
    T: float
    u0: float
    u1: float
    rhs: Callable[[float, float], Interval]
    rhs_lipschitz_u: float = 0.0

    def __post_init__(self):
        if not 1.0 < self.alpha < 2.0:
            raise ValueError(f"order alpha must lie in (1, 2), got {self.alpha}")
        if not self.t0 < self.T:
            raise ValueError(f"time domain requires t0 < T, got [{self.t0}, {self.T}]")
        if self.rhs_lipschitz_u < 0:
            raise ValueError("declared Lipschitz constant must be nonnegative")

    def contraction_factor(self) -> float:
        return (
            self.rhs_lipschitz_u
            * (self.T - self.t0) ** self.alpha
            / gamma_fn(self.alpha + 1.0)
        )

    @classmethod
    def from_json(cls, obj: dict) -> "CaputoProblem":
        rhs_spec = obj["rhs"]
        kind = rhs_spec["kind"]
        if kind not in _RHS_BUILTINS:
            raise ValueError(
                f"unknown rhs kind {kind!r}; known: {sorted(_RHS_BUILTINS)}"
            )
        rhs = _RHS_BUILTINS[kind](**rhs_spec.get("params", {}))
        return cls(
            alpha=float(obj["alpha"]),
            t0=float(obj["t0"]),
            T=float(obj["T"]),
            u0=float(obj["u0"]),
            u1=float(obj["u1"]),
            rhs=rhs,
            rhs_lipschitz_u=float(obj.get("lipschitz_u", 0.0)),
        )


@dataclass
class Trajectory:
    ts: np.ndarray
    us: np.ndarray
    iterations_used: int
    residual: float

    def to_csv(self) -> str:
        lines = ["t,u"]
        for t, u in zip(self.ts, self.us):
            lines.append(f"{t:.12g},{u:.12g}")
        return "\n".join(lines) + "\n"


class NonConvergenceError(RuntimeError):
    """Picard iteration failed to reach tolerance within max_iter sweeps."""

    def __init__(self, residuals: list[float], max_iter: int, tol: float):
        self.residuals = residuals
        super().__init__(
            f"no convergence after {max_iter} iterations: last residual "
            f"{residuals[-1]:.3e} > tol {tol:.3e}"
        )


def _policy_values(p: CaputoProblem, ts: np.ndarray, us: np.ndarray, policy: str) -> np.ndarray:
    out = np.empty(ts.size)
    for i, (t, u) in enumerate(zip(ts, us)):
        box = p.rhs(float(t), float(u))
        if policy == "lower":
            out[i] = box.lo
        elif policy == "upper":
            out[i] = box.hi
        else:
            out[i] = box.midpoint
    return out


def solve_with_policy(
    p: CaputoProblem,
    policy: str = "midpoint",
    n: int = 256,
    max_iter: int = 50,
    tol: float = 1e-10,
) -> Trajectory:
    """Picard iteration on the integral form with a fixed endpoint policy.

    The integrand is sampled at the grid nodes and treated as piecewise
    linear, the same representation-class approximation used everywhere else.
    Non-convergence raises NonConvergenceError carrying the residual history.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}; known: {POLICIES}")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.contraction_factor() >= 1.0:
        warnings.warn(
            "declared Lipschitz constant gives contraction factor "
            f"{p.contraction_factor():.3g} >= 1; Picard iteration may diverge",
            stacklevel=2,
        )
    ts = np.linspace(p.t0, p.T, n + 1)
    w = rl_weight_matrix(p.t0, p.T, n, p.alpha)
    init = p.u0 + p.u1 * (ts - p.t0)
    us = init.copy()
    residuals: list[float] = []
    for it in range(1, max_iter + 1):
        v = _policy_values(p, ts, us, policy)
        nxt = init + w @ v
        res = float(np.abs(nxt - us).max())
        residuals.append(res)
        us = nxt
        if res <= tol:
            return Trajectory(ts=ts, us=us, iterations_used=it, residual=res)
    raise NonConvergenceError(residuals, max_iter, tol)


def rhs_monotone_in_u(p: CaputoProblem, n_t: int = 17, n_u: int = 17, span: float = 10.0) -> bool:
    """Probe whether both endpoint functions of the field are nondecreasing
    in u on a sample grid; the funnel is a guaranteed enclosure of
    policy-constant solutions only in that case."""
    ts = np.linspace(p.t0, p.T, n_t)
    us = np.linspace(p.u0 - span, p.u0 + span, n_u)
    for t in ts:
        los = [p.rhs(float(t), float(u)).lo for u in us]
        his = [p.rhs(float(t), float(u)).hi for u in us]
        if np.any(np.diff(los) < -1e-12) or np.any(np.diff(his) < -1e-12):
            return False
    return True


def solution_funnel(
    p: CaputoProblem, n: int = 256, max_iter: int = 50, tol: float = 1e-10
) -> GridMap:
    """Envelope of the lower-policy and upper-policy trajectories.

    This is an envelope of policy trajectories, not a certified reachable
    set. A warning is issued when the monotonicity probe fails and the
    enclosure property is therefore not guaranteed.
    """
    low = solve_with_policy(p, "lower", n, max_iter, tol)
    high = solve_with_policy(p, "upper", n, max_iter, tol)
    if not rhs_monotone_in_u(p):
        warnings.warn(
            "rhs endpoints are not nondecreasing in u on the probe grid; "
            "the funnel is not a guaranteed enclosure",
            stacklevel=2,
        )
    lo = np.minimum(low.us, high.us)
    hi = np.maximum(low.us, high.us)
    return GridMap(p.t0, p.T, lo, hi)


def funnel_to_csv(g: GridMap) -> str:
    lines = ["t,lo,hi"]
    for t, lo, hi in zip(g.nodes, g.lo, g.hi):
        lines.append(f"{t:.12g},{lo:.12g},{hi:.12g}")
    return "\n".join(lines) + "\n"
