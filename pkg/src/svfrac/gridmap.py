"""Interval-valued functions on [a, b] with piecewise-linear endpoint functions.

A GridMap stores interval values at the nodes of a uniform grid; both
endpoint functions are linearly interpolated between nodes, so the
ordering lo <= hi and boundedness hold on the whole domain automatically.
A Selection is a single-valued piecewise-linear function on the same grid.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np

from .interval import Interval

_BUILTIN_DOC = {
    "constant": "constant interval [params: lo, hi]",
    "sym_linear": "[-u, u] scaled by params: slope (default 1)",
    "affine": "[c_lo + s_lo*u, c_hi + s_hi*u]",
    "abs_envelope": "[-|u - center|, |u - center|]",
    "sin_envelope": "[-amp + off*sin(freq*u), amp + off*cos(freq*u)]",
    "hat": "[0, hat(u)] with peak at the midpoint [params: height]",
}


class GridMap:
    """Interval-valued map on [a, b] sampled at n_segments + 1 uniform nodes."""

    def __init__(self, a: float, b: float, lo: Sequence[float], hi: Sequence[float]):
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"domain requires finite a < b, got [{a}, {b}]")
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        if lo.ndim != 1 or lo.shape != hi.shape or lo.size < 2:
            raise ValueError("lo and hi must be equal-length 1-d sequences with >= 2 nodes")
        if not (np.isfinite(lo).all() and np.isfinite(hi).all()):
            raise ValueError("node values must be finite")
        if (lo > hi).any():
            bad = int(np.argmax(lo > hi))
            raise ValueError(f"lo > hi at node {bad}: [{lo[bad]}, {hi[bad]}]")
        self.a = float(a)
        self.b = float(b)
        self.lo = lo
        self.hi = hi
        self.lo.setflags(write=False)
        self.hi.setflags(write=False)

    @property
    def n_segments(self) -> int:
        return self.lo.size - 1

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.a, self.b, self.lo.size)

    @property
    def step(self) -> float:
        return (self.b - self.a) / self.n_segments

    def same_grid(self, other) -> bool:
        return (
            self.a == other.a
            and self.b == other.b
            and self.n_segments == other.n_segments
        )

    def interval_at(self, i: int) -> Interval:
        return Interval(float(self.lo[i]), float(self.hi[i]))

    def eval(self, u: float) -> Interval:
        if not self.a <= u <= self.b:
            raise ValueError(f"evaluation point {u} outside [{self.a}, {self.b}]")
        nodes = self.nodes
        return Interval(
            float(np.interp(u, nodes, self.lo)),
            float(np.interp(u, nodes, self.hi)),
        )

    def sup_bound(self) -> float:
        """sup over [a,b] of sup_{x in F(u)} |x|.

        Exact: |linear| attains its maximum on a segment at an endpoint.
        """
        return float(max(np.abs(self.lo).max(), np.abs(self.hi).max()))

    def extremal_lower(self) -> "Selection":
        return Selection(self.a, self.b, self.lo.copy())

    def extremal_upper(self) -> "Selection":
        return Selection(self.a, self.b, self.hi.copy())

    def random_selection(self, seed: int) -> "Selection":
        """Node values drawn uniformly from [lo_i, hi_i]; pure in (self, seed)."""
        rng = np.random.default_rng(seed)
        y = self.lo + rng.random(self.lo.size) * (self.hi - self.lo)
        return Selection(self.a, self.b, y)

    def scaled(self, c: float) -> "GridMap":
        if c < 0:
            raise ValueError("scale factor must be nonnegative")
        return GridMap(self.a, self.b, c * self.lo, c * self.hi)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_functions(
        cls,
        lo_fn: Callable[[float], float],
        hi_fn: Callable[[float], float],
        a: float,
        b: float,
        n_segments: int,
    ) -> "GridMap":
        u = np.linspace(a, b, n_segments + 1)
        return cls(a, b, [lo_fn(x) for x in u], [hi_fn(x) for x in u])

    @classmethod
    def from_builtin(
        cls, kind: str, a: float = 0.0, b: float = 1.0, n_segments: int = 256, **params
    ) -> "GridMap":
        u = np.linspace(a, b, n_segments + 1)
        if kind == "constant":
            lo = float(params.get("lo", -1.0))
            hi = float(params.get("hi", 1.0))
            return cls(a, b, np.full(u.size, lo), np.full(u.size, hi))
        if kind == "sym_linear":
            s = float(params.get("slope", 1.0))
            return cls(a, b, -s * u, s * u)
        if kind == "affine":
            c_lo = float(params.get("c_lo", 0.0))
            s_lo = float(params.get("s_lo", 0.5))
            c_hi = float(params.get("c_hi", 1.0))
            s_hi = float(params.get("s_hi", 1.0))
            return cls(a, b, c_lo + s_lo * u, c_hi + s_hi * u)
        if kind == "abs_envelope":
            c = float(params.get("center", 0.5 * (a + b)))
            return cls(a, b, -np.abs(u - c), np.abs(u - c))
        if kind == "sin_envelope":
            amp = float(params.get("amp", 1.0))
            off = float(params.get("off", 0.3))
            freq = float(params.get("freq", 2.0 * math.pi))
            return cls(a, b, -amp + off * np.sin(freq * u), amp + off * np.cos(freq * u))
        if kind == "hat":
            h = float(params.get("height", 1.0))
            mid = 0.5 * (a + b)
            hat = h * (1.0 - np.abs(u - mid) / (0.5 * (b - a)))
            return cls(a, b, np.zeros(u.size), hat)
        raise ValueError(f"unknown builtin map kind {kind!r}; known: {sorted(_BUILTIN_DOC)}")

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "segments": self.n_segments,
            "kind": "samples",
            "lo": [float(x) for x in self.lo],
            "hi": [float(x) for x in self.hi],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GridMap":
        a = float(obj["a"])
        b = float(obj["b"])
        n = int(obj["segments"])
        kind = obj.get("kind", "samples")
        if kind == "samples":
            lo = obj["lo"]
            hi = obj["hi"]
            if len(lo) != n + 1 or len(hi) != n + 1:
                raise ValueError("lo/hi length must be segments + 1")
            return cls(a, b, lo, hi)
        return cls.from_builtin(kind, a, b, n, **obj.get("params", {}))

    def to_csv(self) -> str:
        lines = ["u,lo,hi"]
        for u, lo, hi in zip(self.nodes, self.lo, self.hi):
            lines.append(f"{u:.12g},{lo:.12g},{hi:.12g}")
        return "\n".join(lines) + "\n"


class Selection:
    """Single-valued piecewise-linear function on the same uniform grid as a GridMap."""

    def __init__(self, a: float, b: float, values: Sequence[float]):
        values = np.asarray(values, dtype=float)
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"domain requires finite a < b, got [{a}, {b}]")
        if values.ndim != 1 or values.size < 2 or not np.isfinite(values).all():
            raise ValueError("selection values must be a finite 1-d sequence with >= 2 nodes")
        self.a = float(a)
        self.b = float(b)
        self.values = values
        self.values.setflags(write=False)

    @property
    def n_segments(self) -> int:
        return self.values.size - 1

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.a, self.b, self.values.size)

    def eval(self, u: float) -> float:
        if not self.a <= u <= self.b:
            raise ValueError(f"evaluation point {u} outside [{self.a}, {self.b}]")
        return float(np.interp(u, self.nodes, self.values))

    def is_selection_of(self, f: GridMap, tol: float = 0.0) -> bool:
        """Node-wise membership; implies membership on all of [a,b] because
        the selection and both endpoint functions are linear on each segment.
        Cross-grid attachment is an error, not False."""
        if not f.same_grid(self):
            raise ValueError("selection and map must share the same grid")
        return bool(
            np.all(f.lo - tol <= self.values) and np.all(self.values <= f.hi + tol)
        )

    def variation(self) -> float:
        """Total variation; exact for piecewise-linear functions."""
        return float(np.abs(np.diff(self.values)).sum())

    def lipschitz(self) -> float:
        """Smallest Lipschitz constant; exact for piecewise-linear functions."""
        du = (self.b - self.a) / self.n_segments
        return float(np.abs(np.diff(self.values)).max() / du)


def variation_selection(f: Selection) -> float:
    return f.variation()


def lipschitz_selection(f: Selection) -> float:
    return f.lipschitz()
