"""Continuous-flow and base-homeomorphism contracts, piecewise-linear
reparametrizations, and finite-horizon orbit classification.

Every "for all t" condition from the underlying theory is checked on a finite
horizon with an explicit step; reports carry the horizon and tolerance used.
"""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

from .util import DomainError, grid


class FlowSystem(ABC):
    """One-parameter flow on a compact metric space, at desk scale.

    Implementations may additionally expose optional hooks used by the search
    routines: ``propose_shadows(chain)``, ``entropy_sample(t, eps)``,
    ``perturb_point(p, delta, rng)``, ``encode_point/decode_point``.
    """

    tol_flow: float = 1e-6

    @abstractmethod
    def evaluate(self, p, t: float):
        """The point time t along the orbit of p."""

    @abstractmethod
    def dist(self, p, q) -> float:
        """Metric of the phase space."""

    @abstractmethod
    def net(self, eps: float):
        """A finite eps-net of the phase space (deterministic order)."""


class Homeomorphism(ABC):
    """Invertible base map with its metric; the discrete-time contract."""

    lipschitz_bound: float = 1.0

    @abstractmethod
    def forward(self, p):
        ...

    @abstractmethod
    def backward(self, p):
        ...

    @abstractmethod
    def dist(self, p, q) -> float:
        ...

    @abstractmethod
    def net(self, eps: float):
        ...

    def iterate(self, p, k: int):
        step = self.forward if k >= 0 else self.backward
        for _ in range(abs(k)):
            p = step(p)
        return p


@dataclass(frozen=True)
class Reparametrization:
    """Strictly increasing piecewise-linear time change fixing the origin.

    Interpolates linearly between knots and extrapolates with slope 1 beyond
    the first and last knot.
    """

    knots: tuple

    def __post_init__(self):
        ks = tuple((float(a), float(b)) for a, b in self.knots)
        ks = tuple(sorted(ks))
        if len(ks) < 1:
            raise DomainError("need at least one knot")
        for (a0, b0), (a1, b1) in zip(ks, ks[1:]):
            if not (a1 > a0 and b1 > b0):
                raise DomainError("knots must be strictly increasing in both coordinates")
        if not any(a == 0.0 and b == 0.0 for a, b in ks):
            raise DomainError("a knot (0, 0) is required")
        object.__setattr__(self, "knots", ks)

    @classmethod
    def identity(cls) -> "Reparametrization":
        return cls(((0.0, 0.0),))

    @classmethod
    def from_slope(cls, slope: float, span: float = 1.0) -> "Reparametrization":
        """Linear map h(t) = slope * t realized on [-span, span]."""
        if slope <= 0:
            raise DomainError("slope must be positive")
        return cls(((-span, -span * slope), (0.0, 0.0), (span, span * slope)))

    def __call__(self, t: float) -> float:
        ks = self.knots
        if t <= ks[0][0]:
            return ks[0][1] + (t - ks[0][0])
        if t >= ks[-1][0]:
            return ks[-1][1] + (t - ks[-1][0])
        for (a0, b0), (a1, b1) in zip(ks, ks[1:]):
            if a0 <= t <= a1:
                w = (t - a0) / (a1 - a0)
                return b0 + w * (b1 - b0)
        raise AssertionError("unreachable")

    def slopes(self):
        """Slopes of the interior segments (extrapolation has slope 1)."""
        return tuple((b1 - b0) / (a1 - a0)
                     for (a0, b0), (a1, b1) in zip(self.knots, self.knots[1:]))

    def to_json(self):
        return [[a, b] for a, b in self.knots]

    @classmethod
    def from_json(cls, obj) -> "Reparametrization":
        return cls(tuple((a, b) for a, b in obj))


def rep_membership(h: Reparametrization, eps: float) -> bool:
    """Whether every difference quotient of h is within eps of 1.

    For piecewise-linear maps with slope-1 extrapolation the quotients are
    convex combinations of segment slopes, so the check is exact and finite.
    """
    slack = 1e-12
    return all(abs(s - 1.0) <= eps + slack for s in h.slopes())


def slope_ladder(eps: float, size: int = 9):
    """Finite ladder of linear time changes with slopes in [1-eps, 1+eps]."""
    if size < 1:
        raise DomainError("ladder size must be >= 1")
    if size == 1:
        return (1.0,)
    return tuple(1.0 - eps + 2.0 * eps * i / (size - 1) for i in range(size))


@dataclass(frozen=True)
class CriticalReport:
    kind: str               # "singular" | "periodic" | "non-critical"
    tolerance: float
    horizon: float
    period: Optional[float] = None

    def to_json(self):
        return {"kind": self.kind, "period": self.period,
                "tolerance": self.tolerance, "horizon": self.horizon}

    @classmethod
    def from_json(cls, obj) -> "CriticalReport":
        return cls(obj["kind"], obj["tolerance"], obj["horizon"], obj["period"])


def classify_point(F: FlowSystem, p, horizon: float, tol: float,
                   dt: float = None) -> CriticalReport:
    """Classify p as singular / periodic / non-critical at finite resolution.

    Singular: no sampled displacement above tol over [0, horizon].
    Periodic: least sampled T in (tol, horizon] returning below tol, with the
    two orbits staying tol-close over one more period.
    """
    if horizon <= tol:
        raise DomainError("horizon must exceed tol")
    if dt is None:
        dt = max(tol / 2.0, horizon / 4000.0)
    ts = grid(dt, horizon, dt)
    disp = []
    cur = p
    for _ in ts:
        cur = F.evaluate(cur, dt)
        disp.append(F.dist(cur, p))
    if max(disp) < tol:
        return CriticalReport("singular", tol, horizon)
    for T, d0 in zip(ts, disp):
        if T <= tol or d0 >= tol:
            continue
        # sustained closeness of the orbit to its T-translate over one period
        ok = True
        a, b = p, F.evaluate(p, T)
        u = 0.0
        while u <= T + 1e-12:
            if F.dist(a, b) >= tol:
                ok = False
                break
            a = F.evaluate(a, dt)
            b = F.evaluate(b, dt)
            u += dt
        if ok:
            return CriticalReport("periodic", tol, horizon, period=T)
    return CriticalReport("non-critical", tol, horizon)


def nonwandering_witness(F: FlowSystem, p, eta: float, t_min: float,
                         horizon: float, dt: float = 0.5):
    """Search for (x_a, t_a) with x_a eta-close to p returning eta-close.

    Candidates are p itself plus the eta/2-net points inside the eta-ball;
    times scan the grid (t_min, horizon].  Deterministic: earliest time wins,
    candidates in net order.  Returns None when nothing is found.
    """
    if eta <= 0 or horizon <= t_min:
        raise DomainError("need eta > 0 and horizon > t_min")
    cands = [p] + [q for q in F.net(eta / 2.0) if F.dist(q, p) < eta]
    states = [F.evaluate(s, t_min) for s in cands]
    n_steps = int(math.ceil((horizon - t_min) / dt - 1e-9))
    for k in range(1, n_steps + 1):
        t = t_min + k * dt
        if t > horizon + 1e-12:
            break
        states = [F.evaluate(s, dt) for s in states]
        for x, s in zip(cands, states):
            if F.dist(s, p) < eta:
                return (x, t)
    return None
