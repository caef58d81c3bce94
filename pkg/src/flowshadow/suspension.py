"""Suspension spaces over a base homeomorphism: quotient flow, path metric,
and singular time changes.

The metric follows the classical construction for suspensions: fibers are
normalized to length 1, horizontal distance at level u interpolates the base
metric between consecutive base iterates, and the distance is the length of
the best chain of vertical and horizontal moves.  The base metric is capped
at 1; with base diameter <= 1 a single horizontal segment is optimal, which
makes the path infimum an exact finite minimum (levels only need to be probed
at the two endpoint levels and the integers between them, and the net number
of roof crossings is bounded).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .flow import FlowSystem, Homeomorphism
from .util import DomainError, UnsupportedError

WRAP_TOL = 1e-9
_MAX_CROSSINGS = 3


@dataclass(frozen=True)
class RoofFunction:
    """Positive return-time function over the base, with certified bounds."""

    fn: Callable
    r_min: float
    r_max: float

    def __call__(self, x) -> float:
        return self.fn(x)

    @classmethod
    def constant(cls, value: float) -> "RoofFunction":
        if value <= 0:
            raise DomainError("roof must be positive")
        return cls((lambda _x, _v=value: _v), value, value)

    @property
    def is_constant(self) -> bool:
        return self.r_min == self.r_max


@dataclass(frozen=True)
class SuspensionPoint:
    """Point (base, height) with height normalized into [0, roof(base))."""

    base: object
    height: float

    def __repr__(self):
        return f"SuspensionPoint({self.base!r}, {self.height:.6g})"


class SuspensionFlow(FlowSystem):
    """Unit-speed vertical flow on the quotient of base x [0, roof]."""

    def __init__(self, base: Homeomorphism, roof: RoofFunction, name: str = ""):
        if roof.r_min <= 0:
            raise DomainError("roof must be bounded away from zero")
        self.base = base
        self.roof = roof
        self.name = name
        self._net_cache = {}

    # -- flow --------------------------------------------------------------

    def point(self, base, height: float = 0.0) -> SuspensionPoint:
        return self._normalize(base, height)

    def _normalize(self, x, tau: float) -> SuspensionPoint:
        r = self.roof(x)
        while tau >= r - WRAP_TOL:
            tau -= r
            x = self.base.forward(x)
            r = self.roof(x)
        while tau < -WRAP_TOL:
            x = self.base.backward(x)
            r = self.roof(x)
            tau += r
        if tau < 0.0:
            tau = 0.0
        return SuspensionPoint(x, tau)

    def evaluate(self, p: SuspensionPoint, t: float) -> SuspensionPoint:
        return self._normalize(p.base, p.height + t)

    # -- metric ------------------------------------------------------------

    def _base_dist(self, x, y) -> float:
        d = self.base.dist(x, y)
        return d if d < 1.0 else 1.0

    def _iter_cached(self, cache, x, m):
        if m not in cache:
            if m > 0:
                cache[m] = self.base.forward(self._iter_cached(cache, x, m - 1))
            else:
                cache[m] = self.base.backward(self._iter_cached(cache, x, m + 1))
        return cache[m]

    def dist(self, p: SuspensionPoint, q: SuspensionPoint) -> float:
        xh = p.height / self.roof(p.base)
        yh = q.height / self.roof(q.base)
        cx = {0: p.base}
        best = math.inf
        for k in range(-_MAX_CROSSINGS, _MAX_CROSSINGS + 1):
            q_level = yh + k
            lo, hi = (xh, q_level) if xh <= q_level else (q_level, xh)
            vert_min = hi - lo
            if vert_min >= best:
                continue
            yk = self.base.iterate(q.base, -k)
            cy = {0: yk}
            levels = {xh, q_level}
            m = math.floor(lo) + 1
            while m < hi:
                levels.add(float(m))
                m += 1
            for u in levels:
                vert = abs(xh - u) + abs(u - q_level)
                if vert >= best:
                    continue
                mu = math.floor(u)
                frac = u - mu
                d0 = self._base_dist(self._iter_cached(cx, p.base, mu),
                                     self._iter_cached(cy, yk, mu))
                if frac > 1e-15:
                    d1 = self._base_dist(self._iter_cached(cx, p.base, mu + 1),
                                         self._iter_cached(cy, yk, mu + 1))
                    rho = (1.0 - frac) * d0 + frac * d1
                else:
                    rho = d0
                cost = vert + rho
                if cost < best:
                    best = cost
        return best

    # -- net ----------------------------------------------------------------

    def net(self, eps: float):
        key = round(eps, 12)
        if key not in self._net_cache:
            lip = max(1.0, getattr(self.base, "lipschitz_bound", 1.0))
            base_eps = eps / (2.0 * lip)
            hstep = eps / 2.0
            n_levels = max(1, int(math.ceil(1.0 / hstep)))
            pts = []
            for y in self.base.net(base_eps):
                r = self.roof(y)
                for j in range(n_levels):
                    h = (j / n_levels) * r
                    pts.append(SuspensionPoint(y, h))
            self._net_cache[key] = pts
        return self._net_cache[key]

    # -- optional hooks ------------------------------------------------------

    def perturb_point(self, p: SuspensionPoint, delta: float, rng):
        """Perturb the base coordinate within the delta-ball, keeping height."""
        return SuspensionPoint(self.base.perturb(p.base, delta, rng), p.height)

    def propose_shadows(self, chain):
        """Structure-aware tracking candidates for a pseudo-orbit.

        Valid when all entries sit at a common height with times that are
        integer multiples of a constant roof; delegates to the base system.
        """
        if not self.roof.is_constant or not hasattr(self.base, "propose_base_shadows"):
            return []
        r = self.roof.r_min
        h0 = chain.entries[0][0].height
        bases, steps = [], []
        for (pt, t) in chain.entries:
            if abs(pt.height - h0) > 1e-7:
                return []
            m = t / r
            mi = int(round(m))
            if mi < 1 or abs(m - mi) > 1e-6:
                return []
            bases.append(pt.base)
            steps.append(mi)
        cands = self.base.propose_base_shadows(bases, steps, chain.periodic)
        return [SuspensionPoint(c, h0) for c in cands]

    def entropy_sample(self, t: float, eps: float):
        """Sample set rich in forward separation for entropy lower bounds."""
        if hasattr(self.base, "entropy_base_sample"):
            return [SuspensionPoint(b, 0.0)
                    for b in self.base.entropy_base_sample(t, eps, self.roof.r_min)]
        return self.net(max(eps, 0.2))

    def separation_engine(self, points, t: float, eps: float):
        if self.roof.is_constant and hasattr(self.base, "base_separation_engine"):
            heights = [p.height for p in points]
            if all(abs(h - heights[0]) <= 1e-12 for h in heights) and heights and heights[0] == 0.0:
                us = list(range(0, int(math.floor(t / self.roof.r_min)) + 1))
                return self.base.base_separation_engine([p.base for p in points], us, eps)
        return None

    # -- serialization -------------------------------------------------------

    def encode_point(self, p: SuspensionPoint):
        return {"base": self.base.encode_point(p.base), "height": p.height}

    def decode_point(self, obj) -> SuspensionPoint:
        return SuspensionPoint(self.base.decode_point(obj["base"]), obj["height"])


def suspend_flow(base: Homeomorphism, roof: RoofFunction, name: str = "") -> SuspensionFlow:
    """The suspension flow of the base map under the given roof."""
    return SuspensionFlow(base, roof, name=name)


@dataclass(frozen=True)
class SpeedProfile:
    """Nonnegative speed over the suspension space with a finite zero set."""

    fn: Callable
    zero_points: tuple

    def __call__(self, p) -> float:
        v = self.fn(p)
        if v < 0:
            raise DomainError("speed must be nonnegative")
        return v


class SingularSuspensionFlow(FlowSystem):
    """Suspension trajectories reparametrized by a speed that may vanish.

    Points of the zero set are fixed.  Position is advanced by integrating
    the speed along the underlying unit-speed trajectory with a midpoint rule
    of configurable step.  When ``slow_radius`` is given it promises that the
    speed equals 1 (and never exceeds 1 anywhere) outside the slow_radius
    balls around the zero points, which lets segments that cannot reach the
    slow region take the exact unit-speed shortcut.
    """

    def __init__(self, regular: SuspensionFlow, speed: SpeedProfile,
                 quad_step: float = 0.01, slow_radius: float = None, name: str = ""):
        self.regular = regular
        self.speed = speed
        self.quad_step = quad_step
        self.name = name
        # radius of the ball (around zero points) outside which speed == 1
        self._slow_radius = slow_radius
        self.tol_flow = 1e-2

    def _min_zero_dist(self, p) -> float:
        if not self.speed.zero_points:
            return math.inf
        return min(self.regular.dist(p, z) for z in self.speed.zero_points)

    def evaluate(self, p, t: float):
        remaining = t
        cur = p
        guard = 0
        while abs(remaining) > 1e-12:
            guard += 1
            if guard > 10_000_000:
                raise RuntimeError("singular integration did not terminate")
            v0 = self.speed(cur)
            if v0 == 0.0:
                return cur
            if self._slow_radius is not None:
                margin = self._min_zero_dist(cur) - self._slow_radius
                reach = margin * self.regular.roof.r_min
                if reach > 0 and abs(remaining) <= reach:
                    return self.regular.evaluate(cur, remaining)
                if reach > 0:
                    step = math.copysign(reach, remaining)
                    cur = self.regular.evaluate(cur, step)
                    remaining -= step
                    continue
            h = math.copysign(min(self.quad_step, abs(remaining)), remaining)
            mid = self.regular.evaluate(cur, 0.5 * h * v0)
            v1 = self.speed(mid)
            cur = self.regular.evaluate(cur, h * v1)
            remaining -= h
        return cur

    def dist(self, p, q) -> float:
        return self.regular.dist(p, q)

    def net(self, eps: float):
        return self.regular.net(eps)

    def perturb_point(self, p, delta: float, rng):
        return self.regular.perturb_point(p, delta, rng)

    def propose_shadows(self, chain):
        return self.regular.propose_shadows(chain)

    def encode_point(self, p):
        return self.regular.encode_point(p)

    def decode_point(self, obj):
        return self.regular.decode_point(obj)

    def regular_model(self) -> SuspensionFlow:
        return self.regular


def singular_suspend(base: Homeomorphism, roof: RoofFunction, speed: SpeedProfile,
                     quad_step: float = 0.01, slow_radius: float = None,
                     name: str = "") -> SingularSuspensionFlow:
    """Singular time change of the suspension of ``base`` under ``roof``."""
    if roof.r_min <= 0:
        raise DomainError("roof must be positive")
    regular = SuspensionFlow(base, roof, name=name)
    for z in speed.zero_points:
        if speed(z) != 0.0:
            raise DomainError("declared zero point has nonzero speed")
    return SingularSuspensionFlow(regular, speed, quad_step=quad_step,
                                  slow_radius=slow_radius, name=name)


def suspension_entropy_reference(alphabet_size: int, roof: RoofFunction) -> float:
    """Reference growth rate log(alphabet)/roof for a constant-roof full shift."""
    if alphabet_size < 1:
        raise DomainError("alphabet_size must be positive")
    if not roof.is_constant:
        raise UnsupportedError("reference value supported for constant roofs only")
    return math.log(alphabet_size) / roof.r_min
