"""Concrete base systems and the fixture registry.

Bases: full shifts and finite-type shifts with the weighted symbol metric, a
linear hyperbolic torus map, and its blow-up where the fixed point is exploded
to a disc on which the map is the identity.  Suspensions (regular and
singular) of these bases supply every hypothesis class exercised downstream.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import symbolic
from .flow import Homeomorphism
from .suspension import (RoofFunction, SingularSuspensionFlow, SpeedProfile,
                         SuspensionFlow, SuspensionPoint, singular_suspend,
                         suspend_flow)
from .symbolic import Subshift, SymbolSequence
from .util import DomainError

# -- symbolic base ----------------------------------------------------------


class ShiftSystem(Homeomorphism):
    """Shift dynamics on a subshift, with the weighted symbol metric."""

    lipschitz_bound = 2.0

    def __init__(self, subshift: Subshift, tail_tol: float = 1e-9):
        self.subshift = subshift
        self.tail_tol = tail_tol
        self._net_cache = {}

    def forward(self, s: SymbolSequence) -> SymbolSequence:
        return s.shifted(1)

    def backward(self, s: SymbolSequence) -> SymbolSequence:
        return s.shifted(-1)

    def iterate(self, s: SymbolSequence, k: int) -> SymbolSequence:
        return s.shifted(k)

    def dist(self, s, t) -> float:
        return symbolic.distance(s, t, self.tail_tol)

    def net(self, eps: float):
        """Periodic completions of all admissible central blocks of radius m."""
        key = round(eps, 12)
        if key not in self._net_cache:
            k = self.subshift.alphabet_size
            m = max(1, math.ceil(math.log2(2 * max(1, k - 1) / eps)))
            pts = []
            for w in self.subshift.words(2 * m + 1):
                seq = self.subshift.periodic_completion(w)
                pts.append(seq.shifted(m))  # anchor block at [-m, m]
            self._net_cache[key] = pts
        return self._net_cache[key]

    def perturb(self, s: SymbolSequence, delta: float, rng) -> SymbolSequence:
        """Random admissible perturbation within the delta-ball (tail flips)."""
        if delta <= 0:
            return s
        k = self.subshift.alphabet_size
        m = max(1, math.ceil(math.log2(4 * max(1, k - 1) / delta)))
        span = m + 8
        word = list(s.symbols(-span, span + 1))
        for j in range(len(word)):
            i = j - span
            if abs(i) >= m and rng.random() < 0.5:
                word[j] = int(rng.integers(0, k))
        cand = SymbolSequence.with_tails(word, -span, word[0], word[-1], k)
        if not self.subshift.allows_sequence(cand):
            return s
        return cand

    # -- hooks used by sections / shadowing / entropy ------------------------

    def partition(self, max_diam: float):
        """Central-cylinder cells of diameter <= max_diam (clopen partition)."""
        k = self.subshift.alphabet_size
        if max_diam >= 2.0 * max(1, k - 1):
            m_lo, m_hi = 0, 1  # single-symbol cylinders [s_0]
        else:
            m = max(1, math.ceil(math.log2(2 * max(1, k - 1) / max_diam)))
            m_lo, m_hi = -m, m + 1
        # exact sup distance between sequences agreeing on [m_lo, m_hi)
        diam = (k - 1) * (2.0 ** m_lo + 2.0 ** (-m_hi + 1))
        cells = []
        for w in self.subshift.words(m_hi - m_lo):
            word = tuple(w)

            def member(s, _w=word, _lo=m_lo):
                return s.symbols(_lo, _lo + len(_w)) == _w

            sample = self.subshift.periodic_completion(word).shifted(-m_lo)
            cells.append({"label": "".join(map(str, word)), "member": member,
                          "samples": (sample,), "diam": diam})
        return cells

    def locate_cell(self, cells, s: SymbolSequence):
        for idx, c in enumerate(cells):
            if c["member"](s):
                return idx
        return None

    def propose_base_shadows(self, bases, steps, periodic: bool):
        """Exact concatenation candidate: block i reads steps[i] symbols of bases[i]."""
        blocks = []
        for seq, n in zip(bases, steps):
            blocks.extend(seq.symbols(0, n))
        if not blocks:
            return []
        if periodic:
            cand = SymbolSequence.periodic(tuple(blocks), self.subshift.alphabet_size)
        else:
            pre = bases[0].symbols(-24, 0)
            post = bases[-1].symbols(steps[-1], steps[-1] + 24)
            word = tuple(pre) + tuple(blocks) + tuple(post)
            cand = SymbolSequence.with_tails(word, -24, word[0], word[-1],
                                             self.subshift.alphabet_size)
        if not self.subshift.allows_sequence(cand):
            return []
        return [cand]

    def entropy_base_sample(self, t: float, eps: float, r_min: float):
        """Admissible words of length ceil(t / r_min) anchored at index 0."""
        L = max(1, int(math.ceil(t / r_min)))
        return [self.subshift.periodic_completion(w) for w in self.subshift.words(L)]

    def base_separation_engine(self, seqs, int_times, eps: float):
        """Vectorized pairwise separation checks for same-height samples."""
        n_trunc = symbolic.truncation_index(self.subshift.alphabet_size, 1e-9)
        lo = -n_trunc
        hi = n_trunc + max(int_times) + 1
        mat = np.array([s.symbols(lo, hi) for s in seqs], dtype=np.int16)
        weights = np.array([2.0 ** (-abs(i)) for i in range(-n_trunc, n_trunc + 1)])
        width = 2 * n_trunc + 1

        def separated_from(cand_idx, admitted_idx):
            """Boolean array: admitted rows separated from the candidate."""
            if not admitted_idx:
                return np.zeros(0, dtype=bool)
            adm = mat[admitted_idx]
            cand = mat[cand_idx]
            sep = np.zeros(len(admitted_idx), dtype=bool)
            for u in int_times:
                sl = slice(u, u + width)
                d = np.abs(adm[:, sl] - cand[sl]) @ weights
                np.minimum(d, 1.0, out=d)
                sep |= d >= eps
                if sep.all():
                    break
            return sep

        return separated_from

    def trace_candidates(self, points, windows, eps: float, filler: int = 0):
        """Spliced tracing candidate for window constraints (exact oracle).

        Copies each constrained block padded as far as the gaps to its
        neighbors allow (split evenly), filling the rest with ``filler``.
        """
        k = self.subshift.alphabet_size
        pad = max(1, math.ceil(math.log2(2 * max(1, k - 1) / eps)) + 1)
        lo = windows[0][0] - pad
        hi = windows[-1][1] + pad
        word = [filler] * (hi - lo + 1)
        n = len(windows)
        for idx, ((a, b), x) in enumerate(zip(windows, points)):
            left = pad if idx == 0 else min(pad, (a - windows[idx - 1][1]) // 2)
            right = pad if idx == n - 1 else min(pad, (windows[idx + 1][0] - b) // 2)
            for j in range(a - left, b + right + 1):
                word[j - lo] = x.symbol(j)
        cand = SymbolSequence.with_tails(word, lo, filler, filler, k)
        if not self.subshift.allows_sequence(cand):
            return []
        return [cand]

    def encode_point(self, s: SymbolSequence):
        return s.to_json()

    def decode_point(self, obj) -> SymbolSequence:
        return SymbolSequence.from_json(obj)


# -- torus base ---------------------------------------------------------------

CAT_MATRIX = np.array([[2, 1], [1, 1]], dtype=np.int64)
CAT_INVERSE = np.array([[1, -1], [-1, 2]], dtype=np.int64)


@dataclass(frozen=True)
class TorusPoint:
    """Point of the unit torus, coordinates normalized into [0, 1)."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", self.x % 1.0)
        object.__setattr__(self, "y", self.y % 1.0)

    @property
    def vec(self) -> np.ndarray:
        return np.array([self.x, self.y])

    def __repr__(self):
        return f"TorusPoint({self.x:.6g}, {self.y:.6g})"


def torus_dist(p: TorusPoint, q: TorusPoint) -> float:
    dx = (p.x - q.x + 0.5) % 1.0 - 0.5
    dy = (p.y - q.y + 0.5) % 1.0 - 0.5
    return math.hypot(dx, dy)


def cat_map(p: TorusPoint) -> TorusPoint:
    return TorusPoint(2 * p.x + p.y, p.x + p.y)


def cat_map_inverse(p: TorusPoint) -> TorusPoint:
    return TorusPoint(p.x - p.y, -p.x + 2 * p.y)


def _nearest_lift(p: TorusPoint) -> np.ndarray:
    """Representative of p in the square (-0.5, 0.5]^2."""
    return np.array([(p.x + 0.5) % 1.0 - 0.5, (p.y + 0.5) % 1.0 - 0.5])


class TorusSystem(Homeomorphism):
    """The linear hyperbolic automorphism of the torus."""

    lipschitz_bound = float((3 + math.sqrt(5)) / 2)

    def __init__(self, net_denominator_hint: int = None):
        self.net_denominator_hint = net_denominator_hint
        self._net_cache = {}

    def forward(self, p: TorusPoint) -> TorusPoint:
        return cat_map(p)

    def backward(self, p: TorusPoint) -> TorusPoint:
        return cat_map_inverse(p)

    def dist(self, p, q) -> float:
        return torus_dist(p, q)

    def _net_m(self, eps: float) -> int:
        m = max(2, math.ceil(1.0 / (eps * math.sqrt(2.0))))
        hint = self.net_denominator_hint
        if hint:
            m = ((m + hint - 1) // hint) * hint
        return m

    def net(self, eps: float):
        key = round(eps, 12)
        if key not in self._net_cache:
            m = self._net_m(eps)
            self._net_cache[key] = [TorusPoint(i / m, j / m)
                                    for i in range(m) for j in range(m)]
        return self._net_cache[key]

    def perturb(self, p: TorusPoint, delta: float, rng) -> TorusPoint:
        ang = rng.uniform(0.0, 2.0 * math.pi)
        rad = 0.8 * delta * math.sqrt(rng.uniform(0.0, 1.0))
        return TorusPoint(p.x + rad * math.cos(ang), p.y + rad * math.sin(ang))

    def partition(self, max_diam: float):
        m = max(1, math.ceil(math.sqrt(2.0) / max_diam))
        cells = []
        for i in range(m):
            for j in range(m):
                def member(p, _i=i, _j=j, _m=m):
                    return int(p.x * _m) % _m == _i and int(p.y * _m) % _m == _j

                sample = TorusPoint((i + 0.5) / m, (j + 0.5) / m)
                inner = TorusPoint((i + 0.5) / m, (j + 0.5) / m)
                cells.append({"label": f"cell({i},{j})", "member": member,
                              "samples": (sample, inner), "diam": math.sqrt(2.0) / m})
        return cells

    def locate_cell(self, cells, p: TorusPoint):
        m = int(round(math.sqrt(len(cells))))
        i = int(p.x * m) % m
        j = int(p.y * m) % m
        return i * m + j

    def _hyperbolic_split(self):
        lam = (3 + math.sqrt(5)) / 2
        mu = (3 - math.sqrt(5)) / 2
        # symmetric matrix: orthonormal eigenvectors
        u = np.array([1.0, (math.sqrt(5) - 1) / 2])
        u /= np.linalg.norm(u)
        s = np.array([-u[1], u[0]])
        return lam, mu, u, s

    def propose_base_shadows(self, bases, steps, periodic: bool):
        """Tracking candidate from the stable/unstable geometric-series solve.

        The jump sequence of the step-wise pseudo-orbit is summed against the
        contracting directions (backward along the unstable line, forward
        along the stable line), which is numerically stable for any length.
        """
        A = CAT_MATRIX.astype(float)
        lam, mu, u, s = self._hyperbolic_split()
        zs = []
        for b, n in zip(bases, steps):
            v = b.vec
            for _ in range(n):
                zs.append(v)
                v = (A @ v) % 1.0
        if not periodic:
            zs.append(v)
        N = len(zs) if periodic else len(zs) - 1
        if N < 1:
            return []
        jumps = []
        for k in range(N):
            z_next = zs[(k + 1) % len(zs)]
            raw = z_next - A @ zs[k]
            jumps.append((raw + 0.5) % 1.0 - 0.5)  # nearest lift
        eu = [float(u @ e) for e in jumps]
        es = [float(s @ e) for e in jumps]
        if periodic:
            # w_{k+1} = A w_k - e_k; closed periodic solution per eigenline
            pow_lam_N = lam ** (-N)
            u0 = sum(lam ** (-(j + 1)) * eu[j % N] for j in range(N)) / (1.0 - pow_lam_N)
            s_acc = 0.0
            for j in range(1, N + 1):
                s_acc += mu ** (j - 1) * es[(-j) % N]
                if mu ** j < 1e-18:
                    break
            s0 = -s_acc / (1.0 - mu ** N) if mu ** N > 1e-18 else -s_acc
        else:
            u0 = sum(lam ** (-(j + 1)) * eu[j] for j in range(N))
            s0 = 0.0
        w0 = u0 * u + s0 * s
        cand = zs[0] + w0
        return [TorusPoint(cand[0], cand[1])]

    def entropy_base_sample(self, t: float, eps: float, r_min: float):
        m = min(36, max(8, int(round(math.exp(0.5 * 0.9624 * t / r_min) / math.sqrt(eps)))))
        return [TorusPoint(i / m, j / m) for i in range(m) for j in range(m)]

    def base_separation_engine(self, points, int_times, eps: float):
        A = CAT_MATRIX.astype(float)
        vs = np.array([p.vec for p in points])
        cur = vs.copy()
        kmax = max(int_times)
        orbit_at = {0: cur}
        for k in range(1, kmax + 1):
            cur = (cur @ A.T) % 1.0
            orbit_at[k] = cur

        def separated_from(cand_idx, admitted_idx):
            if not admitted_idx:
                return np.zeros(0, dtype=bool)
            sep = np.zeros(len(admitted_idx), dtype=bool)
            for uT in int_times:
                d = orbit_at[uT][admitted_idx] - orbit_at[uT][cand_idx]
                d = (d + 0.5) % 1.0 - 0.5
                sep |= np.hypot(d[:, 0], d[:, 1]) >= eps
                if sep.all():
                    break
            return sep

        return separated_from

    def encode_point(self, p: TorusPoint):
        return {"torus": [p.x, p.y]}

    def decode_point(self, obj) -> TorusPoint:
        return TorusPoint(*obj["torus"])


# -- blown-up torus base -------------------------------------------------------

R_DISC = 0.015
COLLAR_RATIO = 3.0


@dataclass(frozen=True)
class BlownUpPoint:
    """Point of the torus with the fixed point exploded to a disc.

    The space is modeled on the torus itself: the inserted disc occupies the
    closed r_disc-ball around the old fixed point, its boundary circle playing
    the direction circle of the surgery.  ``region`` is exclusive: the disc
    when the nearest-zero lift has norm <= r_disc, the torus part otherwise.
    """

    coords: TorusPoint
    r_disc: float = R_DISC

    @classmethod
    def disc(cls, radius: float, angle: float, r_disc: float = R_DISC) -> "BlownUpPoint":
        if not 0.0 <= radius <= 1.0:
            raise DomainError("disc radius coordinate must lie in [0, 1]")
        rr = radius * r_disc
        return cls(TorusPoint(rr * math.cos(angle), rr * math.sin(angle)), r_disc)

    @classmethod
    def torus(cls, p: TorusPoint, r_disc: float = R_DISC) -> "BlownUpPoint":
        bp = cls(p, r_disc)
        if bp.region == "disc":
            raise DomainError("coordinates fall inside the disc region")
        return bp

    @property
    def region(self) -> str:
        z = _nearest_lift(self.coords)
        return "disc" if float(np.hypot(z[0], z[1])) <= self.r_disc else "torus"

    @property
    def disc_polar(self):
        z = _nearest_lift(self.coords)
        r = float(np.hypot(z[0], z[1]))
        return (r / self.r_disc, math.atan2(z[1], z[0]))

    def __repr__(self):
        return f"BlownUpPoint({self.coords!r}, region={self.region})"


class BlownUpSystem(Homeomorphism):
    """The torus map with its fixed point exploded to an invariant disc.

    Identity on the disc, the linear map outside the collar annulus, and a
    matrix-power interpolation A^(lam(r)) with logarithmic exponent across the
    collar [r_disc, ratio*r_disc].  Nested images of the collar circles need
    log(ratio) > log(largest eigenvalue); ratio 3 satisfies it, which is why
    the collar is wider than one might first draw.
    """

    lipschitz_bound = float((3 + math.sqrt(5)) / 2)

    def __init__(self, r_disc: float = R_DISC, ratio: float = COLLAR_RATIO,
                 net_denominator_hint: int = None):
        lam_max = (3 + math.sqrt(5)) / 2
        if math.log(ratio) <= math.log(lam_max):
            raise DomainError("collar ratio too small for an injective collar")
        self.r_disc = r_disc
        self.r_collar = ratio * r_disc
        self._log_ratio = math.log(ratio)
        evals, evecs = np.linalg.eigh(CAT_MATRIX.astype(float))
        self._evals = evals            # ascending: [mu, lam]
        self._evecs = evecs
        self._torus = TorusSystem(net_denominator_hint=net_denominator_hint)
        self._net_cache = {}

    def _matrix_power(self, expo: float) -> np.ndarray:
        d = np.diag(self._evals ** expo)
        return self._evecs @ d @ self._evecs.T

    def _collar_exponent(self, r: float) -> float:
        return math.log(r / self.r_disc) / self._log_ratio

    def forward(self, p: BlownUpPoint) -> BlownUpPoint:
        z = _nearest_lift(p.coords)
        r = float(np.hypot(z[0], z[1]))
        if r <= self.r_disc:
            return p
        if r >= self.r_collar:
            q = cat_map(p.coords)
        else:
            w = self._matrix_power(self._collar_exponent(r)) @ z
            q = TorusPoint(w[0], w[1])
        return BlownUpPoint(q, p.r_disc)

    def backward(self, q: BlownUpPoint) -> BlownUpPoint:
        z = _nearest_lift(q.coords)
        r = float(np.hypot(z[0], z[1]))
        if r <= self.r_disc:
            return q
        # collar image is contained in the lam*r_collar ball around zero
        lam_max = float(self._evals[1])
        if r <= self.r_collar * lam_max + 1e-12:
            lo, hi = self.r_disc, self.r_collar
            flo = self._preimage_radius_gap(z, lo)
            fhi = self._preimage_radius_gap(z, hi)
            if flo >= 0.0 and fhi <= 0.0:
                for _ in range(80):
                    mid = 0.5 * (lo + hi)
                    if self._preimage_radius_gap(z, mid) >= 0.0:
                        lo = mid
                    else:
                        hi = mid
                rho = 0.5 * (lo + hi)
                w = self._matrix_power(-self._collar_exponent(rho)) @ z
                return BlownUpPoint(TorusPoint(w[0], w[1]), q.r_disc)
        return BlownUpPoint(cat_map_inverse(q.coords), q.r_disc)

    def _preimage_radius_gap(self, z: np.ndarray, rho: float) -> float:
        w = self._matrix_power(-self._collar_exponent(rho)) @ z
        return float(np.hypot(w[0], w[1])) - rho

    def dist(self, p, q) -> float:
        return torus_dist(p.coords, q.coords)

    def net(self, eps: float):
        """Torus grid plus a polar refinement of the disc region."""
        key = round(eps, 12)
        if key not in self._net_cache:
            pts = [BlownUpPoint(t, self.r_disc) for t in self._torus.net(eps)]
            for ri in (0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0):
                for aj in range(8):
                    if ri == 0.0 and aj > 0:
                        break
                    pts.append(BlownUpPoint.disc(ri, aj * math.pi / 4.0, self.r_disc))
            self._net_cache[key] = pts
        return self._net_cache[key]

    def perturb(self, p: BlownUpPoint, delta: float, rng) -> BlownUpPoint:
        return BlownUpPoint(self._torus.perturb(p.coords, delta, rng), p.r_disc)

    def partition(self, max_diam: float):
        return self._torus.partition(max_diam)

    def locate_cell(self, cells, p: BlownUpPoint):
        return self._torus.locate_cell(cells, p.coords)

    def propose_base_shadows(self, bases, steps, periodic: bool):
        """Linear-solve candidates; valid only off the surgery, which the
        downstream verification arbitrates."""
        cands = self._torus.propose_base_shadows(
            [b.coords for b in bases], steps, periodic)
        return [BlownUpPoint(c, self.r_disc) for c in cands]

    def entropy_base_sample(self, t: float, eps: float, r_min: float):
        return [BlownUpPoint(p, self.r_disc)
                for p in self._torus.entropy_base_sample(t, eps, r_min)]

    def encode_point(self, p: BlownUpPoint):
        return {"blown_up": [p.coords.x, p.coords.y], "r_disc": p.r_disc}

    def decode_point(self, obj) -> BlownUpPoint:
        return BlownUpPoint(TorusPoint(*obj["blown_up"]), obj.get("r_disc", R_DISC))


def blown_up_map(p: BlownUpPoint) -> BlownUpPoint:
    """One application of the blown-up torus map with default surgery radii."""
    return _default_blown_up().forward(p)


_DEFAULT_BLOWN_UP = None


def _default_blown_up() -> BlownUpSystem:
    global _DEFAULT_BLOWN_UP
    if _DEFAULT_BLOWN_UP is None:
        _DEFAULT_BLOWN_UP = BlownUpSystem(net_denominator_hint=20)
    return _DEFAULT_BLOWN_UP


# -- speed profile for the singular fixture ------------------------------------


def disc_center_vanishing_speed(flow: SuspensionFlow, r_ball: float = None) -> SpeedProfile:
    """Speed vanishing quadratically at (disc center, height 0) only."""
    base = flow.base
    if not isinstance(base, BlownUpSystem):
        raise DomainError("this speed profile is tied to the blown-up base")
    if r_ball is None:
        r_ball = base.r_disc
    sing = SuspensionPoint(BlownUpPoint(TorusPoint(0.0, 0.0), base.r_disc), 0.0)

    def speed(p) -> float:
        d = flow.dist(p, sing)
        v = (d / r_ball) ** 2
        return v if v < 1.0 else 1.0

    return SpeedProfile(speed, (sing,))


# -- fixture registry -----------------------------------------------------------

FIXTURE_DOCS = {
    "full-2-shift": "shift map on all binary sequences (weighted symbol metric)",
    "golden-mean-sft": "shift map on binary sequences with the word 11 forbidden",
    "cat-map": "linear hyperbolic torus automorphism [[2,1],[1,1]] mod 1",
    "blown-up-cat-map": "torus automorphism with the fixed point exploded to an "
                        f"invariant identity disc (radius {R_DISC}, collar ratio {COLLAR_RATIO})",
    "suspension(<base>, <roof>)": "unit-speed suspension flow; roof 'unit' or a number",
    "singular-suspension(<base>, <roof>, <speed>)": "suspension reparametrized by a "
                                                    "speed profile; speed 'disc-center-vanishing'",
}


def _build_base(name: str) -> Homeomorphism:
    if name == "full-2-shift":
        return ShiftSystem(Subshift.full(2))
    if name == "golden-mean-sft":
        return ShiftSystem(Subshift.golden_mean())
    if name == "cat-map":
        return TorusSystem(net_denominator_hint=20)
    if name == "blown-up-cat-map":
        return BlownUpSystem(net_denominator_hint=20)
    raise DomainError(f"unknown base fixture {name!r}")


def _parse_roof(spec: str) -> RoofFunction:
    spec = spec.strip()
    if spec == "unit":
        return RoofFunction.constant(1.0)
    try:
        return RoofFunction.constant(float(spec))
    except ValueError:
        raise DomainError(f"unknown roof spec {spec!r}")


def fixture(name: str):
    """Assemble a registered system by name.

    Composite names: ``suspension(<base>, <roof>)`` and
    ``singular-suspension(<base>, <roof>, <speed>)``.
    """
    name = name.strip()
    if name.startswith("suspension(") and name.endswith(")"):
        inner = name[len("suspension("):-1]
        parts = [p.strip() for p in inner.split(",")]
        if len(parts) != 2:
            raise DomainError("suspension fixture needs (base, roof)")
        base = _build_base(parts[0])
        return suspend_flow(base, _parse_roof(parts[1]), name=name)
    if name.startswith("singular-suspension(") and name.endswith(")"):
        inner = name[len("singular-suspension("):-1]
        parts = [p.strip() for p in inner.split(",")]
        if len(parts) != 3:
            raise DomainError("singular suspension fixture needs (base, roof, speed)")
        base = _build_base(parts[0])
        roof = _parse_roof(parts[1])
        if parts[2] != "disc-center-vanishing":
            raise DomainError(f"unknown speed spec {parts[2]!r}")
        regular = suspend_flow(base, roof, name=name)
        speed = disc_center_vanishing_speed(regular)
        return SingularSuspensionFlow(regular, speed, quad_step=0.01,
                                      slow_radius=base.r_disc, name=name)
    return _build_base(name)


def fixture_names():
    return list(FIXTURE_DOCS)


# Points with documented roles on the fixtures, used by the command line
# defaults and the acceptance runs.  The torus anchor sits a small irrational
# offset away from a short periodic lattice orbit so that near-returns are
# found quickly while the point itself is non-periodic.
ANCHOR_OFFSET = (1.41421356e-4, 1.73205081e-4)


def named_point(F, label: str):
    if label == "default":
        if isinstance(F, (SuspensionFlow, SingularSuspensionFlow)):
            base = F.regular_model().base if isinstance(F, SingularSuspensionFlow) else F.base
            if isinstance(base, ShiftSystem):
                return SuspensionPoint(SymbolSequence.constant(0), 0.0)
            if isinstance(base, TorusSystem):
                return SuspensionPoint(
                    TorusPoint(0.2 + ANCHOR_OFFSET[0], 0.4 + ANCHOR_OFFSET[1]), 0.0)
            if isinstance(base, BlownUpSystem):
                return SuspensionPoint(
                    BlownUpPoint(TorusPoint(0.2 + ANCHOR_OFFSET[0], 0.4 + ANCHOR_OFFSET[1]),
                                 base.r_disc), 0.0)
        if isinstance(F, ShiftSystem):
            return SymbolSequence.constant(0)
        if isinstance(F, TorusSystem):
            return TorusPoint(0.2 + ANCHOR_OFFSET[0], 0.4 + ANCHOR_OFFSET[1])
        if isinstance(F, BlownUpSystem):
            return BlownUpPoint(TorusPoint(0.2 + ANCHOR_OFFSET[0], 0.4 + ANCHOR_OFFSET[1]))
    if label == "disc":
        if isinstance(F, (SuspensionFlow, SingularSuspensionFlow)):
            base = F.regular_model().base if isinstance(F, SingularSuspensionFlow) else F.base
            if isinstance(base, BlownUpSystem):
                return SuspensionPoint(
                    BlownUpPoint(TorusPoint(0.0, 0.0), base.r_disc), 0.5)
        if isinstance(F, BlownUpSystem):
            return BlownUpPoint(TorusPoint(0.0, 0.0), F.r_disc)
    raise DomainError(f"no point named {label!r} on this fixture")
