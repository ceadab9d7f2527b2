"""Seeded tuple samplers for p-adic balls and real intervals."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .diffquot import MIN_REAL_GAP, PAdicBall, RealInterval
from .errors import PreconditionError


def _rng(parts) -> random.Random:
    # str seeds hash deterministically across runs and platforms
    return random.Random(repr(parts))


@dataclass
class PAdicGridSampler:
    """Distinct tuples drawn from ``center + p^e * sum_{i<depth} c_i p^i``.

    ``e`` is the ball's exponent, so every grid point lies in the ball.
    ``widen`` grows the ball by that many powers of p while keeping the
    inner resolution, which yields points outside the original ball for
    extension-by-zero checks.  ``n_random`` extra points with denominators
    prime to p give the pool some non-integral members.
    """

    depth: int = 3
    n_tuples: int = 200
    seed: int = 0
    widen: int = 0
    n_random: int = 8

    def points(self, ball: PAdicBall) -> list:
        p = ball.field.prime
        e = ball.exponent - self.widen
        levels = self.depth + self.widen
        step = Fraction(p) ** e
        pts = []
        for digits in product(range(p), repeat=levels):
            pts.append(ball.center + step * sum(c * p**i for i, c in enumerate(digits)))
        rng = _rng(("padic-extra", self.seed, p, e))
        seen = set(pts)
        dens = [d for d in range(1, 3 * p) if d % p]
        span = 64 * p**levels
        added = 0
        for _ in range(20 * self.n_random):
            if added == self.n_random:
                break
            x = ball.center + step * Fraction(rng.randrange(-span, span), rng.choice(dens))
            if x not in seen:
                seen.add(x)
                pts.append(x)
                added += 1
        return pts

    def tuples(self, ball: PAdicBall, size: int) -> list:
        if not isinstance(ball, PAdicBall):
            raise PreconditionError("PAdicGridSampler needs a p-adic ball")
        pool = self.points(ball)
        if size > len(pool):
            raise PreconditionError(f"grid of {len(pool)} points cannot host {size}-tuples")
        if math.comb(len(pool), size) <= self.n_tuples:
            return list(combinations(pool, size))
        rng = _rng(("padic-tuples", self.seed, size, ball.center, ball.radius))
        out = []
        for _ in range(self.n_tuples):
            t = rng.sample(pool, size)
            out.append(tuple(t))
        return out


def chebyshev(lo: float, hi: float, n: int) -> list:
    mid, half = (lo + hi) / 2, (hi - lo) / 2
    return [mid + half * math.cos(math.pi * (2 * j + 1) / (2 * n)) for j in range(n)]


@dataclass
class RealSampler:
    """Chebyshev and uniform points plus clustered tuples on an interval.

    Clustered tuples have a random centre and a log-uniform spread between
    ``min_spread`` and 1 (relative to the interval length); they probe high
    order quotients where the curve bends.  Tuples with a pairwise gap
    below the minimum are redrawn.
    """

    n_tuples: int = 200
    seed: int = 0
    n_chebyshev: int = 16
    n_uniform: int = 16
    cluster_fraction: float = 0.5
    min_spread: float = 1e-2
    min_gap: float = MIN_REAL_GAP

    def _bounds(self, domain):
        if isinstance(domain, RealInterval):
            return float(domain.lo), float(domain.hi)
        lo, hi = domain
        return float(lo), float(hi)

    def points(self, domain) -> list:
        lo, hi = self._bounds(domain)
        rng = _rng(("real-points", self.seed, lo, hi))
        pts = chebyshev(lo, hi, self.n_chebyshev) + [rng.uniform(lo, hi) for _ in range(self.n_uniform)]
        return pts

    def _ok(self, t) -> bool:
        s = sorted(t)
        return all(b - a >= self.min_gap for a, b in zip(s, s[1:]))

    def tuples(self, domain, size: int) -> list:
        lo, hi = self._bounds(domain)
        pool = self.points(domain)
        rng = _rng(("real-tuples", self.seed, lo, hi, size))
        n_cluster = int(self.n_tuples * self.cluster_fraction)
        out = []
        attempts = 0
        while len(out) < self.n_tuples - n_cluster and attempts < 50 * self.n_tuples:
            attempts += 1
            t = tuple(rng.sample(pool, size))
            if self._ok(t):
                out.append(t)
        length = hi - lo
        while len(out) < self.n_tuples and attempts < 100 * self.n_tuples:
            attempts += 1
            spread = length * 10 ** rng.uniform(math.log10(self.min_spread), 0)
            c = rng.uniform(lo, hi)
            a, b = max(lo, c - spread / 2), min(hi, c + spread / 2)
            t = tuple(rng.uniform(a, b) for _ in range(size))
            if self._ok(t):
                out.append(t)
        return out
