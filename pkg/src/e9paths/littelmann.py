"""
Piecewise-linear Littelmann paths, root operators, and a brute-force tensor
power oracle.

Nothing here uses the k / Delta / straight-weight theory: the oracle only
knows the realization, the root operators f_i, and chamber dominance.  Paths
are stored as tuples of breakpoints (raw tuples of Fractions) in normal form,
so two paths are equal exactly when they agree up to reparameterization.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .lattice import (
    DELTA,
    DIM,
    FUNDAMENTAL_WEIGHTS,
    RANK,
    SIMPLE_ROOTS,
    RationalVector10,
    WeightLabel,
    _raw,
    pair_coords,
    to_label,
)

_ZERO = (Fraction(0),) * DIM
_ROOTS = tuple(a.coords for a in SIMPLE_ROOTS)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _axpy(a, s, b):
    # a + s * b
    return tuple(x + s * y for x, y in zip(a, b))


def _positively_proportional(u, v) -> bool:
    for ui, vi in zip(u, v):
        if ui:
            c = vi / ui
            break
    else:
        return False
    if c <= 0:
        return False
    return all(vi == c * ui for ui, vi in zip(u, v))


def _normalize(points) -> tuple:
    """Drop zero-length segments and merge positively collinear neighbours."""
    out = [points[0]]
    last_dir = None
    for p in points[1:]:
        if p == out[-1]:
            continue
        d = _sub(p, out[-1])
        if last_dir is not None and _positively_proportional(last_dir, d):
            out[-1] = p
            last_dir = _sub(p, out[-2])
        else:
            out.append(p)
            last_dir = d
    return tuple(out)


@dataclass(frozen=True)
class PLPath:
    """A path from 0 given by its breakpoints, always kept in normal form."""

    points: tuple

    def __post_init__(self):
        if not self.points or self.points[0] != _ZERO:
            raise ValueError("a path must start at the origin")

    @classmethod
    def from_points(cls, points: Iterable) -> "PLPath":
        pts = [tuple(Fraction(x) for x in getattr(p, "coords", p)) for p in points]
        if not pts or pts[0] != _ZERO:
            pts.insert(0, _ZERO)
        return cls(_normalize(pts))

    @classmethod
    def trivial(cls) -> "PLPath":
        return cls((_ZERO,))

    @property
    def endpoint(self) -> RationalVector10:
        return _raw(self.points[-1])

    @property
    def breakpoints(self) -> list:
        return [_raw(p) for p in self.points]

    def heights(self, i: int) -> list:
        return [pair_coords(p, i) for p in self.points]

    def minima(self) -> tuple:
        """min over breakpoints of h_i for every i."""
        return tuple(min(pair_coords(p, i) for p in self.points) for i in range(RANK))

    def normalized(self) -> "PLPath":
        return PLPath(_normalize(self.points))

    def sample(self, t: Fraction) -> RationalVector10:
        """pi(t) under the uniform-per-segment parameterization."""
        nseg = len(self.points) - 1
        if nseg == 0:
            return _raw(self.points[0])
        x = Fraction(t) * nseg
        k = min(int(x), nseg - 1)
        frac = x - k
        a, b = self.points[k], self.points[k + 1]
        return _raw(_axpy(a, frac, _sub(b, a)))

    def __len__(self):
        return len(self.points) - 1

    def __repr__(self):
        return "PLPath(" + " -> ".join(repr(_raw(p)) for p in self.points) + ")"


def straight_path(v: RationalVector10) -> PLPath:
    return PLPath.from_points([_ZERO, v.coords])


def height_profile(path: PLPath, i: int) -> tuple:
    """(min of h_i over [0, 1], h_i(1)); h_i is affine per segment."""
    h = path.heights(i)
    return min(h), h[-1]


def f_op(i: int, path: PLPath) -> Optional[PLPath]:
    pts = path.points
    h = [pair_coords(p, i) for p in pts]
    m = min(h)
    if h[-1] - m < 1:
        return None
    alpha = _ROOTS[i]
    # t0: last time h = m; as h is affine per segment this is a breakpoint
    p = max(j for j, hj in enumerate(h) if hj == m)
    target = m + 1
    k = p
    while h[k + 1] < target:
        k += 1
    lam = (target - h[k]) / (h[k + 1] - h[k])
    x = _axpy(pts[k], lam, _sub(pts[k + 1], pts[k]))
    new = list(pts[: p + 1])
    # reflected piece s_i(pi(t) - pi(t0)) + pi(t0)
    for j in range(p + 1, k + 1):
        new.append(_axpy(pts[j], -(h[j] - m), alpha))
    new.append(_sub(x, alpha))
    for j in range(k + 1, len(pts)):
        new.append(_sub(pts[j], alpha))
    return PLPath(_normalize(new))


def e_op(i: int, path: PLPath) -> Optional[PLPath]:
    """Mirror of f_op: reflect between the first minimum and the last
    preceding time h_i = m + 1, then translate the tail by +alpha_i."""
    pts = path.points
    h = [pair_coords(p, i) for p in pts]
    m = min(h)
    if m > -1:
        return None
    alpha = _ROOTS[i]
    q = h.index(m)
    target = m + 1
    k = q - 1
    while h[k] < target:
        k -= 1
    # h[k] >= m+1 > h[j] for k < j <= q
    if h[k] == target:
        y = pts[k]
    else:
        lam = (h[k] - target) / (h[k] - h[k + 1])
        y = _axpy(pts[k], lam, _sub(pts[k + 1], pts[k]))
    new = list(pts[: k + 1])
    new.append(y)
    for j in range(k + 1, q + 1):
        new.append(_axpy(pts[j], -(h[j] - target), alpha))
    for j in range(q + 1, len(pts)):
        new.append(_add(pts[j], alpha))
    return PLPath(_normalize(new))


def concat(first: PLPath, second: PLPath) -> PLPath:
    end = first.points[-1]
    pts = list(first.points) + [_add(end, p) for p in second.points[1:]]
    return PLPath(_normalize(pts))


def is_dominant_path(path: PLPath) -> bool:
    """Image lies in the closed dominant chamber.

    Checking breakpoints suffices: each <pi(t), alpha_i> is affine on a
    segment and the chamber is convex.
    """
    return all(m >= 0 for m in path.minima())


def endpoint_depth_doubled(path: PLPath) -> int:
    d = -2 * path.points[-1][DELTA]
    assert d.denominator == 1
    return int(d)


def generate_basis_truncated(depth_doubled: int) -> set:
    """Paths f_{i_1} ... f_{i_r} pi_{Lambda_1} with endpoint depth <= depth_doubled / 2.

    f_i moves the endpoint by -alpha_i and only alpha_0 has a nonzero
    delta-coefficient (+1/2), so endpoint depth never decreases along an
    f-sequence and the discarded paths cannot lead back into the window.
    """
    if depth_doubled < 0:
        raise ValueError("depth_doubled must be nonnegative")
    seed = straight_path(FUNDAMENTAL_WEIGHTS[1])
    seen = {seed}
    queue = deque([seed])
    while queue:
        path = queue.popleft()
        for i in range(RANK):
            nxt = f_op(i, path)
            if nxt is None or nxt in seen:
                continue
            if endpoint_depth_doubled(nxt) > depth_doubled:
                continue
            seen.add(nxt)
            queue.append(nxt)
    return seen


@dataclass(frozen=True)
class _Summary:
    weight: tuple
    depth: int
    minima: tuple


def _summaries(basis) -> list:
    return [_Summary(p.points[-1], endpoint_depth_doubled(p), p.minima()) for p in basis]


def tensor_power_truncated(n: int, depth_doubled: int, basis=None) -> dict:
    """Multiplicities of V_nu in V^{(x)n} for every nu of doubled depth <= depth_doubled.

    Counts n-fold concatenations of basis paths whose image stays in the
    dominant chamber.  A prefix ending at lambda extends by sigma iff
    <lambda, alpha_i> + min_t <sigma(t), alpha_i> >= 0 for all i, which is
    the breakpoint check on the concatenated path.  Prefixes whose total
    depth exceeds the bound are dropped, so every returned multiplicity is
    exact (depth is additive and nonnegative per factor).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if basis is None:
        basis = generate_basis_truncated(depth_doubled)
    summaries = [s for s in _summaries(basis) if s.depth <= depth_doubled]
    # the empty prefix: the path must itself be dominant
    states = Counter({(_ZERO, 0): 1})
    for _ in range(n):
        nxt = Counter()
        for (lam, depth), count in states.items():
            pairs = [pair_coords(lam, i) for i in range(RANK)]
            for s in summaries:
                if depth + s.depth > depth_doubled:
                    continue
                if all(pairs[i] + s.minima[i] >= 0 for i in range(RANK)):
                    nxt[(_add(lam, s.weight), depth + s.depth)] += count
        states = nxt
    out = Counter()
    for (lam, _), count in states.items():
        out[to_label(_raw(lam))] += count
    return dict(out)


def minimal_stratum(table: dict) -> dict:
    """For each class mod delta keep the smallest s: label -> multiplicity."""
    best = {}
    for label, mult in table.items():
        cur = best.get(label.M)
        if cur is None or label.s < cur[0]:
            best[label.M] = (label.s, mult)
    return {WeightLabel(M, s): mult for M, (s, mult) in best.items()}
