"""
Maximal weights (the Weyl orbit of Lambda_1) and the 200 straight weights.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .grading import k_value
from .lattice import (
    FUNDAMENTAL_WEIGHTS,
    HALF,
    RANK,
    SIMPLE_ROOTS,
    RationalVector10,
    level,
    pair_coords,
    reflect,
)

TYPES = ("I", "II", "III")
NOT_MAXIMAL = "not maximal-shaped"


@dataclass(frozen=True)
class StraightWeight:
    vector: RationalVector10
    wtype: str

    @property
    def k(self) -> int:
        return k_value(self.vector)

    def __repr__(self):
        return f"StraightWeight({self.wtype}, {self.vector!r})"


@dataclass(frozen=True)
class MaximalWeight:
    vector: RationalVector10
    wtype: str
    depth_j: Fraction

    @property
    def depth_doubled(self) -> int:
        return int(2 * self.depth_j)


def _type_key(wtype: str) -> int:
    return ("I", "II", "III", "IV").index(wtype)


@lru_cache(maxsize=None)
def enumerate_straight() -> tuple:
    """The straight weights of types I, II, III in canonical order."""
    out = []
    for i in range(8):
        for sign in (1, -1):
            eps = [0] * 8
            eps[i] = sign
            out.append(StraightWeight(RationalVector10.from_parts(1, 0, eps), "I"))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            eps = [HALF * s for s in signs]
            out.append(StraightWeight(RationalVector10.from_parts(1, -HALF, eps), "II"))
    for ones in combinations(range(8), 3):
        eps = [1 if k in ones else 0 for k in range(8)]
        out.append(StraightWeight(RationalVector10.from_parts(1, -1, eps), "III"))
    # within a type: coordinates lexicographic, largest first, so Lambda_1 leads
    out.sort(key=lambda w: (_type_key(w.wtype), tuple(-c for c in w.vector.coords)))
    return tuple(out)


def classify_maximal(v: RationalVector10) -> str:
    """Match the shape of v against the four forms; orbit membership is not checked."""
    if level(v) != 1:
        return NOT_MAXIMAL
    d = v.delta_coeff
    nu = v.eps
    if d == 0:
        nonzero = [x for x in nu if x != 0]
        if len(nonzero) == 1 and abs(nonzero[0]) == 1:
            return "I"
        return NOT_MAXIMAL
    if d == -HALF:
        if all(abs(x) == HALF for x in nu) and sum(1 for x in nu if x < 0) % 2 == 0:
            return "II"
        return NOT_MAXIMAL
    if d <= -1 and (2 * d).denominator == 1:
        if d == -1 and sorted(nu) == [0] * 5 + [1] * 3:
            return "III"
        return "IV"
    return NOT_MAXIMAL


def maximal_orbit(max_depth_doubled: int) -> list:
    """W . Lambda_1 restricted to delta-coefficient >= -max_depth_doubled / 2.

    Every orbit element is joined to Lambda_1 by a chain of raising
    reflections (s_i applied where <v, alpha_i> < 0), along which the
    delta-coefficient never decreases.  Pruning below the floor therefore
    loses nothing; the one-step look-ahead below re-checks that.
    """
    if max_depth_doubled < 0:
        raise ValueError("max_depth_doubled must be nonnegative")
    floor = Fraction(-max_depth_doubled, 2)
    seed = FUNDAMENTAL_WEIGHTS[1]
    seen = {seed}
    rejected = set()
    queue = deque([seed])
    while queue:
        v = queue.popleft()
        for i in range(RANK):
            if pair_coords(v.coords, i) == 0:
                continue
            w = reflect(i, v)
            if w.delta_coeff < floor:
                rejected.add(w)
            elif w not in seen:
                seen.add(w)
                queue.append(w)
    for v in rejected:
        for i in range(RANK):
            w = reflect(i, v)
            if w.delta_coeff >= floor and w not in seen:
                raise AssertionError(f"orbit closure incomplete: {w!r} reached from below the floor")
    out = []
    for v in seen:
        tag = classify_maximal(v)
        assert tag != NOT_MAXIMAL, v
        out.append(MaximalWeight(v, tag, -v.delta_coeff))
    out.sort(key=lambda m: (m.depth_j, tuple(-c for c in m.vector.coords)))
    return out


def straight_closure() -> set:
    """Closure of {Lambda_1} under omega -> omega - alpha_i when <omega, alpha_i> = 1.

    That is exactly when f_i sends the straight path to omega onto the
    straight path to omega - alpha_i.
    """
    seed = FUNDAMENTAL_WEIGHTS[1]
    seen = {seed}
    stack = [seed]
    while stack:
        v = stack.pop()
        for i in range(RANK):
            if pair_coords(v.coords, i) == 1:
                w = v - SIMPLE_ROOTS[i]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen


def k_value_table() -> dict:
    """Type tag -> set of attained k-values over the straight weights."""
    table = {t: set() for t in TYPES}
    for w in enumerate_straight():
        table[w.wtype].add(w.k)
    return table
