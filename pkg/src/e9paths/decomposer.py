"""
Decomposition of the maximal-null-root submodule M_n of V^{(x)n}.

M_n is a sum of c_lambda copies of V_{lambda - Delta(lambda) delta}, one term
per level-n dominant class.  c_lambda counts straight-weight paths (every
step a type I/II/III weight) that stay in the dominant chamber; the
multiplicities are built level by level from M_1 = V_{Lambda_1}.

Also here: level catalogues and their generating function, explicit witness
paths for every initial weight, and exhaustive sweeps of the two lemmas the
level-by-level recursion rests on.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Optional

from .grading import delta_doubled_from_k, delta_shift, initial_label, is_initial, k_of_label, k_value
from .lattice import (
    LEVELS,
    RANK,
    LatticeError,
    RationalVector10,
    WeightLabel,
    canonical_key,
    from_label,
    is_dominant,
    pair_with_simple_roots,
    to_label,
)
from .straight import StraightWeight, enumerate_straight, maximal_orbit

TABLE_FORMAT = "e9-table-v1"


@dataclass(frozen=True)
class LevelCatalog:
    n: int
    labels: tuple


@dataclass
class DecompositionTable:
    n: int
    entries: dict = field(default_factory=dict)

    def sorted_items(self) -> list:
        return sorted(self.entries.items(), key=lambda kv: canonical_key(kv[0]))

    def to_json(self) -> dict:
        return {
            "format": TABLE_FORMAT,
            "n": self.n,
            "entries": [{"label": str(lab), "mult": str(c)} for lab, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "DecompositionTable":
        if doc.get("format") != TABLE_FORMAT:
            raise ValueError(f"unsupported table format {doc.get('format')!r}")
        entries = {WeightLabel.parse(e["label"]): int(e["mult"]) for e in doc["entries"]}
        return cls(int(doc["n"]), entries)


# ---------------------------------------------------------------- level sets


def _compositions(n: int, idx: int = 0):
    if idx == RANK:
        if n == 0:
            yield ()
        return
    step = LEVELS[idx]
    for m in range(n // step + 1):
        for rest in _compositions(n - m * step, idx + 1):
            yield (m,) + rest


@lru_cache(maxsize=None)
def enumerate_level(n: int) -> LevelCatalog:
    """S(n): every M with sum M_i n(Lambda_i) = n, completed to s = 2 Delta."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    labels = tuple(initial_label(M) for M in sorted(_compositions(n), reverse=True))
    return LevelCatalog(n, labels)


def genfun_coefficients(max_n: int) -> list:
    """Coefficients of prod_i 1 / (1 - x^{n(Lambda_i)}) up to x^max_n."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    coeffs = [1] + [0] * max_n
    for step in LEVELS:
        # multiply by 1/(1 - x^step)
        for d in range(step, max_n + 1):
            coeffs[d] += coeffs[d - step]
    return coeffs


# ---------------------------------------------------------------- the recursion


def _label_or_none(v: RationalVector10) -> Optional[WeightLabel]:
    if not is_dominant(v):
        return None
    try:
        return to_label(v)
    except LatticeError:
        # dominant but with a positive delta residue: not a weight of any V^{(x)m}
        return None


def successors(label: WeightLabel) -> list:
    """(omega, mu) for each straight omega with label + omega dominant and initial."""
    if not is_initial(label):
        raise LatticeError(f"{label} is not initial")
    base = from_label(label)
    out = []
    for w in enumerate_straight():
        target = _label_or_none(base + w.vector)
        if target is not None and is_initial(target):
            out.append((w, target))
    return out


def _step(prev: DecompositionTable) -> DecompositionTable:
    # A straight-weight path's image is dominant iff all its vertices are:
    # every segment is affine in t and the chamber is convex.
    entries = {}
    for mu in enumerate_level(prev.n + 1).labels:
        top = from_label(mu)
        total = 0
        for w in enumerate_straight():
            p = _label_or_none(top - w.vector)
            if p is not None:
                total += prev.entries.get(p, 0)
        if total:
            entries[mu] = total
    return DecompositionTable(prev.n + 1, entries)


def _cache_file(cache_dir, n: int) -> Path:
    return Path(cache_dir) / f"{TABLE_FORMAT}-n{n}.json"


def _load_cached(cache_dir, n: int) -> Optional[DecompositionTable]:
    path = _cache_file(cache_dir, n)
    if not path.exists():
        return None
    with open(path, encoding="utf-8") as fh:
        return DecompositionTable.from_json(json.load(fh))


def _store_cached(cache_dir, table: DecompositionTable) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_file(cache_dir, table.n)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(table.to_json(), fh, indent=1, sort_keys=True)
    os.replace(tmp, path)


def decompose(n: int, cache_dir=None) -> DecompositionTable:
    if n < 1:
        raise ValueError("n must be at least 1")
    if cache_dir is not None:
        hit = _load_cached(cache_dir, n)
        if hit is not None:
            return hit
        start, table = 1, DecompositionTable(1, {WeightLabel.of(M1=1): 1})
        for m in range(n, 1, -1):
            hit = _load_cached(cache_dir, m)
            if hit is not None:
                start, table = m, hit
                break
        for _ in range(start, n):
            table = _step(table)
            _store_cached(cache_dir, table)
        return table
    return _decompose_memo(n)


@lru_cache(maxsize=64)
def _decompose_memo(n: int) -> DecompositionTable:
    if n == 1:
        return DecompositionTable(1, {WeightLabel.of(M1=1): 1})
    return _step(_decompose_memo(n - 1))


# ---------------------------------------------------------------- witnesses


def _type1(i: int, sign: int = 1) -> RationalVector10:
    eps = [0] * 8
    eps[abs(i) - 1] = sign
    return RationalVector10.from_parts(1, 0, eps)


def _type2(signs) -> RationalVector10:
    return RationalVector10.from_parts(1, Fraction(-1, 2), [Fraction(s, 2) for s in signs])


def _straight(v: RationalVector10) -> StraightWeight:
    for w in enumerate_straight():
        if w.vector == v:
            return w
    raise AssertionError(f"{v!r} is not straight")


def _pi1(i: int) -> list:
    # 0 -> Lambda_1 -> ... -> Lambda_6 -> Lambda_7 + Lambda_8 -> Lambda_0 + 2 Lambda_8
    return [_type1(j) for j in range(1, i + 1)]


_PI2 = [_type1(1), _type1(1, -1)]  # 0 -> Lambda_1 -> Lambda_0
_PI3 = _pi1(7) + [_type1(8, -1)]  # ... -> Lambda_7 + Lambda_8 -> 2 Lambda_7
_CORE_L7 = _pi1(3) + [_type2((-1, -1, -1, 1, 1, 1, 1, -1))]  # -> Lambda_7 - delta/2
_CORE_L8 = _pi1(2) + [_type2((-1, -1, 1, 1, 1, 1, 1, 1))]  # -> Lambda_8 - delta/2
_THREE_L8 = _pi1(8) + [_type2((1,) * 8)]  # -> 3 Lambda_8 - delta/2


def witness_path(label: WeightLabel) -> list:
    """Straight weights omega_1..omega_n whose partial sums are all initial.

    Built in reverse: strip segments off lambda - Delta delta according to
    the sign/parity of k until a small core remains, then replay core first
    and the stripped segments in reverse order.
    """
    if not is_initial(label):
        raise LatticeError(f"{label} is not initial")
    M = list(label.M)
    k = k_of_label(label)
    removed = []  # segments in removal order

    def strip(segment, times=1):
        removed.extend([segment] * times)

    for i in range(1, 7):
        strip(_pi1(i), M[i])
        M[i] = 0
    pairs = min(M[7], M[8])
    strip(_pi1(7), pairs)
    M[7] -= pairs
    M[8] -= pairs

    if k >= 2:
        # M7 = 0 now; M8 >= 2 + 2 M0
        strip(_pi1(8), M[0])
        M[8] -= 2 * M[0]
        M[0] = 0
        ell = M[8] // 3
        strip(_THREE_L8, ell)
        M[8] -= 3 * ell
        core = {0: [], 1: _CORE_L8, 2: _CORE_L8 + _CORE_L8}[M[8]]
    elif k % 2 == 0:
        if M[7] == 0:
            strip(_pi1(8), M[8] // 2)
            M[0] -= M[8] // 2
        else:
            strip(_PI3, M[7] // 2)
        strip(_PI2, M[0])
        core = []
    else:
        if M[7] == 0:
            strip(_pi1(8), (M[8] - 1) // 2)
            M[0] -= (M[8] - 1) // 2
            core = _CORE_L8
        else:
            strip(_PI3, (M[7] - 1) // 2)
            core = _CORE_L7
        strip(_PI2, M[0])

    steps = list(core)
    for seg in reversed(removed):
        steps.extend(seg)
    return [_straight(v) for v in steps]


def witness_prefixes(steps) -> list:
    """Labels of the partial sums (None where a partial sum is not dominant)."""
    out = []
    v = RationalVector10.zero()
    for w in steps:
        v = v + w.vector
        out.append(_label_or_none(v))
    return out


def backtrack_witness(label: WeightLabel) -> list:
    """Any dominant straight path to the label, recovered from the recursion."""
    steps = []
    cur = label
    top = from_label(cur)
    for m in range(label.level - 1, 0, -1):
        table = decompose(m)
        for w in enumerate_straight():
            p = _label_or_none(top - w.vector)
            if p is not None and table.entries.get(p, 0):
                steps.append(w)
                cur, top = p, from_label(p)
                break
        else:
            raise AssertionError(f"no predecessor for {cur}")
    lam1 = from_label(WeightLabel.of(M1=1))
    assert top == lam1, cur
    steps.append(_straight(lam1))
    return steps[::-1]


# ---------------------------------------------------------------- lemma sweeps


@dataclass
class SubtractionReport:
    n_max: int
    cases: int = 0
    non_dominant: int = 0
    initial: int = 0
    above_initial: int = 0  # dominant with t < Delta(mu): not a weight of V^{(x)(n-1)}
    counterexamples: list = field(default_factory=list)
    t_mismatches: list = field(default_factory=list)
    by_type: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.t_mismatches


_T_OFFSET = {"I": 0, "II": 1, "III": 2}  # doubled: t = Delta(lambda) - offset / 2


def verify_subtraction_lemma(n_max: int) -> SubtractionReport:
    """lambda - Delta(lambda) delta - omega is initial, non-dominant, or shallower
    than any weight of V^{(x)(n-1)}; deeper-than-initial would be a counterexample."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    report = SubtractionReport(n_max)
    omegas = enumerate_straight()
    for n in range(1, n_max + 1):
        for lam in enumerate_level(n).labels:
            top = from_label(lam)
            for w in omegas:
                report.cases += 1
                tally = report.by_type.setdefault(w.wtype, Counter())
                diff = top - w.vector
                if not is_dominant(diff):
                    report.non_dominant += 1
                    tally["non_dominant"] += 1
                    continue
                M = tuple(int(x) for x in pair_with_simple_roots(diff))
                t2 = -2 * (diff - from_label(WeightLabel(M, 0))).delta_coeff
                assert t2.denominator == 1
                t2 = int(t2)
                if t2 != lam.s - _T_OFFSET[w.wtype]:
                    report.t_mismatches.append((lam, w, t2))
                d_mu = delta_shift(WeightLabel(M, 0))
                if t2 == d_mu:
                    report.initial += 1
                    tally["initial"] += 1
                elif t2 < d_mu:
                    report.above_initial += 1
                    tally["above_initial"] += 1
                else:
                    report.counterexamples.append((lam, w, WeightLabel(M, t2) if t2 >= 0 else M))
                    tally["counterexample"] += 1
    return report


@dataclass
class AdditionReport:
    n_max: int
    j_max_doubled: int
    type_iv_count: int = 0
    cases: int = 0
    dominant: int = 0
    violations: list = field(default_factory=list)
    k_bound_failures: list = field(default_factory=list)
    inequality_failures: list = field(default_factory=list)
    by_case: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not (self.violations or self.k_bound_failures or self.inequality_failures)


def _check_addition_case(lam: WeightLabel, k_omega: int, j2: int, k_mu: int) -> tuple:
    """Evaluate the inequality chain showing s != Delta(mu) for mu = lam + omega.

    All quantities doubled (s2 = 2s etc.).  Returns (case name, holds).
    """
    k_lam = k_of_label(lam)
    assert k_mu == k_lam + k_omega
    s2 = lam.s + j2
    d_mu2 = delta_doubled_from_k(k_mu)
    if k_mu <= 1:
        # s >= j >= 1 > 1/2 >= Delta(mu)
        return "k(mu)<=1", s2 >= j2 >= 2 > 1 >= d_mu2
    r = k_mu % 3
    if k_lam <= 1:
        # 6 Delta(mu) = k(lam) + k(omega) + 2 r <= 1 + 6j - 6 + 4 = 6j - 1 < 6j <= 6s
        return "k(lam)<=1", (3 * d_mu2 == k_mu + 2 * r
                             and 3 * d_mu2 <= 3 * j2 - 1 < 3 * j2 <= 3 * s2)
    # 6 Delta(mu) <= k(lam) + 6j - 2 < 6 Delta(lam) + 6j = 6s
    return "k(lam)>=1,k(mu)>=1", (3 * d_mu2 == k_mu + 2 * r
                                  and 3 * d_mu2 <= k_lam + 3 * j2 - 2 < 3 * lam.s + 3 * j2 == 3 * s2)


def verify_addition_lemma(n_max: int, j_max_doubled: int, orbit=None) -> AdditionReport:
    """No type IV maximal weight carries an initial weight to an initial weight."""
    if n_max < 1 or j_max_doubled < 2:
        raise ValueError("need n_max >= 1 and j_max_doubled >= 2")
    if orbit is None:
        orbit = maximal_orbit(j_max_doubled)
    type_iv = [m for m in orbit if m.wtype == "IV"]
    report = AdditionReport(n_max, j_max_doubled, type_iv_count=len(type_iv))
    k_om = {}
    for m in type_iv:
        k_om[m] = k_value(m.vector)
        # k(omega) <= 6j - 6
        if not k_om[m] <= 3 * m.depth_doubled - 6:
            report.k_bound_failures.append((m, k_om[m]))
    for n in range(1, n_max + 1):
        for lam in enumerate_level(n).labels:
            top = from_label(lam)
            for m in type_iv:
                report.cases += 1
                v = top + m.vector
                lab = _label_or_none(v)
                if lab is not None:
                    report.dominant += 1
                    if is_initial(lab):
                        report.violations.append((lam, m, lab))
                # the chain depends on k only, so it is run on every instance
                case, holds = _check_addition_case(lam, k_om[m], m.depth_doubled, k_value(v))
                report.by_case[case] = report.by_case.get(case, 0) + 1
                if not holds:
                    report.inequality_failures.append((lam, m, case))
    return report
