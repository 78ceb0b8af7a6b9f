"""
The k grading, its residue mod 3, the null-root shift Delta and initial weights.

Delta is returned doubled (an int) throughout, since it is always a
nonnegative half-integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import (
    SIMPLE_ROOTS,
    LatticeError,
    RationalVector10,
    WeightLabel,
    eps_vec,
    inner,
)


@dataclass(frozen=True)
class GradingContext:
    alpha0_hat: RationalVector10 = field(default_factory=lambda: SIMPLE_ROOTS[0] - eps_vec(8))

    def k_value(self, v: RationalVector10) -> int:
        k = -inner(v, self.alpha0_hat * 2)
        if k.denominator != 1:
            raise LatticeError(f"k({v!r}) = {k} is not an integer")
        return int(k)


DEFAULT_CONTEXT = GradingContext()


def k_value(v: RationalVector10) -> int:
    return DEFAULT_CONTEXT.k_value(v)


def k_of_label(label: WeightLabel) -> int:
    """k = M8 - M7 - 2 M0, the closed form on dominant weights."""
    M = label.M
    return M[8] - M[7] - 2 * M[0]


def residue3(v: RationalVector10) -> int:
    return k_value(v) % 3


def delta_doubled_from_k(k: int) -> int:
    """2 * Delta as a function of k alone."""
    if k <= 0 and k % 2 == 0:
        return 0
    if k <= 1:
        return 1
    # 2 * (k + 2 [k]_3) / 6; k + 2k = 3k is divisible by 3
    num = k + 2 * (k % 3)
    assert num % 3 == 0
    return num // 3


def delta_shift(label: WeightLabel) -> int:
    """2 * Delta(lambda); the label's own s is ignored."""
    return delta_doubled_from_k(k_of_label(label))


def delta_shift_fraction(label: WeightLabel) -> Fraction:
    return Fraction(delta_shift(label), 2)


def is_initial(label: WeightLabel) -> bool:
    return label.s == delta_shift(label)


def initial_label(M) -> WeightLabel:
    """Complete coefficients M to the initial label (M; 2 Delta)."""
    base = WeightLabel(tuple(M), 0)
    return base.with_s(delta_shift(base))
