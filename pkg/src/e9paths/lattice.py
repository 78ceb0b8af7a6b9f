"""
Exact arithmetic in the ten-dimensional realization of the E9 weight lattice.

Coordinates are ordered (eps0, delta, eps1, ..., eps8).  The bilinear form has
<eps_i, eps_j> = delta_ij for 1 <= i, j <= 8, <delta, eps0> = 1, and every other
basis pairing zero, so delta is isotropic and orthogonal to all simple roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

RANK = 9
DIM = 10
EPS0, DELTA = 0, 1
HALF = Fraction(1, 2)

# levels n(Lambda_i), i = 0..8
LEVELS = (2, 1, 2, 3, 4, 5, 6, 4, 3)


class LatticeError(ValueError):
    """Raised for inputs outside the lattice/dominance domain of an operation."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coordinates are not allowed")
    return Fraction(x)


@dataclass(frozen=True, slots=True)
class RationalVector10:
    """A point of R^10 with exact rational coordinates."""

    coords: tuple

    def __init__(self, coords: Iterable):
        c = tuple(_frac(x) for x in coords)
        if len(c) != DIM:
            raise ValueError(f"expected {DIM} coordinates, got {len(c)}")
        object.__setattr__(self, "coords", c)

    @classmethod
    def from_parts(cls, eps0, delta, eps) -> "RationalVector10":
        """Build ``(eps0, delta; eps1..eps8)`` in the usual written order."""
        return cls((eps0, delta, *eps))

    @classmethod
    def zero(cls) -> "RationalVector10":
        return _ZERO

    def __getitem__(self, k):
        return self.coords[k]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return DIM

    def __add__(self, other: "RationalVector10") -> "RationalVector10":
        return _raw(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RationalVector10") -> "RationalVector10":
        return _raw(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RationalVector10":
        return _raw(tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> "RationalVector10":
        s = _frac(scalar)
        return _raw(tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def __lt__(self, other: "RationalVector10") -> bool:
        return self.coords < other.coords

    @property
    def eps(self) -> tuple:
        return self.coords[2:]

    @property
    def delta_coeff(self) -> Fraction:
        return self.coords[DELTA]

    def is_half_integral(self) -> bool:
        return all(2 % c.denominator == 0 for c in self.coords)

    def __str__(self) -> str:
        return " ".join(f"{c.numerator}/{c.denominator}" for c in self.coords)

    def __repr__(self) -> str:
        def fmt(c):
            return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

        head = f"{fmt(self.coords[0])},{fmt(self.coords[1])}"
        return f"({head};{','.join(fmt(c) for c in self.coords[2:])})"

    @classmethod
    def parse(cls, text: str) -> "RationalVector10":
        """Inverse of ``str``: ten space-separated rationals ``p/q``."""
        parts = text.split()
        if len(parts) != DIM:
            raise ValueError(f"expected {DIM} rationals, got {len(parts)}: {text!r}")
        return cls(Fraction(p) for p in parts)


def _raw(coords: tuple) -> RationalVector10:
    # skips conversion for tuples already made of Fractions
    v = object.__new__(RationalVector10)
    object.__setattr__(v, "coords", coords)
    return v


_ZERO = _raw((Fraction(0),) * DIM)


def inner(u: RationalVector10, v: RationalVector10) -> Fraction:
    a, b = u.coords, v.coords
    s = a[0] * b[1] + a[1] * b[0]
    for k in range(2, DIM):
        s += a[k] * b[k]
    return s


def _basis(k: int) -> RationalVector10:
    c = [Fraction(0)] * DIM
    c[k] = Fraction(1)
    return _raw(tuple(c))


DELTA_VEC = _basis(DELTA)
EPS0_VEC = _basis(EPS0)


def eps_vec(i: int) -> RationalVector10:
    """The unit vector eps_i for 1 <= i <= 8."""
    if not 1 <= i <= 8:
        raise IndexError(f"eps index {i} out of range 1..8")
    return _basis(i + 1)


def _check_index(i: int) -> None:
    if not (isinstance(i, int) and 0 <= i < RANK):
        raise IndexError(f"simple root index {i!r} out of range 0..8")


def _build_simple_roots() -> tuple:
    roots = [None] * RANK
    for i in range(1, 8):
        roots[i] = eps_vec(i) - eps_vec(i + 1)
    roots[8] = eps_vec(7) + eps_vec(8)
    a0 = DELTA_VEC + eps_vec(8)
    for i in range(1, 8):
        a0 = a0 - eps_vec(i)
    roots[0] = a0 * HALF
    return tuple(roots)


def _build_fundamental_weights() -> tuple:
    weights = [None] * RANK
    weights[0] = RationalVector10.from_parts(2, 0, [0] * 8)
    for i in range(1, 7):
        weights[i] = RationalVector10.from_parts(i, 0, [1] * i + [0] * (8 - i))
    weights[7] = RationalVector10.from_parts(4, 0, [HALF] * 7 + [-HALF])
    weights[8] = RationalVector10.from_parts(3, 0, [HALF] * 8)
    return tuple(weights)


SIMPLE_ROOTS = _build_simple_roots()
FUNDAMENTAL_WEIGHTS = _build_fundamental_weights()


def simple_root(i: int) -> RationalVector10:
    _check_index(i)
    return SIMPLE_ROOTS[i]


def fundamental_weight(i: int) -> RationalVector10:
    """Lambda_i, the representative with delta-coefficient 0."""
    _check_index(i)
    return FUNDAMENTAL_WEIGHTS[i]


def level(v: RationalVector10) -> Fraction:
    return v.coords[EPS0]


def pair_coords(c: Sequence, i: int):
    """<c, alpha_i> for a raw coordinate tuple; hot path of the path engine."""
    if i == 0:
        return (c[0] + c[9] - c[2] - c[3] - c[4] - c[5] - c[6] - c[7] - c[8]) / 2
    if i == 8:
        return c[8] + c[9]
    return c[i + 1] - c[i + 2]


def pair_with_simple_roots(v: RationalVector10) -> tuple:
    c = v.coords
    return tuple(pair_coords(c, i) for i in range(RANK))


def reflect(i: int, v: RationalVector10) -> RationalVector10:
    _check_index(i)
    return v - SIMPLE_ROOTS[i] * pair_coords(v.coords, i)


def is_dominant(v: RationalVector10) -> bool:
    """All pairings with simple roots are nonnegative integers (delta-blind)."""
    return all(p >= 0 and p.denominator == 1 for p in pair_with_simple_roots(v))


@dataclass(frozen=True, slots=True, order=True)
class WeightLabel:
    """sum M_i Lambda_i - (s/2) delta, with M indexed 0..8."""

    M: tuple
    s: int = 0

    def __post_init__(self):
        M = tuple(int(m) for m in self.M)
        if len(M) != RANK:
            raise LatticeError(f"label needs {RANK} coefficients, got {len(M)}")
        if any(m < 0 for m in M):
            raise LatticeError(f"label coefficients must be nonnegative: {M}")
        if int(self.s) < 0:
            raise LatticeError(f"doubled delta-depth must be nonnegative: {self.s}")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "s", int(self.s))

    @classmethod
    def of(cls, s: int = 0, **coeffs) -> "WeightLabel":
        """``WeightLabel.of(M8=1, s=1)`` style constructor."""
        M = [0] * RANK
        for key, val in coeffs.items():
            if not key.startswith("M"):
                raise TypeError(f"unexpected keyword {key}")
            M[int(key[1:])] = val
        return cls(tuple(M), s)

    @property
    def level(self) -> int:
        return sum(m * n for m, n in zip(self.M, LEVELS))

    def with_s(self, s: int) -> "WeightLabel":
        return WeightLabel(self.M, s)

    def __str__(self) -> str:
        return ",".join(str(m) for m in self.M) + f";{self.s}"

    @classmethod
    def parse(cls, text: str) -> "WeightLabel":
        try:
            head, s = text.strip().split(";")
            M = tuple(int(p) for p in head.split(","))
            return cls(M, int(s))
        except (ValueError, LatticeError) as exc:
            raise LatticeError(f"cannot parse weight label {text!r}: {exc}") from None

    def pretty(self) -> str:
        """Human form such as ``Λ1+Λ8 - 1/2 δ``."""
        terms = []
        for i, m in enumerate(self.M):
            if m:
                terms.append(f"Λ{i}" if m == 1 else f"{m}Λ{i}")
        body = "+".join(terms) if terms else "0"
        if self.s == 0:
            return body
        shift = Fraction(self.s, 2)
        return f"{body} - {shift} δ"


def canonical_key(label: WeightLabel) -> tuple:
    """Canonical output order: (M0, ..., M8) lexicographic, largest first."""
    return tuple(-m for m in label.M)


def from_label(label: WeightLabel) -> RationalVector10:
    v = _ZERO
    for m, w in zip(label.M, FUNDAMENTAL_WEIGHTS):
        if m:
            v = v + w * m
    if label.s:
        v = v - DELTA_VEC * Fraction(label.s, 2)
    return v


def to_label(v: RationalVector10) -> WeightLabel:
    pairs = pair_with_simple_roots(v)
    if not all(p >= 0 and p.denominator == 1 for p in pairs):
        raise LatticeError(f"{v!r} is not dominant: pairings {pairs}")
    M = tuple(int(p) for p in pairs)
    residue = v - from_label(WeightLabel(M, 0))
    if any(residue.coords[k] for k in range(DIM) if k != DELTA):
        raise LatticeError(f"{v!r} differs from a dominant label by more than delta")
    s = -2 * residue.coords[DELTA]
    if s.denominator != 1:
        raise LatticeError(f"{v!r} has non-half-integral delta residue")
    if s < 0:
        raise LatticeError(f"{v!r} has positive delta residue {residue.coords[DELTA]}")
    return WeightLabel(M, int(s))
