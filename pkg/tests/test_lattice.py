from fractions import Fraction as F

import pytest
from hypothesis import given

from e9paths.lattice import (
    DELTA_VEC,
    LEVELS,
    LatticeError,
    RationalVector10,
    WeightLabel,
    fundamental_weight,
    from_label,
    inner,
    is_dominant,
    level,
    pair_with_simple_roots,
    reflect,
    simple_root,
    to_label,
)
from e9paths.decomposer import enumerate_level

from .conftest import rationals, vectors

V = RationalVector10.from_parts
h = F(1, 2)


def gram_oracle(u, v):
    # Gram matrix written out from the stated basis pairings
    G = [[0] * 10 for _ in range(10)]
    G[0][1] = G[1][0] = 1
    for k in range(2, 10):
        G[k][k] = 1
    return sum(u[a] * G[a][b] * v[b] for a in range(10) for b in range(10))


# E9 Dynkin diagram: chain 1-2-3-4-5-6-7-0, with 8 attached to 6
EDGES = {(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (6, 8)}


def cartan_oracle(i, j):
    if i == j:
        return 2
    return -1 if (i, j) in EDGES or (j, i) in EDGES else 0


def test_inner_examples():
    eps0 = V(1, 0, [0] * 8)
    assert inner(DELTA_VEC, eps0) == 1
    assert inner(DELTA_VEC, DELTA_VEC) == 0
    assert inner(simple_root(0), simple_root(0)) == 2


@given(vectors, vectors)
def test_inner_matches_gram_matrix_and_is_symmetric(u, v):
    assert inner(u, v) == gram_oracle(u, v) == inner(v, u)


def test_simple_roots():
    assert simple_root(1) == V(0, 0, [1, -1, 0, 0, 0, 0, 0, 0])
    assert simple_root(8) == V(0, 0, [0, 0, 0, 0, 0, 0, 1, 1])
    assert simple_root(0) == V(0, h, [-h] * 7 + [h])
    with pytest.raises(IndexError):
        simple_root(9)


def test_fundamental_weights():
    assert fundamental_weight(1) == V(1, 0, [1, 0, 0, 0, 0, 0, 0, 0])
    assert fundamental_weight(8) == V(3, 0, [h] * 8)
    assert fundamental_weight(0) == V(2, 0, [0] * 8)
    assert fundamental_weight(7) == V(4, 0, [h] * 7 + [-h])
    with pytest.raises(IndexError):
        fundamental_weight(-1)


def test_duality_exhaustive():
    for i in range(9):
        for j in range(9):
            assert inner(simple_root(i), fundamental_weight(j)) == (1 if i == j else 0)


def test_cartan_matrix_from_dynkin_diagram():
    for i in range(9):
        row = pair_with_simple_roots(simple_root(i))
        assert row == tuple(cartan_oracle(i, j) for j in range(9))
    assert pair_with_simple_roots(simple_root(0)) == (2, 0, 0, 0, 0, 0, 0, -1, 0)


def test_pairings_basics():
    for j in range(9):
        assert pair_with_simple_roots(fundamental_weight(j)) == tuple(int(i == j) for i in range(9))
    assert pair_with_simple_roots(DELTA_VEC) == (0,) * 9


def test_level():
    assert level(fundamental_weight(1)) == 1
    assert level(fundamental_weight(7)) == 4
    assert level(RationalVector10.zero()) == 0
    assert tuple(level(fundamental_weight(i)) for i in range(9)) == LEVELS


@given(vectors, vectors)
def test_level_is_linear(u, v):
    assert level(u + v) == level(u) + level(v)


def test_reflect_examples():
    lam1 = fundamental_weight(1)
    assert reflect(1, lam1) == V(1, 0, [0, 1, 0, 0, 0, 0, 0, 0])
    assert reflect(2, lam1) == lam1


@given(vectors, vectors)
def test_reflections_are_isometric_involutions(u, v):
    for i in range(9):
        assert reflect(i, reflect(i, u)) == u
        assert inner(reflect(i, u), reflect(i, v)) == inner(u, v)


def test_pairing_zero_ignores_delta():
    v = V(1, 0, [1, 0, 0, 0, 0, 0, 0, 0])
    assert pair_with_simple_roots(v)[0] == pair_with_simple_roots(v - DELTA_VEC * 7)[0]


def test_is_dominant_examples():
    assert is_dominant(fundamental_weight(8) - DELTA_VEC * h)
    assert not is_dominant(V(1, 0, [0] * 7 + [-1]))
    assert is_dominant(RationalVector10.zero())
    # nonnegative but not integral
    assert not is_dominant(fundamental_weight(1) * h)


@given(vectors, rationals)
def test_dominance_is_delta_blind(v, t):
    assert is_dominant(v + DELTA_VEC * t) == is_dominant(v)


def test_label_examples():
    assert to_label(fundamental_weight(8) - DELTA_VEC * h) == WeightLabel.of(M8=1, s=1)
    assert to_label(V(2, 0, [1, 1, 0, 0, 0, 0, 0, 0])) == WeightLabel.of(M2=1)
    assert from_label(WeightLabel.of(M0=1, M8=2)) == V(8, 0, [1] * 8)


def test_to_label_errors():
    with pytest.raises(LatticeError):
        to_label(V(1, 0, [0] * 7 + [-1]))
    with pytest.raises(LatticeError):
        to_label(fundamental_weight(1) + DELTA_VEC)  # positive delta residue
    with pytest.raises(LatticeError):
        WeightLabel((0,) * 8, 0)


def test_label_round_trip_on_all_levels():
    for n in range(9):
        for lab in enumerate_level(n).labels:
            assert to_label(from_label(lab)) == lab
            assert lab.level == n == level(from_label(lab))


def test_text_forms_round_trip():
    lab = WeightLabel.of(M1=1, M8=1, s=1)
    assert str(lab) == "0,1,0,0,0,0,0,0,1;1"
    assert WeightLabel.parse(str(lab)) == lab
    v = from_label(lab)
    assert RationalVector10.parse(str(v)) == v
    assert str(fundamental_weight(8)).split()[:3] == ["3/1", "0/1", "1/2"]
    with pytest.raises(LatticeError):
        WeightLabel.parse("1,2;0")


def test_no_floats():
    with pytest.raises(TypeError):
        RationalVector10([0.5] + [0] * 9)


def test_weight_vectors_half_integral():
    for n in range(1, 7):
        for lab in enumerate_level(n).labels:
            assert from_label(lab).is_half_integral()
