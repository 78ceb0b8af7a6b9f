from collections import Counter
from fractions import Fraction as F
from itertools import product

import pytest

from e9paths.grading import k_value
from e9paths.lattice import SIMPLE_ROOTS, RationalVector10, fundamental_weight, inner
from e9paths.straight import (
    NOT_MAXIMAL,
    classify_maximal,
    enumerate_straight,
    k_value_table,
    maximal_orbit,
    straight_closure,
)

V = RationalVector10.from_parts
h = F(1, 2)


@pytest.fixture(scope="module")
def orbit4():
    return maximal_orbit(4)


def brute_force_type_counts():
    # scan every level-1 vector with entries in {-1,-1/2,0,1/2,1} at depths 0, 1/2, 1
    counts = Counter()
    for depth in (0, h, 1):
        vals = (-h, h) if depth == h else (-1, 0, 1)
        for nu in product(vals, repeat=8):
            tag = classify_maximal(V(1, -depth, nu))
            if tag in ("I", "II", "III"):
                counts[tag] += 1
    return counts


def test_census():
    omega = enumerate_straight()
    assert len(omega) == 200
    assert len({w.vector for w in omega}) == 200
    assert Counter(w.wtype for w in omega) == {"I": 16, "II": 128, "III": 56}
    assert Counter(w.wtype for w in omega) == brute_force_type_counts()
    assert fundamental_weight(1) in {w.vector for w in omega}
    assert omega[0].vector == fundamental_weight(1)


def test_shapes_and_levels():
    for w in enumerate_straight():
        assert classify_maximal(w.vector) == w.wtype
        assert w.vector[0] == 1
        assert w.vector.delta_coeff == {"I": 0, "II": -h, "III": -1}[w.wtype]
        assert inner(w.vector, w.vector) == 1


def test_k_value_sets():
    table = k_value_table()
    assert table == {"I": {0, -2}, "II": {3, 1, -1, -3, -5}, "III": {2}}


def test_classify_examples():
    assert classify_maximal(V(1, -h, [h] * 8)) == "II"
    assert classify_maximal(V(1, -1, [2, 1, 0, 0, 0, 0, 0, 1])) == "IV"
    assert classify_maximal(V(1, 0, [0, 0, -1, 0, 0, 0, 0, 0])) == "I"
    assert classify_maximal(V(1, -1, [1, 1, 1, 0, 0, 0, 0, 0])) == "III"
    assert classify_maximal(V(1, -2, [1, 1, 1, 0, 0, 0, 0, 0])) == "IV"
    assert classify_maximal(V(1, -h, [h] * 7 + [-h])) == NOT_MAXIMAL  # odd number of minuses
    assert classify_maximal(V(2, 0, [1, 0, 0, 0, 0, 0, 0, 0])) == NOT_MAXIMAL
    assert classify_maximal(V(1, -F(1, 3), [0] * 8)) == NOT_MAXIMAL


def test_orbit_depth0_is_type_I():
    orbit = maximal_orbit(0)
    assert len(orbit) == 16
    assert {m.vector for m in orbit} == {w.vector for w in enumerate_straight() if w.wtype == "I"}


def test_orbit_depth_half():
    orbit = maximal_orbit(1)
    assert Counter(m.wtype for m in orbit) == {"I": 16, "II": 128}


def test_orbit_is_a_set_of_norm_one_level_one_vectors(orbit4):
    vecs = [m.vector for m in orbit4]
    assert len(vecs) == len(set(vecs))
    for m in orbit4:
        assert inner(m.vector, m.vector) == 1
        assert m.vector[0] == 1
        assert m.depth_j == -m.vector.delta_coeff


def test_orbit_and_straight_weights_agree(orbit4):
    straight = {w.vector for w in enumerate_straight()}
    shaped = {m.vector for m in orbit4 if m.wtype in ("I", "II", "III")}
    assert shaped == straight


def test_orbit_has_type_iv_at_depth_one(orbit4):
    depth1 = Counter(m.wtype for m in orbit4 if m.depth_j == 1)
    assert depth1["III"] == 56
    assert depth1["IV"] > 0


def test_type_iv_k_bound(orbit4):
    for m in orbit4:
        if m.wtype == "IV":
            assert m.depth_j >= 1
            assert classify_maximal(m.vector) == "IV"
            assert k_value(m.vector) <= 6 * m.depth_j - 6


def test_orbit_truncation_is_monotone(orbit4):
    small = {m.vector for m in maximal_orbit(2)}
    assert small == {m.vector for m in orbit4 if m.depth_doubled <= 2}


def test_straight_closure_moves():
    closure = straight_closure()
    assert fundamental_weight(1) in closure
    assert V(1, 0, [0, 1, 0, 0, 0, 0, 0, 0]) in closure
    assert fundamental_weight(1) - SIMPLE_ROOTS[1] == V(1, 0, [0, 1, 0, 0, 0, 0, 0, 0])


def test_straight_closure_contains_omega_plus_56_type_iv():
    # every straight weight is reached, and the only extra weights are 56
    # depth-1 orbit elements of type IV
    closure = straight_closure()
    straight = {w.vector for w in enumerate_straight()}
    assert straight <= closure
    extra = closure - straight
    assert len(extra) == 56
    assert {classify_maximal(v) for v in extra} == {"IV"}
    assert {v.delta_coeff for v in extra} == {-1}
    orbit = {m.vector for m in maximal_orbit(2)}
    assert extra <= orbit
