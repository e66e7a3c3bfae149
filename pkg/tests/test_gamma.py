import csv
import itertools
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from kummer_semigroups.compositions import count_weak_compositions, weak_compositions
from kummer_semigroups.curve import PlaceTuple, is_admissible, validate_params
from kummer_semigroups.errors import InvalidTupleLength
from kummer_semigroups.gamma import (finite_threshold, gamma, gamma_finite, gamma_tilde,
                                     gamma_with_infinity, infinity_pairs, infinity_threshold)
from kummer_semigroups.onepoint import OnePointSemigroup, gaps_at_finite, gaps_at_infinity

GOLDEN = Path(__file__).parent / "golden"
SWEEP = [(r, m, lam) for r in range(3, 9) for m in range(2, 10) for lam in (1, 2)
         if is_admissible(r, m, lam)]


def load_golden(name):
    with open(GOLDEN / name, newline="") as f:
        rows = list(csv.reader(f))
    return sorted(tuple(int(c) for c in row) for row in rows[1:])


# -- compositions ----------------------------------------------------------

@given(st.integers(0, 8), st.integers(1, 5))
def test_weak_compositions_match_product_filter(n, parts):
    got = list(weak_compositions(n, parts))
    brute = [c for c in itertools.product(range(n + 1), repeat=parts) if sum(c) == n]
    assert sorted(got) == brute
    assert len(got) == len(set(got)) == count_weak_compositions(n, parts)


def test_weak_compositions_colex_order():
    assert list(weak_compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(weak_compositions(-1, 3)) == []
    assert list(weak_compositions(0, 0)) == [()]


# -- worked examples --------------------------------------------------------

def test_gamma2_example_one():
    p = validate_params(7, 5, 1)
    assert gamma_finite(p, 2).elements == (
        (1, 21), (2, 17), (3, 8), (4, 4), (6, 16), (7, 12), (8, 3),
        (11, 11), (12, 7), (16, 6), (17, 2), (21, 1))


@pytest.mark.parametrize("l", range(2, 8))
def test_example_one_blocks(l):
    p = validate_params(7, 5, 1)
    assert list(gamma_finite(p, l).elements) == load_golden(f"example1_gamma_{l}.csv")


@pytest.mark.parametrize("l", range(1, 6))
def test_example_two_blocks(l):
    p = validate_params(5, 9, 1)
    assert list(gamma_with_infinity(p, l).elements) == load_golden(f"example2_gamma_inf_{l}.csv")


def test_example_spot_values():
    p = validate_params(5, 9, 1)
    assert gamma_with_infinity(p, 1).elements[:2] == ((1, 7), (2, 14))
    assert gamma_with_infinity(p, 2).elements[:2] == ((2, 5, 5), (3, 3, 12))
    assert gamma_with_infinity(p, 4).elements == ((4, 1, 1, 1, 1),)
    assert gamma_with_infinity(p, 5).elements == ()


def test_invalid_lengths():
    p = validate_params(7, 5, 1)
    for l in (0, 1, 8):
        with pytest.raises(InvalidTupleLength):
            gamma_finite(p, l)
    for l in (0, 8):
        with pytest.raises(InvalidTupleLength):
            gamma_with_infinity(p, l)


# -- dispatch --------------------------------------------------------------

def test_dispatch_ignores_which_places():
    p = validate_params(7, 5, 1)
    assert gamma(p, PlaceTuple.finite(3, 5)) == gamma_finite(p, 2)
    q = validate_params(5, 9, 1)
    assert gamma(q, PlaceTuple.with_infinity(2)) == gamma_with_infinity(q, 1)
    assert len(gamma(p, PlaceTuple.finite(1, 2, 3))) == 17


def test_dispatch_single_place_is_whole_semigroup():
    p = validate_params(7, 5, 1)
    h = gamma(p, PlaceTuple.finite(4))
    assert isinstance(h, OnePointSemigroup)
    assert h.gaps == gaps_at_finite(p).gaps
    assert gamma(p, PlaceTuple.with_infinity()).gaps == gaps_at_infinity(p).gaps


# -- structural properties over a sweep -----------------------------------

@pytest.mark.parametrize("r, m, lam", SWEEP)
def test_projection_into_gap_sets(r, m, lam):
    p = validate_params(r, m, lam)
    fin, inf = set(gaps_at_finite(p).gaps), set(gaps_at_infinity(p).gaps)
    for l in range(2, r + 1):
        assert all(c in fin for v in gamma_finite(p, l) for c in v)
    for l in range(1, r + 1):
        for v in gamma_with_infinity(p, l):
            assert v[0] in inf and all(c in fin for c in v[1:])


@pytest.mark.parametrize("r, m", [(r, m) for r in range(3, 11) for m in range(2, 11)
                                  if is_admissible(r, m)])
def test_two_place_sets_are_bijections_of_gaps(r, m):
    p = validate_params(r, m)
    g = p.genus
    for gs, first_gaps, second_gaps in (
            (gamma_finite(p, 2), gaps_at_finite(p), gaps_at_finite(p)),
            (gamma_with_infinity(p, 1), gaps_at_infinity(p), gaps_at_finite(p))):
        assert len(gs) == g
        assert sorted(v[0] for v in gs) == list(first_gaps.gaps)
        assert sorted(v[1] for v in gs) == list(second_gaps.gaps)


@pytest.mark.parametrize("r, m, lam", SWEEP)
def test_emptiness_thresholds(r, m, lam):
    p = validate_params(r, m, lam)
    for l in range(2, r + 1):
        assert (len(gamma_finite(p, l)) == 0) == (l > r - r // m)
    for l in range(1, r + 1):
        assert (len(gamma_with_infinity(p, l)) == 0) == (l > r - -(-r // m))
    assert finite_threshold(p) == r - r // m
    assert infinity_threshold(p) == r + (-r // m)


@pytest.mark.parametrize("r, m, lam", SWEEP)
def test_permutation_symmetry(r, m, lam):
    p = validate_params(r, m, lam)
    for l in range(2, min(r, 4) + 1):
        elems = set(gamma_finite(p, l))
        for perm in itertools.permutations(range(l)):
            assert {tuple(v[i] for i in perm) for v in elems} == elems
    for l in range(2, min(r, 3) + 1):
        elems = set(gamma_with_infinity(p, l))
        for perm in itertools.permutations(range(1, l + 1)):
            assert {(v[0],) + tuple(v[i] for i in perm) for v in elems} == elems


@pytest.mark.parametrize("r, m, lam", SWEEP)
def test_infinity_pairs_two_paths(r, m, lam):
    p = validate_params(r, m, lam)
    assert gamma_with_infinity(p, 1).elements == infinity_pairs(p)


def test_elements_sorted_and_unique():
    p = validate_params(7, 5, 1)
    for l in range(2, 8):
        e = gamma_finite(p, l).elements
        assert list(e) == sorted(set(e))


# -- gamma tilde -----------------------------------------------------------

def test_gamma_tilde_two_finite_places():
    p = validate_params(7, 5, 1)
    t = gamma_tilde(p, PlaceTuple.finite(1, 2))
    positive = sorted(v for v in t if min(v) > 0)
    assert positive == list(gamma_finite(p, 2).elements)
    nongaps = [h for h in range(t.bound + 1) if h not in gaps_at_finite(p).gaps]
    axis = sorted(v for v in t if min(v) == 0)
    assert axis == sorted(set([(h, 0) for h in nongaps] + [(0, h) for h in nongaps]))


def test_gamma_tilde_single_place():
    p = validate_params(7, 5, 1)
    t = gamma_tilde(p, PlaceTuple.finite(2), bound=30)
    assert [v[0] for v in t] == [h for h in range(31) if h not in gaps_at_finite(p).gaps]


def test_gamma_tilde_mixed():
    p = validate_params(5, 9, 1)
    t = set(gamma_tilde(p, PlaceTuple.with_infinity(1, 2)))
    assert {(2, 5, 5), (4, 28, 0), (0, 6, 6)} <= t
    assert (0, 0, 0) in t
