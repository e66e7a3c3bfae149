import pytest

from kummer_semigroups.curve import INFINITY, Place, is_admissible, validate_params
from kummer_semigroups.onepoint import (gaps_at_finite, gaps_at_infinity, is_gap,
                                        semigroup_at)
from kummer_semigroups.oracle import gaps_oracle


def brute_gaps_two_generators(a, b):
    limit = a * b
    reachable = {x * a + y * b for x in range(limit // a + 1) for y in range(limit // b + 1)}
    return tuple(n for n in range(1, limit) if n not in reachable)


ADMISSIBLE = [(r, m) for r in range(3, 13) for m in range(2, 13) if is_admissible(r, m)]


def test_gaps_at_finite_example():
    # frozen from the Riemann-Roch oracle (see test below); the first twelve
    # values are also the first coordinates of Gamma_2 in the 7,5 example
    p = validate_params(7, 5, 1)
    assert gaps_at_finite(p).gaps == (1, 2, 3, 4, 6, 7, 8, 11, 12, 16, 17, 21)
    assert gaps_oracle(p, Place(1)).gaps == gaps_at_finite(p).gaps


def test_gaps_smallest_curve():
    p = validate_params(3, 2, 1)
    assert gaps_at_finite(p).gaps == (1,)
    assert gaps_at_infinity(p).gaps == (1,)


def test_gaps_at_infinity_example():
    p = validate_params(5, 9, 1)
    gaps = gaps_at_infinity(p).gaps
    assert gaps == brute_gaps_two_generators(5, 9)
    assert gaps == (1, 2, 3, 4, 6, 7, 8, 11, 12, 13, 16, 17, 21, 22, 26, 31)


def test_gaps_at_infinity_seven_five():
    gaps = gaps_at_infinity(validate_params(7, 5, 1)).gaps
    assert len(gaps) == 12 and max(gaps) == 23


@pytest.mark.parametrize("r, m", ADMISSIBLE)
def test_gap_counts_equal_genus(r, m):
    p = validate_params(r, m)
    fin, inf = gaps_at_finite(p), gaps_at_infinity(p)
    assert len(fin) == len(inf) == p.genus
    assert max(inf.gaps) == m * r - m - r
    assert all(1 <= n <= 2 * p.genus - 1 for n in fin.gaps + inf.gaps)
    assert list(fin.gaps) == sorted(set(fin.gaps))


@pytest.mark.parametrize("r, m", ADMISSIBLE)
def test_complements_are_semigroups(r, m):
    p = validate_params(r, m)
    for gl in (gaps_at_finite(p), gaps_at_infinity(p)):
        top = 4 * p.genus
        h = [n for n in range(top + 1) if n not in gl.gaps]
        hs = set(h)
        assert all(a + b in hs for a in h for b in h if a + b <= top)


@pytest.mark.parametrize("r, m, lam", [(r, m, lam) for r in range(3, 8) for m in range(2, 10)
                                       for lam in (1, 2) if is_admissible(r, m, lam)])
def test_gaps_agree_with_oracle(r, m, lam):
    p = validate_params(r, m, lam)
    assert gaps_at_finite(p).gaps == gaps_oracle(p, Place(1)).gaps
    assert gaps_at_finite(p, Place(r)).gaps == gaps_oracle(p, Place(r)).gaps
    assert gaps_at_infinity(p).gaps == gaps_oracle(p, INFINITY).gaps


def test_is_gap():
    assert is_gap(validate_params(5, 9, 1), INFINITY, 31)
    assert not is_gap(validate_params(5, 9, 1), INFINITY, 0)
    assert not is_gap(validate_params(7, 5, 1), Place(3), 0)
    # 26 exceeds 2g - 1 = 23, so it cannot be a gap
    assert not is_gap(validate_params(7, 5, 1), Place(1), 26)
    assert is_gap(validate_params(7, 5, 1), Place(1), 21)


def test_semigroup_membership():
    h = semigroup_at(validate_params(5, 9, 1), INFINITY)
    assert 0 in h and 5 in h and 9 in h and 31 not in h and 32 in h
    assert h.elements(10) == [0, 5, 9, 10]
