from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leibalg.poly import (
    Poly,
    count_real_roots,
    isolate_real_roots,
    poly_gcd,
    rational_roots,
    squarefree_part,
)

from conftest import rationals


def from_roots(roots):
    p = Poly([1])
    for r in roots:
        p = p * Poly([-r, 1])
    return p


polys = st.lists(rationals(6), min_size=0, max_size=6).map(Poly)


def test_normalizes_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).is_zero()
    assert Poly().degree == -1


def test_str():
    assert str(Poly([1, -2, 1])) == "t^2 - 2*t + 1"
    assert str(Poly([0, Fraction(-1, 2)])) == "-1/2*t"
    assert str(Poly()) == "0"


def test_evaluation_and_derivative():
    p = Poly([1, 0, 3])
    assert p(2) == 13
    assert p.derivative() == Poly([0, 6])


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(Poly([1]), Poly())


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_divmod_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys)
def test_ring_axioms(a, b):
    assert a * b == b * a
    assert (a + b) - b == a
    assert (a * b).degree == (-1 if a.is_zero() or b.is_zero() else a.degree + b.degree)


def test_gcd_of_products():
    a = from_roots([1, 2])
    b = from_roots([1, -3])
    assert poly_gcd(a, b) == Poly([-1, 1])
    assert poly_gcd(Poly(), Poly()) == Poly()
    assert poly_gcd(a, Poly()) == a.monic()


@given(st.lists(rationals(4), min_size=1, max_size=4), st.lists(rationals(4), max_size=3))
def test_gcd_divides_inputs(common, extra):
    g0 = from_roots(common)
    a = g0 * from_roots(extra)
    b = g0 * Poly([1, 0, 1])
    g = poly_gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()
    assert (g % g0.monic()).is_zero() or g.degree >= g0.degree


@given(st.lists(rationals(5, 4), min_size=1, max_size=5))
def test_root_counting_matches_construction(roots):
    p = from_roots(roots) * Poly([1, 0, 1])  # extra complex pair
    distinct = sorted(set(roots))
    assert count_real_roots(p) == len(distinct)
    assert rational_roots(p) == distinct
    intervals = isolate_real_roots(p)
    assert len(intervals) == len(distinct)
    for (lo, hi), r in zip(intervals, distinct):
        assert lo < r <= hi or lo == hi == r


def test_no_real_roots():
    assert count_real_roots(Poly([1, 0, 1])) == 0
    assert isolate_real_roots(Poly([2, 0, 1])) == []


def test_irrational_roots_are_isolated():
    p = Poly([-2, 0, 1])
    assert rational_roots(p) == []
    ivs = isolate_real_roots(p)
    assert len(ivs) == 2
    for lo, hi in ivs:
        assert p(lo) * p(hi) < 0


def test_count_in_interval():
    p = from_roots([0, 1, 2])
    assert count_real_roots(p, 0, 2) == 2  # half-open (0, 2]
    assert count_real_roots(p, -1, 0) == 1


def test_squarefree_part():
    assert squarefree_part(from_roots([1, 1, 2])) == from_roots([1, 2])


def test_zero_polynomial_roots_rejected():
    with pytest.raises(ValueError):
        count_real_roots(Poly())
    with pytest.raises(ValueError):
        rational_roots(Poly())
