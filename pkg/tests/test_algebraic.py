import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equiangular.exact import AlgebraicNumber, IntPoly, Ordering, compare, root_multiplicity
from equiangular.exact.algebraic import count_roots, sturm_chain


def test_sturm_counts_roots():
    p = IntPoly.from_roots([-2, 0, 3])
    chain = sturm_chain(p)
    assert count_roots(p, None, None, chain) == 3
    assert count_roots(p, Fraction(-1), Fraction(3), chain) == 2  # (lo, hi]
    assert count_roots(p, Fraction(0), Fraction(3), chain) == 1


def test_sqrt_and_threshold_values():
    r2 = AlgebraicNumber.sqrt(2)
    assert abs(float(r2) - math.sqrt(2)) < 1e-15
    th = AlgebraicNumber.largest_root(IntPoly((-1, 0, -4, 0, 1)))
    assert abs(float(th) - math.sqrt(2 + math.sqrt(5))) < 1e-14


def test_compare_exact_equality_of_different_presentations():
    a = AlgebraicNumber.sqrt(2)
    b = AlgebraicNumber.largest_root(IntPoly((-2, 0, 1)) * IntPoly((-3, 0, 1)) * IntPoly((-5, 0, 1))).copy()
    c = AlgebraicNumber.real_roots(IntPoly((-2, 0, 1)) * IntPoly((-7, 1)))[1]
    assert compare(a, c) == Ordering.EQ
    assert compare(a, b) == Ordering.LT
    assert a < Fraction(142, 100) and a > Fraction(141, 100)


def test_rational_root_detection():
    # x^2 - 9 has rational roots; roots of (x-3)(x^2-2) include 3.
    r = AlgebraicNumber.largest_root(IntPoly.from_roots([3]) * IntPoly((-2, 0, 1)))
    assert r.is_rational and r.as_fraction() == 3


def test_affine_and_reciprocal():
    r = AlgebraicNumber.sqrt(5)
    phi = r.affine(Fraction(1, 2), Fraction(1, 2))
    assert abs(float(phi) - (1 + math.sqrt(5)) / 2) < 1e-14
    inv = phi.reciprocal()
    assert compare(inv, phi - 1) == Ordering.EQ  # 1/phi = phi - 1
    with pytest.raises(ZeroDivisionError):
        AlgebraicNumber.from_rational(0).reciprocal()


def test_sign_of_polynomial_at_root():
    r = AlgebraicNumber.sqrt(2)
    assert r.sign_of(IntPoly((-2, 0, 1))) == 0
    assert r.sign_of(IntPoly((-1, 1))) == 1
    assert r.sign_of(IntPoly((3, 0, 0, -1))) == 1  # 3 - 2*sqrt2 > 0
    assert r.sign_of(IntPoly((-3, 0, 0, 1))) == -1


def test_root_multiplicity():
    p = IntPoly((-2, 0, 1)) ** 3 * IntPoly.from_roots([1, 1])
    assert root_multiplicity(p, AlgebraicNumber.sqrt(2)) == 3
    assert root_multiplicity(p, AlgebraicNumber.from_rational(1)) == 2
    assert root_multiplicity(p, AlgebraicNumber.sqrt(3)) == 0


def test_json_round_trip():
    a = AlgebraicNumber.sqrt(7).affine(2, 1)
    b = AlgebraicNumber.from_json(a.to_json())
    assert compare(a, b) == Ordering.EQ


def test_invalid_interval_rejected():
    with pytest.raises(ValueError):
        AlgebraicNumber(IntPoly((-2, 0, 1)), -2, 2)


@settings(max_examples=60)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5), st.integers(-6, 6))
def test_real_roots_match_float_and_order(roots, extra):
    p = IntPoly.from_roots(roots) * IntPoly((-abs(extra) - 1, 0, 1))  # adds +-sqrt(|extra|+1)
    found = AlgebraicNumber.real_roots(p)
    expected = sorted(set(roots) | {math.sqrt(abs(extra) + 1), -math.sqrt(abs(extra) + 1)})
    # sqrt values may coincide with integer roots
    dedup = []
    for x in expected:
        if not dedup or abs(dedup[-1] - x) > 1e-9:
            dedup.append(x)
    assert len(found) == len(dedup)
    for a, x in zip(found, dedup):
        assert abs(float(a) - x) < 1e-12
    for a, b in zip(found, found[1:]):
        assert a.compare(b) == Ordering.LT


@given(st.fractions(min_value=-50, max_value=50, max_denominator=50),
       st.fractions(min_value=-50, max_value=50, max_denominator=50))
def test_compare_against_rationals(q, s):
    assert int(compare(AlgebraicNumber.from_rational(q), s)) == (q > s) - (q < s)
