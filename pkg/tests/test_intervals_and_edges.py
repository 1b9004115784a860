"""Certified enclosures, generalized (rational-entry) Seifert matrices,
and doctest coverage of the public modules."""

import doctest
import math
from fractions import Fraction

import pytest

import conclab._intervals as intervals
import conclab._poly
import conclab._primes
import conclab.abgroup
import conclab.dinv
import conclab.exprparse
import conclab.obstruct
import conclab.polyalg
import conclab.seifert
from conclab import JumpEvaluationError
from conclab.exprparse import parse_poly
from conclab.errors import ValidationError
from conclab.seifert import (SeifertMatrix, alexander_from_seifert,
                             jump_function, jump_locations, signature_at)


# --- enclosures -----------------------------------------------------------------

def test_cos_enclosure_contains_truth():
    for num, den in ((1, 6), (1, 4), (1, 3), (2, 5), (3, 7), (5, 11)):
        t = Fraction(num, den)
        encl = intervals.cos_two_pi(t, 96)
        truth = math.cos(2 * math.pi * num / den)
        assert float(encl.lo) - 1e-15 <= truth <= float(encl.hi) + 1e-15
        assert encl.width < Fraction(1, 2) ** 80


def test_cos_enclosure_special_values():
    assert intervals.cos_two_pi(Fraction(1, 2), 64).contains(Fraction(-1))
    assert intervals.cos_two_pi(Fraction(1, 6), 64).contains(Fraction(1, 2))
    assert intervals.cos_two_pi(Fraction(1, 4), 64).contains(Fraction(0))


def test_enclosure_width_shrinks_with_precision():
    t = Fraction(1, 7)
    w64 = intervals.cos_two_pi(t, 64).width
    w256 = intervals.cos_two_pi(t, 256).width
    assert w256 < w64


def test_interval_type_invariants():
    with pytest.raises(ValueError):
        intervals.RatInterval(Fraction(1), Fraction(0))
    iv = intervals.RatInterval(Fraction(0), Fraction(1))
    assert iv.mid == Fraction(1, 2)
    assert iv.disjoint_from(intervals.RatInterval(Fraction(2), Fraction(3)))


# --- generalized rational matrices -------------------------------------------------

def test_rational_matrix_signature_constant():
    a = SeifertMatrix.from_rows([["1/2"]])
    for t in (Fraction(1, 3), Fraction(1, 2), Fraction(9, 10)):
        assert signature_at(a, t) == 1
    assert jump_locations(a) == []


def test_rational_matrix_with_cyclotomic_jumps():
    # det(tA - A^T) is proportional to t^2 + 1: jumps at 1/4 and 3/4
    a = SeifertMatrix.from_rows([["1/3", "1/3"], ["-1/3", "1/3"]])
    assert jump_locations(a) == [Fraction(1, 4), Fraction(3, 4)]
    jf = jump_function(a, 1)
    assert [(j.position, j.value) for j in jf.jumps] == \
        [(Fraction(1, 4), 2), (Fraction(3, 4), -2)]
    assert signature_at(a, Fraction(1, 8)) == 0
    assert signature_at(a, Fraction(3, 8)) == 2
    with pytest.raises(JumpEvaluationError):
        signature_at(a, Fraction(1, 4))
    assert not a.is_genuine
    f = alexander_from_seifert(a)
    assert f.pairs == ((-1, 1), (1, 1))  # primitive integer, centered


def test_non_cyclotomic_signature_near_root():
    # 5_2: circle root at cos(2 pi t) = 3/4, t ~ 0.11503
    a = SeifertMatrix.from_rows([[-1, 1], [0, -2]])
    assert signature_at(a, Fraction(11, 100)) == 0
    assert signature_at(a, Fraction(12, 100)) == -2
    assert signature_at(a, Fraction(115, 1000)) == 0
    assert signature_at(a, Fraction(1151, 10000)) == -2


# --- expression parser ---------------------------------------------------------------

def test_parse_poly_forms():
    assert str(parse_poly("t^2-t+1")) == "t^2 - t + 1"
    assert parse_poly("t + t^-1 - 1").pairs == ((-1, 1), (0, -1), (1, 1))
    assert parse_poly("2(t-1)(t+1)").pairs == ((0, -2), (2, 2))
    assert parse_poly("3t^-2").pairs == ((-2, 3),)
    assert parse_poly("T(2,5)") == conclab.polyalg.torus_knot_alexander(2, 5)


def test_parse_poly_rejects_garbage():
    for bad in ("t^", "x + 1", "(t", "t**2", ""):
        with pytest.raises(ValidationError):
            parse_poly(bad)


# --- doctests --------------------------------------------------------------------------

@pytest.mark.parametrize("module", [
    conclab._intervals, conclab._poly, conclab._primes, conclab.abgroup,
    conclab.dinv, conclab.exprparse, conclab.obstruct, conclab.polyalg,
    conclab.seifert,
])
def test_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0


def test_jump_location_at_one_half():
    # det(tA - A^T) proportional to (t+1)^2: the circle root sits at
    # t = 1/2, where the two-sided jump vanishes by symmetry
    a = SeifertMatrix.from_rows([["1/2", 1], [0, "1/2"]])
    assert jump_locations(a) == [Fraction(1, 2)]
    assert jump_function(a, 1).is_zero_function()
    with pytest.raises(JumpEvaluationError):
        signature_at(a, Fraction(1, 2))
    assert signature_at(a, Fraction(1, 3)) == signature_at(a, Fraction(2, 3))
