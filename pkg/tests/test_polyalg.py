"""Laurent polynomial layer: spec'd examples and randomized properties,
with independent oracles (Sylvester determinants via plain fraction
elimination, brute-force double sums for torsion coefficients)."""

import random
from fractions import Fraction

import pytest

from conclab import (LaurentPoly, PolySet, ValidationError,
                     branched_homology_order, excluded_primes,
                     normalize_alexander, resultant, torsion_coefficients,
                     torus_knot_alexander)
from conclab._poly import det_fraction
from conclab._primes import factorint, is_prime, prime_factors


def sylvester_resultant_oracle(f: LaurentPoly, g: LaurentPoly) -> Fraction:
    """Resultant of the shifted representatives straight from the
    Sylvester matrix, by fraction Gaussian elimination."""
    p = [int(c) for c in f.as_int_poly()]
    q = [int(c) for c in g.as_int_poly()]
    m, n = len(p) - 1, len(q) - 1
    if m == 0:
        return Fraction(p[0]) ** n
    if n == 0:
        return Fraction(q[0]) ** m
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in reversed(p)]
                    + [Fraction(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in reversed(q)]
                    + [Fraction(0)] * (m - 1 - i))
    return det_fraction(rows)


def torsion_oracle(f: LaurentPoly) -> tuple:
    """Direct double summation t_i = sum_{j>=1} j * a_{i+j}."""
    c = f.centered()
    g = c.max_exp
    out = []
    for i in range(g + 1):
        acc = 0
        for j in range(1, 2 * g + 2):
            acc += j * c.coeff(i + j)
        out.append(acc)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def random_laurent(rng: random.Random, max_deg=4, bound=3) -> LaurentPoly:
    coeffs = {rng.randint(-max_deg, max_deg): rng.randint(-bound, bound)
              for _ in range(rng.randint(1, 5))}
    return LaurentPoly.from_dict(coeffs)


# --- normalize_alexander -----------------------------------------------------

def test_normalize_unit_polynomial():
    f = normalize_alexander([1])
    assert f == LaurentPoly.one()
    assert f.is_alexander_normalized


def test_normalize_trefoil():
    f = normalize_alexander([1, -1, 1])
    assert f.pairs == ((-1, 1), (0, -1), (1, 1))
    assert f.is_alexander_normalized


def test_normalize_asymmetric_rejected_as_alexander_but_kept():
    f = normalize_alexander([1, -2])
    assert not f.is_alexander_normalized
    assert f(1) == -1


def test_normalize_empty_rejected():
    with pytest.raises(ValidationError):
        normalize_alexander([])


def test_normalize_sign_fix():
    # symmetric with f(1) = -1 gets flipped to f(1) = +1
    f = normalize_alexander([1, -3, 1])
    assert f(1) == 1
    assert f.is_alexander_normalized


# --- resultant ---------------------------------------------------------------

def test_resultant_spec_values():
    t = LaurentPoly.t_power
    assert resultant(t(1) - t(0), t(1) + t(0)) == 2
    assert resultant(LaurentPoly.from_coeffs([1, -1, 1]), LaurentPoly.one()) == 1
    assert resultant(LaurentPoly.from_coeffs([1, -1, 1]),
                     LaurentPoly.from_coeffs([-1, 0, 1])) == 3


def test_resultant_zero_rejected():
    with pytest.raises(ValidationError):
        resultant(LaurentPoly.from_dict({}), LaurentPoly.one())


def test_resultant_matches_sylvester_oracle(rng):
    checked = 0
    while checked < 150:
        f = random_laurent(rng)
        g = random_laurent(rng)
        if f.is_zero() or g.is_zero():
            continue
        assert resultant(f, g) == sylvester_resultant_oracle(f, g)
        checked += 1


def test_resultant_multiplicative(rng):
    checked = 0
    while checked < 100:
        f1, f2, g = (random_laurent(rng, 3, 2) for _ in range(3))
        if f1.is_zero() or f2.is_zero() or g.is_zero():
            continue
        assert resultant(f1 * f2, g) == resultant(f1, g) * resultant(f2, g)
        checked += 1


# --- branched homology orders -------------------------------------------------

def test_order_of_unit_is_one():
    for d in (1, 2, 3, 5, 8, 12):
        assert branched_homology_order(LaurentPoly.one(), d) == 1


def test_order_spec_values():
    trefoil = LaurentPoly.from_coeffs([1, -1, 1])
    assert branched_homology_order(trefoil, 2) == 3
    f = normalize_alexander([1, -3, 1])
    assert branched_homology_order(f, 2) == 5


def test_order_at_degree_one_is_abs_value_at_one(rng):
    for _ in range(100):
        f = random_laurent(rng)
        if f.is_zero():
            continue
        assert branched_homology_order(f, 1) == abs(f(1))


def test_order_multiplicative(rng):
    checked = 0
    while checked < 100:
        f, g = random_laurent(rng, 3, 2), random_laurent(rng, 3, 2)
        d = rng.randint(1, 12)
        if f.is_zero() or g.is_zero():
            continue
        assert branched_homology_order(f * g, d) == \
            branched_homology_order(f, d) * branched_homology_order(g, d)
        checked += 1


def test_order_zero_representable():
    # t - 1 kills every root of unity product
    f = LaurentPoly.from_coeffs([-1, 1])
    assert branched_homology_order(f, 6) == 0


# --- excluded prime sets --------------------------------------------------------

def test_excluded_unit_collection_empty():
    ps = excluded_primes(PolySet.of(LaurentPoly.one()), 2)
    assert ps.sorted_excluded() == []
    for q in (2, 3, 5, 97):
        assert ps.contains_prime(q)
    assert not ps.contains_prime(6)


def test_excluded_spec_values():
    f = normalize_alexander([1, -3, 1])
    assert excluded_primes(PolySet.of(f), 2).sorted_excluded() == [5]
    trefoil = normalize_alexander([1, -1, 1])
    assert excluded_primes(PolySet.of(trefoil), 2).sorted_excluded() == [3]


def test_excluded_requires_prime_power_degree():
    with pytest.raises(ValidationError):
        excluded_primes(PolySet.of(LaurentPoly.one()), 6)


def test_excluded_monotone_in_collection(rng):
    pool = [normalize_alexander(c) for c in
            ([1], [1, -1, 1], [1, -3, 1], [2, -3, 2], [1, -1, 1, -1, 1])]
    pool = [f for f in pool if f.is_alexander_normalized]
    for _ in range(100):
        k = rng.randint(1, len(pool) - 1)
        small = rng.sample(pool, k)
        large = small + rng.sample(pool, rng.randint(1, len(pool) - 1))
        d = rng.choice([2, 3, 4, 5, 8, 9])
        ex_small = excluded_primes(PolySet(tuple(small)), d).excluded
        ex_large = excluded_primes(PolySet(tuple(large)), d).excluded
        assert ex_small <= ex_large


# --- torus knots ---------------------------------------------------------------

def test_torus_knot_spec_values():
    assert torus_knot_alexander(2, 3).pairs == ((-1, 1), (0, -1), (1, 1))
    assert torus_knot_alexander(2, 5).pairs == \
        ((-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1))
    assert torus_knot_alexander(3, 2) == torus_knot_alexander(2, 3)


def test_torus_knot_rejects_non_coprime():
    with pytest.raises(ValidationError):
        torus_knot_alexander(2, 4)
    with pytest.raises(ValidationError):
        torus_knot_alexander(1, 3)


def test_torus_knot_always_normalized(rng):
    pairs = [(a, b) for a in range(2, 8) for b in range(2, 8)
             if a < b and __import__("math").gcd(a, b) == 1]
    for a, b in pairs:
        f = torus_knot_alexander(a, b)
        assert f.is_alexander_normalized
        assert f(1) == 1


# --- torsion coefficients --------------------------------------------------------

def test_torsion_unit_all_zero():
    assert torsion_coefficients(LaurentPoly.one()) == ()


def test_torsion_trefoil():
    assert torsion_coefficients(torus_knot_alexander(2, 3)) == (1,)


def test_torsion_t25_matches_brute_force_double_sum():
    f = torus_knot_alexander(2, 5)
    expected = torsion_oracle(f)
    assert expected == (1, 1)  # frozen from the double-sum oracle
    assert torsion_coefficients(f) == expected


def test_torsion_rejects_unnormalized():
    with pytest.raises(ValidationError):
        torsion_coefficients(LaurentPoly.from_coeffs([1, -2]))


def test_torsion_matches_oracle_on_torus_knots():
    import math
    for a in range(2, 7):
        for b in range(a + 1, 9):
            if math.gcd(a, b) != 1:
                continue
            f = torus_knot_alexander(a, b)
            assert torsion_coefficients(f) == torsion_oracle(f)


# --- primes helper ----------------------------------------------------------------

def test_factorint_roundtrip(rng):
    for _ in range(200):
        n = rng.randint(1, 10 ** 9)
        fac = factorint(n)
        prod = 1
        for p, e in fac.items():
            assert is_prime(p)
            prod *= p ** e
        assert prod == n


def test_prime_factors_simple():
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(-15) == [3, 5]
    with pytest.raises(ValueError):
        prime_factors(0)


def test_order_rejects_zero_degree():
    with pytest.raises(ValidationError):
        branched_homology_order(LaurentPoly.one(), 0)


def test_order_at_one_is_unity_for_normalized(rng):
    pool = [normalize_alexander(c) for c in
            ([1], [1, -1, 1], [1, -3, 1], [2, -3, 2], [1, -1, 1, -1, 1])]
    for f in pool:
        assert f.is_alexander_normalized
        assert branched_homology_order(f, 1) == 1
