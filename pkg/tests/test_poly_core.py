"""Internal polynomial machinery against independent oracles."""

import random
from fractions import Fraction

from conclab import _poly as P


def brute_force_roots(p, lo, hi, steps=4000):
    """Sign-change scan: lower bound on the number of roots in (lo, hi)."""
    count = 0
    prev = None
    for i in range(steps + 1):
        x = Fraction(lo) + (Fraction(hi) - Fraction(lo)) * i / steps
        v = P.eval_at(p, x)
        s = (v > 0) - (v < 0)
        if s == 0:
            count += 1
            prev = None
            continue
        if prev is not None and s != prev:
            count += 1
        prev = s
    return count


def test_divmod_and_gcd():
    rng = random.Random(1)
    for _ in range(200):
        f = P.poly([rng.randint(-3, 3) for _ in range(rng.randint(1, 6))])
        g = P.poly([rng.randint(-3, 3) for _ in range(rng.randint(1, 4))])
        if P.is_zero(g):
            continue
        q, r = P.divmod_poly(f, g)
        lhs = P.add(P.mul(q, g), r)
        assert [Fraction(c) for c in lhs] == [Fraction(c) for c in f]
        assert P.degree(r) < P.degree(g)


def test_gcd_of_known_product():
    f = P.mul(P.poly([1, 1]), P.poly([-2, 1]))     # (x+1)(x-2)
    g = P.mul(P.poly([1, 1]), P.poly([3, 1]))      # (x+1)(x+3)
    assert P.poly_gcd(f, g) == (Fraction(1), Fraction(1))


def test_yun_squarefree_reassembles():
    rng = random.Random(2)
    for _ in range(100):
        factors = [P.poly([rng.randint(-2, 2), 1]) for _ in range(rng.randint(1, 3))]
        mults = [rng.randint(1, 3) for _ in factors]
        f = P.poly([1])
        for fac, m in zip(factors, mults):
            for _ in range(m):
                f = P.mul(f, fac)
        rebuilt = P.poly([1])
        for g, m in P.yun_squarefree(f):
            for _ in range(m):
                rebuilt = P.mul(rebuilt, g)
        assert P.monic(rebuilt) == P.monic(f)


def test_sturm_counts_match_scan():
    rng = random.Random(3)
    for _ in range(60):
        f = P.poly([rng.randint(-4, 4) for _ in range(rng.randint(2, 6))])
        if P.degree(f) < 1:
            continue
        sf = P.squarefree_part(f)
        lo, hi = Fraction(-5), Fraction(5)
        if P.eval_at(sf, lo) == 0 or P.eval_at(sf, hi) == 0:
            continue
        ivs = P.isolate_roots(f, lo, hi)
        # independent certificate: each isolating interval brackets a sign
        # change of the squarefree part (simple roots), and a dense scan
        # can only undercount the root total
        for a, b in ivs:
            assert P.eval_at(sf, a) * P.eval_at(sf, b) < 0
        assert len(ivs) >= brute_force_roots(sf, lo, hi, 800)
        assert P.count_roots_open(sf, lo, hi) == len(ivs)


def test_isolation_refinement_narrows():
    f = P.poly([-2, 0, 1])  # x^2 - 2
    (a1, b1), (a2, b2) = P.isolate_roots(f, Fraction(-3), Fraction(3))
    sf = P.squarefree_part(f)
    a2r, b2r = P.refine_root_interval(sf, a2, b2, Fraction(1, 10 ** 9))
    assert b2r - a2r <= Fraction(1, 10 ** 9)
    # sqrt(2) stays inside
    assert P.eval_at(f, a2r) * P.eval_at(f, b2r) < 0


def test_cyclotomic_small_orders():
    assert P.cyclotomic(1) == (-1, 1)
    assert P.cyclotomic(2) == (1, 1)
    assert P.cyclotomic(3) == (1, 1, 1)
    assert P.cyclotomic(4) == (1, 0, 1)
    assert P.cyclotomic(6) == (1, -1, 1)
    assert P.cyclotomic(12) == (1, 0, -1, 0, 1)
    # product over divisors reassembles x^n - 1
    for n in (6, 8, 12):
        prod = P.poly([1])
        for d in range(1, n + 1):
            if n % d == 0:
                prod = P.mul(prod, P.cyclotomic(d))
        assert prod == P.poly([-1] + [0] * (n - 1) + [1])


def test_chebyshev_identity():
    # C_k(t + 1/t) * t^k == t^(2k) + 1 as polynomials
    for k in range(1, 8):
        ck = P.chebyshev_basis(k)
        # evaluate both sides at several rationals
        for t in (Fraction(2), Fraction(1, 3), Fraction(-5, 2)):
            lhs = P.eval_at(ck, t + 1 / t)
            assert lhs == t ** k + t ** (-k)


def test_circle_compaction_trefoil_and_friends():
    # t^2 - t + 1: circle roots at the primitive 6th roots of unity
    g = P.circle_root_compaction(P.poly([1, -1, 1]))
    assert g == (-1, 1)
    # figure-eight numerator: real reciprocal pair off the circle
    g8 = P.circle_root_compaction(P.poly([-1, 3, -1]))
    assert P.isolate_roots(g8, Fraction(-2), Fraction(2)) == []
    # (t^2+1)(t^2-t+1): roots at i and 6th roots
    f = P.mul(P.poly([1, 0, 1]), P.poly([1, -1, 1]))
    g2 = P.circle_root_compaction(f)
    roots = P.isolate_roots(g2, Fraction(-2), Fraction(2))
    assert len(roots) == 2  # x = 0 and x = 1


def test_bareiss_matches_fraction_det():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert P.det_bareiss(rows) == P.det_fraction(rows)


def test_lagrange_interpolation_roundtrip():
    rng = random.Random(5)
    for _ in range(50):
        coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 5))]
        f = P.poly(coeffs)
        pts = [(Fraction(x), P.eval_at(f, Fraction(x))) for x in range(len(coeffs) + 1)]
        assert P.lagrange_interpolate(pts) == f
