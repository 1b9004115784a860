"""Finite abelian groups: primary parts, subgroup enumeration,
square-root searches; all enumerations re-verified by closure checks."""


import pytest

from conclab import SizeBoundError, ValidationError
from conclab.abgroup import (FiniteAbelianGroup, embed, generated_subgroup,
                             primary_part, square_root_subgroups,
                             subgroups_of_order)


def assert_closed(subgroup):
    g = subgroup.group
    elems = subgroup.elements
    assert g.zero in elems
    for x in elems:
        assert g.negate(x) in elems
        for y in elems:
            assert g.add(x, y) in elems


def test_invariant_factor_validation():
    with pytest.raises(ValidationError):
        FiniteAbelianGroup((4, 6))     # 4 does not divide 6
    with pytest.raises(ValidationError):
        FiniteAbelianGroup((1, 2))
    assert FiniteAbelianGroup(()).order == 1
    assert FiniteAbelianGroup((2, 4, 8)).order == 64


def test_primary_part_examples():
    G = FiniteAbelianGroup((12,))
    G2, emb2 = primary_part(G, 2)
    assert G2.invariant_factors == (4,)
    assert emb2 == ((3,),)
    G9 = FiniteAbelianGroup((9,))
    assert primary_part(G9, 3)[0].invariant_factors == (9,)
    assert primary_part(G9, 2)[0].invariant_factors == ()


def test_primary_part_requires_prime():
    with pytest.raises(ValidationError):
        primary_part(FiniteAbelianGroup((12,)), 4)


def test_primary_decomposition_reassembles(rng):
    pool = [(2,), (4,), (6,), (12,), (2, 4), (3, 9), (2, 6), (30,), (5, 25)]
    for factors in pool:
        G = FiniteAbelianGroup(factors)
        total = 1
        for p in (2, 3, 5, 7):
            Gp, emb = primary_part(G, p)
            total *= Gp.order
            # embedding is injective with the right image order
            if Gp.order <= 1000:
                images = {embed(G, emb, x) for x in Gp.elements()}
                assert len(images) == Gp.order
        assert total == G.order


def test_subgroup_counts_cyclic_and_plane():
    assert len(subgroups_of_order(FiniteAbelianGroup((9,)), 3)) == 1
    assert subgroups_of_order(FiniteAbelianGroup((9,)), 3)[0].sorted_elements() == \
        [(0,), (3,), (6,)]
    for p in (2, 3, 5):
        plane = FiniteAbelianGroup((p, p))
        subs = subgroups_of_order(plane, p)
        assert len(subs) == p + 1
        for s in subs:
            assert_closed(s)
    # trivial case
    triv = subgroups_of_order(FiniteAbelianGroup(()), 1)
    assert len(triv) == 1 and triv[0].order == 1


def test_subgroup_counts_p_squared_cyclic():
    for p in (2, 3, 5):
        G = FiniteAbelianGroup((p * p,))
        assert len(subgroups_of_order(G, p)) == 1


def test_subgroups_of_z4xz2():
    G = FiniteAbelianGroup((2, 4))
    subs2 = subgroups_of_order(G, 2)
    assert len(subs2) == 3  # three involutions
    subs4 = subgroups_of_order(G, 4)
    # Z_2 x Z_4 has one Z_4-free plane and two cyclic C4s: 3 subgroups of order 4
    assert len(subs4) == 3
    for s in subs2 + subs4:
        assert_closed(s)
        assert G.order % s.order == 0


def test_subgroups_random_closure(rng):
    pools = [(2, 2), (3, 3), (4,), (8,), (2, 4), (9,), (3, 9), (25,)]
    for _ in range(100):
        factors = rng.choice(pools)
        G = FiniteAbelianGroup(factors)
        p = min(f for f in factors)
        p = {4: 2, 8: 2, 9: 3, 25: 5}.get(p, p)
        valid_orders = [p ** k for k in range(0, 6) if G.order % (p ** k) == 0]
        n = rng.choice(valid_orders)
        subs = subgroups_of_order(G, n)
        for s in subs:
            assert s.order == n
            assert_closed(s)
        # no duplicates
        assert len({s.elements for s in subs}) == len(subs)


def test_subgroup_enumeration_bound():
    with pytest.raises(SizeBoundError):
        FiniteAbelianGroup((1048576 * 2,)).elements()


def test_square_root_unique_in_cyclic_q_squared():
    res = square_root_subgroups(FiniteAbelianGroup((9,)), 3)
    assert res.is_square and res.primary_order == 9
    assert len(res.candidates) == 1
    assert res.candidates[0].sorted_elements() == [(0,), (3,), (6,)]


def test_square_root_plane_has_four():
    res = square_root_subgroups(FiniteAbelianGroup((3, 3)), 3)
    assert len(res.candidates) == 4
    for s in res.candidates:
        assert_closed(s)


def test_square_root_odd_power_flagged():
    res = square_root_subgroups(FiniteAbelianGroup((3,)), 3)
    assert not res.is_square
    assert res.candidates == ()


def test_square_root_in_ambient_coordinates():
    # q-primary part of Z_18 is Z_9 embedded as multiples of 2
    res = square_root_subgroups(FiniteAbelianGroup((18,)), 3)
    assert res.is_square
    assert res.candidates[0].sorted_elements() == [(0,), (6,), (12,)]


def test_square_root_trivial_primary_part():
    res = square_root_subgroups(FiniteAbelianGroup((4,)), 3)
    assert res.is_square and res.primary_order == 1
    assert len(res.candidates) == 1
    assert res.candidates[0].order == 1


def test_generated_subgroup_order_divides(rng):
    for _ in range(100):
        factors = rng.choice([(6,), (12,), (2, 4), (3, 9), (30,)])
        G = FiniteAbelianGroup(factors)
        gens = [tuple(rng.randrange(d) for d in factors)
                for _ in range(rng.randint(0, 2))]
        s = generated_subgroup(G, gens)
        assert G.order % s.order == 0
        assert_closed(s)
