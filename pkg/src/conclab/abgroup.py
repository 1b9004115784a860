"""Finite abelian groups by invariant factors.

Elements are coordinate tuples modulo the invariant factors.  The module
provides primary parts with their embeddings, brute-force subgroup
enumeration at desk scale, and the search for square-root-order subgroups
of a q-primary part (the candidate metabolizers of the vanishing test in
:mod:`conclab.dinv`).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from ._primes import factorint, is_prime
from .errors import SizeBoundError, ValidationError

Element = tuple[int, ...]

SUBGROUP_ENUMERATION_BOUND = 10 ** 6


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct sum of cyclic groups Z_{d_1} + ... + Z_{d_r} with each d_i
    dividing d_{i+1}; the empty list is the trivial group.

    >>> G = FiniteAbelianGroup((3, 9))
    >>> G.order
    27
    >>> G.add((2, 8), (2, 2))
    (1, 1)
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fac = self.invariant_factors
        for i, d in enumerate(fac):
            if d < 2:
                raise ValidationError(f"invariant_factors[{i}]: must be >= 2")
            if i + 1 < len(fac) and fac[i + 1] % d != 0:
                raise ValidationError(
                    f"invariant_factors[{i}] = {d} does not divide "
                    f"invariant_factors[{i + 1}] = {fac[i + 1]}")

    @staticmethod
    def cyclic(n: int) -> "FiniteAbelianGroup":
        return FiniteAbelianGroup((n,)) if n > 1 else FiniteAbelianGroup(())

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def zero(self) -> Element:
        return (0,) * self.rank

    def reduce(self, x: Element) -> Element:
        if len(x) != self.rank:
            raise ValidationError(
                f"element {x} has {len(x)} coordinates, group has rank {self.rank}")
        return tuple(int(c) % d for c, d in zip(x, self.invariant_factors))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in
                     zip(self.reduce(x), self.reduce(y), self.invariant_factors))

    def negate(self, x: Element) -> Element:
        return tuple((-a) % d for a, d in zip(self.reduce(x), self.invariant_factors))

    def scalar(self, n: int, x: Element) -> Element:
        return tuple((n * a) % d for a, d in zip(self.reduce(x), self.invariant_factors))

    def elements(self) -> list[Element]:
        if self.order > SUBGROUP_ENUMERATION_BOUND:
            raise SizeBoundError(
                f"group of order {self.order} exceeds the enumeration bound")
        out = [()]
        for d in self.invariant_factors:
            out = [e + (c,) for e in out for c in range(d)]
        return out

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z_{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup given by generators (coordinates in the ambient group),
    with its full element set cached for membership checks."""

    group: FiniteAbelianGroup
    generators: tuple[Element, ...]
    elements: frozenset[Element]

    @property
    def order(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list[Element]:
        return sorted(self.elements)

    def contains(self, x: Element) -> bool:
        return self.group.reduce(x) in self.elements


def generated_subgroup(group: FiniteAbelianGroup,
                       generators: list[Element]) -> Subgroup:
    """Closure of a generating set under addition.

    >>> G = FiniteAbelianGroup((9,))
    >>> sorted(generated_subgroup(G, [(3,)]).elements)
    [(0,), (3,), (6,)]
    """
    gens = tuple(group.reduce(g) for g in generators)
    closed = {group.zero}
    frontier = [group.zero]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = group.add(x, g)
            if y not in closed:
                closed.add(y)
                frontier.append(y)
                if len(closed) > SUBGROUP_ENUMERATION_BOUND:
                    raise SizeBoundError("generated subgroup exceeds the enumeration bound")
    nonzero_gens = tuple(g for g in gens if g != group.zero)
    return Subgroup(group, nonzero_gens, frozenset(closed))


def primary_part(group: FiniteAbelianGroup, p: int) \
        -> tuple[FiniteAbelianGroup, tuple[Element, ...]]:
    """The p-primary part G_p together with its embedding: the i-th entry
    of the returned tuple is the image in G of the i-th standard generator
    of G_p.  |G_p| is the maximal power of p dividing |G|.

    >>> G = FiniteAbelianGroup((12,))
    >>> Gp, emb = primary_part(G, 2)
    >>> Gp.invariant_factors, emb
    ((4,), ((3,),))
    """
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    factors = []
    images = []
    for i, d in enumerate(group.invariant_factors):
        pk = 1
        m = d
        while m % p == 0:
            m //= p
            pk *= p
        if pk > 1:
            factors.append(pk)
            gen = [0] * group.rank
            gen[i] = d // pk
            images.append(tuple(gen))
    return FiniteAbelianGroup(tuple(factors)), tuple(images)


def embed(group: FiniteAbelianGroup, embedding: tuple[Element, ...],
          x: Element) -> Element:
    """Image in the ambient group of an element of a primary part."""
    out = group.zero
    for coord, gen in zip(x, embedding):
        out = group.add(out, group.scalar(coord, gen))
    return out


def subgroups_of_order(gp: FiniteAbelianGroup, n: int) -> list[Subgroup]:
    """All subgroups of exact order n of a p-group, by breadth-first
    closure over one-generator extensions, deduplicated by element set.
    Output is deterministic (sorted by element list).

    >>> Z9 = FiniteAbelianGroup((9,))
    >>> [s.sorted_elements() for s in subgroups_of_order(Z9, 3)]
    [[(0,), (3,), (6,)]]
    >>> len(subgroups_of_order(FiniteAbelianGroup((3, 3)), 3))
    4
    """
    fac = factorint(gp.order) if gp.order > 1 else {}
    if len(fac) > 1:
        raise ValidationError(f"group {gp} is not a p-group")
    if n == 1:
        return [generated_subgroup(gp, [])]
    if gp.order % n != 0 or (fac and factorint(n).keys() - fac.keys()):
        raise ValidationError(f"{n} is not a valid p-power subgroup order for {gp}")
    if gp.order > SUBGROUP_ENUMERATION_BOUND:
        raise SizeBoundError(
            f"group order {gp.order} exceeds the enumeration bound")

    all_elements = gp.elements()
    trivial = generated_subgroup(gp, [])
    seen: set[frozenset] = {trivial.elements}
    frontier = [trivial]
    found: dict[frozenset, Subgroup] = {}
    while frontier:
        h = frontier.pop()
        for x in all_elements:
            if x in h.elements:
                continue
            j = generated_subgroup(gp, list(h.generators) + [x])
            if j.order > n or j.elements in seen:
                continue
            seen.add(j.elements)
            if j.order == n:
                found[j.elements] = j
            else:
                frontier.append(j)
    return sorted(found.values(), key=lambda s: s.sorted_elements())


@dataclass(frozen=True)
class SquareRootSearch:
    """Result of the square-root-order subgroup search in the q-primary
    part: the candidates (as subgroups of the ambient group), whether
    |G_q| was a perfect square at all, and the primary data."""

    group: FiniteAbelianGroup
    q: int
    primary_order: int
    is_square: bool
    candidates: tuple[Subgroup, ...]


def square_root_subgroups(group: FiniteAbelianGroup, q: int) -> SquareRootSearch:
    """All subgroups H of the q-primary part with |H|**2 = |G_q|, reported
    in ambient coordinates.  When |G_q| is not a perfect power of even
    exponent the candidate list is empty and ``is_square`` is False.

    >>> res = square_root_subgroups(FiniteAbelianGroup((9,)), 3)
    >>> [s.sorted_elements() for s in res.candidates]
    [[(0,), (3,), (6,)]]
    """
    if not is_prime(q):
        raise ValidationError(f"{q} is not prime")
    gq, embedding = primary_part(group, q)
    order = gq.order
    e = 0
    m = order
    while m % q == 0:
        m //= q
        e += 1
    if e % 2 != 0:
        return SquareRootSearch(group, q, order, False, ())
    target = q ** (e // 2)
    cands = []
    for h in subgroups_of_order(gq, target):
        gens = tuple(embed(group, embedding, g) for g in h.generators)
        elems = frozenset(embed(group, embedding, x) for x in h.elements)
        cands.append(Subgroup(group, gens, elems))
    cands.sort(key=lambda s: s.sorted_elements())
    return SquareRootSearch(group, q, order, True, tuple(cands))
