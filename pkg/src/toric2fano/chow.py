"""Exact intersection theory on smooth complete toric varieties.

Everything reduces to one step.  For a cone sigma and a prime divisor D_i,
the restriction D_i|V(sigma) is

* V(sigma + i) when i is outside sigma and sigma + i is a cone,
* zero when i is outside sigma and sigma + i is not a cone,
* -sum_j <u, v_j> V(sigma + j) when i lies in sigma, where u is the dual
  vector of v_i in the Z-basis of the first maximal cone containing sigma
  (the principal divisor of the character u moves D_i off V(sigma)).

Iterating until the cone is maximal gives every intersection number
(D_i1 ... D_il . V(sigma)); the class polynomial I_{Y/X} and all Chern
degrees are built on top.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import factorial

from . import _linalg
from .errors import DegreeMismatch, NotAWall
from .lattice import walls as _walls


@dataclass(frozen=True)
class WallRelation:
    """Integer relation sum_i c_i v_i = 0 attached to a wall.

    ``opposite`` holds the two rays completing the wall to maximal cones;
    both carry coefficient 1.  Rays absent from ``coefficients`` have
    coefficient 0.
    """

    wall: tuple
    opposite: tuple
    coefficients: dict = field(hash=False)

    def coefficient(self, i):
        return self.coefficients.get(i, 0)

    def degree(self):
        """Anticanonical degree (-K . C) of the wall curve."""
        return sum(self.coefficients.values())


@dataclass(frozen=True)
class CycleClass:
    """Numerical class of an l-cycle: N(multiset) = (D_i1 ... D_il . Y).

    Keys are sorted ray-id tuples of length ``degree``; zero entries are
    omitted.  The polynomial I_{Y/X} carries the multinomial weight
    l! / prod(e_i!) on each stored entry.
    """

    degree: int
    coeffs: dict = field(hash=False)

    def __getitem__(self, multiset):
        return self.coeffs.get(tuple(sorted(multiset)), 0)

    def polynomial_coefficient(self, multiset):
        key = tuple(sorted(multiset))
        weight = factorial(len(key))
        for e in Counter(key).values():
            weight //= factorial(e)
        return weight * self.coeffs.get(key, 0)

    def polynomial(self):
        """I_{Y/X} as {sorted ray-id tuple: coefficient of the monomial}."""
        return {k: self.polynomial_coefficient(k) for k in self.coeffs}

    def diagonal_sum(self):
        if self.degree != 2:
            raise DegreeMismatch("diagonal sum is defined for surface classes")
        return sum(v for k, v in self.coeffs.items() if k[0] == k[1])


@dataclass(frozen=True)
class DivisorCombo:
    """Formal sum sum_j c_j V(sigma + j) of codimension-one orbit closures in V(sigma)."""

    base_cone: tuple
    terms: dict = field(hash=False)


def _cone_plus(cone, j):
    return tuple(sorted(cone + (j,)))


def walls(fan):
    return _walls(fan)


def wall_relation(fan, wall):
    """Reid's wall relation, normalised so the opposite rays have coefficient 1."""
    wall = tuple(sorted(wall))
    key = ("wallrel", wall)
    if key in fan._cache:
        return fan._cache[key]
    if len(wall) != fan.dim - 1 or not fan.contains(wall):
        raise NotAWall(f"{list(wall)} is not a wall of {fan!r}")
    ends = fan.link(wall)
    if len(ends) != 2:
        raise NotAWall(f"{list(wall)} does not separate two maximal cones")
    y1, y2 = ends
    base = _cone_plus(wall, y1)
    coords = dict(zip(base, fan.coordinates(base, fan.rays[y2])))
    # smoothness forces y2 = -y1 + sum(c_k v_k) over the wall rays
    assert coords[y1] == -1
    coeffs = {y1: 1, y2: 1}
    for k in wall:
        coeffs[k] = -coords[k]
    rel = WallRelation(wall, (y1, y2), coeffs)
    fan._cache[key] = rel
    return rel


def curve_class(fan, wall):
    """Degree-one class I_{C/X} = sum_i (D_i . C) X_i of the wall curve."""
    rel = wall_relation(fan, wall)
    return CycleClass(1, {(i,): c for i, c in sorted(rel.coefficients.items()) if c})


def restrict_divisor(fan, i, sigma):
    """Write D_i|V(sigma) as a combination of the divisors V(sigma + j)."""
    sigma = fan.require(sigma)
    if len(sigma) >= fan.dim:
        raise DegreeMismatch("cannot restrict a divisor to a point")
    key = ("restrict", i, sigma)
    if key in fan._cache:
        return fan._cache[key]
    if i not in sigma:
        terms = {i: 1} if fan.contains(_cone_plus(sigma, i)) else {}
    else:
        base = fan.first_max_cone(sigma)
        u = fan.dual_basis(base)[base.index(i)]
        terms = {}
        for j in fan.link(sigma):
            c = -_linalg.dot(u, fan.rays[j])
            if c:
                terms[j] = c
    combo = DivisorCombo(sigma, terms)
    fan._cache[key] = combo
    return combo


def _supported(fan, sigma, rest):
    link = fan.link(sigma)
    return all(r in sigma or r in link for r in rest)


def _reduce(fan, sigma, rest, memo):
    if not rest:
        return 1
    key = (sigma, rest)
    hit = memo.get(key)
    if hit is not None:
        return hit
    total = 0
    if _supported(fan, sigma, rest):
        tail = rest[1:]
        for j, c in restrict_divisor(fan, rest[0], sigma).terms.items():
            total += c * _reduce(fan, _cone_plus(sigma, j), tail, memo)
    memo[key] = total
    return total


def intersection_number(fan, divisors, sigma=(), order=None):
    """(D_i1 ... D_il . V(sigma)) for a multiset of ray ids with l = d - dim sigma.

    Divisors are processed in sorted order unless ``order`` is ``"given"``,
    in which case the sequence is reduced as passed (the result is the same;
    this exists so the order independence can be exercised).
    """
    sigma = fan.require(sigma)
    divisors = [int(i) for i in divisors]
    if len(divisors) != fan.dim - len(sigma):
        raise DegreeMismatch(
            f"{len(divisors)} divisors cannot cut a cone of dimension {len(sigma)} "
            f"down to a point in dimension {fan.dim}")
    for i in divisors:
        if not 0 <= i < fan.n_rays:
            raise IndexError(f"no ray {i}")
    rest = tuple(divisors) if order == "given" else tuple(sorted(divisors))
    memo = fan._cache.setdefault("reduce", {})
    return _reduce(fan, sigma, rest, memo)


def class_polynomial(fan, sigma=()):
    """Class I_{V(sigma)/X}: every intersection number of the orbit closure."""
    sigma = fan.require(sigma)
    l = fan.dim - len(sigma)
    support = sorted(set(sigma) | set(fan.link(sigma)))
    memo = fan._cache.setdefault("reduce", {})
    coeffs = {}
    for ms in combinations_with_replacement(support, l):
        n = _reduce(fan, sigma, ms, memo)
        if n:
            coeffs[ms] = n
    return CycleClass(l, coeffs)


def degree_of_product(fan, forms, sigma=()):
    """Degree of L_1 ... L_l . V(sigma) for linear forms {ray id: coefficient}."""
    sigma = fan.require(sigma)
    if len(forms) != fan.dim - len(sigma):
        raise DegreeMismatch("number of divisor classes must equal the cycle dimension")
    forms = [dict(f) for f in forms]
    memo = {}

    def go(cone, k):
        if k == len(forms):
            return 1
        key = (cone, k)
        if key in memo:
            return memo[key]
        pushed = {}
        for i, a in forms[k].items():
            if not a:
                continue
            if i not in cone and not fan.contains(_cone_plus(cone, i)):
                continue
            for j, c in restrict_divisor(fan, i, cone).terms.items():
                pushed[j] = pushed.get(j, 0) + a * c
        total = sum(c * go(_cone_plus(cone, j), k + 1) for j, c in pushed.items() if c)
        memo[key] = total
        return total

    return go(sigma, 0)


@dataclass(frozen=True)
class ChernDegrees:
    """Top-degree Chern numbers; the c_1^(d-2) entries are None when d < 2."""

    c1_top: int
    c1sq_c2: object
    ch2_c1: object
    lemma_value: object
    euler: int


def chern_degrees(fan):
    """c_1^d, c_1^(d-2) c_2, c_1^(d-2) ch_2 and the Euler number.

    c_1 = sum D_i and c_2 = e_2(D_1, ..., D_m) from the total Chern class
    prod(1 + D_i).  The Euler number sums D_I over all d-subsets I and is
    checked against the number of maximal cones.
    """
    d = fan.dim
    c1 = {i: 1 for i in range(fan.n_rays)}
    c1_top = degree_of_product(fan, [c1] * d)

    euler = 0
    for subset in combinations(range(fan.n_rays), d):
        if fan.contains(subset):
            euler += intersection_number(fan, subset)
    if euler != len(fan.max_cones):
        raise ArithmeticError(f"Euler number {euler} disagrees with "
                              f"{len(fan.max_cones)} maximal cones")
    if d < 2:
        return ChernDegrees(c1_top, None, None, None, euler)

    # c_1^2 - 2 c_2 = sum D_i^2
    squares = sum(degree_of_product(fan, [c1] * (d - 2) + [{i: 1}, {i: 1}])
                  for i in range(fan.n_rays))
    twice_c2 = c1_top - squares
    assert twice_c2 % 2 == 0
    return ChernDegrees(c1_top, twice_c2 // 2, Fraction(squares, 2), squares, euler)


def surface_pairing_matrix(fan):
    """Rows: (d-2)-cones in sorted order; columns: pairs i <= j; entries (D_i D_j . S)."""
    if fan.dim < 2:
        raise DegreeMismatch("surfaces need d >= 2")
    surfaces = sorted(c for c in fan.cones if len(c) == fan.dim - 2)
    pairs = list(combinations_with_replacement(range(fan.n_rays), 2))
    return surfaces, pairs, [[intersection_number(fan, p, s) for p in pairs]
                             for s in surfaces]


def n2_rank(fan):
    """dim N_2(X) as the rank of the surface / quadratic-monomial pairing."""
    _, _, rows = surface_pairing_matrix(fan)
    return _linalg.rank(rows)
