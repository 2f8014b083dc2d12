"""Lattice vectors, simplicial cones and smooth complete fans.

A cone is a sorted tuple of ray indices; the zero cone is ``()``.  Fans keep
their rays in the order given, so ray indices match whatever labelling the
caller uses (``x_1, ..., x_m`` in a construction, say).  Use
:meth:`Fan.canonical` when structural equality independent of labelling is
wanted.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from . import _linalg
from .errors import (ConeNotInFan, CoverageFailure, DimensionMismatch,
                     DimensionTooSmall, DuplicateRay, NonPrimitiveRay,
                     NonUnimodularCone, UnpairedWall, UnusedRay)

_PRIMES = []


def _primes(count):
    n = _PRIMES[-1] + 1 if _PRIMES else 2
    while len(_PRIMES) < count:
        if all(n % p for p in _PRIMES if p * p <= n):
            _PRIMES.append(n)
        n += 1
    return _PRIMES[:count]


def probe_points(d):
    """Deterministic integer points in general position used by the coverage test.

    Every sign pattern is hit for d <= 6; larger dimensions get 64 patterns
    mixed from the point index.
    """
    count = 2 ** min(d, 6)
    primes = _primes(count * d + 8)
    points = []
    for k in range(count):
        pt = []
        for j in range(d):
            bit = (k >> j) & 1 if j < 6 else (k + j) & 1
            pt.append(-primes[k * d + j] if bit else primes[k * d + j])
        points.append(tuple(pt))
    return points


def _as_cone(ids):
    cone = tuple(sorted(int(i) for i in ids))
    if len(set(cone)) != len(cone):
        raise ValueError(f"cone {ids!r} repeats a ray index")
    return cone


class Fan:
    """A validated smooth complete fan in N = Z^d.

    Instances are built by :func:`validate_fan` and treated as immutable.
    Derived data (face sets, dual bases, memo tables of the intersection
    engine) is cached on the instance.
    """

    def __init__(self, dim, rays, max_cones, name=None):
        self.dim = dim
        self.rays = tuple(tuple(r) for r in rays)
        self.max_cones = tuple(sorted(_as_cone(c) for c in max_cones))
        self.name = name
        self._cache = {}

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return (f"<Fan{label} dim={self.dim} rays={len(self.rays)} "
                f"max_cones={len(self.max_cones)}>")

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_cache"] = {}
        return state

    def _key(self):
        return (self.dim, self.rays, self.max_cones)

    @property
    def n_rays(self):
        return len(self.rays)

    @property
    def picard(self):
        return len(self.rays) - self.dim

    @property
    def cones(self):
        """Every cone of the fan, of every dimension, as a frozenset."""
        if "cones" not in self._cache:
            out = set()
            for c in self.max_cones:
                for k in range(len(c) + 1):
                    out.update(combinations(c, k))
            self._cache["cones"] = frozenset(out)
        return self._cache["cones"]

    def contains(self, cone):
        return tuple(sorted(cone)) in self.cones

    def require(self, cone):
        cone = _as_cone(cone)
        if cone not in self.cones:
            raise ConeNotInFan(f"{cone} is not a cone of {self!r}")
        return cone

    def link(self, cone):
        """Rays j outside ``cone`` such that cone + j is again a cone."""
        key = ("link", cone)
        if key not in self._cache:
            s = set(cone)
            out = set()
            for c in self.max_cones:
                if s.issubset(c):
                    out.update(c)
            self._cache[key] = tuple(sorted(out - s))
        return self._cache[key]

    def max_cones_containing(self, cone):
        s = set(cone)
        return [c for c in self.max_cones if s.issubset(c)]

    def first_max_cone(self, cone):
        key = ("first", cone)
        if key not in self._cache:
            found = self.max_cones_containing(cone)
            if not found:
                raise ConeNotInFan(f"{cone} is not a cone of {self!r}")
            self._cache[key] = found[0]
        return self._cache[key]

    def dual_basis(self, max_cone):
        """Rows u_k with <u_k, v_l> = delta_kl for the rays of a maximal cone."""
        key = ("dual", max_cone)
        if key not in self._cache:
            cols = [self.rays[i] for i in max_cone]
            self._cache[key] = _linalg.unimodular_inverse(_linalg.transpose(cols))
        return self._cache[key]

    def coordinates(self, max_cone, vector):
        """Coordinates of ``vector`` in the Z-basis formed by a maximal cone."""
        return tuple(_linalg.dot(u, vector) for u in self.dual_basis(max_cone))

    def canonical(self):
        """Relabelled copy with rays sorted lexicographically."""
        order = sorted(range(len(self.rays)), key=lambda i: self.rays[i])
        new_id = {old: new for new, old in enumerate(order)}
        cones = [[new_id[i] for i in c] for c in self.max_cones]
        return Fan(self.dim, [self.rays[i] for i in order], cones, self.name)

    def to_dict(self):
        out = {"dim": self.dim,
               "rays": [list(r) for r in self.rays],
               "max_cones": [list(c) for c in self.max_cones]}
        if self.name is not None:
            out["name"] = self.name
        return out


@dataclass(frozen=True)
class StarFan:
    """The fan of the orbit closure V(tau) in the quotient lattice N / span(tau).

    ``image_rays`` maps original ray ids to their images, written in the
    basis given by the rays of ``basis_cone`` outside tau.
    """

    base_cone: tuple
    quotient_dim: int
    image_rays: dict = field(hash=False)
    quotient_max_cones: tuple
    basis_cone: tuple

    @property
    def ray_ids(self):
        return tuple(sorted(self.image_rays))

    def as_fan(self):
        """The star fan as a standalone :class:`Fan` with rays in ray-id order."""
        ids = self.ray_ids
        pos = {r: k for k, r in enumerate(ids)}
        if self.quotient_dim == 0:
            return Fan(0, [], [()])
        return Fan(self.quotient_dim, [self.image_rays[r] for r in ids],
                   [[pos[r] for r in c] for c in self.quotient_max_cones])


def validate_fan(rays, max_cones, name=None):
    """Check raw fan data and return a :class:`Fan`.

    Raises a :class:`~toric2fano.errors.FanValidationError` subclass naming
    the first violated condition: ray shape and primitivity, duplicate rays,
    unimodularity of every maximal cone, every wall shared by exactly two
    maximal cones, and the generic-point coverage probe.
    """
    rays = [tuple(int(x) for x in r) for r in rays]
    if not rays:
        raise DimensionMismatch("fan has no rays")
    d = len(rays[0])
    if d < 1:
        raise DimensionMismatch("rays must have positive length")
    for r in rays:
        if len(r) != d:
            raise DimensionMismatch(f"ray {list(r)} does not have length {d}")
        if gcd(*r) != 1:
            raise NonPrimitiveRay(f"ray {list(r)} is not primitive")
    if len(set(rays)) != len(rays):
        raise DuplicateRay("rays are not pairwise distinct")

    cones = []
    for c in max_cones:
        if len(c) != d:
            raise DimensionMismatch(f"maximal cone {list(c)} does not have {d} rays")
        for i in c:
            if not 0 <= int(i) < len(rays):
                raise DimensionMismatch(f"cone {list(c)} references missing ray {i}")
        try:
            cone = _as_cone(c)
        except ValueError as exc:
            raise DimensionMismatch(str(exc)) from None
        if abs(_linalg.det([rays[i] for i in cone])) != 1:
            raise NonUnimodularCone(f"cone {list(cone)} is not unimodular")
        cones.append(cone)
    if len(set(cones)) != len(cones):
        raise CoverageFailure("a maximal cone is listed twice")
    used = {i for c in cones for i in c}
    if len(used) != len(rays):
        missing = sorted(set(range(len(rays))) - used)
        raise UnusedRay(f"rays {missing} lie in no maximal cone")

    incidence = {}
    for c in cones:
        for k in range(d):
            wall = c[:k] + c[k + 1:]
            incidence[wall] = incidence.get(wall, 0) + 1
    for wall, count in sorted(incidence.items()):
        if count != 2:
            raise UnpairedWall(f"face {list(wall)} lies in {count} maximal cone(s)")

    fan = Fan(d, rays, cones, name)
    for pt in probe_points(d):
        hits = 0
        degenerate = False
        for c in fan.max_cones:
            coords = fan.coordinates(c, pt)
            if all(x > 0 for x in coords):
                hits += 1
            elif all(x >= 0 for x in coords):
                degenerate = True
        if degenerate:
            continue
        if hits != 1:
            raise CoverageFailure(f"probe point {list(pt)} lies in {hits} maximal cones")
    return fan


def faces(fan, l):
    """All cones of dimension ``l``; ``faces(fan, 0) == {()}``."""
    if not 0 <= l <= fan.dim:
        raise ValueError(f"face dimension {l} outside 0..{fan.dim}")
    return {c for c in fan.cones if len(c) == l}


def walls(fan):
    """Walls with their two adjacent maximal cones, sorted by wall."""
    if "walls" not in fan._cache:
        adj = {}
        for c in fan.max_cones:
            for k in range(fan.dim):
                adj.setdefault(c[:k] + c[k + 1:], []).append(c)
        fan._cache["walls"] = [(w, tuple(sorted(cs))) for w, cs in sorted(adj.items())]
    return list(fan._cache["walls"])


def star_fan(fan, tau):
    """Star of ``tau`` pushed to the quotient lattice.

    The quotient basis is the set of rays of the first maximal cone containing
    tau that are not in tau; smoothness makes this a Z-basis of N / span(tau).
    """
    tau = fan.require(tau)
    if len(tau) >= fan.dim:
        raise DimensionTooSmall("star fan needs a cone of dimension < d")
    base = fan.first_max_cone(tau)
    keep = [k for k, r in enumerate(base) if r not in tau]
    images = {}
    for j in fan.link(tau):
        coords = fan.coordinates(base, fan.rays[j])
        images[j] = tuple(coords[k] for k in keep)
    quotient = tuple(sorted(tuple(r for r in c if r not in tau)
                            for c in fan.max_cones_containing(tau)))
    return StarFan(tau, fan.dim - len(tau), images, quotient, base)


def star_subdivision(fan, sigma, name=None):
    """Blow up V(sigma): add the ray sum(sigma) and subdivide every cone containing sigma.

    The new ray gets the next free index, so existing labels are preserved.
    """
    sigma = fan.require(sigma)
    if len(sigma) < 2:
        raise DimensionTooSmall("star subdivision needs a cone of dimension >= 2")
    new_ray = tuple(sum(fan.rays[i][k] for i in sigma) for k in range(fan.dim))
    new_id = fan.n_rays
    cones = []
    s = set(sigma)
    for c in fan.max_cones:
        if s.issubset(c):
            for i in sigma:
                cones.append([r for r in c if r != i] + [new_id])
        else:
            cones.append(list(c))
    return validate_fan(list(fan.rays) + [new_ray], cones, name)
