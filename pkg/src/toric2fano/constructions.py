"""Fan builders for the families used throughout the package."""

from dataclasses import dataclass
from itertools import combinations

from .lattice import star_subdivision, validate_fan


@dataclass(frozen=True)
class BundleSpec:
    """P_{P^(n-1)}(O + O(a_1) + ... + O(a_(m-1))) with a_1 >= ... >= a_(m-1) >= 0."""

    m: int
    n: int
    twists: tuple

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(a) for a in self.twists))
        if self.m < 2 or self.n < 2:
            raise ValueError("need m >= 2 and n >= 2")
        if len(self.twists) != self.m - 1:
            raise ValueError(f"expected {self.m - 1} twists, got {len(self.twists)}")
        if any(a < 0 for a in self.twists):
            raise ValueError("twists must be non-negative")
        if list(self.twists) != sorted(self.twists, reverse=True):
            raise ValueError("twists must be non-increasing")

    @property
    def dim(self):
        return self.m + self.n - 2

    @property
    def is_fano(self):
        return self.n > sum(self.twists)

    def x(self, i):
        """Ray id of x_i (1-based)."""
        return i - 1

    def y(self, j):
        """Ray id of y_j (1-based)."""
        return self.m + j - 1

    def label(self):
        summands = "".join(f"+O({a})" for a in self.twists)
        return f"P_P{self.n - 1}(O{summands})"


def projective_space(d):
    rays = [[int(i == j) for j in range(d)] for i in range(d)]
    rays.append([-1] * d)
    return validate_fan(rays, list(combinations(range(d + 1), d)), name=f"P{d}")


def hirzebruch(alpha):
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    rays = [(1, 0), (0, 1), (-1, alpha), (0, -1)]
    return validate_fan(rays, [(0, 1), (1, 2), (2, 3), (3, 0)], name=f"F{alpha}")


def product(fan_a, fan_b, name=None):
    """Product fan; rays of ``fan_a`` come first, padded with zeros."""
    da, db = fan_a.dim, fan_b.dim
    rays = [tuple(r) + (0,) * db for r in fan_a.rays]
    rays += [(0,) * da + tuple(r) for r in fan_b.rays]
    shift = fan_a.n_rays
    cones = [list(ca) + [shift + j for j in cb]
             for ca in fan_a.max_cones for cb in fan_b.max_cones]
    if name is None and fan_a.name and fan_b.name:
        name = f"{fan_a.name}x{fan_b.name}"
    return validate_fan(rays, cones, name=name)


def kleinschmidt_bundle(spec):
    """Fan of a Picard-rank-2 toric manifold.

    In N = Z^(m-1) + Z^(n-1): x_i = e_i (i < m), x_m = -sum e_i,
    y_j = f_j (j < n), y_n = -sum f_j + sum a_i e_i.  Ray ids list the
    x's first.  Maximal cones drop one x and one y.
    """
    m, n = spec.m, spec.n
    d = spec.dim
    rays = []
    for i in range(m - 1):
        rays.append(tuple(int(k == i) for k in range(d)))
    rays.append(tuple([-1] * (m - 1) + [0] * (n - 1)))
    for j in range(n - 1):
        rays.append(tuple(int(k == m - 1 + j) for k in range(d)))
    rays.append(tuple(list(spec.twists) + [-1] * (n - 1)))
    xs = range(m)
    ys = range(m, m + n)
    cones = [[i for i in xs if i != ix] + [j for j in ys if j != jy]
             for ix in xs for jy in ys]
    return validate_fan(rays, cones, name=spec.label())


def del_pezzo_database():
    """The five smooth toric Fano surfaces: P^2, P^1xP^1 and Bl_k P^2 for k = 1, 2, 3."""
    p2 = projective_space(2)
    p1 = projective_space(1)
    bl1 = star_subdivision(p2, (0, 1), name="Bl1P2")
    bl2 = star_subdivision(bl1, (1, 2), name="Bl2P2")
    bl3 = star_subdivision(bl2, (0, 2), name="Bl3P2")
    return [p2, product(p1, p1, name="P1xP1"), bl1, bl2, bl3]
