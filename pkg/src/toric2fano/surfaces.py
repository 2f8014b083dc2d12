"""Recognition of torus-invariant surfaces and their fast class formulas.

A surface V(tau) is read off from the star fan of the (d-2)-cone tau: three
star rays make it a projective plane, four a Hirzebruch surface.  For these
the class is a quadratic expression in wall-curve classes:

    P^2:   I_S = (I_C)^2                         for any invariant curve C in S
    F_a:   I_S = a (I_fib)^2 + 2 I_fib I_neg

where I_fib, I_neg are the classes of a fibre and of the negative section.
"""

from dataclasses import dataclass
from fractions import Fraction

from .chow import CycleClass, class_polynomial, curve_class
from .errors import DegreeMismatch, UnsupportedSurface, WrongDimension
from .lattice import star_fan

P2 = "P2"
HIRZEBRUCH = "Hirzebruch"
OTHER = "Other"


@dataclass(frozen=True)
class SurfaceKind:
    kind: str
    cone: tuple
    ray_count: int
    alpha: int = None
    curve_wall: tuple = None
    fiber_wall: tuple = None
    negative_wall: tuple = None


def _wall(tau, j):
    return tuple(sorted(tau + (j,)))


def _cycle(star):
    """Star rays of a complete 2-d fan in cyclic order, starting from the lowest id."""
    nbrs = {}
    for a, b in star.quotient_max_cones:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    start = min(nbrs)
    order = [start, min(nbrs[start])]
    while len(order) < len(nbrs):
        prev, cur = order[-2], order[-1]
        order.append(next(x for x in nbrs[cur] if x != prev))
    return order


def _add(u, v, scale=1):
    return tuple(a + scale * b for a, b in zip(u, v))


def classify_surface(fan, tau):
    """Identify V(tau) for a (d-2)-cone tau as P^2, F_alpha or Other."""
    tau = fan.require(tau)
    if len(tau) != fan.dim - 2:
        raise WrongDimension(f"{list(tau)} is not a codimension-2 cone")
    star = star_fan(fan, tau)
    ids = star.ray_ids
    if len(ids) == 3:
        return SurfaceKind(P2, tau, 3, curve_wall=_wall(tau, ids[0]))
    if len(ids) != 4:
        return SurfaceKind(OTHER, tau, len(ids))

    r0, r1, r2, r3 = _cycle(star)
    img = star.image_rays
    zero = (0, 0)
    pairs = [(r0, r2), (r1, r3)]
    sums = [_add(img[a], img[b]) for a, b in pairs]
    if sums[0] == zero:
        # both pairs balanced only for alpha = 0; r0 is the lowest star ray
        fib_pair, sec_pair = pairs
    else:
        sec_pair, fib_pair = pairs
    fib_sum = _add(img[fib_pair[0]], img[fib_pair[1]])
    sec_sum = _add(img[sec_pair[0]], img[sec_pair[1]])
    if fib_sum != zero:
        raise ArithmeticError(f"4-ray star of {tau} has no balanced opposite pair")

    # sec_sum = k * img[fib_pair[0]] = -k * img[fib_pair[1]]
    a = img[fib_pair[0]]
    k = next(s // c for s, c in zip(sec_sum, a) if c)
    assert sec_sum == tuple(k * c for c in a)
    neg_ray = fib_pair[0] if k >= 0 else fib_pair[1]
    return SurfaceKind(HIRZEBRUCH, tau, 4, alpha=abs(k),
                       fiber_wall=_wall(tau, min(sec_pair)),
                       negative_wall=_wall(tau, neg_ray))


def _linear(cls):
    return {k[0]: v for k, v in cls.coeffs.items()}


def surface_class_fast(fan, tau, kind=None):
    """Class I_{S/X} from wall-curve classes; P^2 and Hirzebruch surfaces only."""
    if kind is None:
        kind = classify_surface(fan, tau)
    if kind.kind == P2:
        c = _linear(curve_class(fan, kind.curve_wall))
        ids = sorted(c)
        coeffs = {(i, j): c[i] * c[j] for n, i in enumerate(ids) for j in ids[n:]}
    elif kind.kind == HIRZEBRUCH:
        f = _linear(curve_class(fan, kind.fiber_wall))
        g = _linear(curve_class(fan, kind.negative_wall))
        ids = sorted(set(f) | set(g))
        al = kind.alpha
        coeffs = {}
        for n, i in enumerate(ids):
            fi, gi = f.get(i, 0), g.get(i, 0)
            for j in ids[n:]:
                fj, gj = f.get(j, 0), g.get(j, 0)
                coeffs[(i, j)] = al * fi * fj + fi * gj + fj * gi
    else:
        raise UnsupportedSurface(f"surface of cone {list(kind.cone)} has "
                                 f"{kind.ray_count} star rays")
    return CycleClass(2, {k: v for k, v in coeffs.items() if v})


def surface_class(fan, tau):
    """Fast formula when it applies, the general reduction otherwise."""
    kind = classify_surface(fan, tau)
    if kind.kind == OTHER:
        return kind, class_polynomial(fan, kind.cone)
    return kind, surface_class_fast(fan, kind.cone, kind)


def ch2_pair(cls):
    """(ch_2(X) . S) = half the sum of the diagonal entries N(i, i)."""
    if cls.degree != 2:
        raise DegreeMismatch(f"ch2 pairs with surfaces, got a degree {cls.degree} class")
    return Fraction(cls.diagonal_sum(), 2)
