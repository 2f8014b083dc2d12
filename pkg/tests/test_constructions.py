import pytest
import sympy

from oracles import polynomial_tensor
from toric2fano.chow import chern_degrees, class_polynomial, n2_rank, wall_relation, walls
from toric2fano.constructions import (BundleSpec, del_pezzo_database, hirzebruch,
                                      kleinschmidt_bundle, product, projective_space)
from toric2fano.fano import is_fano
from toric2fano.lattice import star_subdivision, validate_fan
from toric2fano.surfaces import ch2_pair, classify_surface


def fingerprint(fan):
    ch = chern_degrees(fan)
    pairs = []
    if fan.dim >= 2:
        pairs = sorted(ch2_pair(class_polynomial(fan, t))
                       for t in fan.cones if len(t) == fan.dim - 2)
    return (fan.n_rays, ch.euler, ch.c1_top, pairs)


def test_projective_line():
    p1 = projective_space(1)
    assert p1.n_rays == 2 and len(p1.max_cones) == 2


def test_p2_matches_literal_data():
    assert projective_space(2) == validate_fan([(1, 0), (0, 1), (-1, -1)],
                                               [(0, 1), (1, 2), (2, 0)])


def test_p3_class():
    xs = sympy.symbols("X1:5")
    assert class_polynomial(projective_space(3)).coeffs == polynomial_tensor(sum(xs) ** 3, xs)


def test_hirzebruch_zero_is_p1xp1():
    p1 = projective_space(1)
    f0 = hirzebruch(0)
    pp = product(p1, p1)
    # swap coordinates: P1xP1 rays are (1,0), (-1,0), (0,1), (0,-1) as well
    assert f0.canonical().rays == pp.canonical().rays
    assert f0.canonical() == pp.canonical()


def test_hirzebruch_one_vs_blowup():
    bl = star_subdivision(projective_space(2), (0, 1))
    assert fingerprint(hirzebruch(1)) == fingerprint(bl)


def test_hirzebruch_three_class():
    x1, x2, x3, x4 = xs = sympy.symbols("X1:5")
    expr = 3 * (x2 + x4) ** 2 + 2 * (x2 + x4) * (x1 + x3 - 3 * x2)
    assert class_polynomial(hirzebruch(3)).coeffs == polynomial_tensor(expr, xs)


def test_products():
    p1, p2, p3 = (projective_space(d) for d in (1, 2, 3))
    p13 = product(p1, p3)
    assert p13.n_rays == 6 and len(p13.max_cones) == 8
    assert n2_rank(p13) == 2
    assert n2_rank(product(p2, p2)) == 3
    for a, b in [(p1, p3), (p2, p2), (hirzebruch(2), p1)]:
        assert chern_degrees(product(a, b)).euler == \
            chern_degrees(a).euler * chern_degrees(b).euler


def test_product_commutes_up_to_coordinates():
    a, b = projective_space(1), hirzebruch(2)
    ab, ba = product(a, b), product(b, a)
    # move the P^1 coordinate last
    moved = validate_fan([r[1:] + r[:1] for r in ab.rays], ab.max_cones)
    assert moved.canonical() == ba.canonical()


@pytest.mark.parametrize("alpha", range(4))
def test_bundle_m2_n2_is_hirzebruch(alpha):
    fan = kleinschmidt_bundle(BundleSpec(2, 2, (alpha,)))
    assert fingerprint(fan) == fingerprint(hirzebruch(alpha))
    # (u, v) -> (v, u) maps the bundle rays onto F_alpha's
    swapped = validate_fan([(r[1], r[0]) for r in fan.rays], fan.max_cones)
    assert swapped.canonical() == hirzebruch(alpha).canonical()


@pytest.mark.parametrize("m, n", [(2, 3), (3, 3), (4, 2), (3, 4)])
def test_untwisted_bundle_is_product(m, n):
    fan = kleinschmidt_bundle(BundleSpec(m, n, (0,) * (m - 1)))
    assert fan.canonical() == product(projective_space(m - 1),
                                      projective_space(n - 1)).canonical()


@pytest.mark.parametrize("m, n, twists", [(2, 2, (1,)), (3, 3, (2, 1)), (4, 3, (3, 1, 0))])
def test_bundle_invariants(m, n, twists):
    spec = BundleSpec(m, n, twists)
    fan = kleinschmidt_bundle(spec)
    assert fan.picard == 2
    assert fan.dim == spec.dim
    # y_1 + ... + y_n = sum a_i x_i holds in the lattice
    ys = [fan.rays[spec.y(j)] for j in range(1, n + 1)]
    xs = [fan.rays[spec.x(i)] for i in range(1, m)]
    lhs = [sum(v[k] for v in ys) for k in range(fan.dim)]
    rhs = [sum(a * v[k] for a, v in zip(twists, xs)) for k in range(fan.dim)]
    assert lhs == rhs
    degrees = {wall_relation(fan, w).degree() for w, _ in walls(fan)}
    assert n - sum(twists) in degrees and m in degrees


def test_bundle_spec_validation():
    with pytest.raises(ValueError):
        BundleSpec(3, 3, (0, 1))
    with pytest.raises(ValueError):
        BundleSpec(3, 3, (1,))
    with pytest.raises(ValueError):
        BundleSpec(1, 3, ())
    with pytest.raises(ValueError):
        BundleSpec(2, 3, (-1,))
    assert BundleSpec(2, 4, (3,)).is_fano and not BundleSpec(2, 4, (4,)).is_fano


def test_del_pezzo_database():
    fans = del_pezzo_database()
    assert len(fans) == 5
    assert all(is_fano(f)[0] for f in fans)
    assert [f.n_rays for f in fans] == [3, 4, 4, 5, 6]
    assert chern_degrees(fans[-1]).euler == 6
    assert {classify_surface(f, ()).kind for f in fans} == {"P2", "Hirzebruch", "Other"}
