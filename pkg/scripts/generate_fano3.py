"""Regenerate src/toric2fano/data/fano3.jsonl, the 18 smooth toric Fano 3-folds.

Every smooth complete toric 3-fold is an equivariant blow-up of P^3, a
P^2-bundle over P^1 or a P^1-bundle over a smooth complete surface.  We seed
with those minimal models (small twists), close under star subdivision of
2- and 3-cones up to Picard number 5, keep the Fano members and remove
duplicates up to GL(3, Z).  The result is checked against the known split by
Picard number, 1/4/7/4/2.

    python scripts/generate_fano3.py > src/toric2fano/data/fano3.jsonl
"""

import itertools
import json
import sys
from collections import Counter

from toric2fano import _linalg
from toric2fano.chow import chern_degrees, wall_relation, walls
from toric2fano.constructions import (BundleSpec, hirzebruch, kleinschmidt_bundle,
                                      product, projective_space)
from toric2fano.fano import is_fano
from toric2fano.lattice import star_subdivision, validate_fan

MAX_RAYS = 8
BOX = 3


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def isomorphic(fa, fb):
    if (fa.n_rays, len(fa.max_cones)) != (fb.n_rays, len(fb.max_cones)):
        return False
    c0 = fa.max_cones[0]
    inv_a = fa.dual_basis(c0)  # rows: A^{-1}
    rays_b = {r: i for i, r in enumerate(fb.rays)}
    cones_b = set(fb.max_cones)
    for cb in fb.max_cones:
        for perm in itertools.permutations(cb):
            cols = _linalg.transpose([fb.rays[i] for i in perm])
            m = matmul(cols, [list(r) for r in inv_a])
            image = {}
            ok = True
            for i, r in enumerate(fa.rays):
                v = tuple(sum(m[p][q] * r[q] for q in range(fa.dim)) for p in range(fa.dim))
                if v not in rays_b:
                    ok = False
                    break
                image[i] = rays_b[v]
            if ok and all(tuple(sorted(image[i] for i in c)) in cones_b for c in fa.max_cones):
                return True
    return False


def fingerprint(fan):
    rels = sorted(tuple(sorted(wall_relation(fan, w).coefficients.values()))
                  for w, _ in walls(fan))
    valence = sorted(sum(i in c for c in fan.max_cones) for i in range(fan.n_rays))
    return (fan.n_rays, len(fan.max_cones), tuple(rels), tuple(valence))


class Pool:
    def __init__(self):
        self.buckets = {}

    def add(self, fan):
        bucket = self.buckets.setdefault(fingerprint(fan), [])
        if any(isomorphic(fan, other) for other in bucket):
            return False
        bucket.append(fan)
        return True

    def all(self):
        return [f for b in self.buckets.values() for f in b]


def p1_bundle(surface, twists):
    rays = [tuple(v) + (c,) for v, c in zip(surface.rays, twists)]
    rays += [(0, 0, 1), (0, 0, -1)]
    k = surface.n_rays
    cones = [list(c) + [t] for c in surface.max_cones for t in (k, k + 1)]
    return validate_fan(rays, cones)


def surfaces():
    out = [projective_space(2)] + [hirzebruch(a) for a in range(3)]
    frontier = list(out)
    while frontier:
        nxt = []
        for s in frontier:
            if s.n_rays >= 6:
                continue
            for c in s.max_cones:
                t = star_subdivision(s, c)
                if max(abs(x) for r in t.rays for x in r) <= BOX:
                    nxt.append(t)
        out += nxt
        frontier = nxt
    return out


def seeds():
    yield projective_space(3)
    for m, n in [(2, 3), (3, 2)]:
        for s in range(4):
            for tw in itertools.product(range(s + 1), repeat=m - 1):
                if sum(tw) == s and list(tw) == sorted(tw, reverse=True):
                    yield kleinschmidt_bundle(BundleSpec(m, n, tw))
    p1 = projective_space(1)
    for s in surfaces():
        if s.n_rays > 6:
            continue
        yield product(p1, s)
        if s.n_rays == 4:
            for tw in itertools.product(range(-2, 3), repeat=2):
                yield p1_bundle(s, (0, 0) + tw)


def main():
    pool = Pool()
    frontier = [f for f in seeds() if pool.add(f)]
    while frontier:
        nxt = []
        for fan in frontier:
            if fan.n_rays >= MAX_RAYS:
                continue
            for cone in sorted(fan.cones):
                if len(cone) < 2:
                    continue
                new = star_subdivision(fan, cone)
                if max(abs(x) for r in new.rays for x in r) > BOX:
                    continue
                if pool.add(new):
                    nxt.append(new)
        frontier = nxt
        print(f"pool {len(pool.all())}, frontier {len(frontier)}", file=sys.stderr)

    fano = [f for f in pool.all() if is_fano(f)[0]]
    fano.sort(key=lambda f: (f.picard, -chern_degrees(f).c1_top, f.n_rays))
    split = Counter(f.picard for f in fano)
    print(f"{len(fano)} Fano 3-folds, by Picard number {dict(sorted(split.items()))}",
          file=sys.stderr)
    assert [split[k] for k in range(1, 6)] == [1, 4, 7, 4, 2], split
    for k, f in enumerate(fano):
        canon = f.canonical().to_dict()
        canon.pop("name", None)
        canon["name"] = f"fano3-{k + 1:02d}-rho{f.picard}-deg{chern_degrees(f).c1_top}"
        print(json.dumps(canon, sort_keys=True))


if __name__ == "__main__":
    main()
