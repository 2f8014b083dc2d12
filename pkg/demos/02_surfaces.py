"""Torus-invariant surfaces inside a Picard-rank-2 bundle and their ch2 pairings.

Each codimension-2 cone gives a surface; its star fan decides whether it is a
plane or a Hirzebruch surface, and a closed formula gives its class.

Run: python3 demos/02_surfaces.py
"""

from toric2fano import BundleSpec, kleinschmidt_bundle
from toric2fano.lattice import faces
from toric2fano.surfaces import HIRZEBRUCH, ch2_pair, surface_class

spec = BundleSpec(3, 3, (2, 1))
fan = kleinschmidt_bundle(spec)
print(f"{fan.name}: dimension {fan.dim}, {fan.n_rays} rays, {len(fan.max_cones)} maximal cones")

for tau in sorted(faces(fan, fan.dim - 2)):
    kind, cls = surface_class(fan, tau)
    extra = f" alpha={kind.alpha}" if kind.alpha is not None else ""
    print(f"  V{tau}: {kind.kind:<10}{extra:<9} ch2 . S = {ch2_pair(cls)}")

# For a Hirzebruch surface the classifier also names the walls whose curves
# are a fiber and the negative section.
kind, _ = surface_class(fan, (1, 3))
assert kind.kind == HIRZEBRUCH
print(f"V(1, 3): fiber wall {kind.fiber_wall}, negative-section wall {kind.negative_wall}")
