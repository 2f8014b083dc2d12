"""Compare closed-form verdicts for Picard-rank-2 bundles with the engine.

Run: python3 demos/04_rank_two.py [max_dim]
"""

import sys

from toric2fano import BundleSpec, kleinschmidt_bundle, rank2_closed_forms, rank2_sweep
from toric2fano.fano import rank_two_surface_cones, variety_key
from toric2fano.surfaces import ch2_pair, surface_class

top = int(sys.argv[1]) if len(sys.argv) > 1 else 5
for d in range(2, top + 1):
    res = rank2_sweep(d, d)
    print(f"d={d}: {res.checked} bundles checked, {len(res.discrepancies)} discrepancies, "
          f"2-Fano varieties: {res.two_fano_count}")
    # a product of projective spaces arises from both factor orders
    groups = {}
    for s in res.members:
        groups.setdefault(variety_key(s), []).append(kleinschmidt_bundle(s).name)
    for names in groups.values():
        print("    " + " = ".join(names))

# The integer m*a_(m-1) - 2*sum(a) is twice the pairing of ch2 with S2.
spec = BundleSpec(3, 3, (1, 1))
forms = rank2_closed_forms(spec)
fan = kleinschmidt_bundle(spec)
_, cls = surface_class(fan, rank_two_surface_cones(spec)["S2"])
print(f"{fan.name}: closed form {forms.ch2_S2}, ch2 . S2 = {ch2_pair(cls)}")
