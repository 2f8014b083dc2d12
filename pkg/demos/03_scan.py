"""Screen databases of smooth Fano fans for the 2-Fano condition.

Run: python3 demos/03_scan.py
"""

from toric2fano import del_pezzo_database, projective_space, scan
from toric2fano.io import load_bundled

for label, database in [("curves", [projective_space(1)]),
                        ("surfaces", del_pezzo_database()),
                        ("threefolds", load_bundled())]:
    result = scan(database, fast=True)
    print(f"{label:<11} {result.counts}")
    for rec in result.records:
        if rec.get("is_two_fano"):
            print(f"    2-Fano: {rec['name']}")

# The degree filter c1^d - 2 c1^(d-2) c2 >= 0 is necessary but not sufficient.
result = scan(load_bundled())
passed_but_not = [r["name"] for r in result.records
                  if r["lemma_pass"] and not r["is_two_fano"]]
print("pass the degree filter yet fail:", passed_but_not)
