"""Class polynomials of orbit closures, computed from fan data alone.

Run: python3 demos/01_classes.py
"""

from toric2fano import class_polynomial, curve_class, hirzebruch, projective_space, wall_relation


def show(title, cls):
    terms = " + ".join(f"{v}*{'*'.join(f'X{i + 1}' for i in k) or '1'}"
                       for k, v in sorted(cls.polynomial().items()))
    print(f"{title:<28} {terms}")


# The fundamental class of P^2 is (X1 + X2 + X3)^2: each monomial gets its
# multinomial weight.
show("[P^2]", class_polynomial(projective_space(2)))

# A line in P^2: every divisor meets it once.
show("line in P^2", curve_class(projective_space(2), (0,)))

# On F_a the middle ray spans the negative section, which has self-intersection -a.
for a in range(4):
    fan = hirzebruch(a)
    rel = wall_relation(fan, (1,))
    print(f"F_{a}: wall relation {dict(sorted(rel.coefficients.items()))}")
    show(f"[F_{a}]", class_polynomial(fan))
