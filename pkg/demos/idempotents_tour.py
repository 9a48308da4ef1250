"""Zassenhaus elements, their idempotents and a check of the defining properties.

Run with ``python3 demos/idempotents_tour.py``.
"""

from peakalg import S, internal_product
from peakalg.peakcore import level_zetas, peak_idempotents
from peakalg.serialize import element_to_text
from peakalg.symcore import typeA_idempotents, zassenhaus_zetas

n = 4
print("Zassenhaus elements, S basis:")
for k, z in enumerate(zassenhaus_zetas(n)[1:], start=1):
    print(f"  zeta_{k} = {element_to_text(z.terms)}")

print("\nlevel-3 elements (multiples of 3 grouped into one head):")
for k, z in enumerate(level_zetas(n, 3)[1:], start=1):
    print(f"  zeta3_{k} = {element_to_text(z.terms)}")

for name, E in (("type A", typeA_idempotents(n)), ("level 2", peak_idempotents(n, 2))):
    total = sum((e for e in E.values()), S(n) - S(n))
    orth = all(not internal_product(x, y) for a, x in E.items() for b, y in E.items() if a != b)
    idem = all(internal_product(e, e) == e for e in E.values())
    print(f"\n{name}: {len(E)} idempotents, idempotent={idem}, orthogonal={orth}, "
          f"sum is S_{n}: {total == S(n)}")
