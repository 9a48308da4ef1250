"""q-Cartan matrix of a higher-order peak algebra against the stored table,
its quiver, and the combinatorial cycle-sum prediction.

Run with ``python3 demos/cartan_and_quiver.py [n] [r]``.
"""

import sys

from peakalg.combitypes import render_label
from peakalg.golden import GOLDEN_CELLS, compare_cartan, load_golden
from peakalg.peakmodel import build_peak_algebra
from peakalg.reptheory import conjecture_cartan, q_cartan, quiver

n, r = (int(x) for x in sys.argv[1:3]) if len(sys.argv) > 2 else (6, 2)
model = build_peak_algebra(n, r)
print(f"level-{r} peak algebra in weight {n}: dimension {model.dim}, checks {model.checks}")
C = q_cartan(model.algebra)
print(C.to_text("q"))
if (n, r) in GOLDEN_CELLS:
    print("stored table:", compare_cartan(C, load_golden(n, r)))
print("quiver:")
for (a, b), m in sorted(quiver(C).items(), key=lambda kv: str(kv[0])):
    print(f"  {render_label(a)} -> {render_label(b)}" + (f"  x{m}" if m > 1 else ""))
pred = conjecture_cartan(n, r)
print("cycle-sum prediction equal at q = 1:", pred.at_one() == C.at_one())
