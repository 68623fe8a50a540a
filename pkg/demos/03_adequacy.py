"""Adequacy counts and the span identity on a genus-two diagram."""

from pathlib import Path

from graphoid.adequacy import adequacy_report, checkerboard_bound
from graphoid.codec import load

corpus = Path(__file__).resolve().parent.parent / "corpus"
d = load(corpus / "adequate_genus_two.gpd")
r = adequacy_report(d)
print("A-side counts:", r.a_counts, "alternating sum", r.alt_sum_A)
print("B-side counts:", r.b_counts, "alternating sum", r.alt_sum_B)
print("adequate:", r.adequate)
print("R =", r.polynomial)
print(f"span {r.polynomial.degrees()[2]} = 2c + b1(S_A) + b1(S_B) = "
      f"{2 * r.crossings} + {r.beta1_SA} + {r.beta1_SB}: {r.span_identity}")

for name in ("trefoil", "figure_eight", "theta"):
    cb = checkerboard_bound(load(corpus / f"{name}.gpd"))
    print(f"{name}: checkerboard {cb.verdict}, b1 sum {cb.beta1_sum} >= {cb.lower_bound}")
