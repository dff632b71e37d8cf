"""The map (z, w) -> (z^2 w, z w) on P^2 and how to make it stable.

On P^2 the line at infinity is crushed to a point that the map then
blows up, so degrees stop being multiplicative.  Refining the fan along
the two eigenlines of [[2,1],[1,1]] removes the problem.
"""

from pathlib import Path

from toristab import MonomialMap, check_as, degree_sequence, stabilize, standard_p2
from toristab.svg import annotations_for, render_svg

OUT = Path(__file__).parent / "out"
A = MonomialMap(2, 1, 1, 1)
p2 = standard_p2()

report = check_as(A, p2)
w = report.witness
print(f"on P^2: {report.verdict.value}; the curve of ray {tuple(w.ray)} "
      f"reaches the indeterminate point of cone {w.cone} after {w.k} step")

degs = degree_sequence(A, 8)
print("degrees of iterates:", list(degs.degrees))
print(f"3^n would be        : {[3 ** n for n in range(1, 9)]}")
print(f"growth rate lambda1 = {float(degs.lambda1):.6f} (min poly {degs.lambda1.min_poly})")

out = stabilize(A, p2)
print(f"\nstabilized fan has {len(out.fan)} rays, smooth: {out.regular}")
for r in out.fan.rays:
    print(f"  ({r.x:3d},{r.y:3d})")
print("check on the new fan:", check_as(A, out.fan).verdict.value)

OUT.mkdir(exist_ok=True)
(OUT / "golden_p2.svg").write_text(render_svg(p2, annotations_for(A, p2, "P^2")))
(OUT / "golden_stable.svg").write_text(
    render_svg(out.fan, annotations_for(A, out.fan, "stabilized")))
print(f"figures written to {OUT}")
