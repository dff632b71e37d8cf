"""A rotation by an eighth of a turn, up to scale: A = [[0,-8],[1,4]].

A^8 is a scalar, so rays move periodically and closing any fan under the
action gives a model where the map is holomorphic.  That model is never
smooth: every invariant fan has cones of determinant 2.  Passing to an
index-2 sublattice (a double cover) smooths it.
"""

from pathlib import Path

from toristab import (MonomialMap, classify, is_regular,
                      orbit_closure_invariant_fan, primitive, stabilize,
                      standard_p1xp1)
from toristab.lattice import det2
from toristab.svg import annotations_for, render_svg

A = MonomialMap(0, -8, 1, 4)
print("class:", classify(A))
print("A^8 =", A ** 8)

fan = orbit_closure_invariant_fan(A, standard_p1xp1())
print("invariant fan:", fan)
print("cone determinants:", [d for _, d in is_regular(fan)])

# adding any ray (-1, k) to make the cone at (0,1) smooth just moves the
# problem: its image always makes a determinant-2 cone with A(0,1)
p = primitive(A((0, 1)))
print("dets against A(0,1):",
      sorted({abs(det2(p, primitive(A((-1, k))))) for k in range(1, 50)}))

out = stabilize(A, standard_p1xp1())
B = out.sublattice
print(f"sublattice basis {B.b1}, {B.b2}: index {B.index}, A-invariant {out.sublattice_invariant}")

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)
(OUT / "order8.svg").write_text(render_svg(fan, annotations_for(A, fan, "order 8")))
