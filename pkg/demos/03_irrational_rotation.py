"""A = [[1,4],[-1,0]] rotates by an irrational angle.

cos(2 pi theta) = -7/8 is rational but not one of 0, +-1/2, +-1, so theta
is irrational.  Ray orbits never close up and no fan refinement helps;
stabilize() returns a certificate instead of a fan.
"""

import math

from toristab import MonomialMap, classify, primitive, stabilize, standard_p2

A = MonomialMap(1, 4, -1, 0)
print("class:", classify(A).kind.value)
out = stabilize(A, standard_p2())
print("outcome:", type(out).__name__, out.certificate)

# the ray orbit of (1,0) spreads around the circle and never repeats
v = (1, 0)
angles = []
for _ in range(40):
    angles.append(math.degrees(math.atan2(v[1], v[0])) % 360)
    v = primitive(A(v))
gaps = sorted(angles)
print("largest gap between the first 40 orbit angles: "
      f"{max(b - a for a, b in zip(gaps, gaps[1:] + [gaps[0] + 360])):.2f} degrees")
