"""Integer vectors in the rank-2 lattice N = Z^2.

Everything here is exact integer arithmetic: primitive vectors, the
2x2 determinant used as an orientation predicate, and a total angular
order on nonzero vectors.
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import ZeroVector


class Ray(NamedTuple):
    """A primitive lattice vector, i.e. the generator of a half-line."""

    x: int
    y: int

    def __neg__(self):
        return Ray(-self.x, -self.y)

    def __repr__(self):
        return f"Ray({self.x}, {self.y})"


def primitive(v) -> Ray:
    """Return the primitive vector on the half-line through ``v``."""
    x, y = int(v[0]), int(v[1])
    g = gcd(x, y)
    if g == 0:
        raise ZeroVector("the zero vector spans no half-line")
    return Ray(x // g, y // g)


def is_primitive(v) -> bool:
    return gcd(int(v[0]), int(v[1])) == 1


def det2(u, v):
    """Orientation predicate: positive iff ``v`` is counterclockwise of ``u``
    by an angle in (0, pi)."""
    return u[0] * v[1] - u[1] * v[0]


def angle_key(v):
    """Exact sort key increasing with the angle of ``v`` in [0, 2*pi).

    The key is (quadrant, rational) where the rational is monotone in the
    angle inside each half-open quadrant.
    """
    x, y = v
    if x == 0 and y == 0:
        raise ZeroVector("the zero vector has no angle")
    if x > 0 and y >= 0:
        return (0, Fraction(y, x))
    if x <= 0 and y > 0:
        return (1, Fraction(-x, y))
    if x < 0 and y <= 0:
        return (2, Fraction(y, x))
    return (3, Fraction(-x, y))


def same_direction(u, v) -> bool:
    """True iff u and v are positive multiples of each other."""
    return det2(u, v) == 0 and u[0] * v[0] + u[1] * v[1] > 0


def strictly_between(lo, v, hi) -> bool:
    """``v`` in the open cone from ``lo`` counterclockwise to ``hi`` (angle < pi)."""
    return det2(lo, v) > 0 and det2(v, hi) > 0
