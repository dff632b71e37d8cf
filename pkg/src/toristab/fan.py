"""Complete two-dimensional fans over N = Z^2.

A :class:`Fan` is stored as its rays in counterclockwise order starting
from the first ray at angle >= 0 from (1, 0).  The 2-D cones are implicit:
cone ``i`` spans ``rays[i]`` and ``rays[i + 1]`` (indices mod the number of
rays).  Only complete fans are representable.
"""

import json
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Tuple, Union

from .errors import NotComplete, TooFewRays, ZeroVector
from .lattice import Ray, angle_key, det2, primitive

__all__ = [
    "Ray", "Cone2", "Fan", "OnRay", "InteriorOfCone", "Location",
    "SublatticeBasis", "make_fan", "standard_p2", "standard_p1xp1",
    "hirzebruch", "locate", "star_subdivide", "symmetrize", "is_regular",
    "add_rays", "reindex_sublattice", "enumerate_sublattices",
    "fan_to_dict", "fan_from_dict", "fan_to_json", "fan_from_json",
    "FAN_FORMAT",
]

FAN_FORMAT = "toristab-fan-v1"


@dataclass(frozen=True)
class Cone2:
    lo: Ray
    hi: Ray

    def __post_init__(self):
        if det2(self.lo, self.hi) <= 0:
            raise ValueError(f"cone({self.lo}, {self.hi}) is not strictly convex")

    @property
    def det(self) -> int:
        return det2(self.lo, self.hi)

    def contains_interior(self, v) -> bool:
        return det2(self.lo, v) > 0 and det2(v, self.hi) > 0


@dataclass(frozen=True)
class OnRay:
    index: int


@dataclass(frozen=True)
class InteriorOfCone:
    index: int


Location = Union[OnRay, InteriorOfCone]


@dataclass(frozen=True)
class Fan:
    rays: Tuple[Ray, ...]

    def __post_init__(self):
        n = len(self.rays)
        if n < 3:
            raise TooFewRays(f"a complete fan needs at least 3 rays, got {n}")
        for i in range(n):
            r, s = self.rays[i], self.rays[(i + 1) % n]
            if det2(r, s) <= 0:
                raise NotComplete(f"gap from {r} to {s} is not less than pi")
        keys = [angle_key(r) for r in self.rays]
        if any(k1 >= k2 for k1, k2 in zip(keys, keys[1:])):
            raise ValueError("rays are not in counterclockwise order from angle 0")

    def __len__(self):
        return len(self.rays)

    @property
    def n_cones(self) -> int:
        return len(self.rays)

    def cone(self, i: int) -> Cone2:
        n = len(self.rays)
        return Cone2(self.rays[i % n], self.rays[(i + 1) % n])

    @property
    def cones(self) -> List[Cone2]:
        return [self.cone(i) for i in range(len(self.rays))]

    @cached_property
    def _keys(self):
        return [angle_key(r) for r in self.rays]

    @cached_property
    def _index(self):
        return {r: i for i, r in enumerate(self.rays)}

    def ray_index(self, r) -> int:
        """Index of ray ``r``; raises KeyError if it is not a ray of the fan."""
        return self._index[primitive(r)]

    def has_ray(self, r) -> bool:
        return primitive(r) in self._index

    def is_symmetric(self) -> bool:
        return all(-r in self._index for r in self.rays)

    def __repr__(self):
        return "Fan([" + ", ".join(f"({r.x},{r.y})" for r in self.rays) + "])"


def make_fan(rays) -> Fan:
    """Build a complete fan from arbitrary nonzero integer vectors.

    Vectors are primitivized, deduplicated and sorted by angle.
    """
    prims = {primitive(v) for v in rays}
    if len(prims) < 3:
        raise TooFewRays(f"need at least 3 distinct rays, got {len(prims)}")
    return Fan(tuple(sorted(prims, key=angle_key)))


def add_rays(fan: Fan, rays) -> Fan:
    """Refine ``fan`` by inserting the given directions."""
    return make_fan(list(fan.rays) + [primitive(v) for v in rays])


def standard_p2() -> Fan:
    return make_fan([(1, 0), (0, 1), (-1, -1)])


def standard_p1xp1() -> Fan:
    return make_fan([(1, 0), (0, 1), (-1, 0), (0, -1)])


def hirzebruch(a: int) -> Fan:
    """Fan of the Hirzebruch surface F_a."""
    return make_fan([(1, 0), (0, 1), (-1, a), (0, -1)])


def locate(fan: Fan, v) -> Location:
    """Which ray or open 2-D cone of ``fan`` contains the vector ``v``."""
    if v[0] == 0 and v[1] == 0:
        raise ZeroVector("cannot locate the zero vector")
    k = angle_key(v)
    i = bisect_left(fan._keys, k)
    n = len(fan.rays)
    if i < n and fan._keys[i] == k:
        return OnRay(i)
    return InteriorOfCone((i - 1) % n)


def star_subdivide(fan: Fan, c: int) -> Fan:
    """Insert lo + hi into cone ``c``: the toric blow-up of its fixed point."""
    cone = fan.cone(c)
    return add_rays(fan, [(cone.lo.x + cone.hi.x, cone.lo.y + cone.hi.y)])


def symmetrize(fan: Fan) -> Fan:
    """Close the ray set under v -> -v."""
    return add_rays(fan, [-r for r in fan.rays])


def is_regular(fan: Fan) -> List[Tuple[int, int]]:
    """Per-cone ``(index, |det(lo, hi)|)``; the fan is smooth iff all are 1."""
    return [(i, abs(c.det)) for i, c in enumerate(fan.cones)]


@dataclass(frozen=True)
class SublatticeBasis:
    """Basis (b1, b2) of a finite-index sublattice N' of N."""

    b1: Tuple[int, int]
    b2: Tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "b1", (int(self.b1[0]), int(self.b1[1])))
        object.__setattr__(self, "b2", (int(self.b2[0]), int(self.b2[1])))
        if det2(self.b1, self.b2) == 0:
            raise ValueError("sublattice basis is degenerate")

    @property
    def det(self) -> int:
        return det2(self.b1, self.b2)

    @property
    def index(self) -> int:
        return abs(self.det)

    def coordinates(self, v) -> Ray:
        """Primitive N'-coordinates of the half-line through ``v``.

        Solves v = s*b1 + t*b2 up to a positive factor with the adjugate,
        which amounts to taking the least positive multiple of ``v`` in N'.
        """
        (p, q), (r, s) = self.b1, self.b2
        x, y = v
        # adj([[p, r], [q, s]]) = [[s, -r], [-q, p]]
        u = (s * x - r * y, -q * x + p * y)
        if self.det < 0:
            u = (-u[0], -u[1])
        return primitive(u)

    def contains(self, v) -> bool:
        (p, q), (r, s) = self.b1, self.b2
        x, y = v
        d = self.det
        return (s * x - r * y) % d == 0 and (-q * x + p * y) % d == 0

    def is_invariant(self, A) -> bool:
        """Whether the integer matrix A maps N' into itself."""
        from .exact import matrix_entries
        a, b, c, d = matrix_entries(A)
        return all(self.contains((a * v[0] + b * v[1], c * v[0] + d * v[1]))
                   for v in (self.b1, self.b2))


IDENTITY_BASIS = SublatticeBasis((1, 0), (0, 1))


def reindex_sublattice(fan: Fan, B: SublatticeBasis) -> Tuple[Fan, int]:
    """Rewrite every ray of ``fan`` in N'-coordinates; also return the
    degree |det B| of the induced cover."""
    return make_fan([B.coordinates(r) for r in fan.rays]), B.index


def sublattices_of_index(n: int) -> Iterator[SublatticeBasis]:
    """Hermite normal form bases ((a, 0), (c, d)), 0 <= c < a, a*d = n."""
    for a in range(1, n + 1):
        if n % a:
            continue
        d = n // a
        for c in range(a):
            yield SublatticeBasis((a, 0), (c, d))


def enumerate_sublattices(max_index: int) -> Iterator[SublatticeBasis]:
    """All sublattices of index <= max_index, once each, as Hermite normal
    form bases ((a, 0), (c, d)) with 0 <= c < a, ordered by index, then a,
    then c."""
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    for n in range(1, max_index + 1):
        yield from sublattices_of_index(n)


# -- JSON ------------------------------------------------------------------

def fan_to_dict(fan: Fan) -> dict:
    return {"format": FAN_FORMAT, "rays": [[r.x, r.y] for r in fan.rays]}


def fan_from_dict(doc: dict, strict: bool = False) -> Fan:
    """Parse a fan-v1 document, re-validating completeness.

    With ``strict`` the rays must already be in canonical writer form.
    """
    if doc.get("format") != FAN_FORMAT:
        raise ValueError(f"not a {FAN_FORMAT} document")
    rays = doc["rays"]
    if not isinstance(rays, list) or not all(
            isinstance(r, list) and len(r) == 2
            and all(isinstance(c, int) and not isinstance(c, bool) for c in r)
            for r in rays):
        raise ValueError("rays must be a list of integer pairs")
    fan = make_fan(rays)
    if strict and [list(r) for r in fan.rays] != rays:
        raise ValueError("rays are not primitive, distinct and in canonical counterclockwise order")
    return fan


def fan_to_json(fan: Fan) -> str:
    return json.dumps(fan_to_dict(fan), separators=(",", ":"))


def fan_from_json(text: str, strict: bool = False) -> Fan:
    return fan_from_dict(json.loads(text), strict=strict)
