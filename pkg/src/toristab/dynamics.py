"""Monomial maps acting on a fixed complete fan.

The matrix ``[[a, b], [c, d]]`` acts on the lattice N by column vectors
and on the torus by ``(z, w) -> (z**a * w**b, z**c * w**d)``, so that
composition of maps is the matrix product.

On a fan the combinatorics are:

* the toric curve of a ray ``v`` is contracted iff ``A v`` lies in an open
  2-D cone;
* the fixed point of a 2-D cone is indeterminate iff the open image cone
  contains a ray of the fan.

:func:`check_as` decides algebraic stability exactly from these two facts.
"""

import enum
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import InternalInvariant, ZeroDeterminant
from .exact import AlgebraicNumber, dynamical_degree, matrix_entries
from .fan import Fan, InteriorOfCone, Location, OnRay, locate
from .lattice import Ray, det2, primitive, strictly_between

__all__ = [
    "MonomialMap", "compose", "HolomorphyResult", "is_holomorphic",
    "contracted_rays", "indeterminacy_points", "image_of_orbit",
    "Verdict", "Phase", "Step", "Terminal", "RayTrace", "Witness",
    "ASReport", "check_as", "degree_p2", "DegreeReport", "degree_sequence",
    "ORBIT_IMAGE_CONVENTION", "ROW_CONVENTION",
]

ROW_CONVENTION = "phi_A(z,w) = (z^a w^b, z^c w^d) for A = [[a,b],[c,d]]"
ORBIT_IMAGE_CONVENTION = "image of orb(sigma) = union of orb(tau) with Int(tau) meeting A(Int sigma)"


@dataclass(frozen=True)
class MonomialMap:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det == 0:
            raise ZeroDeterminant(f"det of [[{self.a},{self.b}],[{self.c},{self.d}]] is 0")

    @classmethod
    def of(cls, A) -> "MonomialMap":
        if isinstance(A, MonomialMap):
            return A
        return cls(*matrix_entries(A))

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __call__(self, v) -> Tuple[int, int]:
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __matmul__(self, other: "MonomialMap") -> "MonomialMap":
        return MonomialMap(self.a * other.a + self.b * other.c,
                           self.a * other.b + self.b * other.d,
                           self.c * other.a + self.d * other.c,
                           self.c * other.b + self.d * other.d)

    def __pow__(self, n: int) -> "MonomialMap":
        if n < 0:
            raise ValueError("negative powers are not integer matrices")
        result, base = MonomialMap(1, 0, 0, 1), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def adjugate(self) -> "MonomialMap":
        return MonomialMap(self.d, -self.b, -self.c, self.a)

    def inverse_direction_map(self) -> "MonomialMap":
        """sign(det) * adj(A): a positive multiple of A^-1, so it carries each
        half-line to its preimage half-line."""
        s = 1 if self.det > 0 else -1
        return MonomialMap(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def image_cone(self, lo, hi) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """Image of the convex cone (lo, hi) as a counterclockwise pair."""
        p, q = self(lo), self(hi)
        return (q, p) if self.det < 0 else (p, q)

    def __repr__(self):
        return f"MonomialMap([[{self.a},{self.b}],[{self.c},{self.d}]])"


def compose(A, B) -> MonomialMap:
    """phi_A o phi_B = phi_{AB}."""
    return MonomialMap.of(A) @ MonomialMap.of(B)


def _open_image_rays(A: MonomialMap, fan: Fan, i: int) -> List[int]:
    """Indices of fan rays inside the open image of cone ``i``."""
    cone = fan.cone(i)
    p, q = A.image_cone(cone.lo, cone.hi)
    loc = locate(fan, p)
    n = len(fan)
    j = loc.index
    found = []
    for _ in range(n):
        j = (j + 1) % n
        if strictly_between(p, fan.rays[j], q):
            found.append(j)
        else:
            break
    return found


@dataclass(frozen=True)
class HolomorphyResult:
    holomorphic: bool
    violating_cones: Tuple[int, ...] = ()

    def __bool__(self):
        return self.holomorphic


def is_holomorphic(A, fan: Fan) -> HolomorphyResult:
    """A extends holomorphically iff every 2-D cone maps into a single cone
    (rays always land somewhere, the fan being complete)."""
    A = MonomialMap.of(A)
    bad = tuple(i for i in range(fan.n_cones) if _open_image_rays(A, fan, i))
    return HolomorphyResult(not bad, bad)


def contracted_rays(A, fan: Fan) -> List[Tuple[Ray, int]]:
    A = MonomialMap.of(A)
    out = []
    for r in fan.rays:
        loc = locate(fan, A(r))
        if isinstance(loc, InteriorOfCone):
            out.append((r, loc.index))
    return out


def indeterminacy_points(A, fan: Fan) -> List[int]:
    """Cones whose fixed point is indeterminate, found by locating the
    preimage direction of every ray."""
    A = MonomialMap.of(A)
    inv = A.inverse_direction_map()
    cones = set()
    for r in fan.rays:
        loc = locate(fan, inv(r))
        if isinstance(loc, InteriorOfCone):
            cones.add(loc.index)
    return sorted(cones)


def image_of_orbit(A, fan: Fan, sigma: Location) -> List[Location]:
    """Orbits tau whose relative interior meets A(Int sigma).

    ``sigma`` is ``OnRay(i)`` for a toric curve or ``InteriorOfCone(i)`` for
    a toric point; the answer is listed counterclockwise.
    """
    A = MonomialMap.of(A)
    if isinstance(sigma, OnRay):
        return [locate(fan, A(fan.rays[sigma.index]))]
    cone = fan.cone(sigma.index)
    p, q = A.image_cone(cone.lo, cone.hi)
    n = len(fan)
    j = locate(fan, p).index
    out: List[Location] = [InteriorOfCone(j)]
    for _ in range(n):
        nxt = (j + 1) % n
        if not strictly_between(p, fan.rays[nxt], q):
            break
        out.append(OnRay(nxt))
        out.append(InteriorOfCone(nxt))
        j = nxt
    return out


# -- algebraic stability ----------------------------------------------------

class Verdict(enum.Enum):
    AS = "AS"
    NotAS = "NotAS"


class Phase(enum.Enum):
    curve = "curve"
    point = "point"


@dataclass(frozen=True)
class Step:
    n: int
    dir: Ray
    phase: Phase
    cone: int          # ray index in the curve phase, 2-D cone index in the point phase


@dataclass(frozen=True)
class Terminal:
    status: str        # "CycleSafe" or "IndeterminacyHit"
    n: int             # step at which the trace closed
    cone: Optional[int] = None       # the indeterminate cone, for a hit
    cycle_start: Optional[int] = None  # first step of the repeated state, for a cycle


@dataclass(frozen=True)
class RayTrace:
    ray: Ray
    steps: Tuple[Step, ...]
    terminal: Terminal


@dataclass(frozen=True)
class Witness:
    ray: Ray
    k: int
    cone: int


@dataclass(frozen=True)
class ASReport:
    matrix: MonomialMap
    fan: Fan
    verdict: Verdict
    traces: Tuple[RayTrace, ...]
    witness: Optional[Witness] = None
    notes: Tuple[str, ...] = field(default=(ROW_CONVENTION, ORBIT_IMAGE_CONVENTION))

    @property
    def is_as(self) -> bool:
        return self.verdict is Verdict.AS


def _point_successor(A: MonomialMap, fan: Fan, i: int) -> int:
    """The unique cone containing A(Int cone_i), for a determinate point."""
    cone = fan.cone(i)
    p, q = A.image_cone(cone.lo, cone.hi)
    j = locate(fan, p).index
    target = fan.cone(j)
    if not (det2(target.lo, q) > 0 and det2(q, target.hi) >= 0):
        raise InternalInvariant(
            f"open image of cone {i} neither fits in cone {j} nor contains a ray")
    return j


def _trace_ray(A, fan, v, indeterminate) -> RayTrace:
    steps = []
    d = v
    n = 0
    seen_rays = {}
    # curve phase: follow the toric curve while it stays a curve
    while True:
        loc = locate(fan, d)
        if isinstance(loc, InteriorOfCone):
            break
        if loc.index in seen_rays:
            return RayTrace(v, tuple(steps),
                            Terminal("CycleSafe", n, cycle_start=seen_rays[loc.index]))
        seen_rays[loc.index] = n
        steps.append(Step(n, d, Phase.curve, loc.index))
        d = primitive(A(d))
        n += 1
    # point phase: the curve was contracted onto orb(sigma) at step n
    sigma = loc.index
    seen_cones = {}
    while True:
        if sigma in seen_cones:
            return RayTrace(v, tuple(steps),
                            Terminal("CycleSafe", n, cycle_start=seen_cones[sigma]))
        if not fan.cone(sigma).contains_interior(d):
            raise InternalInvariant(f"direction {d} left the tracked cone {sigma}")
        steps.append(Step(n, d, Phase.point, sigma))
        if sigma in indeterminate:
            return RayTrace(v, tuple(steps), Terminal("IndeterminacyHit", n, cone=sigma))
        seen_cones[sigma] = n
        sigma = _point_successor(A, fan, sigma)
        d = primitive(A(d))
        n += 1


def check_as(A, fan: Fan) -> ASReport:
    """Decide whether phi_A is algebraically stable on the toric surface of
    ``fan``.

    Every toric curve is followed forward.  While its image stays a curve
    the walk is over rays; once contracted, over the fixed points of 2-D
    cones.  Stability fails exactly when some walk reaches an indeterminate
    point.  Both walks are over finite sets with cycle detection, so every
    trace terminates.  Non-toric curves are never contracted since phi_A is
    finite on the torus when det A != 0.
    """
    A = MonomialMap.of(A)
    indeterminate = set(indeterminacy_points(A, fan))
    traces = tuple(_trace_ray(A, fan, r, indeterminate) for r in fan.rays)
    witness = None
    for t in traces:
        if t.terminal.status == "IndeterminacyHit":
            witness = Witness(t.ray, t.terminal.n, t.terminal.cone)
            break
    verdict = Verdict.NotAS if witness else Verdict.AS
    return ASReport(A, fan, verdict, traces, witness)


# -- degrees on P^2 ---------------------------------------------------------

def degree_p2(A) -> int:
    """Degree of phi_A as a rational self-map of P^2.

    Homogenize (X^a Y^b Z^(-a-b) : X^c Y^d Z^(-c-d) : 1) and clear
    denominators with the least monomial X^al Y^be Z^ga; the three monomials
    then share no variable, so the degree is al + be + ga.
    """
    A = MonomialMap.of(A)
    a, b, c, d = A.a, A.b, A.c, A.d
    al = -min(0, a, c)
    be = -min(0, b, d)
    ga = max(0, a + b, c + d)
    exps = [(a + al, b + be, ga - a - b), (c + al, d + be, ga - c - d), (al, be, ga)]
    for var in range(3):
        if min(e[var] for e in exps) != 0:
            raise InternalInvariant("exponent clearing left a common factor")
    return al + be + ga


@dataclass(frozen=True)
class DegreeReport:
    matrix: MonomialMap
    degrees: Tuple[int, ...]
    lambda1: AlgebraicNumber
    topological_degree: int


def degree_sequence(A, n: int, max_n: int = 64) -> DegreeReport:
    """deg(phi_A^k) on P^2 for k = 1..n."""
    A = MonomialMap.of(A)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the cap {max_n}")
    degs = []
    P = A
    for _ in range(n):
        degs.append(degree_p2(P))
        P = P @ A
    return DegreeReport(A, tuple(degs), dynamical_degree(A), abs(A.det))
