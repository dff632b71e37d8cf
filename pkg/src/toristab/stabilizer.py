"""Classify a monomial map by its spectrum and refine fans until it is
algebraically stable.

Pipelines by class:

* ``ScalarDiagonal``: holomorphic on every fan.
* ``RealDominant`` (|rho1| > |rho2|) and ``RepeatedNonDiagonalizable``:
  symmetrize, install an attracting double cone around the dominant
  eigenline and a repelling one around the other eigenline, then add all
  preimage lines that stay outside the repelling cone.  Indeterminacy is
  then confined to the repelling cone, which no point orbit from outside
  can enter, so the result is AS.
* ``RealOpposite`` and ``ComplexRational``: the action on rays is periodic;
  closing the fan under it makes the map holomorphic.
* ``ComplexIrrational``: no model works; an exact certificate is returned.
"""

import enum
from math import gcd
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from .dynamics import ASReport, MonomialMap, check_as, is_holomorphic
from .errors import (InternalInvariant, NotApplicable, OrbitBoundExceeded,
                     SaturationBudgetExceeded)
from .exact import (NIVEN_COSINES, EigenKind, SpectralData, direction_of,
                    eigen_decompose, sign, stern_brocot_between)
from .fan import (Fan, SublatticeBasis, add_rays, is_regular, locate,
                  symmetrize)
from .lattice import Ray, det2, primitive

__all__ = [
    "ClassKind", "Classification", "classify", "ray_action_order",
    "DoubleCone", "attracting_cone", "repelling_cone", "saturate_backward",
    "regularize", "orbit_closure_invariant_fan", "Certificate",
    "impossibility_certificate", "StabilizeConfig", "Stabilized",
    "Holomorphic", "Impossible", "StabilizationOutcome", "stabilize",
]


class ClassKind(enum.Enum):
    ScalarDiagonal = "ScalarDiagonal"
    RealDominant = "RealDominant"
    RepeatedNonDiagonalizable = "RepeatedNonDiagonalizable"
    RealOpposite = "RealOpposite"
    ComplexRational = "ComplexRational"
    ComplexIrrational = "ComplexIrrational"


@dataclass(frozen=True)
class Classification:
    kind: ClassKind
    order: Optional[int] = None                 # ray-action order, ComplexRational
    cos_two_pi_theta: Optional[Fraction] = None  # complex spectrum only


_MAX_RAY_ORDER = 12


def ray_action_order(A, bound: int = 24) -> Optional[int]:
    """Period of v -> primitive(A v) on half-lines, or None if no period
    <= bound is found.

    A^k fixes every half-line iff it fixes three pairwise independent ones
    (it is then a positive scalar).
    """
    A = MonomialMap.of(A)
    starts = (Ray(1, 0), Ray(0, 1), Ray(1, 1))
    d = list(starts)
    for k in range(1, bound + 1):
        d = [primitive(A(v)) for v in d]
        if tuple(d) == starts:
            return k
    return None


def classify(A) -> Classification:
    A = MonomialMap.of(A)
    sd = eigen_decompose(A)
    if sd.eigen_kind is EigenKind.Complex:
        cos = sd.cos_two_pi_theta
        if cos in NIVEN_COSINES:
            order = ray_action_order(A)
            if order is None or order > _MAX_RAY_ORDER:
                raise InternalInvariant(f"rational rotation without finite ray order: {A}")
            return Classification(ClassKind.ComplexRational, order, cos)
        return Classification(ClassKind.ComplexIrrational, None, cos)
    if sd.eigen_kind is EigenKind.RealRepeated:
        if A.b == 0 and A.c == 0 and A.a == A.d:
            return Classification(ClassKind.ScalarDiagonal)
        return Classification(ClassKind.RepeatedNonDiagonalizable)
    if sd.trace == 0:
        return Classification(ClassKind.RealOpposite)
    return Classification(ClassKind.RealDominant)


# -- attracting and repelling double cones ----------------------------------

@dataclass(frozen=True)
class DoubleCone:
    """The convex cone from ``lo`` counterclockwise to ``hi`` together with
    its negative."""

    lo: Ray
    hi: Ray

    def contains_interior(self, v) -> bool:
        for s in (1, -1):
            w = (s * v[0], s * v[1])
            if det2(self.lo, w) > 0 and det2(w, self.hi) > 0:
                return True
        return False

    def contains(self, v) -> bool:
        for s in (1, -1):
            w = (s * v[0], s * v[1])
            if det2(self.lo, w) >= 0 and det2(w, self.hi) >= 0:
                return True
        return False


def maps_into(M: MonomialMap, cone: DoubleCone, strict_interior: bool = False) -> bool:
    """Exact test of M(cone) being a proper subset of ``cone``.

    With ``strict_interior`` both boundary lines must land in the open cone.
    """
    p, q = M.image_cone(cone.lo, cone.hi)
    if not cone.contains(p):
        return False
    if det2(cone.lo, p) < 0 or det2(p, cone.hi) < 0:
        p, q = (-p[0], -p[1]), (-q[0], -q[1])
    inside = (det2(cone.lo, p) >= 0 and det2(p, q) > 0 and det2(q, cone.hi) >= 0)
    if not inside:
        return False
    if strict_interior:
        return det2(cone.lo, p) > 0 and det2(q, cone.hi) > 0
    return primitive(p) != cone.lo or primitive(q) != cone.hi


class _EigenChart:
    """Coordinate t on lines: the line through w1 + t*w2 has coordinate t.

    M acts as t -> kappa * t.  Values are Fractions or QuadElems.
    """

    def __init__(self, sd: SpectralData):
        self.w1, self.w2 = sd.w1, sd.w2
        self.kappa = sd.kappa
        self.orient = sign(det2(self.w1, self.w2))
        self._memo = {}

    def t(self, v):
        key = max(tuple(v), (-v[0], -v[1]))      # t(-v) == t(v)
        if key not in self._memo:
            num = det2(self.w1, v)
            den = det2(v, self.w2)
            # None marks the w2 line
            self._memo[key] = None if sign(den) == 0 else num / den
        return self._memo[key]

    def direction(self, t):
        return (self.w1[0] + t * self.w2[0], self.w1[1] + t * self.w2[1])

    def between(self, t_a, t_b) -> Ray:
        """A lattice ray on a line with coordinate strictly between t_a and t_b."""
        da, db = self.direction(t_a), self.direction(t_b)
        if sign(det2(da, db)) < 0:
            da, db = db, da
        return stern_brocot_between(da, db)

    def side_ray(self, line: Ray) -> Ray:
        """The half of ``line`` on the w1 side of the w2 line."""
        den = det2(line, self.w2)
        # v = s1*w1 + s2*w2 with s1 = det(v, w2) / det(w1, w2)
        return line if sign(den) * self.orient > 0 else -line


def _hyperbolic_attracting(M: MonomialMap, fan: Fan, sd: SpectralData):
    chart = _EigenChart(sd)
    if sd.rational_eigenvalues:
        w1 = direction_of(sd.w1)
        fan = add_rays(fan, [w1, -w1])
    kappa = chart.kappa
    abs_k = kappa if sign(kappa) > 0 else -kappa
    for _ in range(4):
        ts = [chart.t(r) for r in fan.rays]
        pos = [t for t in ts if t is not None and sign(t) > 0]
        neg = [t for t in ts if t is not None and sign(t) < 0]
        if not pos:
            fan = _with_line(fan, chart.between(0, 1))
            continue
        if not neg:
            fan = _with_line(fan, chart.between(0, -1))
            continue
        alpha = min(pos)
        beta = -max(neg)
        if sign(kappa) < 0:
            # the image of [-beta, alpha] is [-|k|alpha, |k|beta]
            if not abs_k * alpha < beta:
                fan = _with_line(fan, chart.between(abs_k * beta, beta / abs_k))
                continue
            if not beta < alpha / abs_k:
                fan = _with_line(fan, chart.between(-abs_k * alpha, -alpha / abs_k))
                continue
        d1 = _line_with_t(fan, chart, alpha)
        d2 = _line_with_t(fan, chart, -beta)
        r1, r2 = chart.side_ray(d1), chart.side_ray(d2)
        lo, hi = (r1, r2) if det2(r1, r2) > 0 else (r2, r1)
        return fan, DoubleCone(lo, hi)
    raise InternalInvariant("attracting cone condition not reached after tightening")


def _line_with_t(fan, chart, t) -> Ray:
    for r in fan.rays:
        tr = chart.t(r)
        if tr is not None and tr == t:
            return r
    raise InternalInvariant("lost track of a boundary line")  # pragma: no cover


def _with_line(fan: Fan, r: Ray) -> Fan:
    return add_rays(fan, [r, -r])


def _parabolic_attracting(M: MonomialMap, fan: Fan, sd: SpectralData):
    D = direction_of(sd.w1)
    fan = add_rays(fan, [D, -D])
    i = fan.ray_index(D)
    n = len(fan)
    nxt, prv = fan.rays[(i + 1) % n], fan.rays[(i - 1) % n]
    img = M(nxt)
    if det2(D, img) < 0:
        img = (-img[0], -img[1])
    if det2(D, img) > 0 and det2(img, nxt) > 0:
        return fan, DoubleCone(D, nxt)
    return fan, DoubleCone(prv, D)


def attracting_cone(A, fan: Fan, sd: Optional[SpectralData] = None) -> Tuple[Fan, DoubleCone]:
    """Refine the symmetric ``fan`` so that the double cone between the
    nearest fan lines on either side of the dominant eigenline is mapped
    properly into itself, and return it.

    For ``RepeatedNonDiagonalizable`` the double cone sits between the
    rational eigenline and its neighbour on the side the map pulls towards.
    """
    A = MonomialMap.of(A)
    if not fan.is_symmetric():
        raise ValueError("attracting_cone needs a symmetric fan")
    if sd is None:
        sd = eigen_decompose(A)
    kind = classify(A).kind
    if kind is ClassKind.RealDominant:
        fan, cone = _hyperbolic_attracting(A, fan, sd)
        strict = True
    elif kind is ClassKind.RepeatedNonDiagonalizable:
        fan, cone = _parabolic_attracting(A, fan, sd)
        strict = False
    else:
        raise NotApplicable(f"no attracting eigenline for class {kind.value}")
    if not maps_into(A, cone, strict_interior=strict):
        raise InternalInvariant(f"{A} does not map {cone} properly into itself")
    return fan, cone


def repelling_cone(A, fan: Fan, sd: Optional[SpectralData] = None) -> Tuple[Fan, DoubleCone]:
    """The attracting cone of the inverse direction map sign(det)*adj(A).

    The result satisfies A^-1(D) proper subset of D, i.e. A(D) contains D.
    """
    A = MonomialMap.of(A)
    inv = A.inverse_direction_map()
    return attracting_cone(inv, fan, None if sd is None else eigen_decompose(inv))


def saturate_backward(A, fan: Fan, repelling: DoubleCone, max_steps: int = 10000) -> Fan:
    """Add every preimage line A^-k(L) of a fan line L that is not inside the
    open repelling cone.

    Afterwards each fan line whose preimage lies outside the open
    repelling cone has that preimage in the fan, which confines
    indeterminacy to the repelling cone.
    """
    A = MonomialMap.of(A)
    inv = A.inverse_direction_map()
    lines = {_line_rep(r) for r in fan.rays}
    work = sorted(lines, key=lambda r: (abs(r.x) + abs(r.y), r))
    steps = 0
    while work:
        line = work.pop()
        steps += 1
        if steps > max_steps:
            raise SaturationBudgetExceeded(
                f"backward saturation exceeded {max_steps} steps",
                partial_fan=add_rays(fan, _both(lines)))
        pre = _line_rep(primitive(inv(line)))
        if pre in lines or repelling.contains_interior(pre):
            continue
        lines.add(pre)
        work.append(pre)
    out = add_rays(fan, _both(lines))
    for r in out.rays:
        pre = primitive(inv(r))
        if not repelling.contains_interior(pre) and not out.has_ray(pre):
            raise InternalInvariant(f"preimage {pre} of fan ray {r} missing after saturation")
    return out


def _line_rep(r: Ray) -> Ray:
    return r if (r.x, r.y) > (0, 0) else -r


def _both(lines):
    out = []
    for r in lines:
        out.extend((r, -r))
    return out


# -- sublattices and periodic cases ----------------------------------------

def _unimodular_in(fan: Fan, B: SublatticeBasis) -> bool:
    s = 1 if B.det > 0 else -1
    first = prev = B.coordinates(fan.rays[0])
    for r in fan.rays[1:]:
        cur = B.coordinates(r)
        if s * det2(prev, cur) != 1:       # most candidates fail early
            return False
        prev = cur
    return s * det2(prev, first) == 1


def regularize(fan: Fan, max_index: int = 64):
    """First sublattice N' (HNF order, index <= max_index) in which ``fan``
    is smooth, as ``(basis, reindexed fan)``; None when there is none."""
    from .fan import reindex_sublattice, sublattices_of_index
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    # a cone of N-determinant d has determinant d*m*m'/n in N', with m, m'
    # the multiples needed to reach N'; so every d must divide n
    step = 1
    for _, d in is_regular(fan):
        step = step * d // gcd(step, d)
    for n in range(step, max_index + 1, step):
        for B in sublattices_of_index(n):
            if _unimodular_in(fan, B):
                new, _ = reindex_sublattice(fan, B)
                if any(d != 1 for _, d in is_regular(new)):
                    raise InternalInvariant("reindexed fan is not smooth")  # pragma: no cover
                return B, new
    return None


def orbit_closure_invariant_fan(A, fan: Fan, bound: int = 24) -> Fan:
    """Add primitive(A^k v) for all rays v until the ray set is A-invariant.

    Meant for a periodic action on half-lines (ComplexRational or
    RealOpposite); ``bound`` caps the number of closure rounds.
    """
    A = MonomialMap.of(A)
    rays = set(fan.rays)
    frontier = set(rays)
    for _ in range(bound):
        new = {primitive(A(v)) for v in frontier} - rays
        if not new:
            out = add_rays(fan, rays)
            if not is_holomorphic(A, out):
                raise InternalInvariant("orbit-closed fan is not holomorphic")
            return out
        rays |= new
        frontier = new
    raise OrbitBoundExceeded(f"ray orbits of {A} did not close within {bound} rounds")


@dataclass(frozen=True)
class Certificate:
    disc: int
    cos_two_pi_theta: Fraction


def impossibility_certificate(A) -> Certificate:
    """Exact data showing the eigenvalue argument theta is irrational: the
    discriminant is negative and cos(2*pi*theta) is a rational outside
    {0, +-1/2, +-1}.  Forward orbits of half-lines are then dense, every
    toric curve is eventually contracted onto an indeterminate point, and no
    model of the surface makes phi_A stable.
    """
    A = MonomialMap.of(A)
    cls = classify(A)
    if cls.kind is not ClassKind.ComplexIrrational:
        raise NotApplicable(f"class {cls.kind.value} admits a stable model")
    sd = eigen_decompose(A)
    return Certificate(sd.disc, sd.cos_two_pi_theta)


# -- driver -----------------------------------------------------------------

@dataclass(frozen=True)
class StabilizeConfig:
    max_sublattice_index: int = 64
    max_saturation_steps: int = 10000
    include_traces: bool = True

    def __post_init__(self):
        if self.max_sublattice_index < 1 or self.max_saturation_steps < 0:
            raise ValueError("bounds must be positive")


@dataclass(frozen=True)
class Stabilized:
    matrix: MonomialMap
    classification: Classification
    fan: Fan
    sublattice: Optional[SublatticeBasis]
    cover_degree: Optional[int]
    regular: bool
    as_report: ASReport
    singular_cones: Tuple[int, ...] = ()
    sublattice_invariant: Optional[bool] = None
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class Holomorphic:
    matrix: MonomialMap
    classification: Classification
    fan: Fan
    regular: bool
    sublattice: Optional[SublatticeBasis] = None
    cover_degree: Optional[int] = None
    singular_cones: Tuple[int, ...] = ()
    sublattice_invariant: Optional[bool] = None
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class Impossible:
    matrix: MonomialMap
    classification: Classification
    certificate: Certificate
    notes: Tuple[str, ...] = field(default=(
        "theta irrational: no birational model, and no model over a surjective "
        "cover, carries an algebraically stable lift",))


StabilizationOutcome = Union[Stabilized, Holomorphic, Impossible]


def _sublattice_fields(A, fan, config):
    singular = tuple(i for i, d in is_regular(fan) if d != 1)
    if not singular:
        return dict(regular=True, sublattice=None, cover_degree=1,
                    singular_cones=(), sublattice_invariant=None)
    found = regularize(fan, config.max_sublattice_index)
    if found is None:
        return dict(regular=False, sublattice=None, cover_degree=None,
                    singular_cones=singular, sublattice_invariant=None)
    B, _ = found
    return dict(regular=False, sublattice=B, cover_degree=B.index,
                singular_cones=singular, sublattice_invariant=B.is_invariant(A))


def stabilize(A, fan: Fan, config: StabilizeConfig = StabilizeConfig()) -> StabilizationOutcome:
    A = MonomialMap.of(A)
    cls = classify(A)
    kind = cls.kind
    if kind is ClassKind.ComplexIrrational:
        return Impossible(A, cls, impossibility_certificate(A))
    if kind is ClassKind.ScalarDiagonal:
        return Holomorphic(A, cls, fan, **_sublattice_fields(A, fan, config))
    if kind in (ClassKind.RealOpposite, ClassKind.ComplexRational):
        notes = ()
        if kind is ClassKind.RealOpposite:
            # the +-v, +-A(v) fan: symmetrize, then close (A^2 is scalar)
            fan = symmetrize(fan)
            notes = ("invariant fan built by ray-orbit closure (A^2 is scalar) "
                     "instead of reflecting through the eigenlines",)
        out = orbit_closure_invariant_fan(A, fan)
        return Holomorphic(A, cls, out, notes=notes, **_sublattice_fields(A, out, config))

    sd = eigen_decompose(A)
    work = symmetrize(fan)
    work, _ = attracting_cone(A, work, sd)
    work, rep = repelling_cone(A, work)
    work = saturate_backward(A, work, rep, config.max_saturation_steps)
    report = check_as(A, work)
    if not report.is_as:
        raise InternalInvariant(f"stabilized fan for {A} failed the AS check: {report.witness}")
    if not config.include_traces:
        report = ASReport(report.matrix, report.fan, report.verdict, (), report.witness)
    return Stabilized(A, cls, work, as_report=report, **_sublattice_fields(A, work, config))
