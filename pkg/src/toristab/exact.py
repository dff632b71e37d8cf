"""Exact arithmetic: rationals, real quadratic irrationals, and eigen-data
of 2x2 integer matrices.

Rationals are :class:`fractions.Fraction`.  Elements ``a + b*sqrt(D)`` of a
real quadratic field are :class:`QuadElem`; their sign is decided by
comparing ``a**2`` with ``b**2 * D``, so no floating point is involved.
"""

import enum
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple, Union

from .errors import EmptyInterval, NotComplexSpectrum, ZeroDeterminant
from .lattice import Ray, det2, primitive

Rat = Fraction

__all__ = [
    "Rat", "QuadElem", "quad_sign", "sign", "same_value", "is_square",
    "EigenKind", "SpectralData", "AlgebraicNumber", "matrix_entries",
    "eigen_decompose", "cos_two_pi_theta", "dynamical_degree",
    "stern_brocot_between", "NIVEN_COSINES",
]

# rational values of cos(2*pi*theta) for rational theta
NIVEN_COSINES = frozenset(Fraction(n, 2) for n in (-2, -1, 0, 1, 2))


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=1024, typed=True)
def _valid_radicand(D) -> bool:
    return type(D) is int and D > 1 and not is_square(D)


@dataclass(frozen=True)
class QuadElem:
    """The real number ``a + b*sqrt(D)`` with ``a, b`` rational.

    ``D`` is any integer > 1 that is not a perfect square; it is *not*
    reduced to its squarefree part.  Arithmetic and ordering are only
    defined between elements sharing the same ``D`` (or with plain
    rationals).
    """

    a: Fraction
    b: Fraction
    D: int

    def __post_init__(self):
        if type(self.a) is not Fraction:
            object.__setattr__(self, "a", Fraction(self.a))
        if type(self.b) is not Fraction:
            object.__setattr__(self, "b", Fraction(self.b))
        if not _valid_radicand(self.D):
            raise ValueError(f"D must be a non-square integer > 1, got {self.D!r}")

    def _lift(self, other):
        if isinstance(other, QuadElem):
            if other.D != self.D:
                raise ValueError(f"incompatible radicands {self.D} and {other.D}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(Fraction(other), Fraction(0), self.D)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.D)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.a - o.a, self.b - o.b, self.D)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.a * o.a + self.b * o.b * self.D,
                        self.a * o.b + self.b * o.a, self.D)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadElem(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(D))")
        p = self * o.conjugate()
        return QuadElem(p.a / n, p.b / n, self.D)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return 1 / (self ** -k)
        result = QuadElem(1, 0, self.D)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __abs__(self):
        return -self if quad_sign(self) < 0 else self

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return (self.D, self.a, self.b) == (other.D, other.a, other.b)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def _cmp(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return quad_sign(self - o)

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.D ** 0.5

    def __repr__(self):
        return f"QuadElem({self.a}, {self.b}, {self.D})"


def quad_sign(x: QuadElem) -> int:
    """Exact sign of ``a + b*sqrt(D)``."""
    sa, sb = _sgn(x.a), _sgn(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: the larger magnitude wins
    lhs, rhs = x.a * x.a, x.b * x.b * x.D
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0


def sign(x) -> int:
    """Sign of an int, Fraction or QuadElem."""
    if isinstance(x, QuadElem):
        return quad_sign(x)
    return _sgn(x)


def same_value(x, y) -> bool:
    """Value equality that tolerates different (non-reduced) radicands,
    e.g. ``2*sqrt(2) == sqrt(8)``."""
    if not isinstance(x, QuadElem):
        x = QuadElem(x, 0, 2)
    if not isinstance(y, QuadElem):
        y = QuadElem(y, 0, 2)
    if x.a != y.a or _sgn(x.b) != _sgn(y.b):
        return False
    return x.b * x.b * x.D == y.b * y.b * y.D


def matrix_entries(A) -> Tuple[int, int, int, int]:
    """Row-major entries (a, b, c, d) of a MonomialMap-like object or a
    nested 2x2 sequence."""
    if hasattr(A, "a") and hasattr(A, "d"):
        return int(A.a), int(A.b), int(A.c), int(A.d)
    (a, b), (c, d) = A
    return int(a), int(b), int(c), int(d)


class EigenKind(enum.Enum):
    RealDistinct = "RealDistinct"
    RealRepeated = "RealRepeated"
    Complex = "Complex"


Number = Union[int, Fraction, QuadElem]


@dataclass(frozen=True)
class SpectralData:
    trace: int
    det: int
    disc: int
    eigen_kind: EigenKind
    rho1_sq_minus_e_sign: int
    kappa: Optional[Number] = None
    cos_two_pi_theta: Optional[Fraction] = None
    # real spectrum only: rho1 is the dominant eigenvalue (the positive one
    # when |rho1| == |rho2|), w1/w2 the matching eigen-directions
    rho1: Optional[Number] = None
    rho2: Optional[Number] = None
    w1: Optional[Tuple[Number, Number]] = None
    w2: Optional[Tuple[Number, Number]] = None

    @property
    def rational_eigenvalues(self) -> bool:
        return self.disc >= 0 and is_square(self.disc)


def _sqrt_disc(disc: int) -> Number:
    if is_square(disc):
        return Fraction(isqrt(disc))
    return QuadElem(0, 1, disc)


def _eigenvector(a, b, c, d, rho):
    """An eigen-direction of [[a, b], [c, d]] for the real eigenvalue rho,
    scaled so the first nonzero-able coordinate is 1."""
    if b != 0:
        v = (Fraction(b), rho - a)
    elif c != 0:
        v = (rho - d, Fraction(c))
    elif rho == a:
        return (Fraction(1), Fraction(0))
    else:
        return (Fraction(0), Fraction(1))
    if v[0] != 0:
        return (Fraction(1), v[1] / v[0])
    return (Fraction(0), Fraction(1))


def eigen_decompose(A) -> SpectralData:
    a, b, c, d = matrix_entries(A)
    tr, det = a + d, a * d - b * c
    if det == 0:
        raise ZeroDeterminant("matrix is singular")
    disc = tr * tr - 4 * det
    if disc < 0:
        return SpectralData(tr, det, disc, EigenKind.Complex, 0,
                            cos_two_pi_theta=Fraction(tr * tr - 2 * det, 2 * det))
    if disc == 0:
        rho = Fraction(tr, 2)
        w = None
        if not (b == 0 and c == 0 and a == d):
            w = _eigenvector(a, b, c, d, rho)
        return SpectralData(tr, det, disc, EigenKind.RealRepeated, 0,
                            kappa=Fraction(1), rho1=rho, rho2=rho, w1=w, w2=w)
    root = _sqrt_disc(disc)
    s = 1 if tr >= 0 else -1
    rho1 = (root * s + tr) / 2
    rho2 = (tr - root * s) / 2
    kappa = rho2 / rho1
    if isinstance(kappa, QuadElem) and kappa.b == 0:
        kappa = kappa.a
    return SpectralData(tr, det, disc, EigenKind.RealDistinct,
                        1 if tr != 0 else 0, kappa=kappa,
                        rho1=rho1, rho2=rho2,
                        w1=_eigenvector(a, b, c, d, rho1),
                        w2=_eigenvector(a, b, c, d, rho2))


def cos_two_pi_theta(A) -> Fraction:
    """cos(2*pi*theta) for eigenvalues rho*exp(+-i*pi*theta), from
    rho1**2 + rho2**2 = tr(A**2) and rho**2 = det(A)."""
    a, b, c, d = matrix_entries(A)
    tr, det = a + d, a * d - b * c
    if tr * tr - 4 * det >= 0:
        raise NotComplexSpectrum("eigenvalues are real")
    return Fraction(tr * tr - 2 * det, 2 * det)


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for co in coeffs:
        acc = acc * x + co
    return acc


_DEFAULT_WIDTH = Fraction(1, 2 ** 20)


@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    """The largest real root of an irreducible monic integer polynomial
    of degree 1 or 2, with a rational isolating interval.

    ``min_poly`` lists coefficients from the leading one down.
    """

    min_poly: Tuple[int, ...]
    interval: Tuple[Fraction, Fraction]
    root_selector: str = "max"

    @classmethod
    def from_poly(cls, coeffs, width=_DEFAULT_WIDTH):
        if any(Fraction(c).denominator != 1 for c in coeffs):
            raise ValueError(f"not an algebraic integer: {coeffs}")
        coeffs = tuple(int(c) for c in coeffs)
        if coeffs[0] != 1 or len(coeffs) not in (2, 3):
            raise ValueError("expected a monic linear or quadratic polynomial")
        if len(coeffs) == 3:
            _, p, q = coeffs
            disc = p * p - 4 * q
            if disc < 0:
                raise ValueError("polynomial has no real root")
            if is_square(disc):
                root = Fraction(-p + isqrt(disc), 2)
                if root.denominator == 1:
                    coeffs = (1, -int(root))
                else:  # pragma: no cover - monic integer polys have integral rational roots
                    raise ValueError("non-integral rational root")
        if len(coeffs) == 2:
            r = Fraction(-coeffs[1])
            return cls(coeffs, (r - width / 2, r + width / 2))
        _, p, q = coeffs
        lo = Fraction(-p, 2)                       # vertex: p(lo) < 0
        hi = Fraction(1 + max(abs(p), abs(q)))     # Cauchy bound: p(hi) > 0
        while hi - lo > width:
            mid = (lo + hi) / 2
            if _poly_eval(coeffs, mid) < 0:
                lo = mid
            else:
                hi = mid
        return cls(coeffs, (lo, hi))

    def refine(self, width):
        return AlgebraicNumber.from_poly(self.min_poly, width)

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    def exact(self) -> Number:
        """The root as a Fraction or QuadElem."""
        if self.degree == 1:
            return Fraction(-self.min_poly[1])
        _, p, q = self.min_poly
        return QuadElem(Fraction(-p, 2), Fraction(1, 2), p * p - 4 * q)

    @classmethod
    def from_exact(cls, x: Number):
        """Build from a positive algebraic integer of degree <= 2."""
        if isinstance(x, QuadElem) and x.b != 0:
            return cls.from_poly((1, -2 * x.a, x.norm()))
        val = x.a if isinstance(x, QuadElem) else Fraction(x)
        return cls.from_poly((1, -val))

    def __pow__(self, k: int):
        return AlgebraicNumber.from_exact(self.exact() ** k)

    def __eq__(self, other):
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __float__(self):
        return float((self.interval[0] + self.interval[1]) / 2)

    def __repr__(self):
        return f"AlgebraicNumber(min_poly={self.min_poly}, ~{float(self):.6f})"


def dynamical_degree(A) -> AlgebraicNumber:
    """Spectral radius of A as an exact algebraic number."""
    sd = eigen_decompose(A)
    if sd.eigen_kind is EigenKind.Complex:
        return AlgebraicNumber.from_poly((1, 0, -sd.det))
    # |rho1| is the largest root of t^2 - |tr| t + det
    return AlgebraicNumber.from_poly((1, -abs(sd.trace), sd.det))


# -- Stern-Brocot search --------------------------------------------------

_AXES = (Ray(1, 0), Ray(0, 1), Ray(-1, 0), Ray(0, -1))


def _as_direction(v):
    if isinstance(v, (QuadElem, Fraction, int)):
        return (Fraction(1), v)          # a slope
    return (v[0], v[1])


def _quadrant(v) -> int:
    """Index k with v in the half-open cone [axis_k, axis_{k+1})."""
    for k in range(4):
        if det2(_AXES[k], v) >= 0 and det2(v, _AXES[(k + 1) % 4]) > 0:
            return k
    raise ValueError(f"not a direction: {v!r}")


def stern_brocot_between(lo, hi) -> Ray:
    """First primitive lattice vector strictly between ``lo`` and ``hi``.

    ``lo`` and ``hi`` are directions (integer vectors, pairs of exact
    numbers, or bare slopes) with ``hi`` counterclockwise from ``lo`` by an
    angle in (0, pi).  The search descends the Stern-Brocot tree of the
    quadrant containing ``lo``.
    """
    lo, hi = _as_direction(lo), _as_direction(hi)
    if sign(det2(lo, hi)) <= 0:
        raise EmptyInterval("hi must be counterclockwise of lo by less than pi")
    k = _quadrant(lo)
    p, q = _AXES[k], _AXES[(k + 1) % 4]
    if sign(det2(lo, q)) > 0 and sign(det2(q, hi)) > 0:
        return q
    # lo and hi both lie in the closed unimodular cone [p, q]
    while True:
        m = Ray(p.x + q.x, p.y + q.y)
        if sign(det2(lo, m)) > 0:
            if sign(det2(m, hi)) > 0:
                return m
            q = m
        else:
            p = m


def direction_of(w) -> Ray:
    """Primitive integer ray through a rational direction (pair of Fractions)."""
    x, y = Fraction(w[0]), Fraction(w[1])
    den = x.denominator * y.denominator
    return primitive((int(x * den), int(y * den)))
