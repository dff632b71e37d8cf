"""Algebraic stability of two-dimensional monomial maps on toric surfaces.

An integer matrix ``A`` with nonzero determinant acts on the lattice
``N = Z^2`` and, through a complete fan, defines a rational self-map of
a toric surface.  This package decides whether that map is algebraically
stable on a given fan, refines the fan until it is when possible, and
certifies impossibility otherwise.  All arithmetic is exact.
"""

__version__ = "0.1.0"

from .errors import (EmptyInterval, InternalInvariant, NotApplicable,
                     NotComplete, NotComplexSpectrum, OrbitBoundExceeded,
                     SaturationBudgetExceeded, ToristabError, TooFewRays,
                     ZeroDeterminant, ZeroVector)
from .lattice import Ray, angle_key, det2, is_primitive, primitive
from .exact import (AlgebraicNumber, EigenKind, QuadElem, SpectralData,
                    cos_two_pi_theta, dynamical_degree, eigen_decompose,
                    quad_sign, stern_brocot_between)
from .fan import (IDENTITY_BASIS, Cone2, Fan, InteriorOfCone, OnRay,
                  SublatticeBasis, add_rays, enumerate_sublattices,
                  fan_from_dict, fan_from_json, fan_to_dict, fan_to_json,
                  hirzebruch, is_regular, locate, make_fan,
                  reindex_sublattice, standard_p1xp1, standard_p2,
                  star_subdivide, symmetrize)
from .dynamics import (ASReport, DegreeReport, MonomialMap, Verdict,
                       check_as, compose, contracted_rays, degree_p2,
                       degree_sequence, image_of_orbit, indeterminacy_points,
                       is_holomorphic)
from .stabilizer import (Certificate, ClassKind, Classification, DoubleCone,
                         Holomorphic, Impossible, StabilizeConfig, Stabilized,
                         attracting_cone, classify, impossibility_certificate,
                         orbit_closure_invariant_fan, ray_action_order,
                         regularize, repelling_cone, saturate_backward,
                         stabilize)
