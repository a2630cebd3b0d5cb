"""Reflexive 3-polytopes, polar duality, and Hodge numbers of the Calabi-Yau
threefolds obtained by smoothing unions of quasi-Fano threefolds."""

from .counts import DualityCounts, duality_counts
from .errors import (DegenerateInput, FaceNotOfPolytope, InternalTheoremViolation,
                     InvalidInvariants, NotReflexive, ParseError, ZeroChernFunctional)
from .hodge import (HodgePair, MirrorReport, XInvariants, YInvariants,
                    euler_characteristic, mirror_check_xi, mirror_check_z,
                    quasi_fano_mirror_predicate, smoothing_hodge, x_invariants,
                    xi_hodge, y_invariants, z_hodge)
from .identities import IdentityReport, verify_identities
from .lambda_invariant import (CubicLattice2, blowup_intersection_data,
                               compare_reference, kernel_generator,
                               lambda_invariant, xi_p3_cubic_lattice)
from .normal_form import is_equivalent, is_self_dual, normal_form
from .pipeline import (PolytopeRecord, batch_compute, classify, emit_table,
                       parse_vertex_file)
from .polytope import (Face, LatticePolytope, dual_face, enumerate_lattice_points,
                       face_point_counts, hull_from_points, is_reflexive,
                       normalized_volume, polar_dual)

__version__ = "0.1.0"
