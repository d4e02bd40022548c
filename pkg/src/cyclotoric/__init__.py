"""Exact toric resolution and cohomology toolkit.

Everything is exact integer / rational arithmetic: lattices and fans with
stellar resolution of cyclic quotient cones, divisor class groups with
exceptional-independence certificates, Tate cohomology of order-p actions,
index-p subgroup audits, brute-force elliptic-curve oracles over small prime
fields, and the Brauer quotient of diagonal cubic surfaces.  The ``cli``
module exposes each pipeline as a subcommand with byte-stable JSON output.
"""

from .classgroup import (DualGraph, GroupPresentation, IndependenceCertificate,
                         class_group, dual_graph, exceptional_independence,
                         retraction_multiplier, star_is_complete)
from .cubic import (BrauerQuotient, DiagonalCubic, FactorizationBoundExceeded,
                    JacobianCubic, associated_jacobian, brauer_quotient,
                    factor_bounded, icbrt, is_rational_cube,
                    is_rational_cube_by_factoring)
from .curves import (INFINITY, ConsistencyReport, CurvePoint, WeierstrassCurve,
                     compare_with_prediction, fixed_points_of_zeta, zeta_apply,
                     zeta_matrix_on_three_torsion)
from .fan import (Cone, Fan, ResolutionReport, check_subdivision_support,
                  hirzebruch_jung, interior_ray_indices, is_smooth_cone,
                  lift_fan, resolution_pipeline, resolve_cone, resolve_fan,
                  star_fan, validate_fan)
from .goursat import (AuditReport, GoursatCase, GoursatTag, RamificationKind,
                      SubgroupFunctional, classify, enumerate_index_p,
                      subgroup_elements, torsion_audit)
from .intmat import (IntMatrix, hermite_normal_form, integer_kernel,
                     invariant_factors, kernel_mod_p, smith_normal_form)
from .lattice import (Lattice, is_primitive, lattice_index,
                      primitive_in_lattice, quotient_lattice)
from .tate import (CyclicModule, FiniteAbelianGroup, TRIVIAL_GROUP,
                   fixed_subgroup_rank, pic_torsion_order, tate_h0, tate_h1)

__version__ = "0.1.0"

__all__ = [
    # lattices and integer matrices
    "IntMatrix", "Lattice", "hermite_normal_form", "integer_kernel",
    "invariant_factors", "is_primitive", "kernel_mod_p", "lattice_index",
    "primitive_in_lattice", "quotient_lattice", "smith_normal_form",
    # fans and resolution
    "Cone", "Fan", "ResolutionReport", "check_subdivision_support",
    "hirzebruch_jung", "interior_ray_indices", "is_smooth_cone", "lift_fan",
    "resolution_pipeline", "resolve_cone", "resolve_fan", "star_fan",
    "validate_fan",
    # divisor geometry
    "DualGraph", "GroupPresentation", "IndependenceCertificate", "class_group",
    "dual_graph", "exceptional_independence", "retraction_multiplier",
    "star_is_complete",
    # Tate cohomology
    "CyclicModule", "FiniteAbelianGroup", "TRIVIAL_GROUP",
    "fixed_subgroup_rank", "pic_torsion_order", "tate_h0", "tate_h1",
    # subgroup audits
    "AuditReport", "GoursatCase", "GoursatTag", "RamificationKind",
    "SubgroupFunctional", "classify", "enumerate_index_p", "subgroup_elements",
    "torsion_audit",
    # finite-field oracle
    "INFINITY", "ConsistencyReport", "CurvePoint", "WeierstrassCurve",
    "compare_with_prediction", "fixed_points_of_zeta", "zeta_apply",
    "zeta_matrix_on_three_torsion",
    # cubic surfaces
    "BrauerQuotient", "DiagonalCubic", "FactorizationBoundExceeded",
    "JacobianCubic", "associated_jacobian", "brauer_quotient",
    "factor_bounded", "icbrt", "is_rational_cube",
    "is_rational_cube_by_factoring",
    "__version__",
]
