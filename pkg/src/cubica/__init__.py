"""Plane cubic curves over the complex and real numbers.

Flex computation, the Hesse pencil and its symmetries, reduction to
y^2 = x^3 + ax + b, the J invariant, the chord-tangent group law,
period lattices, the real classification, and deterministic SVG
figures of all of it.
"""

from .cubic import (
    CubicForm,
    FlexSet,
    find_flexes,
    flex_defect,
    is_flex,
    is_smooth,
    restrict_to_line,
    singular_points,
    tangent_line,
    transform,
)
from .errors import (
    CoincidentPoints,
    ComplexCoefficients,
    ConvergenceFailure,
    CubicaError,
    DegenerateForm,
    DegenerateLattice,
    InvalidCanvas,
    InvalidInput,
    NonFlexBase,
    NotAFlex,
    NumericalSingularity,
    OneComponent,
    SingularAtFlex,
    SingularCurve,
    SingularMap,
    SingularParameter,
    ZeroLeadingCoefficient,
    ZeroScale,
)
from .group_law import (
    BasedGroup,
    CurvePoint,
    add,
    affine_point,
    chord_tangent,
    curve_point,
    flex_based_group,
    multiply,
    negate,
    three_torsion,
)
from .hesse import (
    MobiusMap,
    eta,
    exceptional_points,
    hesse_form,
    hesse_orbit,
    is_smooth_parameter,
    j_of_k,
    parameters_for_j,
    real_parameters_for_j,
    symmetry_group,
    tetrahedral_group,
    to_hesse,
    translation_subgroup,
)
from .lattice import (
    Lattice,
    VoronoiCell,
    eisenstein,
    eisenstein_direct,
    lattice_to_curve,
    reduced_basis,
    torus_symmetry_order,
    voronoi_cell,
)
from .projective import (
    ProjLine,
    ProjMap,
    ProjPoint,
    apply_map,
    line_through,
    map_four_points,
    meet,
    proj_distance,
)
from .real_curves import (
    CanonicalPicture,
    RealClassification,
    canonical_picture,
    classify_real,
    count_components,
    cross_ratio_chi,
    real_automorphisms,
    real_flexes,
)
from .render import RenderSpec, render
from .scalars import parse_scalar, roots_cubic, scalar_from_json, scalar_to_json
from .standard import (
    StandardCurve,
    TriangleShape,
    automorphism_order,
    j_invariant,
    rescale,
    to_standard,
    triangle_shape,
)

__version__ = "0.1.0"

__all__ = [
    "BasedGroup",
    "CanonicalPicture",
    "CoincidentPoints",
    "ComplexCoefficients",
    "ConvergenceFailure",
    "CubicaError",
    "CubicForm",
    "CurvePoint",
    "DegenerateForm",
    "DegenerateLattice",
    "FlexSet",
    "InvalidCanvas",
    "InvalidInput",
    "Lattice",
    "MobiusMap",
    "NonFlexBase",
    "NotAFlex",
    "NumericalSingularity",
    "OneComponent",
    "ProjLine",
    "ProjMap",
    "ProjPoint",
    "RealClassification",
    "RenderSpec",
    "SingularAtFlex",
    "SingularCurve",
    "SingularMap",
    "SingularParameter",
    "StandardCurve",
    "TriangleShape",
    "VoronoiCell",
    "ZeroLeadingCoefficient",
    "ZeroScale",
    "add",
    "affine_point",
    "apply_map",
    "automorphism_order",
    "canonical_picture",
    "chord_tangent",
    "classify_real",
    "count_components",
    "cross_ratio_chi",
    "curve_point",
    "eisenstein",
    "eisenstein_direct",
    "eta",
    "exceptional_points",
    "find_flexes",
    "flex_based_group",
    "flex_defect",
    "hesse_form",
    "hesse_orbit",
    "is_flex",
    "is_smooth",
    "is_smooth_parameter",
    "j_invariant",
    "j_of_k",
    "lattice_to_curve",
    "line_through",
    "map_four_points",
    "meet",
    "multiply",
    "negate",
    "parameters_for_j",
    "parse_scalar",
    "proj_distance",
    "real_automorphisms",
    "real_flexes",
    "real_parameters_for_j",
    "reduced_basis",
    "render",
    "rescale",
    "restrict_to_line",
    "roots_cubic",
    "scalar_from_json",
    "scalar_to_json",
    "singular_points",
    "symmetry_group",
    "tangent_line",
    "tetrahedral_group",
    "three_torsion",
    "to_hesse",
    "to_standard",
    "transform",
    "translation_subgroup",
    "triangle_shape",
    "voronoi_cell",
]
