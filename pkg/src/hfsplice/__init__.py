"""Exact GF(2) rank computations for spliced knot complements."""

from .errors import (
    DataFormatError,
    DimensionMismatch,
    HfspliceError,
    IndexOutOfRange,
    NotIdentityBlock,
    SingularMatrix,
)
from .gf2core import (
    BlockMatrix,
    Gf2Matrix,
    IotaDims,
    assemble,
    invert,
    iota,
    kron,
    rank,
    slice_blocks,
)
from .knotsys import (
    DerivedMaps,
    KnotSystem,
    ThetaExtension,
    ValidationReport,
    assemble_quads,
    change_basis_px,
    derive_dual_maps,
    normalize_theta,
    random_invertible,
    random_knot_system,
    random_matrix,
    theta_bar_matrix,
    theta_matrix,
    validate,
)
from .cancel import CancellationStep, cancel_identity, cancel_sequence
from .splicecore import (
    B1_ROW_IDS,
    B2_COL_IDS,
    REFINED_PIVOTS,
    TREFOIL_PIVOTS,
    SpliceProblem,
    SpliceReport,
    TensorBlockSpace,
    b1_space,
    b2_space,
    build_conjugated_reduced_matrix,
    build_rebased_differential,
    build_reduced_matrix,
    build_splice_differential,
    chi,
    left_transform,
    reduce_differential_by_cancellation,
    refine_differential,
    right_transform,
    splice_rank,
    trefoil_reduction_transform,
    trefoil_splice_bound,
    trefoil_splice_matrices,
    trefoil_splice_rank,
)
from .bordered import (
    BASIS,
    CHORDS,
    AdmissibleData,
    Arrow,
    Generator,
    StructureReport,
    TorusAlgebraElem,
    TypeDModule,
    algebra_mul,
    build_admissible,
    build_type_d_module,
    check_structure,
    reduce_module,
)

__version__ = "0.1.0"

__all__ = [
    "HfspliceError",
    "DimensionMismatch",
    "SingularMatrix",
    "NotIdentityBlock",
    "IndexOutOfRange",
    "DataFormatError",
    "Gf2Matrix",
    "BlockMatrix",
    "IotaDims",
    "rank",
    "iota",
    "invert",
    "kron",
    "assemble",
    "slice_blocks",
    "KnotSystem",
    "ThetaExtension",
    "DerivedMaps",
    "ValidationReport",
    "assemble_quads",
    "derive_dual_maps",
    "change_basis_px",
    "normalize_theta",
    "random_knot_system",
    "random_invertible",
    "random_matrix",
    "theta_matrix",
    "theta_bar_matrix",
    "validate",
    "CancellationStep",
    "cancel_identity",
    "cancel_sequence",
    "SpliceProblem",
    "SpliceReport",
    "TensorBlockSpace",
    "REFINED_PIVOTS",
    "B1_ROW_IDS",
    "B2_COL_IDS",
    "TREFOIL_PIVOTS",
    "b1_space",
    "b2_space",
    "build_splice_differential",
    "build_rebased_differential",
    "refine_differential",
    "build_reduced_matrix",
    "reduce_differential_by_cancellation",
    "build_conjugated_reduced_matrix",
    "left_transform",
    "right_transform",
    "chi",
    "splice_rank",
    "trefoil_splice_matrices",
    "trefoil_reduction_transform",
    "trefoil_splice_rank",
    "trefoil_splice_bound",
    "TorusAlgebraElem",
    "BASIS",
    "CHORDS",
    "algebra_mul",
    "AdmissibleData",
    "build_admissible",
    "TypeDModule",
    "Generator",
    "Arrow",
    "StructureReport",
    "build_type_d_module",
    "check_structure",
    "reduce_module",
]
