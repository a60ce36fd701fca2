"""entclass: witness-based discrimination of multiqubit entanglement families.

Build GHZ-like double states, W-like single-flip states and
two-excitation Dicke states in arbitrary local bases, evaluate the
witnesses that tell the families apart using few local measurement
settings, optimize the measurement basis, and scan noise planes.
"""

from .qstate import (
    MAX_QUBITS,
    Bipartition,
    DensityMatrix,
    InvariantViolation,
    PureState,
    basis_state,
    hermitian_eigenvalues,
    is_ppt,
    matrix_element,
    mix,
    partial_transpose,
    permute_qubits,
    projector,
    tensor,
)
from .families import (
    CLASS_DICKE2,
    CLASS_DOUBLE,
    CLASS_NTUPLE,
    CLASS_TAGS,
    ClassStateSpec,
    LocalBasis,
    fig3_family,
    ghz,
    make_dicke2,
    make_double,
    make_ntuple,
    random_class_member,
    random_pure_state,
    sample_biseparable,
    sample_class_mixture,
    w_state,
)
from .criteria import (
    INEQUALITY_IDS,
    BasisLabels,
    InequalityCoefficients,
    InequalityReport,
    eval_gme,
    eval_i2,
    eval_in,
    eval_in_minus1,
    evaluate,
    evaluate_all,
    i2_coefficients,
    ntuple_alpha,
)
from .pauli import (
    PauliExpansion,
    SettingSchedule,
    count_settings,
    evaluate_expansion,
    expand_inequality,
    expand_matrix_element,
    format_expansion,
    parse_expansion,
    three_qubit_tuple_witness,
    tomography_setting_count,
)
from .optimizer import (
    LocalUnitaryParams,
    OptimizationResult,
    apply_local_unitary,
    maximize_violation,
)
from .scan import CSV_HEADER, ScanPoint, evaluate_point, grid_points, scan_grid, write_csv

__all__ = [
    "MAX_QUBITS",
    "Bipartition",
    "DensityMatrix",
    "InvariantViolation",
    "PureState",
    "basis_state",
    "hermitian_eigenvalues",
    "is_ppt",
    "matrix_element",
    "mix",
    "partial_transpose",
    "permute_qubits",
    "projector",
    "tensor",
    "CLASS_DICKE2",
    "CLASS_DOUBLE",
    "CLASS_NTUPLE",
    "CLASS_TAGS",
    "ClassStateSpec",
    "LocalBasis",
    "fig3_family",
    "ghz",
    "make_dicke2",
    "make_double",
    "make_ntuple",
    "random_class_member",
    "random_pure_state",
    "sample_biseparable",
    "sample_class_mixture",
    "w_state",
    "INEQUALITY_IDS",
    "BasisLabels",
    "InequalityCoefficients",
    "InequalityReport",
    "eval_gme",
    "eval_i2",
    "eval_in",
    "eval_in_minus1",
    "evaluate",
    "evaluate_all",
    "i2_coefficients",
    "ntuple_alpha",
    "PauliExpansion",
    "SettingSchedule",
    "count_settings",
    "evaluate_expansion",
    "expand_inequality",
    "expand_matrix_element",
    "format_expansion",
    "parse_expansion",
    "three_qubit_tuple_witness",
    "tomography_setting_count",
    "LocalUnitaryParams",
    "OptimizationResult",
    "apply_local_unitary",
    "maximize_violation",
    "CSV_HEADER",
    "ScanPoint",
    "evaluate_point",
    "grid_points",
    "scan_grid",
    "write_csv",
]

__version__ = "0.1.0"
