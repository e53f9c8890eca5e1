"""Quandle coloring counts and coloring quivers of braid-closure links.

The package computes colorings of torus links (and arbitrary braid
closures) by dihedral quandles three independent ways: brute-force
propagation over a Cayley table, exact integer linear algebra through the
Smith normal form, and closed-form count/quiver formulas; and it builds,
compares, and exports the coloring quivers induced by quandle
endomorphisms.
"""

from .braids import (
    BraidWord,
    PropagationResult,
    TorusLinkSpec,
    closure_system,
    parse_link,
    propagate,
    propagation_matrix,
    torus_braid,
)
from .colorings import (
    ColoringSet,
    classify,
    enumerate_colorings_linear,
    enumerate_colorings_oracle,
)
from .counting import (
    CellRecord,
    CountPrediction,
    is_odd_prime,
    predict_count,
    verify_counts,
)
from .errors import (
    AmbiguousCountError,
    CapExceededError,
    InternalConsistencyError,
    NonAffineEndomorphismWarning,
)
from .export import ExportOptions, quiver_from_json, to_csv, to_dot, to_json
from .linalg import (
    IntMatrix,
    SnfResult,
    kernel_count_mod,
    kernel_enumerate_mod,
    smith_normal_form,
)
from .quandles import (
    AxiomReport,
    DihedralQuandle,
    Endomorphism,
    FiniteQuandle,
    affine_endomorphisms,
    audit_affine_completeness,
    brute_force_endomorphisms,
    dihedral_op,
    is_involutive,
    verify_quandle_axioms,
)
from .quivers import (
    BlockFamily,
    IsoResult,
    QuiverForm,
    WeightedQuiver,
    build_quiver,
    complete_form,
    detect_blocks,
    disjoint_union,
    isomorphic,
    join_form,
    predict_quiver,
    quiver_form_for_count,
    realize,
)

__all__ = [
    "AmbiguousCountError",
    "AxiomReport",
    "BlockFamily",
    "BraidWord",
    "CapExceededError",
    "CellRecord",
    "ColoringSet",
    "CountPrediction",
    "DihedralQuandle",
    "Endomorphism",
    "ExportOptions",
    "FiniteQuandle",
    "IntMatrix",
    "InternalConsistencyError",
    "IsoResult",
    "NonAffineEndomorphismWarning",
    "PropagationResult",
    "QuiverForm",
    "SnfResult",
    "TorusLinkSpec",
    "WeightedQuiver",
    "affine_endomorphisms",
    "audit_affine_completeness",
    "brute_force_endomorphisms",
    "build_quiver",
    "classify",
    "closure_system",
    "complete_form",
    "detect_blocks",
    "dihedral_op",
    "disjoint_union",
    "enumerate_colorings_linear",
    "enumerate_colorings_oracle",
    "is_involutive",
    "is_odd_prime",
    "isomorphic",
    "join_form",
    "kernel_count_mod",
    "kernel_enumerate_mod",
    "parse_link",
    "predict_count",
    "predict_quiver",
    "propagate",
    "propagation_matrix",
    "quiver_form_for_count",
    "quiver_from_json",
    "realize",
    "smith_normal_form",
    "to_csv",
    "to_dot",
    "to_json",
    "torus_braid",
    "verify_counts",
    "verify_quandle_axioms",
]
