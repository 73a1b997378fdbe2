"""Decompositions of topes over symmetric cycles in tope graphs.

Given a tope set (from an exact rational central arrangement or given
explicitly) and a symmetric cycle in its tope graph, the package computes the
unique inclusion-minimal subset of cycle vertices summing to any tope, builds
the two simplicial complexes that subset carries, and verifies the exact
Dehn-Sommerville type identities their long f-vectors satisfy.  All decisions
use exact integer/rational arithmetic."""

from .arrangements import (
    Arrangement,
    ArrangementError,
    RationalVector,
    ccw_sorted_rays,
    cross2,
    enumerate_topes,
    generate,
    hypercube_topes,
    make_arrangement,
    moment_curve,
    primitive_vector,
    rank2_fan,
    rank2_feasible,
    strict_feasible,
    totally_cyclic_fan,
    validate_simple,
)
from .complexes import (
    FacetFamily,
    delta_face_masks,
    delta_faces,
    faces_of,
    is_reorientation_totally_cyclic,
    lambda_face_masks,
    lambda_facets,
    long_f_vector,
)
from .core import (
    DimensionError,
    IntVector,
    SignVector,
    Violation,
    all_plus,
    as_tope,
    flip,
    is_adjacent,
    negate,
    negative_part,
    parse_sign_vector,
    positive_part,
    separation_set,
    sign_vector_str,
    sum_topes,
)
from .cycles import (
    CycleError,
    SymmetricCycle,
    canonical_hypercube_cycle,
    find_symmetric_cycle,
    maxpos_vertices,
    normalize_cycle,
    symmetric_cycle,
    validate_cycle,
)
from .decomposition import (
    Decomposition,
    DecompositionError,
    NonIntegralSolutionError,
    SingularBasisError,
    brute_force_decompose,
    decompose,
)
from .dehn_sommerville import (
    DSReport,
    SpecialCaseNote,
    check_alternating_sum,
    check_ds,
    check_recurrence,
    ds_polynomial_sides,
    special_cases,
)
from .oracles import (
    CensusResult,
    FullSystemFeasibleError,
    HalfplaneCheck,
    census,
    check_halfplane_condition,
    nu_counts,
)

__version__ = "0.1.0"
