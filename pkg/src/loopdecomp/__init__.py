"""Symbolic loop-space decompositions of polyhedral products.

For K the k-skeleton of a flag complex and pairs (CA_i, A_i) with each
Sigma A_i a wedge of spheres, Omega (CA,A)^K is a finite-type product of
spheres and loops on spheres.  This package computes that product
explicitly, with exact Poincare-series bookkeeping, derivation traces, and
an independent homology oracle.
"""

from .complexes import (
    BadIndex,
    Classification,
    DominatingVertex,
    GhostVertex,
    PushoutSplit,
    SimplicialComplex,
    classify_input,
    empty_complex,
    full_subcomplex,
    neighbors_and_domination,
    pushout_split,
    validate_complex,
)
from .engine import (
    NotFlagSkeleton,
    PairSpec,
    TraceNode,
    check_trace,
    cp_fiber_pairs,
    decompose_general_pair,
    decompose_loop,
    loops_of_cp,
    skeleton_simplex_wedge,
    trace_to_doc,
)
from .homotopy import (
    CellSeries,
    NoSolution,
    NotADivisor,
    NotCanonicalP,
    NotSimplyConnectedOutput,
    PFactor,
    PProduct,
    SphereWedge,
    divide_products,
    greedy_factorize,
    hilton_milnor,
    join_cells,
    loop_half_smash,
    loop_sphere,
    lyndon_counts,
    porter_loop_wedge,
    pproduct_mul,
    reduced_cells,
    sphere,
    suspension_splitting,
)
from .intlinalg import (
    BezoutCertificate,
    IdempotentSplit,
    NotIdempotent,
    ZeroVector,
    idempotent_split,
    primitive_bezout,
    verify_column_fixed,
)
from .oracle import (
    HochsterTable,
    NotApplicable,
    TooLarge,
    hochster_table,
    predicted_loop_series,
    simplicial_homology_ranks,
    verify_against_oracle,
)
from .series import (
    DEFAULT_DEGREE,
    DivisionUndefined,
    GradedSeries,
    series_div,
    series_expand,
    series_mul,
)

__version__ = "0.1.0"
