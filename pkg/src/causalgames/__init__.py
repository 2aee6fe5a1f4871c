"""Exact-arithmetic toolkit for graphical games of causality.

Digraph games, single-output correlations, facet inequalities with their
brute-force certificates, and polynomial-time weak-causality membership,
all over arbitrary-precision rationals.
"""

from .correlations import (
    CorrelationVector,
    GraphicalTest,
    deterministic_point_from_digraph,
    flip,
    project_abs_diff,
    run_test,
    signaling_digraph,
    win_probability,
)
from .decide import Decision, weak_source_digraph, weakly_causal_correlations
from .digraphs import (
    Digraph,
    PolytopeClass,
    adjacency_vector,
    are_isomorphic,
    condensation,
    enumerate_class,
    is_acyclic,
    is_kefalopoda,
    is_minimally_strong,
    is_strong,
    make_cycle,
    make_fence,
    make_kefalopoda,
    make_mobius,
    make_twisted_cylinder,
    sources,
    strongly_connected_components,
)
from .inequalities import (
    DigraphInequality,
    LiftedInequality,
    cycle_inequality,
    evaluate,
    fence_inequality,
    hamiltonian_inequality,
    is_violated,
    kefalopoda_inequality,
    lift,
    min_strong_inequality,
    mobius_inequality,
    rotate,
    test_from_inequality,
    trivial_lower,
    trivial_upper,
    twisted_cylinder_inequality,
)
from .oracle import (
    FacetCertificate,
    brute_force_weak_membership,
    enumerate_extremal_correlations,
    hamiltonian_vertex_check,
    hull_membership,
    max_overlap,
    verify_facet,
    verify_lifted_facet,
    verify_validity,
)
from .ratlin import affine_rank, hull_feasible, rat_parse, rat_str

__version__ = "0.1.0"
