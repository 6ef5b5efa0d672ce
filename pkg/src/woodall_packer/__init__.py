"""Packings of disjoint dicycle transversals on 3-tree digraphs.

The number of pairwise disjoint dicycle transversals a digraph admits can
never exceed its girth. On digraphs whose underlying graph is a planar
3-tree the two are equal, and this package constructs a packing of that
size, verifies it independently, and cross-checks small instances by
exhaustive search.
"""

from .errors import (
    AcyclicInput,
    ArcNotPresent,
    BudgetExhausted,
    CertificateViolation,
    ConstructionFailed,
    DigonCreated,
    DigonEncountered,
    HostMismatch,
    InnerCycle,
    LimitExceeded,
    NoChordFound,
    NodeOutOfRange,
    NotIndependent,
    NotThreeTree,
    PackerError,
    ResampleExhausted,
    SelfLoop,
    TooSmall,
)
from .digraph import (
    Arc,
    DicycleWitness,
    Digraph,
    Graph,
    acyclicity_certificate,
    canonical_witness,
    connected_components,
    induced_subdigraph,
    induced_subgraph,
    is_acyclic,
    make_digraph,
    make_graph,
    remove_arcs,
    underlying_graph,
)
from .dicycles import (
    INFINITE,
    Ditriangle,
    ditriangles,
    enumerate_dicycles,
    find_ditriangle,
    girth,
    make_ditriangle,
    shorten_to_ditriangle,
)
from .generator import GenConfig, generate, orient, random_apollonian
from .oracle import (
    TransversalCheck,
    VerificationReport,
    check_split,
    exact_nu,
    is_transversal,
    verify_packing,
)
from .packing import (
    Packing,
    SplitCertificate,
    build_split_certificate,
    complete_partial,
    merge_at_ditriangle,
    pack,
    pack3,
    pack_around_degree3,
    pack_by_core_lift,
    pack_incremental,
    pack_small,
    restrict_packing,
    two_acyclic_decomposition,
)
from .three_tree import (
    ConstructionSequence,
    SeparatorSplit,
    Step,
    certify_apollonian,
    degree3_set,
    find_separator_ditriangle,
    peel_order,
    split_at_separator,
)

__version__ = "0.1.0"

__all__ = [
    "AcyclicInput",
    "Arc",
    "ArcNotPresent",
    "BudgetExhausted",
    "CertificateViolation",
    "ConstructionFailed",
    "ConstructionSequence",
    "DicycleWitness",
    "DigonCreated",
    "DigonEncountered",
    "Digraph",
    "Ditriangle",
    "GenConfig",
    "Graph",
    "HostMismatch",
    "INFINITE",
    "InnerCycle",
    "LimitExceeded",
    "NoChordFound",
    "NodeOutOfRange",
    "NotIndependent",
    "NotThreeTree",
    "Packing",
    "PackerError",
    "ResampleExhausted",
    "SelfLoop",
    "SeparatorSplit",
    "SplitCertificate",
    "Step",
    "TooSmall",
    "TransversalCheck",
    "VerificationReport",
    "acyclicity_certificate",
    "build_split_certificate",
    "canonical_witness",
    "certify_apollonian",
    "check_split",
    "complete_partial",
    "connected_components",
    "degree3_set",
    "ditriangles",
    "enumerate_dicycles",
    "exact_nu",
    "find_ditriangle",
    "find_separator_ditriangle",
    "generate",
    "girth",
    "induced_subdigraph",
    "induced_subgraph",
    "is_acyclic",
    "is_transversal",
    "make_digraph",
    "make_ditriangle",
    "make_graph",
    "merge_at_ditriangle",
    "orient",
    "pack",
    "pack3",
    "pack_around_degree3",
    "pack_by_core_lift",
    "pack_incremental",
    "pack_small",
    "peel_order",
    "random_apollonian",
    "remove_arcs",
    "restrict_packing",
    "shorten_to_ditriangle",
    "split_at_separator",
    "two_acyclic_decomposition",
    "underlying_graph",
    "verify_packing",
]
