"""Stallings foldings of subgroups of free groups: trail decompositions,
positive bases, intersections and the Hanna Neumann bounds."""

__version__ = "0.1.0"

from .decomposition import (
    SourceSinkReport,
    apply_automorphism,
    find_sources_sinks,
    has_trail_decomposition,
    is_positively_generated,
    is_source_sink_free,
    positive_basis,
    trail_decomposition,
)
from .errors import (
    ClassCountUnavailable,
    EmptyPresentation,
    NoDecomposition,
    NotStronglyConnected,
    ParseError,
    StallingsError,
    TrivialFolding,
)
from .folding import (
    DegreeProfile,
    Folding,
    SubgroupPresentation,
    build_rose,
    canonical_text,
    degree_profile,
    fold,
    folding_of,
    foldings_isomorphic,
    is_3_balanced,
    membership,
    neumann_majority_type,
    parse_subgroup_file,
    rank,
    spanning_tree_basis,
)
from .graph import (
    Edge,
    LabeledDigraph,
    SccPartition,
    TrailDecomposition,
    is_self_avoiding,
    is_strongly_connected,
    make_self_avoiding,
    prefix_union,
    scc,
    strong_trail_decomposition,
    verify_decomposition,
)
from .intersection import HncReport, embed_to_rank2, hnc_check, hnc_report, pullback
from .words import Alphabet, Word, concat, free_reduce, invert, is_positive
