"""Cut pairs, slices and slice trees of finite 2-connected graphs.

A finite graph stands in for a compact continuum: vertex pairs whose removal
disconnects it play the role of separating point pairs, and the orbit of a
minimal slice's boundary under the automorphism group spans a bipartite tree
on which the group acts.
"""

from ._kernels import backend_name
from .errors import CapExceededError, GraphInputError, PreconditionError, SliceTreeError, VerificationError
from .graph import (
    BlockCutTree,
    ComponentPartition,
    CutPair,
    Graph,
    block_cut_tree,
    components,
    cut_vertices,
    enumerate_cut_pairs,
    is_connected,
    is_cycle,
    separates,
)
from .pairtree import (
    PairFamily,
    PairNode,
    SetNode,
    SliceTree,
    VertexSet,
    adjacency_graph,
    build_tree,
    incidence_graph,
    pair_separates_pairs,
    path_separator_check,
    separator_set,
    verify_tree,
    vertex_sets,
)
from .pipeline import ClassificationReport, run_pipeline
from .slices import (
    InseparablePair,
    Slice,
    chain_intersection,
    family_is_noncrossing,
    find_inseparable_pair,
    minimal_slice_containing,
    pair_crosses,
    slice_contains,
    slices_of_pair,
)
from .symmetry import (
    Automorphism,
    AutomorphismGroup,
    action_on_tree,
    automorphisms,
    edge_stabilizer_check,
    global_fixed_point_check,
    orbit_of_pair,
)

__version__ = "0.1.0"
