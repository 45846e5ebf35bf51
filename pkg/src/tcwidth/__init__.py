"""Graph immersions, edge sums and tree-cut decompositions."""

from .connectivity import (
    EdgeCut,
    PathSystem,
    edge_connectivity,
    max_edge_disjoint_paths,
    min_cut_between_sets,
    min_edge_cut,
)
from .edgesum import (
    BoundedDegree,
    CliqueWitness,
    EdgeSumSpec,
    GroundedSum,
    compose,
    compose_with_seams,
    is_grounded,
    split_on_cut,
    structure_step,
)
from .immersion import (
    Immersion,
    ImmersionError,
    SearchBudgetExceeded,
    clique_from_hub,
    compose_immersions,
    embed_in_multistar,
    find_immersion,
    identity_immersion,
    lift_across_sum,
    project_across_sum,
    verify_immersion,
)
from .multigraph import (
    GraphError,
    MultiGraph,
    boundary,
    complete_graph,
    consolidate,
    cycle_graph,
    degree,
    is_isomorphic,
    make_star,
    make_wall,
    path_graph,
    split_off,
    suppress,
)
from .treecut import (
    BudgetError,
    EdgeSplit,
    Torso,
    TreeCutDecomposition,
    VertexSplit,
    adhesion,
    assemble_star,
    brute_force_tcw,
    build_excluding_clique,
    check_converse,
    combine,
    from_tree_decomposition,
    has_bounded_degree,
    split_tree,
    three_center,
    torso_at,
    verify_tcd,
    width,
)
from .treedecomp import TreeDecomposition, greedy_td, normalize_td, td_width, verify_td
from .trees import DecompositionError

__version__ = "0.1.0"
