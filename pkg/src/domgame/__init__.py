"""Exact solvers for the domination game and recognizers for the graphs
on which game and static domination numbers agree hereditarily."""

from .canon import are_isomorphic, canonical_form
from .catalog import contains_induced, kc_graph, named_graph, recognize_kc
from .enumeration import (
    Builtin,
    CountsRow,
    Graph6File,
    enumerate_nonisomorphic,
    find_min_imperfect,
    table1,
)
from .graph import (
    Graph,
    GraphError,
    GraphFormatError,
    complement,
    components,
    disjoint_union,
    distance,
    induced_subgraph,
    join,
    parse_edge_list,
    parse_graph6,
    set_distance,
    write_graph6,
)
from .perfection import (
    BuildScript,
    ClassificationReport,
    apply_extend,
    apply_union,
    brute_force_gg_perfect,
    build,
    certified_graph,
    classify,
    is_2_gg_perfect,
    is_gg_graph,
    is_gg_perfect,
    is_minimally_gg_imperfect,
    is_psc,
    mhc_contraction,
    recognize_gg_perfect,
    two_nonadjacent_witness,
)
from .solver import (
    Mover,
    Variant,
    domination_number,
    game_value,
    optimal_first_moves,
    residual_game_value,
    total_domination_number,
)

__version__ = "0.1.0"
