"""F-isolation numbers: exact solvers, constructive covers, bounds, sweeps."""

from isolate._core import (
    Graph,
    ParameterError,
    ParseError,
    PreconditionError,
    bound_report,
    check_certificate,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    emit_edge_list,
    emit_graph6,
    empty_graph,
    exact_domination,
    exact_isolation,
    exact_k_independence,
    grid_graph,
    grid_isolating,
    hypercube,
    is_f_free,
    isolating_components,
    isolating_third,
    load_graph_file,
    max_f_free_subset,
    parse_edge_list,
    parse_graph6,
    path_graph,
    petersen,
    random_regular,
    random_tree,
    randomized_isolating,
    star_graph,
    sweep_check_names,
    sweep_theorems,
    tree_k_isolating,
)

__all__ = [
    "Graph",
    "ParameterError",
    "ParseError",
    "PreconditionError",
    "bound_report",
    "check_certificate",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "emit_edge_list",
    "emit_graph6",
    "empty_graph",
    "exact_domination",
    "exact_isolation",
    "exact_k_independence",
    "grid_graph",
    "grid_isolating",
    "hypercube",
    "is_f_free",
    "isolating_components",
    "isolating_third",
    "load_graph_file",
    "max_f_free_subset",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "petersen",
    "random_regular",
    "random_tree",
    "randomized_isolating",
    "star_graph",
    "sweep_check_names",
    "sweep_theorems",
    "tree_k_isolating",
]
