"""Cycle spectra, connectivity, path families and theorem checks on small graphs."""

from ._core import (
    ConsecError,
    Graph,
    block_cut_tree,
    check,
    complete_bipartite,
    complete_graph,
    complete_minus_matching,
    cut_vertices,
    cycle_graph,
    cycle_spectrum,
    extract,
    is_bipartite,
    is_nonseparating,
    max_admissible_family,
    merge_guarantee,
    odd_even_paths,
    petersen_graph,
    scan,
    shortest_nonsep_induced_odd_cycle,
    theorems,
    two_cut_witness,
    unlabeled_graphs,
    vertex_connectivity,
    xy_path_lengths,
)

__all__ = [
    "ConsecError",
    "Graph",
    "block_cut_tree",
    "check",
    "complete_bipartite",
    "complete_graph",
    "complete_minus_matching",
    "cut_vertices",
    "cycle_graph",
    "cycle_spectrum",
    "extract",
    "is_bipartite",
    "is_nonseparating",
    "max_admissible_family",
    "merge_guarantee",
    "odd_even_paths",
    "petersen_graph",
    "scan",
    "shortest_nonsep_induced_odd_cycle",
    "theorems",
    "two_cut_witness",
    "unlabeled_graphs",
    "vertex_connectivity",
    "xy_path_lengths",
]
