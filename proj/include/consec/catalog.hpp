#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "consec/graph.hpp"

namespace consec {

/// Canonical adjacency code of a graph on at most 11 vertices: equal codes
/// exactly when the graphs are isomorphic. Bit i*(i-1)/2 + j holds pair (j, i).
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

inline constexpr int kMaxCatalogOrder = 11;

struct CatalogFilter {
  int min_degree = 0;
  bool connected = false;
};

/**
 * One representative per isomorphism class of graphs on n vertices passing
 * the filter, in ascending canonical code order. Built by adding one vertex
 * at a time; minimum degree is pruned hereditarily (a graph on n-j vertices
 * must have minimum degree at least d-j to extend).
 */
std::vector<Graph> unlabeled_graphs(int n, const CatalogFilter& filter = {});

}  // namespace consec
