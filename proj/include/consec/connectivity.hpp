#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "consec/graph.hpp"

namespace consec {

/// Either a proper 2-coloring or an odd cycle certifying there is none.
struct Bipartition {
  std::vector<Vertex> part_a;  // contains vertex 0
  std::vector<Vertex> part_b;
  std::optional<Cycle> odd_cycle;

  bool bipartite() const { return !odd_cycle.has_value(); }
};

struct Block {
  std::vector<Vertex> vertices;      // sorted
  std::vector<Vertex> cut_vertices;  // cut vertices of the whole graph in this block
};

struct BlockCutTree {
  std::vector<Block> blocks;  // ascending by minimum vertex
  std::vector<Vertex> cut_vertices;

  /// A block holding at most one cut vertex of the graph.
  bool is_end_block(std::size_t i) const { return blocks[i].cut_vertices.size() <= 1; }
  /// The unique cut vertex of an end-block; empty for a lone block or a
  /// block with two or more cut vertices.
  std::optional<Vertex> end_block_cut_vertex(std::size_t i) const {
    if (blocks[i].cut_vertices.size() == 1) return blocks[i].cut_vertices.front();
    return std::nullopt;
  }
  std::vector<std::size_t> end_blocks() const;
};

struct ConnectivityReport {
  int kappa = 0;
  bool is_2_connected = false;
  bool is_3_connected = false;
};

bool is_connected(const Graph& g);
/// Connected components, each sorted, listed by minimum vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
/// Components of g - removed.
std::vector<std::vector<Vertex>> components_without(const Graph& g,
                                                    std::span<const Vertex> removed);

/// Requires g connected; throws `ErrorCode::Disconnected` otherwise. The odd
/// cycle returned is a shortest one.
Bipartition bipartition_or_odd_cycle(const Graph& g);

/// Same test without the connectivity precondition: true iff every component
/// is bipartite.
bool is_bipartite(const Graph& g);

/// Requires g connected.
BlockCutTree block_cut_tree(const Graph& g);

/// Articulation points of g (any component structure).
std::vector<Vertex> cut_vertices(const Graph& g);

/// Exact vertex connectivity via unit-capacity max flow; kappa(K_n) = n-1.
ConnectivityReport vertex_connectivity(const Graph& g);

/// Cheap k-connectivity tests used by hypothesis gates.
bool is_two_connected(const Graph& g);
bool is_three_connected(const Graph& g);

/// True iff g - c has at most one component (empty remainder included).
bool is_nonseparating(const Graph& g, std::span<const Vertex> c);

/// Lexicographically smallest pair {x, y} whose removal disconnects g, or
/// nothing when g is 3-connected. Throws `ErrorCode::NotTwoConnected`.
std::optional<std::pair<Vertex, Vertex>> two_cut_witness(const Graph& g);

}  // namespace consec
