#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace consec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Vertex sequence v_0, ..., v_m of a path (m edges).
using Path = std::vector<Vertex>;
/// Vertex sequence of a cycle; the closing edge back to front() is implicit.
using Cycle = std::vector<Vertex>;

inline constexpr int kMaxOrder = 1 << 16;
/// Graphs up to this order carry a 64-bit adjacency row per vertex.
inline constexpr int kMaskOrder = 64;

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Neighbor lists are sorted. Graphs with at most 64 vertices additionally
 * keep one adjacency bitmask per vertex, which the exhaustive searches use.
 */
class Graph {
 public:
  Graph() = default;

  /// Validates and builds; loops, repeated edges and out-of-range endpoints
  /// throw `ErrorCode::InvalidGraph`.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Builds from neighbor lists; the lists must already be symmetric.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj);
  /// Builds from 64-bit rows (n <= 64); rows must be symmetric and loop-free.
  static Graph from_masks(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  bool has_masks() const { return n_ <= kMaskOrder; }
  std::uint64_t mask(Vertex v) const { return masks_[v]; }
  std::uint64_t all_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::vector<Edge> edges() const;

  /// G + uv and G - uv.
  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void build_masks();

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> masks_;
};

struct DegreeProfile {
  int min_degree = 0;
  std::vector<int> degree_sequence;
};

/// Throws `ErrorCode::EmptyGraph` when n = 0.
DegreeProfile degree_profile(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[new] = old vertex
  std::vector<Vertex> to_parent;
  /// from_parent[old] = new vertex, or -1 when old is not in the subset
  std::vector<Vertex> from_parent;
};

/// G[S] relabeled densely in increasing order of old index.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);
InducedSubgraph induced_subgraph_mask(const Graph& g, std::uint64_t subset);

// graph6 codec -------------------------------------------------------------

Graph decode_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Named families ------------------------------------------------------------

Graph complete_graph(int n);
/// K_n minus the matching (0,1), (2,3), ..., (2m-2, 2m-1).
Graph complete_minus_matching(int n, int m);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph petersen_graph();

enum class Family {
  Complete,
  CompleteMinusMatching,
  CompleteBipartite,
  Cycle,
  Petersen,
};

/// Dispatches to the named generators; `params` carries the family's
/// integer arguments in declaration order. Throws `ErrorCode::BadParams`.
Graph generate(Family family, std::span<const int> params);

inline constexpr int kMaxLabeledOrder = 7;

/**
 * All 2^(n(n-1)/2) labeled graphs on n vertices, in increasing order of the
 * edge bitmask whose bit order matches graph6: (0,1), (0,2), (1,2), (0,3), ...
 */
class AllLabeled {
 public:
  explicit AllLabeled(int n);

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const AllLabeled* owner, std::uint64_t code)
        : owner_(owner), code_(code) {}

    Graph operator*() const { return owner_->graph_at(code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++code_;
      return tmp;
    }
    std::uint64_t code() const { return code_; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.code_ == b.code_;
    }

   private:
    const AllLabeled* owner_ = nullptr;
    std::uint64_t code_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count()}; }
  std::uint64_t count() const { return std::uint64_t{1} << pairs_.size(); }
  int order() const { return n_; }

  Graph graph_at(std::uint64_t code) const;

 private:
  int n_;
  std::vector<Edge> pairs_;
};

// Validation ----------------------------------------------------------------

bool is_valid_path(const Graph& g, std::span<const Vertex> path);
bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle);

inline int path_length(std::span<const Vertex> path) {
  return static_cast<int>(path.size()) - 1;
}

}  // namespace consec
