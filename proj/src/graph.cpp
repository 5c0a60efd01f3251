#include "consec/graph.hpp"

#include <algorithm>
#include <bit>

#include "consec/error.hpp"

namespace consec {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder)
    throw Error(ErrorCode::InvalidGraph,
                "order " + std::to_string(n) + " outside [0, 65536]");
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return from_adjacency(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adj) {
  const int n = static_cast<int>(adj.size());
  check_order(n);
  Graph g;
  g.n_ = n;
  std::size_t half_edges = 0;
  for (int v = 0; v < n; ++v) {
    auto& row = adj[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw Error(ErrorCode::InvalidGraph,
                  "repeated edge at vertex " + std::to_string(v));
    for (Vertex u : row) {
      if (u < 0 || u >= n)
        throw Error(ErrorCode::InvalidGraph, "neighbor index out of range");
      if (u == v)
        throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(v));
    }
    half_edges += row.size();
  }
  for (int v = 0; v < n; ++v)
    for (Vertex u : adj[v])
      if (!std::binary_search(adj[u].begin(), adj[u].end(), v))
        throw Error(ErrorCode::InvalidGraph, "adjacency is not symmetric");
  g.m_ = half_edges / 2;
  g.adj_ = std::move(adj);
  g.build_masks();
  return g;
}

Graph Graph::from_masks(int n, std::span<const std::uint64_t> rows) {
  if (n < 0 || n > kMaskOrder || rows.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::InvalidGraph, "mask rows require n <= 64");
  Graph g;
  g.n_ = n;
  g.adj_.resize(n);
  g.masks_.assign(rows.begin(), rows.end());
  std::size_t half_edges = 0;
  const std::uint64_t all = g.all_mask();
  for (int v = 0; v < n; ++v) {
    const std::uint64_t row = rows[v];
    if (row & ~all) throw Error(ErrorCode::InvalidGraph, "neighbor index out of range");
    if (row >> v & 1) throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(v));
    g.adj_[v].reserve(std::popcount(row));
    for (std::uint64_t r = row; r; r &= r - 1) {
      const int u = std::countr_zero(r);
      if (!(rows[u] >> v & 1))
        throw Error(ErrorCode::InvalidGraph, "adjacency is not symmetric");
      g.adj_[v].push_back(u);
    }
    half_edges += g.adj_[v].size();
  }
  g.m_ = half_edges / 2;
  return g;
}

void Graph::build_masks() {
  masks_.clear();
  if (!has_masks()) return;
  masks_.assign(n_, 0);
  for (int v = 0; v < n_; ++v)
    for (Vertex u : adj_[v]) masks_[v] |= std::uint64_t{1} << u;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (has_masks()) return masks_[u] >> v & 1;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int v = 0; v < n_; ++v)
    for (Vertex u : adj_[v])
      if (v < u) out.emplace_back(v, u);
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorCode::OutOfRange, "with_edge: bad endpoints");
  if (adjacent(u, v)) return *this;
  auto adj = adj_;
  adj[u].push_back(v);
  adj[v].push_back(u);
  return from_adjacency(std::move(adj));
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorCode::OutOfRange, "without_edge: bad endpoints");
  if (!adjacent(u, v)) return *this;
  auto adj = adj_;
  std::erase(adj[u], v);
  std::erase(adj[v], u);
  return from_adjacency(std::move(adj));
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "degree profile of the empty graph");
  DegreeProfile p;
  p.degree_sequence.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) p.degree_sequence.push_back(g.degree(v));
  p.min_degree = *std::min_element(p.degree_sequence.begin(), p.degree_sequence.end());
  return p;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  const int n = g.order();
  InducedSubgraph out;
  out.from_parent.assign(n, -1);
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (v < 0 || v >= n)
      throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " not in graph");
    out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<std::vector<Vertex>> adj(out.to_parent.size());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (Vertex u : g.neighbors(out.to_parent[i]))
      if (out.from_parent[u] >= 0) adj[i].push_back(out.from_parent[u]);
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

InducedSubgraph induced_subgraph_mask(const Graph& g, std::uint64_t subset) {
  std::vector<Vertex> vs;
  for (; subset; subset &= subset - 1) vs.push_back(std::countr_zero(subset));
  return induced_subgraph(g, vs);
}

// graph6 ---------------------------------------------------------------------

Graph decode_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Error(ErrorCode::MalformedRecord, "empty record");
  if (line.starts_with(">>"))
    throw Error(ErrorCode::UnsupportedVariant, "format header is not supported");
  if (line.front() == ':' || line.front() == ';' || line.front() == '&')
    throw Error(ErrorCode::UnsupportedVariant, "sparse6/digraph6 record");
  for (char c : line) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw Error(ErrorCode::MalformedRecord,
                  "byte " + std::to_string(b) + " outside 63..126");
  }
  auto val = [&](std::size_t i) { return static_cast<unsigned>(static_cast<unsigned char>(line[i]) - 63); };

  std::size_t pos = 0;
  long n = 0;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else {
    if (line.size() >= 2 && val(1) == 63)
      throw Error(ErrorCode::UnsupportedVariant, "\"~~\" size class (n > 258047)");
    if (line.size() < 4) throw Error(ErrorCode::MalformedRecord, "truncated size field");
    n = (long{val(1)} << 12) | (long{val(2)} << 6) | long{val(3)};
    pos = 4;
    if (n > kMaxOrder)
      throw Error(ErrorCode::UnsupportedVariant, "order " + std::to_string(n) + " exceeds 65536");
  }

  const std::uint64_t bits = n > 0 ? static_cast<std::uint64_t>(n) * (n - 1) / 2 : 0;
  const std::uint64_t need = (bits + 5) / 6;
  if (line.size() - pos != need)
    throw Error(ErrorCode::MalformedRecord,
                "expected " + std::to_string(need) + " data bytes, got " +
                    std::to_string(line.size() - pos));

  std::vector<std::vector<Vertex>> adj(n);
  std::uint64_t k = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++k) {
      const unsigned group = val(pos + k / 6);
      if (group >> (5 - k % 6) & 1) {
        adj[i].push_back(static_cast<Vertex>(j));
        adj[j].push_back(static_cast<Vertex>(i));
      }
    }
  }
  if (bits % 6 != 0) {
    const unsigned last = val(line.size() - 1);
    const unsigned pad = 6 - bits % 6;
    if (last & ((1u << pad) - 1))
      throw Error(ErrorCode::MalformedRecord, "nonzero padding bits");
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  unsigned group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

// Families -------------------------------------------------------------------

Graph complete_graph(int n) {
  if (n < 0 || n > 4096) throw Error(ErrorCode::BadParams, "complete graph order");
  std::vector<std::vector<Vertex>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v) adj[v].push_back(u);
  return Graph::from_adjacency(std::move(adj));
}

Graph complete_minus_matching(int n, int m) {
  if (n < 0 || n > 4096 || m < 0 || 2 * m > n)
    throw Error(ErrorCode::BadParams, "matching of " + std::to_string(m) +
                                          " edges does not fit in K_" + std::to_string(n));
  std::vector<std::vector<Vertex>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      const bool matched = std::max(u, v) < 2 * m && u / 2 == v / 2;
      if (!matched) adj[v].push_back(u);
    }
  return Graph::from_adjacency(std::move(adj));
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0 || a + b > kMaxOrder) throw Error(ErrorCode::BadParams, "complete bipartite sides");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::from_edges(a + b, edges);
}

Graph cycle_graph(int n) {
  if (n < 3 || n > kMaxOrder) throw Error(ErrorCode::BadParams, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

Graph generate(Family family, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw Error(ErrorCode::BadParams, "expected " + std::to_string(count) + " parameters");
  };
  switch (family) {
    case Family::Complete:
      need(1);
      return complete_graph(params[0]);
    case Family::CompleteMinusMatching:
      need(2);
      return complete_minus_matching(params[0], params[1]);
    case Family::CompleteBipartite:
      need(2);
      return complete_bipartite(params[0], params[1]);
    case Family::Cycle:
      need(1);
      return cycle_graph(params[0]);
    case Family::Petersen:
      need(0);
      return petersen_graph();
  }
  throw Error(ErrorCode::BadParams, "unknown family");
}

AllLabeled::AllLabeled(int n) : n_(n) {
  if (n < 0 || n > kMaxLabeledOrder)
    throw Error(ErrorCode::BadParams, "AllLabeled requires 0 <= n <= 7");
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
}

Graph AllLabeled::graph_at(std::uint64_t code) const {
  std::uint64_t rows[kMaxLabeledOrder] = {};
  for (std::size_t b = 0; b < pairs_.size(); ++b) {
    if (code >> b & 1) {
      auto [i, j] = pairs_[b];
      rows[i] |= std::uint64_t{1} << j;
      rows[j] |= std::uint64_t{1} << i;
    }
  }
  return Graph::from_masks(n_, std::span<const std::uint64_t>(rows, n_));
}

bool is_valid_path(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
  }
  return true;
}

bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle) {
  return cycle.size() >= 3 && is_valid_path(g, cycle) && g.adjacent(cycle.back(), cycle.front());
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::UnsupportedVariant: return "UnsupportedVariant";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::NotShortest: return "NotShortest";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::OverlapViolation: return "OverlapViolation";
    case ErrorCode::NotConsecutive: return "NotConsecutive";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
  }
  return "Unknown";
}

}  // namespace consec
