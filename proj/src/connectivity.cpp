#include "consec/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "consec/error.hpp"

namespace consec {

namespace {

std::vector<std::vector<Vertex>> components_masked(const Graph& g, const std::vector<char>& removed) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex u : g.neighbors(v))
        if (!removed[u] && comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Cycle normalize_cycle(Cycle c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

// Shortest odd cycle by BFS from every root; the two tree paths of a globally
// shortest odd closed walk are internally disjoint.
Cycle shortest_odd_cycle(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  Cycle best_cycle;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (dist[u] == dist[v] && v < u && 2 * dist[v] + 1 < best) {
          best = 2 * dist[v] + 1;
          Cycle left, right;
          for (Vertex a = v; a != -1; a = parent[a]) left.push_back(a);
          for (Vertex b = u; b != root; b = parent[b]) right.push_back(b);
          std::reverse(left.begin(), left.end());
          left.insert(left.end(), right.begin(), right.end());
          best_cycle = std::move(left);
        }
      }
    }
  }
  return normalize_cycle(std::move(best_cycle));
}

// Unit vertex-capacity max flow between nonadjacent s and t, stopping at limit.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  const int n = g.order();
  // node 2v = in(v), 2v+1 = out(v)
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(2 * n);
  auto add = [&](int a, int b, int cap) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = n + 1;
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (int v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) add(2 * v + 1, 2 * u, 1);

  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  std::vector<int> via(2 * n);
  while (flow < limit) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> q;
    q.push(source);
    via[source] = -2;
    while (!q.empty() && via[sink] == -1) {
      const int a = q.front();
      q.pop();
      for (int id : out[a])
        if (arcs[id].cap > 0 && via[arcs[id].to] == -1) {
          via[arcs[id].to] = id;
          q.push(arcs[id].to);
        }
    }
    if (via[sink] == -1) break;
    for (int node = sink; node != source;) {
      const int id = via[node];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      node = arcs[id ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

bool has_cut_vertex_without(const Graph& g, Vertex skip) {
  // Articulation points of g - skip via iterative DFS low-links.
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> parent(n, -1);
  int timer = 0;
  int root = skip == 0 ? 1 : 0;
  if (root >= n) return false;
  std::vector<Vertex> stack{root};
  disc[root] = low[root] = timer++;
  int root_children = 0;
  int visited = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto nbrs = g.neighbors(v);
    if (next[v] < nbrs.size()) {
      const Vertex u = nbrs[next[v]++];
      if (u == skip) continue;
      if (disc[u] < 0) {
        parent[u] = v;
        disc[u] = low[u] = timer++;
        ++visited;
        if (v == root) ++root_children;
        stack.push_back(u);
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], disc[u]);
      }
    } else {
      stack.pop_back();
      const Vertex p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) return true;
      }
    }
  }
  const int expected = n - (skip >= 0 && skip < n ? 1 : 0);
  if (visited < expected) return true;  // disconnected counts as separable
  return root_children > 1;
}

}  // namespace

std::vector<std::size_t> BlockCutTree::end_blocks() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (is_end_block(i)) out.push_back(i);
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || components(g).size() == 1;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  return components_masked(g, std::vector<char>(g.order(), 0));
}

std::vector<std::vector<Vertex>> components_without(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> mask(g.order(), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::OutOfRange, "vertex not in graph");
    mask[v] = 1;
  }
  return components_masked(g, mask);
}

Bipartition bipartition_or_odd_cycle(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "bipartition requires a connected graph");
  const int n = g.order();
  Bipartition out;
  if (n == 0) return out;
  std::vector<int> color(n, -1);
  std::queue<Vertex> q;
  color[0] = 0;
  q.push(0);
  bool conflict = false;
  while (!q.empty() && !conflict) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (color[u] < 0) {
        color[u] = 1 - color[v];
        q.push(u);
      } else if (color[u] == color[v]) {
        conflict = true;
        break;
      }
    }
  }
  if (conflict) {
    out.odd_cycle = shortest_odd_cycle(g);
    return out;
  }
  for (int v = 0; v < n; ++v) (color[v] == 0 ? out.part_a : out.part_b).push_back(v);
  return out;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<Vertex> stack;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

BlockCutTree block_cut_tree(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "block-cut tree requires a connected graph");
  const int n = g.order();
  BlockCutTree tree;
  if (n == 0) return tree;
  if (n == 1) {
    tree.blocks.push_back({{0}, {}});
    return tree;
  }

  std::vector<int> disc(n, -1), low(n, 0), cut_count(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> parent(n, -1), vstack, dfs{0};
  std::vector<std::vector<Vertex>> raw_blocks;
  int timer = 0;
  disc[0] = low[0] = timer++;
  vstack.push_back(0);
  while (!dfs.empty()) {
    const Vertex v = dfs.back();
    auto nbrs = g.neighbors(v);
    if (next[v] < nbrs.size()) {
      const Vertex u = nbrs[next[v]++];
      if (disc[u] < 0) {
        parent[u] = v;
        disc[u] = low[u] = timer++;
        vstack.push_back(u);
        dfs.push_back(u);
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], disc[u]);
      }
    } else {
      dfs.pop_back();
      const Vertex p = parent[v];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<Vertex> block;
        Vertex w;
        do {
          w = vstack.back();
          vstack.pop_back();
          block.push_back(w);
        } while (w != v);
        block.push_back(p);
        std::sort(block.begin(), block.end());
        for (Vertex x : block) ++cut_count[x];
        raw_blocks.push_back(std::move(block));
      }
    }
  }

  for (int v = 0; v < n; ++v)
    if (cut_count[v] >= 2) tree.cut_vertices.push_back(v);
  std::sort(raw_blocks.begin(), raw_blocks.end());
  for (auto& b : raw_blocks) {
    Block block;
    for (Vertex v : b)
      if (cut_count[v] >= 2) block.cut_vertices.push_back(v);
    block.vertices = std::move(b);
    tree.blocks.push_back(std::move(block));
  }
  return tree;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (const auto& comp : components(g)) {
    if (comp.size() < 3) continue;
    auto sub = induced_subgraph(g, comp);
    for (Vertex v : block_cut_tree(sub.graph).cut_vertices) out.push_back(sub.to_parent[v]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConnectivityReport vertex_connectivity(const Graph& g) {
  ConnectivityReport r;
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return r;
  int best = degree_profile(g).min_degree;
  if (best == n - 1) {
    r.kappa = n - 1;
  } else {
    for (int i = 0; i <= best && i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!g.adjacent(i, j)) best = std::min(best, local_connectivity(g, i, j, best));
    r.kappa = best;
  }
  r.is_2_connected = r.kappa >= 2;
  r.is_3_connected = r.kappa >= 3;
  return r;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && !has_cut_vertex_without(g, -1);
}

bool is_three_connected(const Graph& g) {
  if (g.order() < 4 || !is_two_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (has_cut_vertex_without(g, v)) return false;
  return true;
}

bool is_nonseparating(const Graph& g, std::span<const Vertex> c) {
  return components_without(g, c).size() <= 1;
}

std::optional<std::pair<Vertex, Vertex>> two_cut_witness(const Graph& g) {
  if (!is_two_connected(g)) throw Error(ErrorCode::NotTwoConnected, "two-cut witness requires a 2-connected graph");
  const int n = g.order();
  std::vector<char> removed(n, 0);
  for (int x = 0; x < n; ++x) {
    removed[x] = 1;
    for (int y = x + 1; y < n; ++y) {
      removed[y] = 1;
      const bool split = components_masked(g, removed).size() >= 2;
      removed[y] = 0;
      if (split) return std::pair{x, y};
    }
    removed[x] = 0;
  }
  return std::nullopt;
}

}  // namespace consec
