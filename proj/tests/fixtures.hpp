#pragma once

#include <vector>

#include "consec/graph.hpp"

namespace fixture {

using consec::Edge;
using consec::Graph;

// Each vertex of the cycle C_len replaced by t independent copies; copies of
// neighbouring cycle vertices are all adjacent.
inline Graph blowup(int len, int t) {
  std::vector<Edge> e;
  for (int i = 0; i < len; ++i)
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b) e.emplace_back(i * t + a, ((i + 1) % len) * t + b);
  return Graph::from_edges(len * t, e);
}

// Two copies of K_order sharing the vertices 0 and 1 (and the edge 01).
inline Graph glued_cliques(int order) {
  std::vector<Edge> e;
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b) e.emplace_back(a, b);
  std::vector<int> second{0, 1};
  for (int i = 0; i < order - 2; ++i) second.push_back(order + i);
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (b >= 2) e.emplace_back(second[a], second[b]);
  return Graph::from_edges(2 * order - 2, e);
}

// Circulant on 3k-1 vertices joining i and j when j - i is 1 mod 3: k-regular,
// triangle-free, 3-connected for k >= 3.
inline Graph andrasfai(int k) {
  const int n = 3 * k - 1;
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((b - a) % 3 == 1) e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

// Internally disjoint from-to paths of the given lengths on fresh vertices
// numbered from `next`; their edges are appended to `edges`.
inline std::vector<consec::Path> add_paths(std::vector<Edge>& edges, int& next, consec::Vertex from,
                                           consec::Vertex to, const std::vector<int>& lengths) {
  std::vector<consec::Path> out;
  for (int len : lengths) {
    consec::Path p{from};
    for (int i = 1; i < len; ++i) p.push_back(next++);
    p.push_back(to);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
    out.push_back(p);
  }
  return out;
}

}  // namespace fixture
