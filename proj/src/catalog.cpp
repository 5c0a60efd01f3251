#include "consec/catalog.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "consec/connectivity.hpp"
#include "consec/error.hpp"

namespace consec {

namespace {

int pair_bit(int a, int b) {
  if (a < b) std::swap(a, b);
  return a * (a - 1) / 2 + b;
}

// Search for the smallest adjacency code over the leaves of the
// individualization-refinement tree.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) rows_[v] = g.mask(v);
  }

  std::uint64_t run() {
    std::vector<int> colors(n_, 0);
    refine(colors);
    search(colors);
    return best_;
  }

 private:
  // Colour refinement to the coarsest equitable partition; colours are ranks
  // of (colour, neighbour colour multiset), so they never depend on labels.
  void refine(std::vector<int>& colors) const {
    std::vector<std::vector<int>> sig(n_);
    int classes = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
    while (true) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        for (std::uint64_t m = rows_[v]; m; m &= m - 1) s.push_back(colors[std::countr_zero(m)]);
        std::sort(s.begin() + 1, s.end());
      }
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        colors[order[i]] = rank;
      }
      const int now = n_ == 0 ? 0 : rank + 1;
      if (now == classes) return;
      classes = now;
    }
  }

  void search(const std::vector<int>& colors) {
    // First non-singleton colour class, chosen by colour value.
    std::vector<int> count(n_, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::uint64_t code = 0;
      for (int v = 0; v < n_; ++v)
        for (std::uint64_t m = rows_[v]; m; m &= m - 1) {
          const int u = std::countr_zero(m);
          if (u < v) code |= std::uint64_t{1} << pair_bit(colors[u], colors[v]);
        }
      best_ = std::min(best_, code);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      // Twins in the same cell give isomorphic subtrees.
      bool twin = false;
      for (int u : tried) {
        const std::uint64_t both = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if ((rows_[u] & ~both) == (rows_[v] & ~both)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (int w = 0; w < n_; ++w) next[w] = 2 * colors[w] + (colors[w] == target && w != v ? 1 : 0);
      refine(next);
      search(next);
    }
  }

  int n_;
  std::uint64_t rows_[kMaxCatalogOrder] = {};
  std::uint64_t best_ = ~std::uint64_t{0};
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kMaxCatalogOrder) throw Error(ErrorCode::TooLarge, "canonical form supports at most 11 vertices");
  return Canonizer(g).run();
}

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 0 || n > kMaxCatalogOrder) throw Error(ErrorCode::BadParams, "order out of range for a code");
  std::uint64_t rows[kMaxCatalogOrder] = {};
  for (int a = 1; a < n; ++a)
    for (int b = 0; b < a; ++b)
      if (code >> pair_bit(a, b) & 1) {
        rows[a] |= std::uint64_t{1} << b;
        rows[b] |= std::uint64_t{1} << a;
      }
  return Graph::from_masks(n, std::span<const std::uint64_t>(rows, n));
}

std::vector<Graph> unlabeled_graphs(int n, const CatalogFilter& filter) {
  if (n < 0 || n > kMaxCatalogOrder) throw Error(ErrorCode::BadParams, "catalog order must be 0..11");
  std::vector<std::uint64_t> level{0};  // the graph on 0 vertices
  for (int order = 1; order <= n; ++order) {
    const int need = filter.min_degree - (n - order);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> next;
    const int prev = order - 1;
    for (std::uint64_t code : level) {
      const Graph base = graph_from_code(prev, code);
      std::uint64_t rows[kMaxCatalogOrder] = {};
      for (int v = 0; v < prev; ++v) rows[v] = base.mask(v);
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << prev); ++nb) {
        if (std::popcount(nb) < need) continue;
        bool ok = true;
        for (int v = 0; v < prev && ok; ++v)
          ok = std::popcount(rows[v]) + static_cast<int>(nb >> v & 1) >= need;
        if (!ok) continue;
        std::uint64_t ext[kMaxCatalogOrder] = {};
        for (int v = 0; v < prev; ++v) ext[v] = rows[v] | ((nb >> v & 1) << prev);
        ext[prev] = nb;
        const std::uint64_t c = canonical_code(Graph::from_masks(order, std::span<const std::uint64_t>(ext, order)));
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  std::vector<Graph> out;
  for (std::uint64_t code : level) {
    Graph g = graph_from_code(n, code);
    if (filter.connected && n > 0 && !is_connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace consec
