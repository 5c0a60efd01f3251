#include "consec/cycles.hpp"

#include <algorithm>
#include <bit>

#include "consec/connectivity.hpp"
#include "consec/error.hpp"

namespace consec {

namespace {

using Mask = std::uint64_t;

constexpr int kDpOrderLimit = 26;

inline Mask bit(int v) { return Mask{1} << v; }

void check_size(const Graph& g, const SpectrumOptions& opt) {
  const int n = g.order();
  if (!g.has_masks())
    throw Error(ErrorCode::TooLarge, "cycle spectrum supports at most 64 vertices");
  if (opt.force_large) return;
  if (n > kHardSpectrumLimit || n > opt.size_limit)
    throw Error(ErrorCode::TooLarge,
                "order " + std::to_string(n) + " exceeds spectrum limit " +
                    std::to_string(std::min(opt.size_limit, kHardSpectrumLimit)));
}

class SubsetDp {
 public:
  SubsetDp(const Graph& g, const SpectrumOptions& opt)
      : g_(g), n_(g.order()), cap_(opt.max_length > 0 ? std::min(opt.max_length, n_) : n_),
        meter_(opt.limits) {}

  CycleSpectrum run() {
    CycleSpectrum out;
    if (n_ < 3 || cap_ < 3) return out;
    reach_.assign(std::size_t{1} << (n_ - 1), 0);
    const int wanted = cap_ - 2;
    for (int r = 0; r + 2 < n_; ++r) {
      scan_root(r, out);
      if (static_cast<int>(out.witness.size()) == wanted) break;
    }
    for (auto& [len, cyc] : out.witness) out.lengths.push_back(len);
    return out;
  }

 private:
  // reach_[m] holds the endpoints v of paths that start at r and visit exactly
  // {r} plus the vertices encoded in m (bit i of m is vertex r + 1 + i).
  void scan_root(int r, CycleSpectrum& out) {
    const int k = n_ - r - 1;
    const std::size_t count = std::size_t{1} << k;
    const Mask root_nbrs = g_.mask(r) >> (r + 1);
    std::vector<Mask> local(n_);
    for (int v = r + 1; v < n_; ++v) local[v] = g_.mask(v) >> (r + 1);

    reach_[0] = 0;
    for (std::size_t m = 1; m < count; ++m) {
      const int size = std::popcount(m);
      if (size + 1 > cap_) {
        reach_[m] = 0;
        continue;
      }
      meter_.tick();
      Mask ends = 0;
      if (size == 1) {
        ends = m & root_nbrs;
      } else {
        for (Mask rest = m; rest; rest &= rest - 1) {
          const int i = std::countr_zero(rest);
          if (local[r + 1 + i] & reach_[m ^ bit(i)]) ends |= bit(i);
        }
      }
      reach_[m] = ends;
      const int len = size + 1;
      if (len >= 3 && (ends & root_nbrs) && !out.contains(len)) out.witness.emplace(len, Cycle{});
    }
    for (auto& [len, cyc] : out.witness)
      if (cyc.empty()) cyc = smallest_cycle(r, len, count - 1);
  }

  // Lexicographically smallest cycle of length `len` through root r (its
  // smallest vertex): extend greedily by the smallest neighbour u for which
  // the table has an r..u path on the right number of still-free vertices,
  // which closes the cycle when reversed.
  Cycle smallest_cycle(int r, int len, Mask free) {
    Cycle c{r};
    int prev = r;
    for (int pos = 1; pos < len; ++pos) {
      const int need = len - pos;
      const Mask nbrs = (g_.mask(prev) >> (r + 1)) & free;
      int chosen = -1;
      for (Mask cand = nbrs; cand && chosen < 0; cand &= cand - 1) {
        const int u = std::countr_zero(cand);
        if (completes(u, need, free ^ bit(u))) chosen = u;
      }
      if (chosen < 0) throw Error(ErrorCode::ConstructionFailed, "spectrum witness reconstruction");
      c.push_back(r + 1 + chosen);
      free ^= bit(chosen);
      prev = r + 1 + chosen;
    }
    return c;
  }

  // Is there M = {u} + (need - 1 vertices of `rest`) with u an endpoint in reach_[M]?
  bool completes(int u, int need, Mask rest) {
    std::vector<int> pos;
    for (Mask b = rest; b; b &= b - 1) pos.push_back(std::countr_zero(b));
    const int f = static_cast<int>(pos.size());
    const int pick = need - 1;
    if (pick > f) return false;
    if (pick == 0) return reach_[bit(u)] >> u & 1;
    // combinations of `pick` positions out of f, by Gosper's successor
    for (std::uint64_t sel = (std::uint64_t{1} << pick) - 1; sel < (std::uint64_t{1} << f);) {
      meter_.tick();
      Mask m = bit(u);
      for (std::uint64_t b = sel; b; b &= b - 1) m |= bit(pos[std::countr_zero(b)]);
      if (reach_[m] >> u & 1) return true;
      const std::uint64_t low = sel & -sel;
      const std::uint64_t ripple = sel + low;
      sel = (((ripple ^ sel) >> 2) / low) | ripple;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int cap_;
  SearchMeter meter_;
  std::vector<Mask> reach_;
};

class Backtrack {
 public:
  Backtrack(const Graph& g, const SpectrumOptions& opt)
      : g_(g), n_(g.order()), cap_(opt.max_length > 0 ? std::min(opt.max_length, n_) : n_),
        meter_(opt.limits) {}

  CycleSpectrum run() {
    CycleSpectrum out;
    for (int r = 0; r + 2 < n_; ++r) {
      root_ = r;
      path_.assign(1, r);
      dfs(bit(r), out);
      if (static_cast<int>(out.witness.size()) == cap_ - 2) break;
    }
    for (auto& [len, cyc] : out.witness) out.lengths.push_back(len);
    return out;
  }

 private:
  void dfs(Mask used, CycleSpectrum& out) {
    meter_.tick();
    const int v = path_.back();
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && g_.adjacent(v, root_) && !out.contains(len)) out.witness.emplace(len, path_);
    if (len == cap_) return;
    const Mask higher = ~((bit(root_) << 1) - 1);
    for (Mask c = g_.mask(v) & higher & ~used; c; c &= c - 1) {
      const int u = std::countr_zero(c);
      path_.push_back(u);
      dfs(used | bit(u), out);
      path_.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  int cap_;
  SearchMeter meter_;
  int root_ = 0;
  Path path_;
};

bool connected_remainder(const Graph& g, Mask removed) {
  const Mask rest = g.all_mask() & ~removed;
  if (rest == 0) return true;
  Mask seen = rest & -rest, frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= g.mask(std::countr_zero(f));
    next &= rest & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == rest;
}

// Enumerates induced cycles of a fixed length, rooted at their smallest vertex
// and oriented so that p_1 < p_{L-1}; keeps the non-separating one with the
// lexicographically smallest vertex set.
class InducedOddSearch {
 public:
  InducedOddSearch(const Graph& g, const SearchLimits& limits) : g_(g), meter_(limits) {}

  std::optional<Cycle> find(int length) {
    len_ = length;
    best_.reset();
    best_key_.clear();
    for (int r = 0; r < g_.order(); ++r) {
      path_.assign(1, r);
      higher_ = ~((bit(r) << 1) - 1) & g_.all_mask();
      extend(bit(r), 0);
    }
    return best_;
  }

 private:
  // blocked: closed neighborhoods of p_1 .. p_{j-2}
  void extend(Mask used, Mask blocked) {
    meter_.tick();
    const int j = static_cast<int>(path_.size());
    const int last = path_.back();
    const int root = path_.front();
    Mask cand = g_.mask(last) & higher_ & ~used & ~blocked;
    if (j >= 2) {
      if (j < len_ - 1) cand &= ~g_.mask(root);
      else cand &= g_.mask(root);
    }
    if (j == len_ - 1) {
      for (; cand; cand &= cand - 1) {
        const int u = std::countr_zero(cand);
        if (u < path_[1]) continue;
        path_.push_back(u);
        consider(used | bit(u));
        path_.pop_back();
      }
      return;
    }
    const Mask next_blocked = j >= 2 ? blocked | g_.mask(last) | bit(last) : blocked;
    for (; cand; cand &= cand - 1) {
      const int u = std::countr_zero(cand);
      path_.push_back(u);
      extend(used | bit(u), next_blocked);
      path_.pop_back();
    }
  }

  void consider(Mask vertices) {
    if (!connected_remainder(g_, vertices)) return;
    std::vector<Vertex> key;
    for (Mask m = vertices; m; m &= m - 1) key.push_back(std::countr_zero(m));
    if (!best_ || key < best_key_) {
      best_key_ = std::move(key);
      best_ = path_;
    }
  }

  const Graph& g_;
  SearchMeter meter_;
  int len_ = 0;
  Mask higher_ = 0;
  Path path_;
  std::optional<Cycle> best_;
  std::vector<Vertex> best_key_;
};

}  // namespace

CycleSpectrum cycle_spectrum(const Graph& g, const SpectrumOptions& options) {
  check_size(g, options);
  if (g.order() <= kDpOrderLimit && !options.backtracking) return SubsetDp(g, options).run();
  return Backtrack(g, options).run();
}

RunStats run_stats(const std::vector<int>& lengths) {
  RunStats st;
  std::vector<int> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[j - 1] + 1) ++j;
    if (static_cast<int>(j - i) > st.max_run) {
      st.max_run = static_cast<int>(j - i);
      st.run.assign(sorted.begin() + i, sorted.begin() + j);
    }
    i = j;
  }
  std::vector<int> odd;
  for (int l : sorted)
    if (l % 2 != 0) odd.push_back(l);
  for (std::size_t i = 0; i < odd.size();) {
    std::size_t j = i + 1;
    while (j < odd.size() && odd[j] == odd[j - 1] + 2) ++j;
    if (static_cast<int>(j - i) > st.max_odd_run) {
      st.max_odd_run = static_cast<int>(j - i);
      st.odd_run.assign(odd.begin() + i, odd.begin() + j);
    }
    i = j;
  }
  return st;
}

RunStats run_stats(const CycleSpectrum& spectrum) { return run_stats(spectrum.lengths); }

std::optional<OddCycleStructure> shortest_nonsep_induced_odd_cycle(const Graph& g,
                                                                   const SearchLimits& limits) {
  if (!g.has_masks())
    throw Error(ErrorCode::TooLarge, "induced cycle search supports at most 64 vertices");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "non-separating cycles need a connected graph");
  InducedOddSearch search(g, limits);
  for (int len = 3; len <= g.order(); len += 2) {
    if (auto c = search.find(len)) return OddCycleStructure{std::move(*c), (len - 1) / 2};
  }
  return std::nullopt;
}

bool is_induced_cycle(const Graph& g, const Cycle& c) {
  if (!is_valid_cycle(g, c)) return false;
  const std::size_t len = c.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(c[i], c[j])) return false;
    }
  return true;
}

DichotomyResult classify_dichotomy(const Graph& g, const OddCycleStructure& c,
                                   const SearchLimits& limits) {
  const int len = c.length();
  if (len % 2 == 0 || c.s * 2 + 1 != len || !is_induced_cycle(g, c.cycle) ||
      !is_nonseparating(g, c.cycle))
    throw Error(ErrorCode::NotShortest, "cycle is not a non-separating induced odd cycle");
  const auto shortest = shortest_nonsep_induced_odd_cycle(g, limits);
  if (!shortest || shortest->length() != len)
    throw Error(ErrorCode::NotShortest, "a shorter non-separating induced odd cycle exists");

  DichotomyResult res;
  res.hypothesis_met = g.order() > 0 && degree_profile(g).min_degree >= 4;
  if (len == 3) {
    res.kind = Dichotomy::Spade;
    return res;
  }

  std::vector<int> position(g.order(), -1);
  for (int i = 0; i < len; ++i) position[c.cycle[i]] = i;
  std::vector<Vertex> outside;
  for (int v = 0; v < g.order(); ++v)
    if (position[v] < 0) outside.push_back(v);
  auto rest = induced_subgraph(g, outside);
  std::vector<char> is_cut(g.order(), 0);
  if (rest.graph.order() > 0)
    for (Vertex v : block_cut_tree(rest.graph).cut_vertices) is_cut[rest.to_parent[v]] = 1;

  res.kind = Dichotomy::Club;
  for (Vertex v : outside) {
    if (is_cut[v]) continue;
    std::vector<int> hits;
    for (Vertex u : g.neighbors(v))
      if (position[u] >= 0) hits.push_back(position[u]);
    if (hits.size() <= 1) continue;
    bool ok = false;
    if (hits.size() == 2) {
      const int d = ((hits[1] - hits[0]) % len + len) % len;
      ok = d == 2 || d == len - 2;
    }
    if (!ok) {
      res.kind = Dichotomy::Violation;
      res.offender = v;
      return res;
    }
  }
  return res;
}

}  // namespace consec
