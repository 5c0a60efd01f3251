#include "consec/paths.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "consec/connectivity.hpp"
#include "consec/error.hpp"

namespace consec {

namespace {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

void check_endpoints(const Graph& g, Vertex x, Vertex y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw Error(ErrorCode::OutOfRange, "path endpoint not in graph");
  if (x == y) throw Error(ErrorCode::BadParams, "path endpoints must differ");
  if (!g.has_masks()) throw Error(ErrorCode::TooLarge, "path search supports at most 64 vertices");
}

bool distinct_step(const std::vector<int>& lengths, int step) {
  for (std::size_t i = 1; i < lengths.size(); ++i)
    if (lengths[i] - lengths[i - 1] != step) return false;
  return true;
}

class PathSearch {
 public:
  PathSearch(const Graph& g, Vertex y, bool skip_xy, const SearchLimits& limits)
      : g_(g), y_(y), skip_xy_(skip_xy), meter_(limits) {}

  PathLengths run(Vertex x) {
    path_.assign(1, x);
    dfs(bit(x));
    for (auto& [len, p] : out_.witness) out_.lengths.push_back(len);
    return std::move(out_);
  }

 private:
  void dfs(Mask used) {
    meter_.tick();
    const int v = path_.back();
    for (Mask c = g_.mask(v) & ~used; c; c &= c - 1) {
      const int u = std::countr_zero(c);
      if (u == y_) {
        if (skip_xy_ && path_.size() == 1) continue;
        const int len = static_cast<int>(path_.size());
        if (!out_.witness.count(len)) {
          path_.push_back(u);
          out_.witness.emplace(len, path_);
          path_.pop_back();
        }
        continue;
      }
      path_.push_back(u);
      dfs(used | bit(u));
      path_.pop_back();
    }
  }

  const Graph& g_;
  Vertex y_;
  bool skip_xy_;
  SearchMeter meter_;
  Path path_;
  PathLengths out_;
};

// Best x-y path in g - xy by number of vertices on the cycle; stops early once
// the whole cycle is covered.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, Vertex y, Mask cycle, const SearchLimits& limits)
      : g_(g), y_(y), cycle_(cycle), meter_(limits), full_(std::popcount(cycle)) {}

  std::optional<Path> run(Vertex x) {
    path_.assign(1, x);
    dfs(bit(x));
    return best_;
  }

 private:
  bool dfs(Mask used) {
    meter_.tick();
    const int v = path_.back();
    for (Mask c = g_.mask(v) & ~used; c; c &= c - 1) {
      const int u = std::countr_zero(c);
      if (u == y_) {
        if (path_.size() == 1) continue;
        const int hit = std::popcount((used | bit(u)) & cycle_);
        if (hit > best_hit_) {
          best_hit_ = hit;
          best_ = path_;
          best_->push_back(u);
          if (hit == full_) return true;
        }
        continue;
      }
      path_.push_back(u);
      const bool done = dfs(used | bit(u));
      path_.pop_back();
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  Vertex y_;
  Mask cycle_;
  SearchMeter meter_;
  int full_;
  Path path_;
  int best_hit_ = -1;
  std::optional<Path> best_;
};

}  // namespace

int PathFamily::step() const {
  switch (kind) {
    case FamilyKind::AdmissibleStep1:
    case FamilyKind::Consecutive:
      return 1;
    case FamilyKind::AdmissibleStep2:
      return 2;
    case FamilyKind::Unclassified:
      return 0;
  }
  return 0;
}

PathFamily make_family(Vertex x, Vertex y, std::vector<Path> paths) {
  PathFamily f;
  f.x = x;
  f.y = y;
  std::stable_sort(paths.begin(), paths.end(),
                   [](const Path& a, const Path& b) { return a.size() < b.size(); });
  for (const auto& p : paths) f.lengths.push_back(path_length(p));
  f.paths = std::move(paths);
  const bool distinct = std::adjacent_find(f.lengths.begin(), f.lengths.end()) == f.lengths.end();
  if (f.paths.empty() || !distinct) {
    f.kind = FamilyKind::Unclassified;
  } else if (f.lengths.front() >= 2 && distinct_step(f.lengths, 1)) {
    f.kind = FamilyKind::AdmissibleStep1;
  } else if (f.lengths.front() >= 2 && distinct_step(f.lengths, 2)) {
    f.kind = FamilyKind::AdmissibleStep2;
  } else if (distinct_step(f.lengths, 1)) {
    f.kind = FamilyKind::Consecutive;
  } else {
    f.kind = FamilyKind::Unclassified;
  }
  return f;
}

PathLengths xy_path_lengths(const Graph& g, Vertex x, Vertex y, const SearchLimits& limits,
                            bool skip_edge_xy) {
  check_endpoints(g, x, y);
  return PathSearch(g, y, skip_edge_xy, limits).run(x);
}

PathFamily admissible_family_from(const PathLengths& table, Vertex x, Vertex y) {
  std::vector<int> usable;
  for (int l : table.lengths)
    if (l >= 2) usable.push_back(l);
  const std::set<int> present(usable.begin(), usable.end());

  int best_len = 0, best_start = 0, best_step = 1;
  for (int step : {1, 2}) {
    for (int start : usable) {
      if (present.count(start - step)) continue;  // not the start of a maximal run
      int len = 0;
      while (present.count(start + len * step)) ++len;
      if (len > best_len) {
        best_len = len;
        best_start = start;
        best_step = step;
      }
    }
  }
  PathFamily f;
  f.x = x;
  f.y = y;
  for (int i = 0; i < best_len; ++i) {
    const int l = best_start + i * best_step;
    f.lengths.push_back(l);
    f.paths.push_back(table.witness.at(l));
  }
  if (best_len == 0) f.kind = FamilyKind::Unclassified;
  else f.kind = best_step == 1 ? FamilyKind::AdmissibleStep1 : FamilyKind::AdmissibleStep2;
  return f;
}

PathFamily max_admissible_family(const Graph& g, Vertex x, Vertex y, bool forbid_edge_xy,
                                 const SearchLimits& limits) {
  return admissible_family_from(xy_path_lengths(g, x, y, limits, forbid_edge_xy), x, y);
}

ParityPair odd_even_paths(const Graph& g, Vertex x, Vertex y, const SearchLimits& limits) {
  check_endpoints(g, x, y);
  if (!is_two_connected(g.with_edge(x, y)))
    throw Error(ErrorCode::HypothesisFailed, "g + xy is not 2-connected");
  const Bipartition bp = bipartition_or_odd_cycle(g);
  if (bp.bipartite()) throw Error(ErrorCode::HypothesisFailed, "graph is bipartite");
  const Cycle& c = *bp.odd_cycle;

  Mask on_cycle = 0;
  std::vector<int> position(g.order(), -1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    on_cycle |= bit(c[i]);
    position[c[i]] = static_cast<int>(i);
  }
  const auto p = CoverSearch(g, y, on_cycle, limits).run(x);
  if (!p) throw Error(ErrorCode::NotFound, "no x-y path avoiding the edge xy");

  std::size_t first = p->size(), last = 0;
  for (std::size_t i = 0; i < p->size(); ++i)
    if (position[(*p)[i]] >= 0) {
      first = std::min(first, i);
      last = i;
    }
  if (first >= last)
    throw Error(ErrorCode::NotFound, "best x-y path meets the odd cycle in fewer than two vertices");

  const int len = static_cast<int>(c.size());
  const int a = position[(*p)[first]], b = position[(*p)[last]];
  auto route = [&](int dir) {
    Path out(p->begin(), p->begin() + static_cast<std::ptrdiff_t>(first) + 1);
    for (int i = (a + dir + len) % len; i != b; i = (i + dir + len) % len) out.push_back(c[i]);
    out.insert(out.end(), p->begin() + static_cast<std::ptrdiff_t>(last), p->end());
    return out;
  };
  Path forward = route(1), backward = route(-1);
  if (path_length(forward) % 2 == 0) std::swap(forward, backward);
  ParityPair pair{std::move(forward), std::move(backward)};
  if (!is_valid_path(g, pair.odd_path) || !is_valid_path(g, pair.even_path) ||
      path_length(pair.odd_path) % 2 != 1 || path_length(pair.even_path) % 2 != 0)
    throw Error(ErrorCode::NotFound, "rerouted paths failed validation");
  return pair;
}

int sumset_run(std::span<const int> a, std::span<const int> b) {
  std::set<int> sums;
  for (int x : a)
    for (int y : b) sums.insert(x + y);
  int best = 0, cur = 0, prev = 0;
  for (int v : sums) {
    cur = (cur > 0 && v == prev + 1) ? cur + 1 : 1;
    best = std::max(best, cur);
    prev = v;
  }
  return best;
}

int merge_guarantee(int s, int t, int step) {
  return step == 2 ? s + 2 * (t - 1) : s + t - 1;
}

MergeResult merge_families(const Graph& g, const PathFamily& consecutive,
                           const PathFamily& admissible, std::optional<std::span<const Vertex>> w) {
  const int s = static_cast<int>(consecutive.size());
  const int t = static_cast<int>(admissible.size());
  auto sorted_lengths = [](const PathFamily& f) {
    std::vector<int> l;
    for (const auto& p : f.paths) l.push_back(path_length(p));
    std::sort(l.begin(), l.end());
    return l;
  };
  const auto a_len = sorted_lengths(consecutive);
  const auto b_len = sorted_lengths(admissible);
  if (s < 2 || !distinct_step(a_len, 1))
    throw Error(ErrorCode::NotConsecutive, "first family needs s >= 2 paths with lengths stepping by 1");
  int step = 0;
  if (t >= 1 && b_len.front() >= 2) {
    if (t == 1 || distinct_step(b_len, 1)) step = 1;
    else if (distinct_step(b_len, 2)) step = 2;
  }
  if (step == 0) throw Error(ErrorCode::NotAdmissible, "second family is not admissible");
  if (admissible.x != consecutive.y)
    throw Error(ErrorCode::BadParams, "families do not meet at a common endpoint");

  const Vertex x = consecutive.x, y = consecutive.y, z = admissible.y;
  const bool closed = z == x;
  for (const auto& p : consecutive.paths)
    if (p.front() != x || p.back() != y || !is_valid_path(g, p))
      throw Error(ErrorCode::NotConsecutive, "first family contains an invalid x-y path");
  for (const auto& q : admissible.paths)
    if (q.front() != y || q.back() != z || !is_valid_path(g, q))
      throw Error(ErrorCode::NotAdmissible, "second family contains an invalid y-z path");

  std::vector<char> in_w(g.order(), 0);
  if (w) {
    for (Vertex v : *w) in_w.at(v) = 1;
  } else {
    for (const auto& p : consecutive.paths)
      for (Vertex v : p) in_w[v] = 1;
  }
  for (const auto& p : consecutive.paths)
    for (Vertex v : p)
      if (!in_w[v]) throw Error(ErrorCode::OverlapViolation, "first family leaves W");
  if (!in_w[y]) throw Error(ErrorCode::OverlapViolation, "y must lie in W");
  if (!closed && in_w[z]) throw Error(ErrorCode::OverlapViolation, "z must lie outside W");
  for (const auto& q : admissible.paths)
    for (std::size_t i = 1; i < q.size(); ++i) {
      if (closed && i + 1 == q.size()) continue;
      if (in_w[q[i]])
        throw Error(ErrorCode::OverlapViolation,
                    "vertex " + std::to_string(q[i]) + " shared outside the joint");
    }

  // lexicographically smallest (i, j) per total length
  std::map<int, std::pair<std::size_t, std::size_t>> by_len;
  for (std::size_t i = 0; i < consecutive.paths.size(); ++i)
    for (std::size_t j = 0; j < admissible.paths.size(); ++j) {
      const int len = path_length(consecutive.paths[i]) + path_length(admissible.paths[j]);
      by_len.try_emplace(len, i, j);
    }
  int best_start = 0, best_len = 0, cur_start = 0, cur_len = 0, prev = 0;
  for (const auto& [len, ij] : by_len) {
    if (cur_len > 0 && len == prev + 1) {
      ++cur_len;
    } else {
      cur_start = len;
      cur_len = 1;
    }
    if (cur_len > best_len) {
      best_len = cur_len;
      best_start = cur_start;
    }
    prev = len;
  }

  MergeResult out;
  out.closed = closed;
  out.run_length = best_len;
  out.guaranteed = merge_guarantee(s, t, step);
  for (int len = best_start; len < best_start + best_len; ++len) {
    auto [i, j] = by_len.at(len);
    Path joined = consecutive.paths[i];
    const auto& q = admissible.paths[j];
    joined.insert(joined.end(), q.begin() + 1, closed ? q.end() - 1 : q.end());
    out.members.push_back(std::move(joined));
    out.lengths.push_back(len);
  }
  return out;
}

}  // namespace consec
