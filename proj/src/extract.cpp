#include <algorithm>
#include <map>
#include <queue>

#include "consec/error.hpp"
#include "consec/theorems.hpp"

namespace consec {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ConstructionFailed, what); }

Path lift(const Path& p, const std::vector<Vertex>& to_parent) {
  Path out;
  out.reserve(p.size());
  for (Vertex v : p) out.push_back(to_parent[v]);
  return out;
}

Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<Path> lift_all(const std::vector<Path>& ps, const std::vector<Vertex>& to_parent, bool reverse) {
  std::vector<Path> out;
  for (const auto& p : ps) {
    Path q = lift(p, to_parent);
    if (reverse) std::reverse(q.begin(), q.end());
    out.push_back(std::move(q));
  }
  return out;
}

/// BFS path from `from` to `to` using only vertices flagged in `allowed`.
std::optional<Path> bfs_path(const Graph& g, Vertex from, Vertex to, const std::vector<char>& allowed) {
  if (from == to) return Path{from};
  std::vector<Vertex> parent(g.order(), -1);
  std::queue<Vertex> q;
  parent[from] = from;
  q.push(from);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (!allowed[u] || parent[u] >= 0) continue;
      parent[u] = v;
      if (u == to) {
        Path p{to};
        for (Vertex w = to; w != from;) p.push_back(w = parent[w]);
        std::reverse(p.begin(), p.end());
        return p;
      }
      q.push(u);
    }
  }
  return std::nullopt;
}

Cycle glue(const std::vector<Path>& segments) {
  Cycle c;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Path& s = segments[i];
    const Path& next = segments[(i + 1) % segments.size()];
    if (s.empty() || next.empty() || s.back() != next.front())
      throw Error(ErrorCode::ConstructionFailed, "segments do not chain");
    c.insert(c.end(), s.begin(), s.end() - 1);
  }
  return c;
}

/// A cycle as a closed walk plus the trivial path at its start.
std::vector<Path> closed_segments(const Cycle& c) {
  Path closed(c.begin(), c.end());
  closed.push_back(c.front());
  return {closed, Path{c.front()}};
}

/// One path from each family, glued into a cycle; selects the longest run of
/// consecutive (or consecutive odd) total lengths, lexicographically smallest
/// index choice per length.
struct Composed {
  std::vector<std::vector<Path>> segments;
  std::vector<Cycle> cycles;
  std::vector<int> lengths;
};

Composed compose(const Graph& g, const std::vector<std::vector<Path>>& families, bool odd_only) {
  for (const auto& f : families)
    if (f.empty()) fail("empty path family");
  std::map<int, std::vector<std::size_t>> by_len;
  std::vector<std::size_t> idx(families.size(), 0);
  while (true) {
    int total = 0;
    for (std::size_t f = 0; f < families.size(); ++f) total += path_length(families[f][idx[f]]);
    if (!odd_only || total % 2 == 1) by_len.try_emplace(total, idx);
    std::size_t f = families.size();
    while (f > 0) {
      --f;
      if (++idx[f] < families[f].size()) break;
      idx[f] = 0;
      if (f == 0) {
        f = families.size();
        break;
      }
    }
    if (f == families.size()) break;
  }

  const int step = odd_only ? 2 : 1;
  int best_start = 0, best_len = 0, cur_start = 0, cur_len = 0, prev = 0;
  for (const auto& [len, choice] : by_len) {
    if (cur_len > 0 && len == prev + step) {
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

  Composed out;
  for (int i = 0; i < best_len; ++i) {
    const int len = best_start + i * step;
    const auto& choice = by_len.at(len);
    std::vector<Path> segs;
    for (std::size_t f = 0; f < families.size(); ++f) segs.push_back(families[f][choice[f]]);
    Cycle c = glue(segs);
    if (static_cast<int>(c.size()) != len || !is_valid_cycle(g, c))
      fail("glued cycle of length " + std::to_string(len) + " is not a cycle of the graph");
    out.segments.push_back(std::move(segs));
    out.cycles.push_back(std::move(c));
    out.lengths.push_back(len);
  }
  return out;
}

Extraction finish(Composed composed, ExtractionTrace trace) {
  Extraction ex;
  ex.cycles = std::move(composed.cycles);
  ex.lengths = std::move(composed.lengths);
  trace.cycle_segments = std::move(composed.segments);
  ex.trace = std::move(trace);
  return ex;
}

// Triangle-free construction around the shortest non-separating induced odd
// cycle C = v_0 .. v_{2s}; `rest` is g - V(C).
class ThreeConnBuilder {
 public:
  ThreeConnBuilder(const Graph& g, int k, const OddCycleStructure& c, const CheckOptions& options,
                   ExtractionTrace& trace)
      : g_(g), k_(k), c_(c), len_(c.length()), options_(options), trace_(trace) {
    position_.assign(g.order(), -1);
    for (int i = 0; i < len_; ++i) position_[c.cycle[i]] = i;
    std::vector<Vertex> outside;
    for (int v = 0; v < g.order(); ++v)
      if (position_[v] < 0) outside.push_back(v);
    rest_ = induced_subgraph(g, outside);
  }

  Extraction run() {
    if (rest_.graph.order() == 0) fail("removing the odd cycle leaves nothing");
    const bool rest_2conn = is_two_connected(rest_.graph);
    const BlockCutTree tree = block_cut_tree(rest_.graph);

    // Candidate blocks for the two-neighbour construction.
    std::vector<std::pair<std::vector<Vertex>, std::optional<Vertex>>> candidates;
    if (rest_2conn) {
      candidates.emplace_back(rest_.to_parent, std::nullopt);
    } else {
      for (std::size_t b : tree.end_blocks()) {
        std::vector<Vertex> vs;
        for (Vertex v : tree.blocks[b].vertices) vs.push_back(rest_.to_parent[v]);
        auto cut = tree.end_block_cut_vertex(b);
        candidates.emplace_back(std::move(vs), cut ? std::optional<Vertex>(rest_.to_parent[*cut]) : std::nullopt);
      }
    }
    for (const auto& [block, cut] : candidates)
      for (Vertex v : block) {
        if (cut && v == *cut) continue;
        if (cycle_neighbors(v).size() == 2) return two_neighbor(block, cut, v);
      }

    if (rest_2conn) return remainder_two_connected();
    return remainder_separable(tree);
  }

 private:
  Vertex cyc(int i) const { return c_.cycle[((i % len_) + len_) % len_]; }

  std::vector<int> cycle_neighbors(Vertex v) const {
    std::vector<int> out;
    for (Vertex u : g_.neighbors(v))
      if (position_[u] >= 0) out.push_back(position_[u]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Arc of C from index a to index b walking in direction dir (+1 or -1).
  Path arc(int a, int b, int dir) const {
    Path p{cyc(a)};
    for (int i = a; ((i - b) % len_ + len_) % len_ != 0;) {
      i += dir;
      p.push_back(cyc(i));
    }
    return p;
  }

  PathFamily family_in(const std::vector<Vertex>& vertices, Vertex from, Vertex to, const std::string& label,
                       std::size_t needed) {
    auto sub = induced_subgraph(g_, vertices);
    PathFamily f = max_admissible_family(sub.graph, sub.from_parent[from], sub.from_parent[to], true,
                                         options_.limits);
    trace_.searched_steps.push_back(label);
    if (f.size() < needed)
      fail(label + ": found " + std::to_string(f.size()) + " admissible paths, need " + std::to_string(needed));
    f.paths = lift_all(f.paths, sub.to_parent, false);
    f.x = from;
    f.y = to;
    return f;
  }

  Extraction done(Composed composed, const std::string& label) {
    if (static_cast<int>(composed.lengths.size()) < k_)
      fail(label + ": run of " + std::to_string(composed.lengths.size()) + " consecutive lengths < " +
           std::to_string(k_));
    return finish(std::move(composed), trace_);
  }

  // v outside C sees exactly {v_{i}, v_{i+2}}; four v-u paths through C of
  // lengths s+1 .. s+4 merged with k-3 admissible u-v paths in the remainder.
  Extraction two_neighbor(const std::vector<Vertex>& block, std::optional<Vertex> cut, Vertex v) {
    trace_.proof_path.push_back("two-neighbour vertex in end-block");
    const auto hits = cycle_neighbors(v);
    const int d = hits[1] - hits[0];
    const int mid = d == 2 ? hits[0] + 1 : hits[1] + 1;  // the skipped vertex
    const int s = c_.s;
    auto w = [&](int t) { return mid + t; };  // index of w_t on C
    Vertex u = -1;
    for (Vertex cand : g_.neighbors(cyc(w(s))))
      if (position_[cand] < 0 && cand != v) {
        u = cand;
        break;
      }
    if (u < 0) fail("no second remainder neighbour of the antipodal cycle vertex");

    auto through = [&](std::vector<Path> parts) {
      Path p{v};
      for (const auto& part : parts) p.insert(p.end(), part.begin(), part.end());
      p.push_back(u);
      return p;
    };
    std::vector<Path> around = {
        through({arc(w(1), w(s), +1)}),
        through({arc(w(-1), w(s), -1)}),
        through({arc(w(-1), w(0), +1), arc(w(1), w(s), +1)}),
        through({arc(w(1), w(0), -1), arc(w(-1), w(s), -1)}),
    };
    trace_.objects.emplace_back("C", c_.cycle);
    trace_.objects.emplace_back("B", block);
    if (cut) trace_.objects.emplace_back("x", std::vector<Vertex>{*cut});
    trace_.objects.emplace_back("v", std::vector<Vertex>{v});
    trace_.objects.emplace_back("u", std::vector<Vertex>{u});

    const std::size_t needed = static_cast<std::size_t>(k_ - 3);
    const bool u_in_block = std::find(block.begin(), block.end(), u) != block.end();
    std::vector<std::vector<Path>> families{around};
    if (!cut || u_in_block) {
      trace_.proof_path.push_back(cut ? "u inside end-block" : "remainder 2-connected");
      PathFamily f = family_in(block, u, v, "admissible u-v paths in B (exempt cut vertex)", needed);
      families.push_back(f.paths);
    } else {
      trace_.proof_path.push_back("u outside end-block");
      std::vector<char> allowed(g_.order(), 0);
      for (Vertex r : rest_.to_parent) allowed[r] = 1;
      for (Vertex b : block)
        if (b != *cut) allowed[b] = 0;
      auto t = bfs_path(g_, u, *cut, allowed);
      if (!t) fail("no u-x path avoiding the end-block");
      trace_.objects.emplace_back("T_ux", *t);
      PathFamily f = family_in(block, *cut, v, "admissible x-v paths in B", needed);
      families.push_back({*t});
      families.push_back(f.paths);
    }
    return done(compose(g_, families, false), "two-neighbour merge");
  }

  // Remainder 2-connected and every remainder vertex sees at most one C vertex.
  Extraction remainder_two_connected() {
    trace_.proof_path.push_back("remainder 2-connected");
    const int s = c_.s;
    auto first_outside = [&](Vertex on_cycle, Vertex avoid) {
      for (Vertex cand : g_.neighbors(on_cycle))
        if (position_[cand] < 0 && cand != avoid) return cand;
      return -1;
    };
    const Vertex v = first_outside(cyc(0), -1);
    const Vertex u = first_outside(cyc(s - 1), v);
    if (v < 0 || u < 0) fail("cycle vertices lack remainder neighbours");
    Path q1{v};
    for (Vertex a : arc(0, s - 1, +1)) q1.push_back(a);
    q1.push_back(u);
    Path q2{v};
    for (Vertex a : arc(0, s - 1, -1)) q2.push_back(a);
    q2.push_back(u);
    trace_.objects.emplace_back("C", c_.cycle);
    trace_.objects.emplace_back("v", std::vector<Vertex>{v});
    trace_.objects.emplace_back("u", std::vector<Vertex>{u});
    trace_.objects.emplace_back("Q1", q1);
    trace_.objects.emplace_back("Q2", q2);
    PathFamily f = family_in(rest_.to_parent, u, v, "admissible u-v paths in remainder",
                             static_cast<std::size_t>(k_ - 2));
    trace_.proof_path.push_back(f.step() == 2 ? "step-2 family" : "step-1 family");
    return done(compose(g_, {{q1, q2}, f.paths}, false), "remainder 2-connected");
  }

  Extraction remainder_separable(const BlockCutTree& tree) {
    trace_.proof_path.push_back("remainder separable");
    const auto ends = tree.end_blocks();
    if (ends.size() < 2) fail("separable remainder with fewer than two end-blocks");
    auto block_vertices = [&](std::size_t b) {
      std::vector<Vertex> vs;
      for (Vertex v : tree.blocks[b].vertices) vs.push_back(rest_.to_parent[v]);
      return vs;
    };
    const std::size_t d1 = ends[0];
    const Vertex x = rest_.to_parent[*tree.end_block_cut_vertex(d1)];
    const auto d1_vertices = block_vertices(d1);
    std::vector<Vertex> a_side, g2;
    std::vector<char> in_a(g_.order(), 0);
    for (Vertex v : d1_vertices)
      if (v != x) {
        a_side.push_back(v);
        in_a[v] = 1;
      }
    for (Vertex v : rest_.to_parent)
      if (!in_a[v]) g2.push_back(v);

    int i = 0;
    try {
      i = find_quasi_diagonal_index(g_, c_, a_side, g2);
    } catch (const Error& e) {
      fail(std::string("quasi-diagonal index: ") + e.what());
    }
    const int s = c_.s;
    auto first_in = [&](Vertex on_cycle, const std::vector<Vertex>& set) {
      for (Vertex cand : g_.neighbors(on_cycle))
        if (std::binary_search(set.begin(), set.end(), cand)) return cand;
      return -1;
    };
    const Vertex v = first_in(cyc(i), a_side);
    const Vertex u = first_in(cyc(i + s), g2);
    trace_.objects.emplace_back("C", c_.cycle);
    trace_.objects.emplace_back("D1", d1_vertices);
    trace_.objects.emplace_back("x", std::vector<Vertex>{x});
    trace_.objects.emplace_back("G2", g2);
    trace_.objects.emplace_back("i", std::vector<Vertex>{i});
    trace_.objects.emplace_back("v", std::vector<Vertex>{v});
    trace_.objects.emplace_back("u", std::vector<Vertex>{u});

    PathFamily p = family_in(d1_vertices, x, v, "admissible x-v paths in D1", static_cast<std::size_t>(k_ - 2));

    if (p.step() == 2) {
      trace_.proof_path.push_back("D1 family steps by two");
      Path q1{v}, q2{v};
      for (Vertex a : arc(i, i + s, +1)) q1.push_back(a);
      for (Vertex a : arc(i, i + s, -1)) q2.push_back(a);
      q1.push_back(u);
      q2.push_back(u);
      std::vector<char> allowed(g_.order(), 0);
      for (Vertex w : g2) allowed[w] = 1;
      auto t = bfs_path(g_, u, x, allowed);
      if (!t) fail("no u-x path inside G2");
      trace_.objects.emplace_back("T", *t);
      return done(compose(g_, {{q1, q2}, {*t}, p.paths}, false), "D1 step-2 merge");
    }

    trace_.proof_path.push_back("D1 family steps by one");
    const std::size_t d2 = ends[1];
    const Vertex y = rest_.to_parent[*tree.end_block_cut_vertex(d2)];
    const auto d2_vertices = block_vertices(d2);
    trace_.objects.emplace_back("D2", d2_vertices);
    trace_.objects.emplace_back("y", std::vector<Vertex>{y});

    std::vector<char> allowed(g_.order(), 0);
    for (Vertex r : rest_.to_parent) allowed[r] = 1;
    for (Vertex b : d1_vertices)
      if (b != x) allowed[b] = 0;
    for (Vertex b : d2_vertices)
      if (b != y) allowed[b] = 0;
    auto pxy = bfs_path(g_, x, y, allowed);
    trace_.searched_steps.push_back("x-y connector avoiding D1 and D2 edges");
    if (!pxy) fail("no x-y path avoiding the edges of D1 and D2");
    trace_.objects.emplace_back("P_xy", *pxy);

    Vertex z = -1;
    int w_index = -1;
    for (Vertex cand : d2_vertices) {
      if (cand == y) continue;
      const auto hits = cycle_neighbors(cand);
      if (!hits.empty()) {
        z = cand;
        w_index = hits.front();
        break;
      }
    }
    if (z < 0) fail("no vertex of D2 - y adjacent to the cycle");
    Path pvz{v};
    for (Vertex a : arc(i, w_index, +1)) pvz.push_back(a);
    pvz.push_back(z);
    trace_.objects.emplace_back("z", std::vector<Vertex>{z});
    trace_.objects.emplace_back("P_vz", pvz);

    PathFamily p2 = family_in(d2_vertices, z, y, "admissible z-y paths in D2", static_cast<std::size_t>(k_ - 2));
    return done(compose(g_, {p.paths, {pvz}, p2.paths, {reversed(*pxy)}}, false), "two end-block merge");
  }

  const Graph& g_;
  int k_;
  const OddCycleStructure& c_;
  int len_;
  const CheckOptions& options_;
  ExtractionTrace& trace_;
  std::vector<int> position_;
  InducedSubgraph rest_;
};

}  // namespace

std::vector<Cycle> replay(const ExtractionTrace& trace) {
  std::vector<Cycle> out;
  for (const auto& segs : trace.cycle_segments) out.push_back(glue(segs));
  return out;
}

int find_quasi_diagonal_index(const Graph& g, const OddCycleStructure& c, std::span<const Vertex> d1_minus_x,
                              std::span<const Vertex> g2) {
  if (d1_minus_x.empty() || g2.empty())
    throw Error(ErrorCode::BadParams, "quasi-diagonal search needs non-empty D1 - x and G2");
  std::vector<char> in_a(g.order(), 0), in_b(g.order(), 0);
  for (Vertex v : d1_minus_x) in_a.at(v) = 1;
  for (Vertex v : g2) in_b.at(v) = 1;
  auto meets = [&](Vertex v, const std::vector<char>& set) {
    for (Vertex u : g.neighbors(v))
      if (set[u]) return true;
    return false;
  };
  const int len = c.length();
  for (int i = 0; i < len; ++i)
    if (meets(c.cycle[i], in_a) && meets(c.cycle[(i + c.s) % len], in_b)) return i;
  throw Error(ErrorCode::NotFound, "no quasi-diagonal index");
}

Extraction extract_case1(const Graph& g, int k, const CheckOptions& options) {
  if (k < 1) throw Error(ErrorCode::HypothesisFailed, "k must be at least 1");
  if (g.order() == 0 || degree_profile(g).min_degree < k + 1)
    throw Error(ErrorCode::HypothesisFailed, "minimum degree below k+1");
  if (!is_two_connected(g)) throw Error(ErrorCode::HypothesisFailed, "graph is not 2-connected");
  if (is_three_connected(g)) throw Error(ErrorCode::HypothesisFailed, "graph is 3-connected");
  const Bipartition whole = bipartition_or_odd_cycle(g);
  if (whole.bipartite()) throw Error(ErrorCode::HypothesisFailed, "graph is bipartite");

  const int needed = (k + 1) / 2;
  ExtractionTrace trace;
  const auto cut = two_cut_witness(g);
  if (!cut) {
    // Only the triangle is 2-connected, not 3-connected, and has no separating pair.
    trace.proof_path.push_back("no separating pair (triangle)");
    if (needed > 1) fail("triangle cannot carry more than one odd cycle");
    Composed single;
    single.cycles = {*whole.odd_cycle};
    single.lengths = {static_cast<int>(whole.odd_cycle->size())};
    single.segments = {closed_segments(*whole.odd_cycle)};
    return finish(std::move(single), std::move(trace));
  }
  const auto [x, y] = *cut;
  trace.proof_path.push_back("separating pair");
  trace.objects.emplace_back("x,y", std::vector<Vertex>{x, y});

  const std::array<Vertex, 2> removed{x, y};
  const auto comps = components_without(g, removed);
  std::vector<Vertex> side1 = comps.front();
  side1.push_back(x);
  side1.push_back(y);
  std::sort(side1.begin(), side1.end());
  std::vector<Vertex> side2;
  for (int v = 0; v < g.order(); ++v)
    if (!std::binary_search(comps.front().begin(), comps.front().end(), v)) side2.push_back(v);
  trace.objects.emplace_back("G1", side1);
  trace.objects.emplace_back("G2", side2);

  InducedSubgraph g1 = induced_subgraph(g, side1);
  InducedSubgraph g2 = induced_subgraph(g, side2);
  const bool bip1 = is_bipartite(g1.graph), bip2 = is_bipartite(g2.graph);

  auto admissible_in = [&](const InducedSubgraph& side, const std::string& label) {
    PathFamily f = max_admissible_family(side.graph, side.from_parent[x], side.from_parent[y], true, options.limits);
    trace.searched_steps.push_back(label);
    if (f.size() < static_cast<std::size_t>(k))
      fail(label + ": found " + std::to_string(f.size()) + " admissible paths, need " + std::to_string(k));
    f.paths = lift_all(f.paths, side.to_parent, false);
    return f;
  };

  if (!bip1 || !bip2) {
    const bool first_odd = !bip1;
    const InducedSubgraph& odd_side = first_odd ? g1 : g2;
    const InducedSubgraph& other = first_odd ? g2 : g1;
    trace.proof_path.push_back(first_odd ? "G1 non-bipartite" : "G2 non-bipartite");
    ParityPair pp;
    try {
      pp = odd_even_paths(odd_side.graph, odd_side.from_parent[x], odd_side.from_parent[y], options.limits);
    } catch (const Error& e) {
      fail(std::string("odd/even pair on the non-bipartite side: ") + e.what());
    }
    const Path odd = lift(pp.odd_path, odd_side.to_parent);
    const Path even = lift(pp.even_path, odd_side.to_parent);
    trace.objects.emplace_back("P_o", odd);
    trace.objects.emplace_back("P_e", even);
    PathFamily f = admissible_in(other, "admissible x-y paths in the other side");
    const bool first_is_odd = f.lengths.front() % 2 == 1;
    trace.proof_path.push_back(first_is_odd ? "shortest admissible path odd: pair with P_e"
                                            : "shortest admissible path even: pair with P_o");
    std::vector<Path> back;
    for (const auto& p : f.paths) back.push_back(reversed(p));
    Composed composed = compose(g, {{first_is_odd ? even : odd}, back}, true);
    if (static_cast<int>(composed.lengths.size()) < needed)
      fail("odd run " + std::to_string(composed.lengths.size()) + " < " + std::to_string(needed));
    return finish(std::move(composed), std::move(trace));
  }

  trace.proof_path.push_back("both sides bipartite");
  auto same_part = [&](const InducedSubgraph& side) {
    const Bipartition b = bipartition_or_odd_cycle(side.graph);
    const Vertex sx = side.from_parent[x], sy = side.from_parent[y];
    const bool x_in_a = std::binary_search(b.part_a.begin(), b.part_a.end(), sx);
    const bool y_in_a = std::binary_search(b.part_a.begin(), b.part_a.end(), sy);
    return x_in_a == y_in_a;
  };
  const bool same1 = same_part(g1), same2 = same_part(g2);
  if (same1 == same2) fail("both sides place x, y alike; the whole graph would be bipartite");
  const InducedSubgraph& even_side = same1 ? g1 : g2;
  const InducedSubgraph& odd_side = same1 ? g2 : g1;
  trace.proof_path.push_back(same1 ? "x,y same part in G1, distinct parts in G2"
                                   : "x,y same part in G2, distinct parts in G1");
  std::vector<char> allowed(g.order(), 0);
  for (Vertex v : even_side.to_parent) allowed[v] = 1;
  auto p = bfs_path(g, x, y, allowed);
  if (!p) fail("no x-y path in the even side");
  trace.objects.emplace_back("P", *p);
  PathFamily f = admissible_in(odd_side, "admissible x-y paths in the odd side");
  std::vector<Path> back;
  for (const auto& q : f.paths) back.push_back(reversed(q));
  Composed composed = compose(g, {{*p}, back}, true);
  if (static_cast<int>(composed.lengths.size()) < needed)
    fail("odd run " + std::to_string(composed.lengths.size()) + " < " + std::to_string(needed));
  return finish(std::move(composed), std::move(trace));
}

Extraction extract_3conn(const Graph& g, int k, const CheckOptions& options) {
  if (k < 6) throw Error(ErrorCode::HypothesisFailed, "construction requires k >= 6");
  CheckContext ctx(g, options);
  if (g.order() == 0 || ctx.min_degree() < k) throw Error(ErrorCode::HypothesisFailed, "minimum degree below k");
  if (ctx.is_complete_of_order(k + 1)) throw Error(ErrorCode::HypothesisFailed, "graph is the exceptional K_{k+1}");
  if (!ctx.three_connected()) throw Error(ErrorCode::HypothesisFailed, "graph is not 3-connected");
  if (ctx.bipartite()) throw Error(ErrorCode::HypothesisFailed, "graph is bipartite");

  ExtractionTrace trace;
  if (ctx.has_triangle()) {
    trace.proof_path.push_back("triangle present (statement-level)");
    trace.searched_steps.push_back("k consecutive cycles located in the cycle spectrum");
    const RunStats& st = ctx.stats();
    if (st.max_run < k)
      fail("graph with a triangle has longest consecutive run " + std::to_string(st.max_run));
    Composed composed;
    for (int len : st.run) {
      const Cycle& c = ctx.spectrum().witness.at(len);
      composed.cycles.push_back(c);
      composed.lengths.push_back(len);
      composed.segments.push_back(closed_segments(c));
    }
    return finish(std::move(composed), std::move(trace));
  }

  trace.proof_path.push_back("triangle-free");
  const auto c = shortest_nonsep_induced_odd_cycle(g, options.limits);
  if (!c) fail("no non-separating induced odd cycle");
  const DichotomyResult d = classify_dichotomy(g, *c, options.limits);
  if (d.kind == Dichotomy::Violation)
    fail("shortest non-separating induced odd cycle breaks the club pattern at vertex " +
         std::to_string(*d.offender));
  trace.proof_path.push_back("club cycle of length " + std::to_string(c->length()));
  return ThreeConnBuilder(g, k, *c, options, trace).run();
}

Extraction extract_around_cycle(const Graph& g, int k, const OddCycleStructure& c, const CheckOptions& options) {
  if (k < 3) throw Error(ErrorCode::BadParams, "construction needs k >= 3");
  if (c.length() < 5 || c.length() != 2 * c.s + 1) throw Error(ErrorCode::BadParams, "cycle must be odd of length >= 5");
  const DichotomyResult d = classify_dichotomy(g, c, options.limits);
  if (d.kind != Dichotomy::Club) throw Error(ErrorCode::HypothesisFailed, "cycle does not have the club pattern");
  ExtractionTrace trace;
  trace.proof_path.push_back("club cycle of length " + std::to_string(c.length()));
  return ThreeConnBuilder(g, k, c, options, trace).run();
}

}  // namespace consec
