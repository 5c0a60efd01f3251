#include <gtest/gtest.h>

#include <map>

#include "consec/connectivity.hpp"
#include "consec/cycles.hpp"
#include "consec/error.hpp"
#include "consec/theorems.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace consec;

namespace {

std::set<int> forced_spectrum(const Graph& g) {
  SpectrumOptions opt;
  opt.force_large = true;
  opt.limits.node_budget = 200'000'000;
  const auto s = cycle_spectrum(g, opt);
  return {s.lengths.begin(), s.lengths.end()};
}

void expect_sound(const Graph& g, const Extraction& ex, int step, const std::set<int>& spectrum) {
  ASSERT_EQ(ex.cycles.size(), ex.lengths.size());
  for (std::size_t i = 0; i < ex.cycles.size(); ++i) {
    EXPECT_TRUE(is_valid_cycle(g, ex.cycles[i]));
    EXPECT_EQ(static_cast<int>(ex.cycles[i].size()), ex.lengths[i]);
    EXPECT_TRUE(spectrum.count(ex.lengths[i])) << ex.lengths[i];
    if (i > 0) EXPECT_EQ(ex.lengths[i] - ex.lengths[i - 1], step);
    if (step == 2) EXPECT_EQ(ex.lengths[i] % 2, 1);
  }
  EXPECT_EQ(replay(ex.trace), ex.cycles);
  EXPECT_FALSE(ex.trace.proof_path.empty());
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += "[" + p + "]";
  return out;
}

}  // namespace

TEST(ExtractCase1, GluedCliques) {
  const Graph g = fixture::glued_cliques(5);
  const auto spectrum = oracle::cycle_lengths(g);
  for (int k = 1; k <= 3; ++k) {
    const Extraction ex = extract_case1(g, k, {});
    EXPECT_GE(static_cast<int>(ex.lengths.size()), (k + 1) / 2);
    expect_sound(g, ex, 2, spectrum);
  }
  EXPECT_THROW(extract_case1(g, 4, {}), Error);
}

TEST(ExtractCase1, BookOfTwoK4) {
  const Graph g = fixture::glued_cliques(4);
  const Extraction ex = extract_case1(g, 2, {});
  EXPECT_GE(ex.lengths.size(), 1u);
  expect_sound(g, ex, 2, oracle::cycle_lengths(g));
}

TEST(ExtractCase1, AgreesWithSpectrumOnSmallCatalogue) {
  std::mt19937_64 rng(41);
  int built = 0;
  for (int trial = 0; trial < 4000 && built < 150; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(n, 0.55 + 0.3 * (rng() % 100) / 100.0, rng);
    if (oracle::kappa(g) != 2 || oracle::bipartite(g)) continue;
    const int k = oracle::min_degree(g) - 1;
    if (k < 1) continue;
    const Extraction ex = extract_case1(g, k, {});
    EXPECT_GE(static_cast<int>(ex.lengths.size()), (k + 1) / 2) << encode_graph6(g);
    expect_sound(g, ex, 2, oracle::cycle_lengths(g));
    ++built;
  }
  EXPECT_GE(built, 50);
}

TEST(ExtractCase1, RejectsGraphsOutsideTheCase) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NotFound;
  };
  EXPECT_EQ(code_of([] { extract_case1(complete_graph(5), 3, {}); }), ErrorCode::HypothesisFailed);
  EXPECT_EQ(code_of([] { extract_case1(complete_bipartite(2, 4), 1, {}); }), ErrorCode::HypothesisFailed);
  EXPECT_EQ(code_of([] { extract_case1(fixture::glued_cliques(5), 0, {}); }), ErrorCode::HypothesisFailed);
}

TEST(Extract3Conn, DenseGraphWithTriangles) {
  const Graph g = complete_minus_matching(8, 4);
  const Extraction ex = extract_3conn(g, 6, {});
  EXPECT_EQ(ex.lengths, (std::vector<int>{3, 4, 5, 6, 7, 8}));
  expect_sound(g, ex, 1, oracle::cycle_lengths(g));
  EXPECT_FALSE(ex.trace.searched_steps.empty());
}

TEST(Extract3Conn, TriangleFreeFixtures) {
  CheckOptions opt;
  opt.limits.node_budget = 50'000'000;
  struct Case {
    Graph g;
    int k;
  };
  for (const Case& c : {Case{fixture::blowup(5, 3), 6}, Case{fixture::andrasfai(6), 6}}) {
    const Extraction ex = extract_3conn(c.g, c.k, opt);
    EXPECT_GE(static_cast<int>(ex.lengths.size()), c.k);
    expect_sound(c.g, ex, 1, forced_spectrum(c.g));
    EXPECT_NE(joined(ex.trace.proof_path).find("club cycle of length 5"), std::string::npos);
  }
}

TEST(Extract3Conn, RejectsGraphsOutsideTheCase) {
  for (const Graph& g : {complete_graph(7), fixture::glued_cliques(8), complete_bipartite(6, 6)}) {
    try {
      extract_3conn(g, 6, {});
      FAIL() << encode_graph6(g);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::HypothesisFailed);
    }
  }
  EXPECT_THROW(extract_3conn(complete_graph(8), 5, {}), Error);
}

TEST(ExtractAroundCycle, ReachesEveryBranch) {
  // Small graphs below the degree hypothesis where the construction with k = 3
  // still goes through; each one exercises a different branch.
  const std::map<std::string, std::string> fixtures{
      {"JPOcEGOaWX?", "[two-neighbour vertex in end-block][u inside end-block]"},
      {"Ka?[C?gPJOFI", "[two-neighbour vertex in end-block][u outside end-block]"},
      {"HIcGlaa", "[two-neighbour vertex in end-block][remainder 2-connected]"},
      {"LAh?H_GogI_[c?", "[remainder 2-connected][step-1 family]"},
      {"Mb?@ODcCko@gAS`?_", "[remainder 2-connected][step-2 family]"},
      {"LA?\\?BB?KGc@EH", "[remainder separable][D1 family steps by two]"},
      {"Nhc?XCH@Gc_h_@G?_?g", "[remainder separable][D1 family steps by one]"},
      {"O?Ds?Qk?WH?Ww@@guC?@?", "[club cycle of length 7]"},
  };
  for (const auto& [code, branch] : fixtures) {
    const Graph g = decode_graph6(code);
    const auto c = shortest_nonsep_induced_odd_cycle(g);
    ASSERT_TRUE(c) << code;
    const Extraction ex = extract_around_cycle(g, 3, *c, {});
    EXPECT_GE(ex.lengths.size(), 3u);
    expect_sound(g, ex, 1, oracle::cycle_lengths(g));
    EXPECT_NE(joined(ex.trace.proof_path).find(branch), std::string::npos) << code << ' ' << joined(ex.trace.proof_path);
  }
}

TEST(ExtractAroundCycle, RandomGraphsNeverReturnInvalidCycles) {
  std::mt19937_64 rng(5);
  int returned = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(n, 0.25 + 0.4 * (rng() % 100) / 100.0, rng);
    if (!oracle::connected(g)) continue;
    const auto c = shortest_nonsep_induced_odd_cycle(g);
    if (!c || c->length() < 5) continue;
    try {
      const Extraction ex = extract_around_cycle(g, 3, *c, {});
      expect_sound(g, ex, 1, oracle::cycle_lengths(g));
      ++returned;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::ConstructionFailed || e.code() == ErrorCode::HypothesisFailed) << e.what();
    }
  }
  EXPECT_GT(returned, 0);
}

TEST(QuasiDiagonalIndex, Examples) {
  // C5 blow-up: the cycle 0,2,4,6,8 uses the first copy of each vertex.
  const Graph b = fixture::blowup(5, 2);
  const OddCycleStructure c{{0, 2, 4, 6, 8}, 2};
  const std::vector<Vertex> near0{1};  // copy of v0, adjacent to v1 and v4
  const std::vector<Vertex> near2{5};  // copy of v2, adjacent to v1 and v3
  // N(v_i) must meet {1}: i in {1, 4}; N(v_{i+2}) must meet {5}: i+2 in {1, 3}
  EXPECT_EQ(find_quasi_diagonal_index(b, c, near0, near2), 1);
  // swapped roles: i in {1, 3} and i+2 in {1, 4} never meet
  try {
    find_quasi_diagonal_index(b, c, near2, near0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFound);
  }
  const std::vector<Vertex> none;
  try {
    find_quasi_diagonal_index(b, c, none, near2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParams);
  }
  const std::vector<Vertex> far{3};  // copy of v1, adjacent to v0 and v2
  const std::vector<Vertex> same{3};
  // i in {0, 2} and i+2 in {0, 2}: i = 0 works
  EXPECT_EQ(find_quasi_diagonal_index(b, c, far, same), 0);
}

TEST(QuasiDiagonalIndex, AgreesWithDirectScan) {
  std::mt19937_64 rng(13);
  const Graph b = fixture::blowup(7, 2);
  const OddCycleStructure c{{0, 2, 4, 6, 8, 10, 12}, 3};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vertex> a, g2;
    for (Vertex v = 1; v < 14; v += 2) {
      const auto r = rng() % 3;
      if (r == 0) a.push_back(v);
      if (r == 1) g2.push_back(v);
    }
    if (a.empty() || g2.empty()) continue;
    auto meets = [&](Vertex x, const std::vector<Vertex>& set) {
      for (Vertex y : set)
        if (b.adjacent(x, y)) return true;
      return false;
    };
    std::optional<int> expected;
    for (int i = 0; i < 7 && !expected; ++i)
      if (meets(c.cycle[i], a) && meets(c.cycle[(i + 3) % 7], g2)) expected = i;
    if (expected) {
      EXPECT_EQ(find_quasi_diagonal_index(b, c, a, g2), *expected);
    } else {
      EXPECT_THROW(find_quasi_diagonal_index(b, c, a, g2), Error);
    }
  }
}
