#include <gtest/gtest.h>

#include <random>

#include "consec/connectivity.hpp"
#include "consec/cycles.hpp"
#include "consec/error.hpp"
#include "oracles.hpp"

using namespace consec;

namespace {

Graph bowtie() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

Graph two_k4_sharing_edge() {
  return Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

std::vector<Graph> random_connected(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_graph(n, 0.2 + 0.6 * (rng() % 100) / 100.0, rng);
    if (oracle::connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST(Bipartition, Examples) {
  const Bipartition c6 = bipartition_or_odd_cycle(cycle_graph(6));
  EXPECT_TRUE(c6.bipartite());
  EXPECT_EQ(c6.part_a, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(c6.part_b, (std::vector<Vertex>{1, 3, 5}));
  const Bipartition c5 = bipartition_or_odd_cycle(cycle_graph(5));
  ASSERT_FALSE(c5.bipartite());
  EXPECT_EQ(c5.odd_cycle->size(), 5u);
  const Bipartition p = bipartition_or_odd_cycle(petersen_graph());
  ASSERT_FALSE(p.bipartite());
  EXPECT_EQ(p.odd_cycle->size(), 5u);
  EXPECT_TRUE(is_valid_cycle(petersen_graph(), *p.odd_cycle));
  EXPECT_THROW(bipartition_or_odd_cycle(Graph::from_edges(3, {{0, 1}})), Error);
}

TEST(Bipartition, AgreesWithColouringSearchAndSpectrum) {
  for (const Graph& g : random_connected(300, 3)) {
    const Bipartition b = bipartition_or_odd_cycle(g);
    EXPECT_EQ(b.bipartite(), oracle::bipartite(g));
    bool odd_length = false;
    for (int len : oracle::cycle_lengths(g)) odd_length |= len % 2 == 1;
    EXPECT_EQ(odd_length, !b.bipartite());
    if (b.odd_cycle) {
      EXPECT_TRUE(is_valid_cycle(g, *b.odd_cycle));
      EXPECT_EQ(b.odd_cycle->size() % 2, 1u);
    }
  }
}

TEST(BlockCutTree, Examples) {
  const BlockCutTree bt = block_cut_tree(bowtie());
  ASSERT_EQ(bt.blocks.size(), 2u);
  EXPECT_EQ(bt.cut_vertices, std::vector<Vertex>{0});
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_TRUE(bt.is_end_block(i));
    EXPECT_EQ(bt.end_block_cut_vertex(i), 0);
  }
  const BlockCutTree k4 = block_cut_tree(complete_graph(4));
  EXPECT_EQ(k4.blocks.size(), 1u);
  EXPECT_TRUE(k4.cut_vertices.empty());
  const BlockCutTree p3 = block_cut_tree(Graph::from_edges(3, {{0, 1}, {1, 2}}));
  ASSERT_EQ(p3.blocks.size(), 2u);
  EXPECT_EQ(p3.blocks[0].vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(p3.blocks[1].vertices, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(p3.cut_vertices, std::vector<Vertex>{1});
  EXPECT_THROW(block_cut_tree(Graph::from_edges(2, {})), Error);
}

TEST(BlockCutTree, EdgeCountsAndCutVertices) {
  for (const Graph& g : random_connected(300, 5)) {
    const BlockCutTree bt = block_cut_tree(g);
    std::size_t edges = 0;
    std::vector<int> membership(g.order(), 0);
    for (const Block& b : bt.blocks) {
      edges += induced_subgraph(g, b.vertices).graph.size();
      for (Vertex v : b.vertices) ++membership[v];
    }
    if (g.order() > 1) EXPECT_EQ(edges, g.size());
    std::vector<Vertex> by_membership;
    for (Vertex v = 0; v < g.order(); ++v)
      if (membership[v] >= 2) by_membership.push_back(v);
    EXPECT_EQ(bt.cut_vertices, by_membership);
    EXPECT_EQ(cut_vertices(g), oracle::cut_vertices(g));
  }
}

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(complete_graph(6)).kappa, 5);
  EXPECT_EQ(vertex_connectivity(petersen_graph()).kappa, oracle::kappa(petersen_graph()));
  EXPECT_EQ(vertex_connectivity(petersen_graph()).kappa, 3);
  EXPECT_EQ(vertex_connectivity(cycle_graph(8)).kappa, 2);
  EXPECT_EQ(vertex_connectivity(Graph::from_edges(1, {})).kappa, 0);
  const ConnectivityReport k4 = vertex_connectivity(complete_graph(4));
  EXPECT_TRUE(k4.is_2_connected);
  EXPECT_TRUE(k4.is_3_connected);
  EXPECT_FALSE(vertex_connectivity(complete_graph(3)).is_3_connected);
  EXPECT_FALSE(vertex_connectivity(complete_graph(2)).is_2_connected);
}

TEST(VertexConnectivity, AgreesWithSubsetRemoval) {
  for (const Graph& g : random_connected(300, 9)) {
    const int kappa = oracle::kappa(g);
    const ConnectivityReport r = vertex_connectivity(g);
    EXPECT_EQ(r.kappa, kappa) << encode_graph6(g);
    EXPECT_LE(r.kappa, degree_profile(g).min_degree);
    EXPECT_EQ(is_two_connected(g), g.order() >= 3 && kappa >= 2);
    EXPECT_EQ(is_three_connected(g), g.order() >= 4 && kappa >= 3);
  }
}

TEST(Nonseparating, Examples) {
  const std::vector<Vertex> tri{0, 1, 2};
  EXPECT_TRUE(is_nonseparating(complete_graph(4), tri));
  const std::vector<Vertex> outer{0, 1, 2, 3, 4};
  EXPECT_TRUE(is_nonseparating(petersen_graph(), outer));
  // square 0-1-2-3 with vertex 4 on side 01 and vertex 5 on side 23
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {5, 2}, {5, 3}});
  const std::vector<Vertex> square{0, 1, 2, 3};
  std::vector<char> alive{0, 0, 0, 0, 1, 1};
  EXPECT_FALSE(oracle::connected_on(g, alive));
  EXPECT_FALSE(is_nonseparating(g, square));
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_TRUE(is_nonseparating(cycle_graph(5), all));
}

TEST(Nonseparating, AgreesWithComponentCount) {
  std::mt19937_64 rng(17);
  for (const Graph& g : random_connected(200, 21)) {
    std::vector<Vertex> c;
    std::vector<char> alive(g.order(), 1);
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 3 == 0) {
        c.push_back(v);
        alive[v] = 0;
      }
    EXPECT_EQ(is_nonseparating(g, c), oracle::connected_on(g, alive));
  }
}

TEST(TwoCutWitness, Examples) {
  EXPECT_EQ(two_cut_witness(cycle_graph(5)), (std::pair<Vertex, Vertex>{0, 2}));
  EXPECT_FALSE(two_cut_witness(complete_graph(5)).has_value());
  EXPECT_EQ(two_cut_witness(two_k4_sharing_edge()), (std::pair<Vertex, Vertex>{0, 1}));
  EXPECT_THROW(two_cut_witness(bowtie()), Error);
}

TEST(TwoCutWitness, LexicographicallySmallest) {
  for (const Graph& g : random_connected(300, 33)) {
    if (!is_two_connected(g)) continue;
    std::optional<std::pair<Vertex, Vertex>> expected;
    for (Vertex x = 0; x < g.order() && !expected; ++x)
      for (Vertex y = x + 1; y < g.order() && !expected; ++y) {
        std::vector<char> alive(g.order(), 1);
        alive[x] = alive[y] = 0;
        if (!oracle::connected_on(g, alive)) expected = std::pair{x, y};
      }
    EXPECT_EQ(two_cut_witness(g), expected);
  }
}
