#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "consec/graph.hpp"
#include "consec/limits.hpp"

namespace consec {

/// Every length of a simple x-y path, with the lexicographically smallest
/// path of each length.
struct PathLengths {
  std::vector<int> lengths;  // ascending
  std::map<int, Path> witness;
};

enum class FamilyKind { Consecutive, AdmissibleStep1, AdmissibleStep2, Unclassified };

/**
 * Paths between fixed endpoints with distinct lengths.
 *
 * Consecutive: the sorted lengths step by 1. AdmissibleStep1/Step2: the
 * shortest length is at least 2 and the lengths step by 1 or by 2.
 */
struct PathFamily {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Path> paths;  // ascending by length
  std::vector<int> lengths;
  FamilyKind kind = FamilyKind::Unclassified;

  std::size_t size() const { return paths.size(); }
  /// 1 or 2 for step families, 0 otherwise.
  int step() const;
};

/// Builds a family from paths sharing endpoints and classifies it; paths are
/// sorted by length.
PathFamily make_family(Vertex x, Vertex y, std::vector<Path> paths);

/// Lengths of simple x-y paths; when `skip_edge_xy` is set the edge xy is
/// not used. Throws `Timeout` past the node budget.
PathLengths xy_path_lengths(const Graph& g, Vertex x, Vertex y, const SearchLimits& limits = {},
                            bool skip_edge_xy = false);

/// Largest family of admissible x-y paths (ties prefer step 1, then the
/// smallest starting length).
PathFamily max_admissible_family(const Graph& g, Vertex x, Vertex y, bool forbid_edge_xy,
                                 const SearchLimits& limits = {});
/// Same selection applied to a precomputed length table.
PathFamily admissible_family_from(const PathLengths& table, Vertex x, Vertex y);

struct ParityPair {
  Path odd_path;
  Path even_path;
};

/**
 * An odd and an even x-y path in a non-bipartite g with g + xy 2-connected.
 *
 * Built by rerouting: take an odd cycle C and an x-y path P in g - xy meeting
 * C in as many vertices as possible; the first and last vertices a, b of P on
 * C split C into arcs of both parities, and P[x,a] + arc + P[b,y] gives both.
 * Throws `HypothesisFailed` when the preconditions fail and `NotFound` if
 * the construction does not close (which the guarantee rules out).
 */
ParityPair odd_even_paths(const Graph& g, Vertex x, Vertex y, const SearchLimits& limits = {});

/// Longest run of consecutive integers in {a + b}.
int sumset_run(std::span<const int> a, std::span<const int> b);

/// Run length promised by the merge arithmetic: s + t - 1 for a step-1 second
/// family, s + 2(t - 1) for a step-2 one.
int merge_guarantee(int s, int t, int step);

struct MergeResult {
  bool closed = false;           // true when the two families close cycles
  std::vector<Path> members;     // the concatenations realizing the run
  std::vector<int> lengths;      // their lengths, consecutive
  int run_length = 0;
  int guaranteed = 0;
};

/**
 * Concatenates a consecutive x-y family inside W with an admissible y-z family
 * that meets W only at y (and at z = x when the concatenations close into
 * cycles). Returns the concatenations realizing the longest consecutive run.
 *
 * Throws NotConsecutive (fewer than two paths or a gap), NotAdmissible, or
 * OverlapViolation when the families share vertices outside y.
 */
MergeResult merge_families(const Graph& g, const PathFamily& consecutive,
                           const PathFamily& admissible,
                           std::optional<std::span<const Vertex>> w = std::nullopt);

}  // namespace consec
