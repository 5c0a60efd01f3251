#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "consec/connectivity.hpp"
#include "consec/cycles.hpp"
#include "consec/graph.hpp"
#include "consec/paths.hpp"

namespace consec {

enum class TheoremId {
  MainOddConsec,        // 2-connected, non-bipartite, delta >= k+1 => ceil(k/2) consecutive odd cycles
  KConsecutive,         // k >= 6, 3-connected, non-bipartite, delta >= k => k consecutive cycles unless K_{k+1}
  Case1,                // as MainOddConsec, restricted to graphs that are not 3-connected
  Case2,                // 3-connected, non-bipartite, delta >= 4 => two consecutive odd cycles
  TriangleConsec,       // k >= 2, 2-connected with a triangle, delta >= k => k consecutive cycles unless K_{k+1}
  AdmissibleGuarantee,  // g + xy 2-connected, inner degrees >= k+1 => k admissible x-y paths in g - xy
  AdmissibleOneExempt,  // same with one exempt vertex z
  OddEvenPair,          // non-bipartite, g + xy 2-connected => odd and even x-y paths
  Dichotomy,            // delta >= 4 => shortest non-separating induced odd cycle is spade or club
  ConjectureK4,         // KConsecutive extended to k >= 4 (open)
  SelfTestViolation,    // harness self-test: hypotheses always met, conclusion always fails
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
std::span<const TheoremId> all_theorems();

enum class Outcome { Holds, Violation, Excepted, HypothesesNotMet };

std::string_view outcome_name(Outcome o);

struct Verdict {
  std::string graph_id;
  TheoremId theorem = TheoremId::MainOddConsec;
  int k = 1;
  bool hypotheses_met = false;
  bool conclusion_holds = false;  // meaningful only when hypotheses_met
  bool excepted = false;          // the K_{k+1} exception applied
  std::optional<int> max_run;
  std::optional<int> max_odd_run;
  std::vector<int> witness_lengths;
  std::vector<Cycle> witness_cycles;
  std::vector<Path> witness_paths;
  std::string note;
  std::string violation;  // non-empty => hypotheses_met && !conclusion_holds

  Outcome outcome() const;
};

struct CheckOptions {
  SpectrumOptions spectrum;
  SearchLimits limits;
  /// Measure the spectrum even when hypotheses fail (boundary reporting).
  bool measure_always = true;
};

/**
 * Lazily computed facts about one graph, shared across every theorem and k
 * evaluated on it. The spectrum is computed at most once.
 */
class CheckContext {
 public:
  CheckContext(const Graph& g, CheckOptions options = {});
  CheckContext(Graph&&, CheckOptions = {}) = delete;  // keeps a reference
  ~CheckContext();
  CheckContext(const CheckContext&) = delete;
  CheckContext& operator=(const CheckContext&) = delete;

  Verdict check(TheoremId id, int k);

  const Graph& graph() const { return g_; }
  int min_degree();
  bool connected();
  bool two_connected();
  bool three_connected();
  bool bipartite();
  bool has_triangle();
  /// K_{k+1} by degree profile: n = k+1 and every degree is k.
  bool is_complete_of_order(int order);
  const CycleSpectrum& spectrum();
  const RunStats& stats();

 private:
  struct Cache;

  Verdict base(TheoremId id, int k) const;
  void attach_stats(Verdict& v, bool odd, int needed);
  Verdict check_run(TheoremId id, int k, bool hyp, bool odd, int needed, bool exception);
  Verdict check_admissible(TheoremId id, int k);
  Verdict check_odd_even(int k);
  Verdict check_dichotomy(int k);

  const Graph& g_;
  CheckOptions options_;
  std::unique_ptr<Cache> cache_;
};

Verdict check(const Graph& g, TheoremId id, int k, const CheckOptions& options = {});

// Constructive extraction -------------------------------------------------------

/// Record of the construction: the case labels taken, the named intermediate
/// objects, and for each returned cycle the path segments it was glued from.
struct ExtractionTrace {
  std::vector<std::string> proof_path;
  /// Steps discharged by exhaustive witness search instead of construction.
  std::vector<std::string> searched_steps;
  std::vector<std::pair<std::string, std::vector<Vertex>>> objects;
  std::vector<std::vector<Path>> cycle_segments;
};

/// Rebuilds cycles by gluing each segment list end to start.
std::vector<Cycle> replay(const ExtractionTrace& trace);

struct Extraction {
  std::vector<Cycle> cycles;  // validated, ascending by length
  std::vector<int> lengths;
  ExtractionTrace trace;
};

/**
 * Cycles of ceil(k/2) consecutive odd lengths in a 2-connected, non-3-connected,
 * non-bipartite graph with minimum degree >= k+1, built from a separating pair.
 * Throws HypothesisFailed, or ConstructionFailed if a step does not go through.
 */
Extraction extract_case1(const Graph& g, int k, const CheckOptions& options = {});

/**
 * k cycles of consecutive lengths in a 3-connected non-bipartite graph with
 * minimum degree >= k (k >= 6), other than K_{k+1}. Graphs with a triangle
 * are settled by a spectrum witness search; triangle-free graphs are built
 * from a shortest non-separating induced odd cycle.
 */
Extraction extract_3conn(const Graph& g, int k, const CheckOptions& options = {});

/**
 * The triangle-free part of extract_3conn run around a caller-supplied
 * shortest non-separating induced odd cycle, without the degree and k >= 6
 * gates. Any returned cycles are validated; the run may fall short of k when
 * the graph is below the hypotheses, which is reported as ConstructionFailed.
 */
Extraction extract_around_cycle(const Graph& g, int k, const OddCycleStructure& c,
                                const CheckOptions& options = {});

/// Smallest i with N(v_i) meeting `d1_minus_x` and N(v_{i+s}) meeting `g2`.
/// Throws BadParams on empty inputs and NotFound when no index qualifies.
int find_quasi_diagonal_index(const Graph& g, const OddCycleStructure& c,
                              std::span<const Vertex> d1_minus_x, std::span<const Vertex> g2);

// Catalog scanning ----------------------------------------------------------------

struct ScanOptions {
  std::vector<TheoremId> theorems{TheoremId::MainOddConsec};
  int k_min = 1;
  int k_max = 1;
  CheckOptions check{.spectrum = {}, .limits = {}, .measure_always = false};
  int workers = 1;
};

struct ScanEntry {
  std::size_t index = 0;
  std::string graph6;
  std::optional<TheoremId> theorem;
  int k = 0;
  std::optional<Verdict> verdict;
  std::string error;  // non-empty for a per-graph failure
};

struct ScanSummary {
  std::size_t total = 0;
  std::size_t hypotheses_met = 0;
  std::size_t holds = 0;
  std::size_t excepted = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;

  void add(const ScanEntry& e);
};

/// Pulls graph6 lines until it returns nothing.
using LineSource = std::function<std::optional<std::string>()>;
using EntrySink = std::function<void(const ScanEntry&)>;

/**
 * Evaluates every theorem and k on every input line. Entries reach `sink` in
 * input order whatever the worker count; a failing graph produces error
 * entries and never stops the scan.
 */
ScanSummary scan_catalog(const LineSource& source, const ScanOptions& options,
                         const EntrySink& sink);

struct ScanReport {
  ScanSummary summary;
  std::vector<ScanEntry> entries;
};

ScanReport scan_catalog(std::span<const Graph> graphs, const ScanOptions& options);

/// Entries for one graph (the per-item unit of work inside scan_catalog).
std::vector<ScanEntry> scan_one(std::size_t index, const std::string& line,
                                const ScanOptions& options);

}  // namespace consec
