#pragma once

#include <map>
#include <optional>
#include <vector>

#include "consec/graph.hpp"
#include "consec/limits.hpp"

namespace consec {

inline constexpr int kDefaultSpectrumLimit = 14;
/// Orders above this are refused unless `force_large` is set.
inline constexpr int kHardSpectrumLimit = 20;

struct SpectrumOptions {
  /// Largest cycle length of interest; 0 means no cap (all lengths <= n).
  int max_length = 0;
  int size_limit = kDefaultSpectrumLimit;
  bool force_large = false;
  /// Enumerate by path backtracking even when the subset table would fit.
  bool backtracking = false;
  SearchLimits limits;
};

/// Exact set of cycle lengths with one witness cycle per length.
struct CycleSpectrum {
  std::vector<int> lengths;          // ascending, each >= 3
  std::map<int, Cycle> witness;      // length -> cycle

  bool contains(int length) const { return witness.count(length) != 0; }
};

struct RunStats {
  int max_run = 0;
  int max_odd_run = 0;
  std::vector<int> run;      // lengths of the first longest consecutive run
  std::vector<int> odd_run;  // lengths of the first longest step-2 odd run
};

/// Shortest non-separating induced odd cycle, stored as v_0 .. v_{2s}.
struct OddCycleStructure {
  Cycle cycle;
  int s = 0;

  int length() const { return static_cast<int>(cycle.size()); }
};

enum class Dichotomy { Spade, Club, Violation };

struct DichotomyResult {
  Dichotomy kind = Dichotomy::Spade;
  std::optional<Vertex> offender;  // set for Violation
  bool hypothesis_met = false;     // minimum degree at least four
};

/**
 * Exact cycle-length spectrum.
 *
 * Uses a subset dynamic program over paths rooted at the smallest cycle
 * vertex (O(2^n n)), falling back to budgeted backtracking above 26 vertices.
 * Throws `TooLarge` when n exceeds the configured limit and `Timeout` when
 * the budget or stop token trips.
 */
CycleSpectrum cycle_spectrum(const Graph& g, const SpectrumOptions& options = {});

RunStats run_stats(const CycleSpectrum& spectrum);
RunStats run_stats(const std::vector<int>& lengths);

/// Among induced odd cycles C with g - V(C) connected (or empty), one of
/// minimum length; ties go to the lexicographically smallest vertex set.
std::optional<OddCycleStructure> shortest_nonsep_induced_odd_cycle(
    const Graph& g, const SearchLimits& limits = {});

bool is_induced_cycle(const Graph& g, const Cycle& c);

/// Spade/club classification of a shortest non-separating induced odd cycle.
/// Throws `NotShortest` when `c` fails that precondition on re-verification.
DichotomyResult classify_dichotomy(const Graph& g, const OddCycleStructure& c,
                                   const SearchLimits& limits = {});

}  // namespace consec
