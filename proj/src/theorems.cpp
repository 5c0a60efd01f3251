#include "consec/theorems.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "consec/error.hpp"

namespace consec {

namespace {

constexpr std::array kTheorems = {
    TheoremId::MainOddConsec,       TheoremId::KConsecutive,        TheoremId::Case1,
    TheoremId::Case2,               TheoremId::TriangleConsec,      TheoremId::AdmissibleGuarantee,
    TheoremId::AdmissibleOneExempt, TheoremId::OddEvenPair,         TheoremId::Dichotomy,
    TheoremId::ConjectureK4,        TheoremId::SelfTestViolation,
};

int ceil_half(int k) { return (k + 1) / 2; }

std::string pair_text(Vertex x, Vertex y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::MainOddConsec: return "main";
    case TheoremId::KConsecutive: return "k-consecutive";
    case TheoremId::Case1: return "case1";
    case TheoremId::Case2: return "case2";
    case TheoremId::TriangleConsec: return "triangle";
    case TheoremId::AdmissibleGuarantee: return "admissible";
    case TheoremId::AdmissibleOneExempt: return "admissible-exempt";
    case TheoremId::OddEvenPair: return "odd-even";
    case TheoremId::Dichotomy: return "dichotomy";
    case TheoremId::ConjectureK4: return "conjecture";
    case TheoremId::SelfTestViolation: return "selftest-violation";
  }
  return "unknown";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (TheoremId id : kTheorems)
    if (theorem_name(id) == name) return id;
  return std::nullopt;
}

std::span<const TheoremId> all_theorems() { return kTheorems; }

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Violation: return "violation";
    case Outcome::Excepted: return "excepted";
    case Outcome::HypothesesNotMet: return "hypotheses-not-met";
  }
  return "unknown";
}

Outcome Verdict::outcome() const {
  if (!hypotheses_met) return Outcome::HypothesesNotMet;
  if (excepted) return Outcome::Excepted;
  return conclusion_holds ? Outcome::Holds : Outcome::Violation;
}

// CheckContext -------------------------------------------------------------------

struct CheckContext::Cache {
  std::optional<int> min_degree;
  std::optional<bool> connected, two_connected, three_connected, bipartite, triangle;
  std::optional<CycleSpectrum> spectrum;
  std::optional<RunStats> stats;
  // per unordered pair: is g + xy 2-connected, and the admissible family in g - xy
  std::vector<std::optional<bool>> pair_two_connected;
  std::vector<std::optional<PathFamily>> pair_family;
};

CheckContext::CheckContext(const Graph& g, CheckOptions options)
    : g_(g), options_(std::move(options)), cache_(std::make_unique<Cache>()) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  cache_->pair_two_connected.resize(n * n);
  cache_->pair_family.resize(n * n);
}

CheckContext::~CheckContext() = default;

int CheckContext::min_degree() {
  if (!cache_->min_degree) cache_->min_degree = g_.order() == 0 ? 0 : degree_profile(g_).min_degree;
  return *cache_->min_degree;
}

bool CheckContext::connected() {
  if (!cache_->connected) cache_->connected = is_connected(g_);
  return *cache_->connected;
}

bool CheckContext::two_connected() {
  if (!cache_->two_connected) cache_->two_connected = is_two_connected(g_);
  return *cache_->two_connected;
}

bool CheckContext::three_connected() {
  if (!cache_->three_connected) cache_->three_connected = two_connected() && is_three_connected(g_);
  return *cache_->three_connected;
}

bool CheckContext::bipartite() {
  if (!cache_->bipartite) cache_->bipartite = is_bipartite(g_);
  return *cache_->bipartite;
}

bool CheckContext::has_triangle() {
  if (!cache_->triangle) {
    bool found = false;
    for (const auto& [u, v] : g_.edges()) {
      for (Vertex w : g_.neighbors(u))
        if (w != v && g_.adjacent(v, w)) {
          found = true;
          break;
        }
      if (found) break;
    }
    cache_->triangle = found;
  }
  return *cache_->triangle;
}

bool CheckContext::is_complete_of_order(int order) {
  return g_.order() == order && order > 0 && min_degree() == order - 1;
}

const CycleSpectrum& CheckContext::spectrum() {
  if (!cache_->spectrum) cache_->spectrum = cycle_spectrum(g_, options_.spectrum);
  return *cache_->spectrum;
}

const RunStats& CheckContext::stats() {
  if (!cache_->stats) cache_->stats = run_stats(spectrum());
  return *cache_->stats;
}

Verdict CheckContext::base(TheoremId id, int k) const {
  Verdict v;
  v.graph_id = encode_graph6(g_);
  v.theorem = id;
  v.k = k;
  return v;
}

void CheckContext::attach_stats(Verdict& v, bool odd, int needed) {
  const RunStats& st = stats();
  v.max_run = st.max_run;
  v.max_odd_run = st.max_odd_run;
  v.witness_lengths = odd ? st.odd_run : st.run;
  v.witness_cycles.clear();
  for (int len : v.witness_lengths) v.witness_cycles.push_back(spectrum().witness.at(len));
  v.conclusion_holds = (odd ? st.max_odd_run : st.max_run) >= needed;
}

Verdict CheckContext::check_run(TheoremId id, int k, bool hyp, bool odd, int needed, bool exception) {
  Verdict v = base(id, k);
  v.hypotheses_met = hyp;
  if (!hyp) {
    if (options_.measure_always) {
      try {
        attach_stats(v, odd, needed);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
      }
    }
    v.conclusion_holds = false;
    return v;
  }
  attach_stats(v, odd, needed);
  if (exception) {
    v.excepted = true;
    v.note = "K_" + std::to_string(k + 1) + " exception";
    return v;
  }
  if (!v.conclusion_holds)
    v.violation = std::string(odd ? "longest consecutive odd run " : "longest consecutive run ") +
                  std::to_string(odd ? *v.max_odd_run : *v.max_run) + " < " + std::to_string(needed);
  return v;
}

Verdict CheckContext::check_admissible(TheoremId id, int k) {
  Verdict v = base(id, k);
  const int n = g_.order();
  if (k < 1) {
    v.note = "k outside theorem range";
    return v;
  }
  std::optional<std::size_t> worst_size;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      int low = 0;
      for (Vertex w = 0; w < n; ++w)
        if (w != x && w != y && g_.degree(w) < k + 1) ++low;
      const bool qualifies = id == TheoremId::AdmissibleGuarantee
                                 ? low == 0
                                 : (low == 0 && n >= 3) || (low == 1 && n >= 4);
      if (!qualifies) continue;
      const std::size_t slot = static_cast<std::size_t>(x) * n + y;
      auto& tc = cache_->pair_two_connected[slot];
      if (!tc) tc = is_two_connected(g_.with_edge(x, y));
      if (!*tc) continue;
      auto& fam = cache_->pair_family[slot];
      if (!fam) fam = max_admissible_family(g_, x, y, true, options_.limits);

      v.hypotheses_met = true;
      if (!worst_size || fam->size() < *worst_size) {
        worst_size = fam->size();
        v.witness_paths = fam->paths;
        v.witness_lengths = fam->lengths;
        v.note = "pair " + pair_text(x, y) + " family size " + std::to_string(fam->size());
      }
      if (fam->size() < static_cast<std::size_t>(k) && v.violation.empty())
        v.violation = "pair " + pair_text(x, y) + ": " + std::to_string(fam->size()) +
                      " admissible paths < " + std::to_string(k);
    }
  }
  v.conclusion_holds = v.hypotheses_met && v.violation.empty();
  return v;
}

Verdict CheckContext::check_odd_even(int k) {
  Verdict v = base(TheoremId::OddEvenPair, k);
  const int n = g_.order();
  if (n < 3 || bipartite() || !connected()) return v;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const std::size_t slot = static_cast<std::size_t>(x) * n + y;
      auto& tc = cache_->pair_two_connected[slot];
      if (!tc) tc = is_two_connected(g_.with_edge(x, y));
      if (!*tc) continue;
      v.hypotheses_met = true;
      try {
        ParityPair pp = odd_even_paths(g_, x, y, options_.limits);
        if (v.witness_paths.empty()) {
          v.witness_lengths = {path_length(pp.odd_path), path_length(pp.even_path)};
          v.witness_paths = {std::move(pp.odd_path), std::move(pp.even_path)};
          v.note = "pair " + pair_text(x, y);
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotFound) throw;
        if (v.violation.empty()) v.violation = "pair " + pair_text(x, y) + ": " + e.what();
      }
    }
  }
  v.conclusion_holds = v.hypotheses_met && v.violation.empty();
  return v;
}

Verdict CheckContext::check_dichotomy(int k) {
  Verdict v = base(TheoremId::Dichotomy, k);
  if (g_.order() == 0 || min_degree() < 4 || !connected()) return v;
  const auto c = shortest_nonsep_induced_odd_cycle(g_, options_.limits);
  if (!c) {
    v.note = "no non-separating induced odd cycle";
    return v;
  }
  v.hypotheses_met = true;
  const DichotomyResult r = classify_dichotomy(g_, *c, options_.limits);
  v.witness_cycles = {c->cycle};
  v.witness_lengths = {c->length()};
  switch (r.kind) {
    case consec::Dichotomy::Spade:
      v.note = "spade";
      v.conclusion_holds = true;
      break;
    case consec::Dichotomy::Club:
      v.note = "club";
      v.conclusion_holds = true;
      break;
    case consec::Dichotomy::Violation:
      v.violation = "vertex " + std::to_string(*r.offender) + " breaks the neighbor pattern";
      break;
  }
  return v;
}

Verdict CheckContext::check(TheoremId id, int k) {
  if (k < 1) throw Error(ErrorCode::BadParams, "k must be at least 1");
  const int delta = g_.order() == 0 ? 0 : min_degree();
  switch (id) {
    case TheoremId::MainOddConsec: {
      const bool hyp = delta >= k + 1 && !bipartite() && two_connected();
      return check_run(id, k, hyp, true, ceil_half(k), false);
    }
    case TheoremId::Case1: {
      const bool hyp = delta >= k + 1 && !bipartite() && two_connected() && !three_connected();
      return check_run(id, k, hyp, true, ceil_half(k), false);
    }
    case TheoremId::Case2: {
      const bool hyp = delta >= 4 && !bipartite() && three_connected();
      return check_run(id, k, hyp, true, 2, false);
    }
    case TheoremId::KConsecutive:
    case TheoremId::ConjectureK4: {
      const int k_min = id == TheoremId::KConsecutive ? 6 : 4;
      const bool hyp = k >= k_min && delta >= k && !bipartite() && three_connected();
      Verdict v = check_run(id, k, hyp, false, k, hyp && is_complete_of_order(k + 1));
      if (k < k_min) v.note = "k below range (k >= " + std::to_string(k_min) + ")";
      return v;
    }
    case TheoremId::TriangleConsec: {
      const bool hyp = k >= 2 && delta >= k && two_connected() && has_triangle();
      return check_run(id, k, hyp, false, k, hyp && is_complete_of_order(k + 1));
    }
    case TheoremId::AdmissibleGuarantee:
    case TheoremId::AdmissibleOneExempt:
      return check_admissible(id, k);
    case TheoremId::OddEvenPair:
      return check_odd_even(k);
    case TheoremId::Dichotomy:
      return check_dichotomy(k);
    case TheoremId::SelfTestViolation: {
      Verdict v = base(id, k);
      v.hypotheses_met = true;
      v.violation = "synthetic violation (harness self-test)";
      return v;
    }
  }
  throw Error(ErrorCode::BadParams, "unknown theorem id");
}

Verdict check(const Graph& g, TheoremId id, int k, const CheckOptions& options) {
  CheckContext ctx(g, options);
  return ctx.check(id, k);
}

}  // namespace consec
