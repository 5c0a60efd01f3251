// Command-line front end: catalog ingestion, theorem checks, extraction and
// report emission. Exit codes: 0 clean, 1 I/O, configuration or per-graph
// errors, 2 a violation or failed construction.

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <regex>
#include <thread>

#include "consec/catalog.hpp"
#include "consec/error.hpp"
#include "consec/report.hpp"

using namespace consec;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct JobConfig {
  std::string input = "-";
  std::vector<std::string> theorems;
  std::string k_range;
  int k_min = 1;
  int k_max = 1;
  int size_limit = kDefaultSpectrumLimit;
  bool force_large = false;
  std::uint64_t budget = 0;
  double time_limit = 0;
  int jobs = 0;
  std::string format = "json";
  std::string output;
  std::string method = "auto";
  // generate
  std::string family;
  int n = 0, m = 0, a = 0, b = 0;
  int min_degree = 0;
  int connectivity = 0;
};

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::BadParams, what); }

void parse_k_range(JobConfig& c, bool required) {
  if (c.k_range.empty()) {
    if (required) config_error("--k is required");
    return;
  }
  static const std::regex pattern(R"((\d+)(?:\.\.(\d+))?)");
  std::smatch match;
  if (!std::regex_match(c.k_range, match, pattern)) config_error("--k expects N or A..B");
  c.k_min = std::stoi(match[1]);
  c.k_max = match[2].matched ? std::stoi(match[2]) : c.k_min;
  if (c.k_min < 1 || c.k_max > 64 || c.k_min > c.k_max) config_error("--k range must be non-empty within 1..64");
}

ReportFormat parse_format(const std::string& f) {
  if (f == "json") return ReportFormat::Json;
  if (f == "csv") return ReportFormat::Csv;
  if (f == "text") return ReportFormat::Text;
  config_error("--format must be json, csv or text");
}

std::uint64_t node_budget(const JobConfig& c) {
  if (c.budget > 0) return c.budget;
  if (const char* env = std::getenv("CONSEC_CYCLES_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
    config_error("CONSEC_CYCLES_BUDGET must be a positive integer");
  }
  return kDefaultNodeBudget;
}

// Fires the stop source once the wall-clock limit passes; searches then time out.
class Watchdog {
 public:
  Watchdog(double seconds, std::stop_source source) {
    if (seconds <= 0) return;
    thread_ = std::jthread([seconds, source](std::stop_token done) mutable {
      std::mutex mu;
      std::unique_lock lock(mu);
      std::condition_variable_any cv;
      if (!cv.wait_for(lock, done, std::chrono::duration<double>(seconds), [] { return false; }))
        if (!done.stop_requested()) source.request_stop();
    });
  }

 private:
  std::jthread thread_;
};

CheckOptions check_options(const JobConfig& c, std::stop_token stop) {
  if (c.size_limit < 3) config_error("--size-limit must be at least 3");
  CheckOptions o;
  o.limits = SearchLimits{node_budget(c), stop};
  o.spectrum.size_limit = c.size_limit;
  o.spectrum.force_large = c.force_large;
  o.spectrum.limits = o.limits;
  o.measure_always = false;
  return o;
}

// Line input from a file or stdin, read lazily.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::BadParams, "cannot open input " + path);
    }
    in_ = path == "-" ? &std::cin : &file_;
  }

  LineSource source() {
    return [this]() -> std::optional<std::string> {
      std::string line;
      if (!std::getline(*in_, line)) {
        if (in_->bad()) throw Error(ErrorCode::BadParams, "read error on input");
        return std::nullopt;
      }
      return line;
    };
  }

 private:
  std::ifstream file_;
  std::istream* in_;
};

int summary_exit(const ScanSummary& s) {
  if (s.violations > 0) return kExitViolation;
  return s.errors > 0 ? kExitError : kExitClean;
}

int run_scan(const JobConfig& c, std::vector<TheoremId> theorems, Json extra) {
  std::stop_source stop;
  ScanOptions opts;
  opts.theorems = std::move(theorems);
  opts.k_min = c.k_min;
  opts.k_max = c.k_max;
  opts.check = check_options(c, stop.get_token());
  opts.workers = c.jobs;
  const ReportFormat format = parse_format(c.format);
  Input input(c.input);
  AtomicOutput out(c.output);
  ReportWriter writer(out.stream(), format, std::move(extra));
  Watchdog watchdog(c.time_limit, stop);
  const ScanSummary s = scan_catalog(input.source(), opts, [&](const ScanEntry& e) { writer.entry(e); });
  writer.finish(s);
  out.commit();
  if (format != ReportFormat::Text && !c.output.empty())
    std::cerr << "total=" << s.total << " violations=" << s.violations << " errors=" << s.errors << '\n';
  return summary_exit(s);
}

std::vector<TheoremId> parse_theorems(const std::vector<std::string>& names) {
  std::vector<TheoremId> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (TheoremId id : all_theorems())
        if (id != TheoremId::SelfTestViolation) out.push_back(id);
      continue;
    }
    auto id = parse_theorem(name);
    if (!id) config_error("unknown theorem '" + name + "'");
    out.push_back(*id);
  }
  if (out.empty()) config_error("--theorem is required");
  return out;
}

// Per-graph subcommands (spectrum, blocks, extract) share this loop: one JSON
// object per graph, errors isolated per line.
template <class Fn>
int run_per_graph(const JobConfig& c, Fn&& fn) {
  const ReportFormat format = parse_format(c.format);
  Input input(c.input);
  AtomicOutput out(c.output);
  std::ostream& os = out.stream();
  auto source = input.source();
  std::size_t line_no = 0, index = 0, errors = 0, failures = 0;
  if (format == ReportFormat::Json) os << "{\"entries\":[";
  if (format == ReportFormat::Csv) os << "index,graph6,status,detail\n";
  bool first = true;
  while (auto line = source()) {
    ++line_no;
    if (!line->empty() && line->back() == '\r') line->pop_back();
    if (line->empty()) continue;
    Json entry{{"index", index}, {"graph6", *line}};
    std::string status = "ok";
    try {
      const Graph g = decode_graph6(*line);
      fn(g, entry);
      if (entry.contains("status")) status = entry["status"].get<std::string>();
    } catch (const Error& e) {
      status = e.code() == ErrorCode::ConstructionFailed ? "construction-failed" : "error";
      entry["status"] = status;
      entry["error"] = (e.code() == ErrorCode::MalformedRecord || e.code() == ErrorCode::UnsupportedVariant)
                           ? "line " + std::to_string(line_no) + ": " + e.what()
                           : std::string(e.what());
    } catch (const std::exception& e) {
      status = "error";
      entry["status"] = status;
      entry["error"] = e.what();
    }
    if (status == "construction-failed") ++failures;
    else if (status == "error") ++errors;
    switch (format) {
      case ReportFormat::Json:
        os << (first ? "\n" : ",\n") << entry.dump();
        break;
      case ReportFormat::Csv: {
        Json detail = entry;
        detail.erase("index");
        detail.erase("graph6");
        detail.erase("status");
        std::string d = detail.dump();
        std::string quoted = "\"";
        for (char ch : d) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        os << index << ',' << *line << ',' << status << ',' << quoted << "\"\n";
        break;
      }
      case ReportFormat::Text:
        os << '#' << index << ' ' << *line << "  " << status;
        for (const auto& [key, value] : entry.items())
          if (key != "index" && key != "graph6" && key != "status" && key != "trace")
            os << "  " << key << '=' << value.dump();
        os << '\n';
        break;
    }
    first = false;
    ++index;
  }
  if (format == ReportFormat::Json)
    os << "\n],\n\"summary\":"
       << Json{{"total", index}, {"errors", errors}, {"construction_failed", failures}}.dump() << "}\n";
  out.commit();
  if (failures > 0) return kExitViolation;
  return errors > 0 ? kExitError : kExitClean;
}

int run_generate(const JobConfig& c) {
  AtomicOutput out(c.output);
  std::ostream& os = out.stream();
  auto emit = [&](const Graph& g) { os << encode_graph6(g) << '\n'; };
  const std::string& f = c.family;
  if (f == "complete") emit(complete_graph(c.n));
  else if (f == "complete-minus-matching") emit(complete_minus_matching(c.n, c.m));
  else if (f == "complete-bipartite") emit(complete_bipartite(c.a, c.b));
  else if (f == "cycle") emit(cycle_graph(c.n));
  else if (f == "petersen") emit(petersen_graph());
  else if (f == "labeled" || f == "unlabeled") {
    auto keep = [&](const Graph& g) {
      if (g.order() > 0 && degree_profile(g).min_degree < c.min_degree) return false;
      if (c.connectivity >= 1 && !is_connected(g)) return false;
      if (c.connectivity >= 2 && !is_two_connected(g)) return false;
      if (c.connectivity >= 3 && !is_three_connected(g)) return false;
      return true;
    };
    if (f == "labeled") {
      for (const Graph& g : AllLabeled(c.n))
        if (keep(g)) emit(g);
    } else {
      for (const Graph& g : unlabeled_graphs(c.n, {.min_degree = c.min_degree, .connected = c.connectivity >= 1}))
        if (keep(g)) emit(g);
    }
  } else {
    config_error("unknown family '" + f + "'");
  }
  out.commit();
  return kExitClean;
}

void add_input(CLI::App* sub, JobConfig& c) {
  sub->add_option("--input,input", c.input, "graph6 file, or - for stdin")->capture_default_str();
  sub->add_option("--format", c.format, "json, csv or text")->capture_default_str();
  sub->add_option("--output,-o", c.output, "report path (written atomically); stdout when omitted");
}

void add_limits(CLI::App* sub, JobConfig& c) {
  sub->add_option("--size-limit", c.size_limit, "largest order accepted by the spectrum search")
      ->capture_default_str();
  sub->add_flag("--force-large", c.force_large, "allow spectrum searches above the hard size cap");
  sub->add_option("--budget", c.budget, "search node budget (default from CONSEC_CYCLES_BUDGET or 10^7)");
  sub->add_option("--time-limit", c.time_limit, "wall-clock seconds before remaining searches time out");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-spectrum and consecutive-cycle toolkit"};
  app.require_subcommand(1);
  JobConfig c;
  c.jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* spectrum = app.add_subcommand("spectrum", "cycle lengths of each input graph");
  add_input(spectrum, c);
  add_limits(spectrum, c);

  auto* verify = app.add_subcommand("verify", "check theorems over a catalog");
  add_input(verify, c);
  add_limits(verify, c);
  verify->add_option("--theorem,-t", c.theorems, "theorem id (repeatable, or 'all')")->delimiter(',');
  verify->add_option("--k", c.k_range, "k or A..B")->required();
  verify->add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* extract = app.add_subcommand("extract", "build consecutive cycles constructively");
  add_input(extract, c);
  add_limits(extract, c);
  extract->add_option("--k", c.k_range, "k")->required();
  extract->add_option("--method", c.method, "auto, case1 or 3conn")->capture_default_str();

  auto* conjecture = app.add_subcommand("scan-conjecture", "scan a catalog for counterexamples to the k >= 4 extension");
  add_input(conjecture, c);
  add_limits(conjecture, c);
  conjecture->add_option("--k", c.k_range, "k or A..B (default 4..5)");
  conjecture->add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "write graph6 fixtures");
  generate->add_option("--family", c.family,
                       "complete, complete-minus-matching, complete-bipartite, cycle, petersen, labeled, unlabeled")
      ->required();
  generate->add_option("--n", c.n, "order");
  generate->add_option("--m", c.m, "matching size");
  generate->add_option("--a", c.a, "first part size");
  generate->add_option("--b", c.b, "second part size");
  generate->add_option("--min-degree", c.min_degree, "catalog filter");
  generate->add_option("--connectivity", c.connectivity, "catalog filter: require this connectivity (0-3)");
  generate->add_option("--output,-o", c.output, "output path; stdout when omitted");

  auto* blocks = app.add_subcommand("blocks", "block-cut tree of each input graph");
  add_input(blocks, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*spectrum) {
      std::stop_source stop;
      const CheckOptions o = check_options(c, stop.get_token());
      Watchdog watchdog(c.time_limit, stop);
      return run_per_graph(c, [&](const Graph& g, Json& entry) {
        entry.update(to_json(cycle_spectrum(g, o.spectrum)));
      });
    }
    if (*blocks) {
      return run_per_graph(c, [&](const Graph& g, Json& entry) {
        entry.update(to_json(block_cut_tree(g)));
      });
    }
    if (*extract) {
      parse_k_range(c, true);
      if (c.k_min != c.k_max) config_error("extract takes a single k");
      if (c.method != "auto" && c.method != "case1" && c.method != "3conn")
        config_error("--method must be auto, case1 or 3conn");
      std::stop_source stop;
      const CheckOptions o = check_options(c, stop.get_token());
      Watchdog watchdog(c.time_limit, stop);
      return run_per_graph(c, [&](const Graph& g, Json& entry) {
        std::string method = c.method;
        if (method == "auto") method = g.order() >= 4 && is_three_connected(g) ? "3conn" : "case1";
        entry["method"] = method;
        entry["k"] = c.k_min;
        try {
          const Extraction ex = method == "3conn" ? extract_3conn(g, c.k_min, o) : extract_case1(g, c.k_min, o);
          entry["status"] = "ok";
          entry["lengths"] = ex.lengths;
          entry["cycles"] = ex.cycles;
          entry["trace"] = to_json(ex.trace);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::HypothesisFailed) throw;
          entry["status"] = "hypotheses-not-met";
          entry["reason"] = e.what();
        }
      });
    }
    if (*verify) {
      parse_k_range(c, true);
      return run_scan(c, parse_theorems(c.theorems), Json::object());
    }
    if (*conjecture) {
      if (c.k_range.empty()) c.k_range = "4..5";
      parse_k_range(c, true);
      return run_scan(c, {TheoremId::ConjectureK4},
                      Json{{"evidence", "property-based evidence over the supplied catalog, not a proof"}});
    }
    if (*generate) return run_generate(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
