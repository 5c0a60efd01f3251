#pragma once

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "consec/connectivity.hpp"
#include "consec/cycles.hpp"
#include "consec/theorems.hpp"

namespace consec {

using Json = nlohmann::json;

Json to_json(const Verdict& v);
Json to_json(const ScanEntry& e);
Json to_json(const ScanSummary& s);
Json to_json(const ExtractionTrace& t);
Json to_json(const CycleSpectrum& s);
Json to_json(const BlockCutTree& t);

enum class ReportFormat { Json, Csv, Text };

/// CSV header and row for one (graph, theorem, k) entry.
std::string csv_header();
std::string csv_row(const ScanEntry& e);
std::string text_line(const ScanEntry& e);

/**
 * Output file written through a temporary sibling and renamed into place on
 * commit, so readers never observe a partial report. An empty path means
 * stdout, written directly.
 */
class AtomicOutput {
 public:
  explicit AtomicOutput(const std::string& path);
  ~AtomicOutput();
  AtomicOutput(const AtomicOutput&) = delete;
  AtomicOutput& operator=(const AtomicOutput&) = delete;

  std::ostream& stream();
  void commit();

 private:
  std::filesystem::path target_;
  std::filesystem::path temp_;
  std::ofstream file_;
  bool committed_ = false;
};

/**
 * Streams scan entries in the given format. JSON entries are written as they
 * arrive and the summary closes the document, so memory stays flat for large
 * catalogs. `extra` keys are merged into the top-level JSON object.
 */
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format, Json extra = Json::object());
  void entry(const ScanEntry& e, const Json* trace = nullptr);
  void finish(const ScanSummary& s);

 private:
  std::ostream& out_;
  ReportFormat format_;
  Json extra_;
  bool first_ = true;
};

}  // namespace consec
