#include "consec/report.hpp"

#include <iostream>
#include <sstream>
#include <unistd.h>

#include "consec/error.hpp"

namespace consec {

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string join(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Verdict& v) {
  return Json{
      {"outcome", outcome_name(v.outcome())},
      {"hypotheses_met", v.hypotheses_met},
      {"conclusion_holds", v.conclusion_holds},
      {"excepted", v.excepted},
      {"max_run", optional_int(v.max_run)},
      {"max_odd_run", optional_int(v.max_odd_run)},
      {"witness_cycles", v.witness_cycles},
      {"witness_paths", v.witness_paths},
      {"note", v.note},
      {"violation", v.violation},
  };
}

Json to_json(const ScanEntry& e) {
  Json j{
      {"index", e.index},
      {"graph6", e.graph6},
      {"theorem", e.theorem ? Json(theorem_name(*e.theorem)) : Json(nullptr)},
      {"k", e.k},
      {"verdict", e.verdict ? to_json(*e.verdict) : Json(nullptr)},
      {"witness_lengths", e.verdict ? e.verdict->witness_lengths : std::vector<int>{}},
  };
  if (!e.error.empty()) j["error"] = e.error;
  return j;
}

Json to_json(const ScanSummary& s) {
  return Json{{"total", s.total},       {"hypotheses_met", s.hypotheses_met},
              {"holds", s.holds},       {"excepted", s.excepted},
              {"violations", s.violations}, {"errors", s.errors}};
}

Json to_json(const ExtractionTrace& t) {
  Json objects = Json::array();
  for (const auto& [name, vertices] : t.objects) objects.push_back(Json{{"name", name}, {"vertices", vertices}});
  return Json{{"proof_path", t.proof_path},
              {"searched_steps", t.searched_steps},
              {"objects", objects},
              {"cycle_segments", t.cycle_segments}};
}

Json to_json(const CycleSpectrum& s) {
  Json witnesses = Json::object();
  for (const auto& [len, c] : s.witness) witnesses[std::to_string(len)] = c;
  const RunStats st = run_stats(s);
  return Json{{"lengths", s.lengths},
              {"witnesses", witnesses},
              {"max_run", st.max_run},
              {"max_odd_run", st.max_odd_run}};
}

Json to_json(const BlockCutTree& t) {
  Json blocks = Json::array();
  for (std::size_t i = 0; i < t.blocks.size(); ++i)
    blocks.push_back(Json{{"vertices", t.blocks[i].vertices},
                          {"cut_vertices", t.blocks[i].cut_vertices},
                          {"end_block", t.is_end_block(i)}});
  return Json{{"blocks", blocks}, {"cut_vertices", t.cut_vertices}};
}

std::string csv_header() {
  return "index,graph6,theorem,k,outcome,hypotheses_met,conclusion_holds,excepted,max_run,max_odd_run,"
         "witness_lengths,note,error";
}

std::string csv_row(const ScanEntry& e) {
  std::ostringstream out;
  out << e.index << ',' << csv_quote(e.graph6) << ',' << (e.theorem ? theorem_name(*e.theorem) : "") << ','
      << e.k << ',';
  if (e.verdict) {
    const Verdict& v = *e.verdict;
    out << outcome_name(v.outcome()) << ',' << v.hypotheses_met << ',' << v.conclusion_holds << ',' << v.excepted
        << ',' << (v.max_run ? std::to_string(*v.max_run) : "") << ','
        << (v.max_odd_run ? std::to_string(*v.max_odd_run) : "") << ',' << join(v.witness_lengths, ' ') << ','
        << csv_quote(v.violation.empty() ? v.note : v.violation) << ',';
  } else {
    out << "error,,,,,,,,";
  }
  out << csv_quote(e.error);
  return out.str();
}

std::string text_line(const ScanEntry& e) {
  std::ostringstream out;
  out << '#' << e.index << ' ' << e.graph6;
  if (e.theorem) out << ' ' << theorem_name(*e.theorem) << " k=" << e.k;
  if (!e.error.empty()) {
    out << "  ERROR " << e.error;
    return out.str();
  }
  const Verdict& v = *e.verdict;
  out << "  " << outcome_name(v.outcome());
  if (v.max_run) out << "  max_run=" << *v.max_run << " max_odd_run=" << *v.max_odd_run;
  if (!v.witness_lengths.empty()) out << "  lengths=" << join(v.witness_lengths, ',');
  if (!v.violation.empty()) out << "  (" << v.violation << ')';
  else if (!v.note.empty()) out << "  (" << v.note << ')';
  return out.str();
}

AtomicOutput::AtomicOutput(const std::string& path) {
  if (path.empty() || path == "-") return;
  target_ = path;
  temp_ = target_;
  temp_ += ".tmp." + std::to_string(::getpid());
  file_.open(temp_, std::ios::binary | std::ios::trunc);
  if (!file_) throw Error(ErrorCode::BadParams, "cannot open " + temp_.string() + " for writing");
}

AtomicOutput::~AtomicOutput() {
  if (!target_.empty() && !committed_) {
    file_.close();
    std::error_code ec;
    std::filesystem::remove(temp_, ec);
  }
}

std::ostream& AtomicOutput::stream() { return target_.empty() ? std::cout : file_; }

void AtomicOutput::commit() {
  if (target_.empty()) {
    std::cout.flush();
    return;
  }
  file_.close();
  if (!file_) throw Error(ErrorCode::BadParams, "write to " + temp_.string() + " failed");
  std::filesystem::rename(temp_, target_);
  committed_ = true;
}

ReportWriter::ReportWriter(std::ostream& out, ReportFormat format, Json extra)
    : out_(out), format_(format), extra_(std::move(extra)) {
  if (format_ == ReportFormat::Json) out_ << "{\"entries\":[";
  if (format_ == ReportFormat::Csv) out_ << csv_header() << '\n';
}

void ReportWriter::entry(const ScanEntry& e, const Json* trace) {
  switch (format_) {
    case ReportFormat::Json: {
      Json j = to_json(e);
      if (trace) j["trace"] = *trace;
      out_ << (first_ ? "\n" : ",\n") << j.dump();
      break;
    }
    case ReportFormat::Csv:
      out_ << csv_row(e) << '\n';
      break;
    case ReportFormat::Text:
      out_ << text_line(e) << '\n';
      break;
  }
  first_ = false;
}

void ReportWriter::finish(const ScanSummary& s) {
  switch (format_) {
    case ReportFormat::Json: {
      out_ << "\n]";
      for (const auto& [key, value] : extra_.items()) out_ << ",\n" << Json(key).dump() << ':' << value.dump();
      out_ << ",\n\"summary\":" << to_json(s).dump() << "}\n";
      break;
    }
    case ReportFormat::Csv:
      break;
    case ReportFormat::Text:
      out_ << "total=" << s.total << " hypotheses_met=" << s.hypotheses_met << " holds=" << s.holds
           << " excepted=" << s.excepted << " violations=" << s.violations << " errors=" << s.errors << '\n';
      break;
  }
}

}  // namespace consec
