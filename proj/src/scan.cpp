#include <condition_variable>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "consec/error.hpp"
#include "consec/theorems.hpp"

namespace consec {

void ScanSummary::add(const ScanEntry& e) {
  ++total;
  if (!e.error.empty()) {
    ++errors;
    return;
  }
  if (!e.verdict) return;
  switch (e.verdict->outcome()) {
    case Outcome::Holds:
      ++hypotheses_met;
      ++holds;
      break;
    case Outcome::Excepted:
      ++hypotheses_met;
      ++excepted;
      break;
    case Outcome::Violation:
      ++hypotheses_met;
      ++violations;
      break;
    case Outcome::HypothesesNotMet:
      break;
  }
}

namespace {

std::string describe(const std::exception& e) { return e.what(); }

std::vector<ScanEntry> evaluate(std::size_t index, const std::string& line, const Graph& g,
                                const ScanOptions& options) {
  std::vector<ScanEntry> out;
  CheckContext ctx(g, options.check);
  for (TheoremId id : options.theorems)
    for (int k = options.k_min; k <= options.k_max; ++k) {
      ScanEntry e;
      e.index = index;
      e.graph6 = line;
      e.theorem = id;
      e.k = k;
      try {
        Verdict v = ctx.check(id, k);
        v.graph_id = line;
        e.verdict = std::move(v);
      } catch (const std::exception& ex) {
        e.error = describe(ex);
      }
      out.push_back(std::move(e));
    }
  return out;
}

std::string strip_line_end(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

std::vector<ScanEntry> scan_one(std::size_t index, const std::string& line, const ScanOptions& options) {
  const std::string record = strip_line_end(line);
  Graph g;
  try {
    g = decode_graph6(record);
  } catch (const std::exception& ex) {
    ScanEntry e;
    e.index = index;
    e.graph6 = record;
    e.error = describe(ex);
    return {std::move(e)};
  }
  return evaluate(index, record, g, options);
}

ScanSummary scan_catalog(const LineSource& source, const ScanOptions& options, const EntrySink& sink) {
  if (options.k_min < 1 || options.k_max < options.k_min)
    throw Error(ErrorCode::BadParams, "empty or invalid k range");
  if (options.workers < 1) throw Error(ErrorCode::BadParams, "worker count must be at least 1");

  ScanSummary summary;
  std::size_t line_no = 0;
  auto next_record = [&]() -> std::optional<std::pair<std::size_t, std::string>> {
    while (auto line = source()) {
      ++line_no;
      std::string record = strip_line_end(std::move(*line));
      if (!record.empty()) return std::make_pair(line_no, std::move(record));
    }
    return std::nullopt;
  };
  auto run = [&](std::size_t index, std::size_t at_line, const std::string& record) {
    auto entries = scan_one(index, record, options);
    for (auto& e : entries)
      if (!e.error.empty() && !e.theorem) e.error = "line " + std::to_string(at_line) + ": " + e.error;
    return entries;
  };

  if (options.workers == 1) {
    std::size_t index = 0;
    while (auto rec = next_record())
      for (const auto& e : run(index++, rec->first, rec->second)) {
        summary.add(e);
        sink(e);
      }
    return summary;
  }

  // Producer on this thread, a bounded queue of records, and ordered emission:
  // whichever worker completes the next index in sequence drains the buffer.
  struct Item {
    std::size_t index;
    std::size_t line;
    std::string record;
  };
  const std::size_t window = static_cast<std::size_t>(options.workers) * 64;
  std::mutex mu;
  std::condition_variable can_produce, can_consume;
  std::deque<Item> queue;
  std::map<std::size_t, std::vector<ScanEntry>> done;
  std::size_t next_emit = 0;
  bool finished = false;
  std::exception_ptr failure;
  std::mutex emit_mu;

  auto worker = [&] {
    while (true) {
      Item item;
      {
        std::unique_lock lock(mu);
        can_consume.wait(lock, [&] { return !queue.empty() || finished || failure; });
        if (failure || queue.empty()) return;
        item = std::move(queue.front());
        queue.pop_front();
      }
      auto entries = run(item.index, item.line, item.record);
      std::scoped_lock emit(emit_mu);
      std::unique_lock lock(mu);
      done.emplace(item.index, std::move(entries));
      while (!failure) {
        auto it = done.find(next_emit);
        if (it == done.end()) break;
        auto ready = std::move(it->second);
        done.erase(it);
        ++next_emit;
        lock.unlock();
        try {
          for (const auto& e : ready) {
            summary.add(e);
            sink(e);
          }
        } catch (...) {
          lock.lock();
          failure = std::current_exception();
          break;
        }
        lock.lock();
      }
      can_produce.notify_all();
      if (failure) {
        can_consume.notify_all();
        return;
      }
    }
  };

  std::vector<std::jthread> pool;
  for (int i = 0; i < options.workers; ++i) pool.emplace_back(worker);

  std::size_t index = 0;
  try {
    while (auto rec = next_record()) {
      std::unique_lock lock(mu);
      can_produce.wait(lock, [&] { return failure || index - next_emit < window; });
      if (failure) break;
      queue.push_back({index++, rec->first, std::move(rec->second)});
      can_consume.notify_one();
    }
  } catch (...) {
    std::scoped_lock lock(mu);
    if (!failure) failure = std::current_exception();
  }
  {
    std::scoped_lock lock(mu);
    finished = true;
  }
  can_consume.notify_all();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

ScanReport scan_catalog(std::span<const Graph> graphs, const ScanOptions& options) {
  if (options.k_min < 1 || options.k_max < options.k_min)
    throw Error(ErrorCode::BadParams, "empty or invalid k range");
  ScanReport report;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::string code;
    try {
      code = encode_graph6(graphs[i]);
    } catch (const std::exception&) {
    }
    for (auto& e : evaluate(i, code, graphs[i], options)) {
      report.summary.add(e);
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace consec
