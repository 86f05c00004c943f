// Corpus verification driver: run bound checkers over a stream of graphs and
// aggregate per-(bound, alpha) reports with violation and equality-witness
// listings.
//
// The corpus is a single-producer stream (a callable returning the next Graph
// or nothing).  Work fans out to a small worker pool in fixed-size batches;
// results merge in batch order, so violation/witness lists are ordered by the
// graph's position in the stream and the output is identical regardless of
// worker count or scheduling.  Thread count: explicit option, else the
// SOMBOR_THREADS environment variable, else hardware concurrency.
//
// Report keys — one report per (sub-inequality id, alpha) pair that the
// requested families claim at the requested grid — are derived from the
// regime tables alone, so a report appears (with zero graphs) even when no
// corpus graph was applicable, and an empty corpus yields the full key list
// with graphs_checked = 0 everywhere.

#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "indices.hpp"

namespace sombor {

/// Pull-based graph source.  Returns the next graph, or std::nullopt when the
/// corpus is exhausted.  Called only from the thread driving verify_corpus.
using GraphProducer = std::function<std::optional<Graph>()>;

/// One evaluated inequality attached to the corpus graph it was evaluated on.
struct RecordedCheck {
  long long graph_index = 0;  // position in the corpus stream, from 0
  std::string graph6;
  int n = 0;
  long long m = 0;
  BoundCheck check;
};

/// Aggregate over one (sub-inequality, alpha) key.  runtime_seconds is the
/// wall-clock time of the whole sweep that produced this report (every report
/// of a sweep carries the same value); it is for logging, not for
/// deterministic output.
struct EnumerationReport {
  std::string bound_id;
  std::optional<double> alpha;   // empty for the unparameterized families
  bool swapped = false;          // regime claims the reversed direction ("swapped (erratum)")
  long long graphs_checked = 0;  // corpus graphs the family was applicable to
  std::vector<RecordedCheck> violations;          // records with holds == false
  std::vector<RecordedCheck> equality_witnesses;  // records observed tight (and holding)
  double runtime_seconds = 0.0;
};

/// Sub-inequality id plus whether the regime's direction is the validated
/// reversal at this alpha.
struct SubIdRegime {
  std::string sub_id;
  bool swapped = false;
};

/// The sub-inequality ids (and swapped flags) a family emits at one alpha,
/// mirroring the checkers exactly; empty when the family makes no claim
/// there.  Unparameterized families ignore alpha.
inline std::vector<SubIdRegime> family_sub_ids_at(const std::string& family_id, double alpha) {
  if (family_id == "B0a" || family_id == "B0b") return {{family_id, false}};
  if (family_id == "B1") {
    if (alpha == 1.0) return {};
    return {{"B1", alpha > 1.0 && alpha < 2.0}};
  }
  if (family_id == "B2") {
    if (alpha < 0.0 || alpha == 1.0) return {};
    return {{"B2", alpha > 0.0 && alpha < 1.0}};
  }
  if (family_id == "B3") {
    if (alpha == 0.0 || alpha == 1.0) return {};
    if (alpha > 0.0 && alpha < 1.0) return {{"B3.1", false}};
    if (alpha < 0.0) return {{"B3.2", false}};
    return {{"B3.3", false}};
  }
  if (family_id == "B4") {
    if (alpha == 0.0) return {};
    if (alpha >= 1.0) return {{"B4.1a", false}, {"B4.1b", false}};
    if (alpha > 0.0) return {{"B4.1a", false}, {"B4.1c", false}};
    return {{"B4.2.lo", false}, {"B4.2.hi", false}};
  }
  if (family_id == "B5" || family_id == "B6") {
    const bool swapped = alpha < 0.0;
    return {{family_id + ".lo", swapped}, {family_id + ".hi", swapped}};
  }
  throw std::invalid_argument("family_sub_ids_at: unknown family " + family_id);
}

/// Every id accepted by bound filters: the eight family ids plus all regime
/// sub-ids, in canonical report order.
inline const std::vector<std::string>& known_bound_ids() {
  static const std::vector<std::string> ids = {
      "B0a", "B0b", "B1",      "B2",      "B3",     "B3.1",   "B3.2",  "B3.3",
      "B4",  "B4.1a", "B4.1b", "B4.1c",   "B4.2.lo", "B4.2.hi",
      "B5",  "B5.lo", "B5.hi", "B6",      "B6.lo",  "B6.hi"};
  return ids;
}

/// Validated bound selection: family ids select all their sub-inequalities;
/// sub-ids select exactly themselves.  Empty or "all" selects everything.
class BoundFilter {
 public:
  /// Throws std::invalid_argument on an unknown id.
  explicit BoundFilter(const std::vector<std::string>& tokens = {}) {
    for (const auto& t : tokens) {
      if (t == "all") continue;
      const auto& known = known_bound_ids();
      bool ok = false;
      for (const auto& k : known) ok = ok || k == t;
      if (!ok) throw std::invalid_argument("unknown bound id: " + t);
      tokens_.insert(t);
    }
  }

  bool selects_family(const std::string& family_id) const {
    if (tokens_.empty()) return true;
    if (tokens_.count(family_id)) return true;
    for (const auto& t : tokens_)
      if (t.size() > family_id.size() && t.compare(0, family_id.size(), family_id) == 0 &&
          t[family_id.size()] == '.')
        return true;
    return false;
  }

  bool selects_record(const std::string& family_id, const std::string& record_id) const {
    return tokens_.empty() || tokens_.count(family_id) || tokens_.count(record_id);
  }

 private:
  std::set<std::string> tokens_;
};

struct VerifyOptions {
  std::vector<std::string> bounds;  // family ids / sub-ids; empty means all
  AlphaGrid grid = AlphaGrid::default_grid();
  int threads = 0;  // 0: SOMBOR_THREADS env var, else hardware concurrency
  // Self-test hook: recompute every B0b record with lhs and rhs exchanged, so
  // a healthy corpus must produce violations.  Proves the harness cannot mask
  // a failing bound.
  bool corrupt_aux_zagreb = false;
};

namespace detail {

inline int resolve_thread_count(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("SOMBOR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 64L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

/// Exchange the two sides of a record and rederive slack/holds/equality —
/// the deliberate corruption behind VerifyOptions::corrupt_aux_zagreb.
inline BoundCheck swap_sides(const BoundCheck& c) {
  BoundCheck out = detail::make_check(c.bound_id, c.alpha, c.rhs, c.lhs, c.direction,
                                      c.equality_predicted, c.swapped);
  return out;
}

struct KeyAccum {
  long long graphs_checked = 0;
  std::vector<RecordedCheck> violations;
  std::vector<RecordedCheck> witnesses;
};

struct VerifyPlan {
  const std::vector<BoundFamily>* families = nullptr;
  std::vector<char> family_selected;          // aligned with *families
  std::vector<EnumerationReport> reports;     // key order; lists start empty
  std::map<std::pair<std::string, int>, std::size_t> key_index;  // (sub_id, alpha idx; -1 none)
  AlphaGrid grid{std::vector<double>{1.0}};
  BoundFilter filter;
  bool corrupt_aux_zagreb = false;
};

inline VerifyPlan build_plan(const VerifyOptions& options) {
  VerifyPlan plan;
  plan.families = &bound_families();
  plan.filter = BoundFilter(options.bounds);
  plan.grid = options.grid;
  plan.corrupt_aux_zagreb = options.corrupt_aux_zagreb;
  for (const auto& family : *plan.families) {
    const bool selected = plan.filter.selects_family(family.id);
    plan.family_selected.push_back(selected ? 1 : 0);
    if (!selected) continue;
    auto add_key = [&](const SubIdRegime& regime, std::optional<double> alpha, int alpha_idx) {
      if (!plan.filter.selects_record(family.id, regime.sub_id)) return;
      EnumerationReport report;
      report.bound_id = regime.sub_id;
      report.alpha = alpha;
      report.swapped = regime.swapped;
      plan.key_index[{regime.sub_id, alpha_idx}] = plan.reports.size();
      plan.reports.push_back(std::move(report));
    };
    if (!family.parameterized) {
      for (const auto& regime : family_sub_ids_at(family.id, 0.0))
        add_key(regime, std::nullopt, -1);
      continue;
    }
    for (std::size_t ai = 0; ai < plan.grid.values.size(); ++ai)
      for (const auto& regime : family_sub_ids_at(family.id, plan.grid.values[ai]))
        add_key(regime, plan.grid.values[ai], static_cast<int>(ai));
  }
  return plan;
}

/// Evaluate one graph against the plan, appending into `accums` (aligned with
/// plan.reports).
inline void run_graph(const VerifyPlan& plan, const Graph& g, long long graph_index,
                      std::vector<KeyAccum>& accums) {
  RecordedCheck base;
  base.graph_index = graph_index;
  base.graph6 = serialize_graph6(g);
  base.n = g.vertex_count();
  base.m = g.edge_count();
  const auto& families = *plan.families;
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    if (!plan.family_selected[fi]) continue;
    const auto& family = families[fi];
    auto run_at = [&](double alpha, int alpha_idx) {
      if (!family.applicable(g, alpha)) return;
      // every checker emits exactly one record per active sub-id, so the
      // record loop doubles as the per-key applicable-graph count
      for (auto& check : family.run(g, alpha)) {
        if (plan.corrupt_aux_zagreb && family.id == "B0b") check = swap_sides(check);
        const auto it = plan.key_index.find({check.bound_id, alpha_idx});
        if (it == plan.key_index.end()) continue;  // sub-id filtered out
        KeyAccum& acc = accums[it->second];
        ++acc.graphs_checked;
        if (!check.holds) {
          RecordedCheck rec = base;
          rec.check = std::move(check);
          acc.violations.push_back(std::move(rec));
        } else if (check.equality_observed) {
          RecordedCheck rec = base;
          rec.check = std::move(check);
          acc.witnesses.push_back(std::move(rec));
        }
      }
    };
    if (!family.parameterized) {
      run_at(0.0, -1);
      continue;
    }
    for (std::size_t ai = 0; ai < plan.grid.values.size(); ++ai)
      run_at(plan.grid.values[ai], static_cast<int>(ai));
  }
}

inline void merge_accums(VerifyPlan& plan, std::vector<KeyAccum>& batch) {
  for (std::size_t k = 0; k < batch.size(); ++k) {
    auto& report = plan.reports[k];
    auto& acc = batch[k];
    report.graphs_checked += acc.graphs_checked;
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(acc.violations.begin()),
                             std::make_move_iterator(acc.violations.end()));
    report.equality_witnesses.insert(report.equality_witnesses.end(),
                                     std::make_move_iterator(acc.witnesses.begin()),
                                     std::make_move_iterator(acc.witnesses.end()));
  }
}

}  // namespace detail

/// Run every selected bound family over the corpus at every grid alpha.
/// Returns one report per (sub-inequality, alpha) key in canonical family
/// order then grid order, with violation and witness lists ordered by corpus
/// position — byte-deterministic for a given corpus and options, independent
/// of thread count.  Producer exceptions (e.g. I/O) propagate; violations are
/// reported, never thrown.
inline std::vector<EnumerationReport> verify_corpus(GraphProducer producer,
                                                    const VerifyOptions& options = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::VerifyPlan plan = detail::build_plan(options);
  const int threads = detail::resolve_thread_count(options.threads);

  if (threads <= 1) {
    std::vector<detail::KeyAccum> accums(plan.reports.size());
    long long index = 0;
    while (auto g = producer()) detail::run_graph(plan, *g, index++, accums);
    detail::merge_accums(plan, accums);
  } else {
    struct Batch {
      long long id = 0;
      long long first_index = 0;
      std::vector<Graph> graphs;
    };
    std::mutex mu;
    std::condition_variable cv_push, cv_pop;
    std::deque<Batch> queue;
    std::map<long long, std::vector<detail::KeyAccum>> done;  // batch id -> results
    bool finished = false;
    std::exception_ptr worker_error;
    const std::size_t max_queue = static_cast<std::size_t>(threads) * 4;

    auto worker = [&] {
      for (;;) {
        Batch batch;
        {
          std::unique_lock<std::mutex> lock(mu);
          cv_pop.wait(lock, [&] { return !queue.empty() || finished || worker_error; });
          if (worker_error) return;
          if (queue.empty()) return;  // finished and drained
          batch = std::move(queue.front());
          queue.pop_front();
        }
        cv_push.notify_one();
        std::vector<detail::KeyAccum> accums(plan.reports.size());
        try {
          for (std::size_t i = 0; i < batch.graphs.size(); ++i)
            detail::run_graph(plan, batch.graphs[i], batch.first_index + static_cast<long long>(i),
                              accums);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!worker_error) worker_error = std::current_exception();
          cv_pop.notify_all();
          cv_push.notify_all();
          return;
        }
        {
          std::lock_guard<std::mutex> lock(mu);
          done.emplace(batch.id, std::move(accums));
        }
      }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);

    constexpr std::size_t kBatchSize = 128;
    long long next_index = 0, next_batch = 0;
    std::exception_ptr producer_error;
    try {
      for (;;) {
        Batch batch;
        batch.id = next_batch;
        batch.first_index = next_index;
        batch.graphs.reserve(kBatchSize);
        while (batch.graphs.size() < kBatchSize) {
          auto g = producer();
          if (!g) break;
          batch.graphs.push_back(std::move(*g));
        }
        if (batch.graphs.empty()) break;
        next_index += static_cast<long long>(batch.graphs.size());
        ++next_batch;
        std::unique_lock<std::mutex> lock(mu);
        cv_push.wait(lock, [&] { return queue.size() < max_queue || worker_error; });
        if (worker_error) break;
        queue.push_back(std::move(batch));
        cv_pop.notify_one();
      }
    } catch (...) {
      producer_error = std::current_exception();
    }
    {
      std::lock_guard<std::mutex> lock(mu);
      finished = true;
    }
    cv_pop.notify_all();
    for (auto& t : pool) t.join();
    if (producer_error) std::rethrow_exception(producer_error);
    {
      std::lock_guard<std::mutex> lock(mu);
      if (worker_error) std::rethrow_exception(worker_error);
      for (auto& [id, accums] : done) merge_accums(plan, accums);  // std::map: batch-id order
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  const double seconds = std::chrono::duration<double>(t1 - t0).count();
  for (auto& report : plan.reports) report.runtime_seconds = seconds;
  return plan.reports;
}

/// Convenience producer over an in-memory corpus (mainly for tests).
inline GraphProducer producer_from_vector(std::vector<Graph> graphs) {
  auto state = std::make_shared<std::pair<std::vector<Graph>, std::size_t>>(std::move(graphs), 0);
  return [state]() -> std::optional<Graph> {
    if (state->second >= state->first.size()) return std::nullopt;
    return state->first[state->second++];
  };
}

/// True when any report carries a violation (the CLI's exit-1 condition).
inline bool any_violations(const std::vector<EnumerationReport>& reports) {
  for (const auto& r : reports)
    if (!r.violations.empty()) return true;
  return false;
}

}  // namespace sombor
