#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "estrada/families.hpp"
#include "estrada/graph.hpp"
#include "estrada/invariants.hpp"
#include "estrada/isomorphism.hpp"
#include "estrada/spectral.hpp"

namespace estrada {

// Enumeration -------------------------------------------------------------

/// One block of the enumeration stream: all 2^(a*b) biadjacency masks of a split a + b = n.
struct Split {
  int a = 0;
  int b = 0;
  std::uint64_t offset = 0;  // stream index of mask 0
  std::uint64_t count = 0;
};

inline void check_enumeration_order(int n, bool allow_n10 = true) {
  if (n < 2 || n > 10) throw InvalidInput("enumeration order must be in 2..10, got " + std::to_string(n));
  if (n == 10 && !allow_n10) throw InvalidInput("n = 10 needs the explicit opt-in flag");
}

inline std::vector<Split> bipartite_splits(int n) {
  check_enumeration_order(n);
  std::vector<Split> splits;
  std::uint64_t offset = 0;
  for (int a = 1; a <= n / 2; ++a) {
    const int b = n - a;
    const std::uint64_t count = std::uint64_t{1} << (a * b);
    splits.push_back({a, b, offset, count});
    offset += count;
  }
  return splits;
}

inline std::uint64_t stream_size(int n) {
  const auto splits = bipartite_splits(n);
  return splits.back().offset + splits.back().count;
}

/// Visits every stream position in [first, last) as (graph, index). Each
/// bipartite graph of order n appears at least once; labelled duplicates are
/// expected. Disconnected graphs are skipped when `connected_only`.
template <typename Visitor>
void enumerate_bipartite_range(int n, bool connected_only, std::uint64_t first, std::uint64_t last, Visitor&& visit) {
  for (const Split& sp : bipartite_splits(n)) {
    const std::uint64_t lo = std::max(first, sp.offset), hi = std::min(last, sp.offset + sp.count);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const Graph g = from_biadjacency_mask(sp.a, sp.b, idx - sp.offset);
      if (connected_only && !is_connected(g)) continue;
      visit(g, idx);
    }
  }
}

template <typename Visitor>
void enumerate_bipartite(int n, bool connected_only, Visitor&& visit) {
  enumerate_bipartite_range(n, connected_only, 0, stream_size(n), std::forward<Visitor>(visit));
}

inline std::vector<Graph> collect_bipartite(int n, bool connected_only) {
  std::vector<Graph> out;
  enumerate_bipartite(n, connected_only, [&](const Graph& g, std::uint64_t) { out.push_back(g); });
  return out;
}

inline bool classify(const Graph& g, const ClassDescriptor& cls) {
  return g.order() == cls.n && is_bipartite(g) && class_value(g, cls.kind) == cls.value;
}

// Maximiser search ---------------------------------------------------------

struct SearchOptions {
  int threads = 1;
  double near_tie = 1e-6;
  int k_max = kMomentBudget;
  double tolerance = kJacobiTolerance;
  bool allow_n10 = false;
};

struct Candidate {
  Graph graph{1};
  double ee = 0;
  std::uint64_t index = 0;  // smallest stream index seen for this isomorphism class
};

/// Distinct isomorphism classes whose Estrada index is within `near_tie` of the
/// runner-up class or better. Merging is associative and each class keeps its
/// lowest-index representative, so the outcome does not depend on chunking.
class TopClasses {
 public:
  explicit TopClasses(double near_tie = 1e-6) : near_tie_(near_tie) {}

  double threshold() const { return threshold_; }
  const std::vector<Candidate>& classes() const { return classes_; }

  void offer(const Graph& g, double ee, std::uint64_t index) {
    if (ee < threshold_) return;
    insert({g, ee, index});
  }

  void merge(const TopClasses& other) {
    for (const auto& c : other.classes_)
      if (c.ee >= threshold_) insert(c);
  }

  /// Classes ordered by (ee desc, index asc).
  std::vector<Candidate> sorted() const {
    auto out = classes_;
    std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
      return x.ee != y.ee ? x.ee > y.ee : x.index < y.index;
    });
    return out;
  }

 private:
  void insert(Candidate c) {
    const auto degrees = degree_sequence(c.graph);
    const int edges = c.graph.edge_count();
    for (auto& existing : classes_) {
      if (existing.graph.edge_count() != edges || degree_sequence(existing.graph) != degrees) continue;
      if (!is_isomorphic(existing.graph, c.graph)) continue;
      if (c.index < existing.index) existing = std::move(c);
      return;
    }
    classes_.push_back(std::move(c));
    prune();
  }

  void prune() {
    if (classes_.size() < 2) return;
    double best = -std::numeric_limits<double>::infinity(), second = best;
    for (const auto& c : classes_) {
      if (c.ee > best) {
        second = best;
        best = c.ee;
      } else if (c.ee > second) {
        second = c.ee;
      }
    }
    threshold_ = second - near_tie_;
    std::erase_if(classes_, [&](const Candidate& c) { return c.ee < threshold_; });
  }

  double near_tie_;
  double threshold_ = -std::numeric_limits<double>::infinity();
  std::vector<Candidate> classes_;
};

struct ExtremalReport {
  ClassDescriptor cls;
  std::optional<Graph> predicted;
  double predicted_ee = 0;
  std::optional<Graph> maximizer;
  double max_ee = 0;
  std::optional<double> runner_up_gap;  // none when the class has a single isomorphism type
  bool unique = false;
  bool undecided = false;  // co-maximisers still tied after exact moments up to k_max
  bool matches_prediction = false;
  bool membership_revalidated = false;
  int near_ties = 0;  // isomorphism classes within near_tie of the maximum
  std::optional<std::string> maximizer_family;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t class_size = 0;  // labelled stream members in the class
  double duration_seconds = 0;   // excluded from determinism checks

  bool empty() const { return class_size == 0; }
  bool verified() const { return empty() || (unique && matches_prediction && membership_revalidated); }

  std::string status() const {
    if (empty()) return "empty";
    if (undecided) return "undecided";
    if (!unique) return "not-unique";
    if (!matches_prediction) return "mismatch";
    if (!membership_revalidated) return "membership-error";
    return "verified";
  }
};

inline std::optional<Graph> predicted_maximizer(const ClassDescriptor& cls) {
  if (cls.kind == ClassKind::matching) {
    if (cls.value < 1 || cls.value > cls.n / 2) return std::nullopt;
    return complete_bipartite(cls.value, cls.n - cls.value);
  }
  if (cls.value < 1 || cls.n / 2 - cls.value < 0) return std::nullopt;
  return join_family(predicted_connectivity_params(cls.n, cls.value));
}

/// Names the maximiser when it is K_{a,b} or a member O_s v1 (K_1 u K_{p,q}).
inline std::optional<std::string> describe_family(const Graph& g) {
  const int n = g.order();
  for (int a = 1; a <= n / 2; ++a)
    if (is_isomorphic(g, complete_bipartite(a, n - a)))
      return "complete-bipartite(" + std::to_string(a) + "," + std::to_string(n - a) + ")";
  for (int s = 1; s < n; ++s)
    for (int p = 1; s + p + 1 <= n; ++p) {
      const int q = n - s - p - 1;
      if (q >= 1 && is_isomorphic(g, join_family(s, p, q)))
        return "join(s=" + std::to_string(s) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
    }
  return std::nullopt;
}

namespace detail {

struct ChunkResult {
  std::map<int, TopClasses> top;
  std::map<int, std::uint64_t> sizes;
};

inline ChunkResult scan_chunk(ClassKind kind, int n, const std::vector<int>& values, std::uint64_t first,
                              std::uint64_t last, const SearchOptions& opt) {
  ChunkResult out;
  for (int v : values) {
    out.top.emplace(v, TopClasses(opt.near_tie));
    out.sizes[v] = 0;
  }
  const bool connected_only = kind != ClassKind::matching;
  enumerate_bipartite_range(n, connected_only, first, last, [&](const Graph& g, std::uint64_t idx) {
    const int value = class_value(g, kind);
    auto it = out.top.find(value);
    if (it == out.top.end()) return;
    ++out.sizes[value];
    const double ee = estrada_from_spectrum(jacobi_eigenvalues_extended(g, opt.tolerance));
    it->second.offer(g, ee, idx);
  });
  return out;
}

}  // namespace detail

/// Selects the maximiser among the retained classes: floating EE first, then
/// exact moment comparison among classes within near_tie of the top.
inline void rank_candidates(const TopClasses& top, const SearchOptions& opt, ExtremalReport& report) {
  const auto classes = top.sorted();
  if (classes.empty()) return;
  std::vector<Candidate> window;
  for (const auto& c : classes)
    if (c.ee >= classes.front().ee - opt.near_tie) window.push_back(c);
  report.near_ties = static_cast<int>(window.size());

  std::size_t winner = 0;
  bool tied = false;
  for (std::size_t i = 1; i < window.size(); ++i) {
    const auto cmp = compare_ee_exact(window[i].graph, window[winner].graph, opt.k_max);
    if (cmp.order == std::strong_ordering::greater) {
      winner = i;
      tied = false;
    } else if (cmp.equal_up_to_cutoff) {
      tied = true;
    }
  }
  // A tie recorded before the final winner emerged may not involve it; recheck.
  if (tied) {
    tied = false;
    for (std::size_t i = 0; i < window.size(); ++i)
      if (i != winner && compare_ee_exact(window[i].graph, window[winner].graph, opt.k_max).equal_up_to_cutoff)
        tied = true;
  }
  const Candidate& best = window[winner];
  report.maximizer = best.graph;
  report.max_ee = best.ee;
  report.undecided = tied;
  report.unique = !tied;
  double runner_up = -std::numeric_limits<double>::infinity();
  for (const auto& c : classes)
    if (c.index != best.index) runner_up = std::max(runner_up, c.ee);
  if (classes.size() > 1) report.runner_up_gap = best.ee - runner_up;
}

/// One exhaustive pass over the bipartite graphs of order n, producing a report
/// for every requested class value of the given kind.
inline std::vector<ExtremalReport> search_maximizers(ClassKind kind, int n, const std::vector<int>& values,
                                                     const SearchOptions& opt = {}) {
  check_enumeration_order(n, opt.allow_n10);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = stream_size(n);
  const int threads = std::max(1, opt.threads);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads) * 4);

  std::vector<detail::ChunkResult> results(chunks);
  auto bounds = [&](std::uint64_t c) { return std::pair{total * c / chunks, total * (c + 1) / chunks}; };
  if (threads == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) {
      auto [lo, hi] = bounds(c);
      results[c] = detail::scan_chunk(kind, n, values, lo, hi, opt);
    }
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t c = t; c < chunks; c += threads) {
          auto [lo, hi] = bounds(c);
          results[c] = detail::scan_chunk(kind, n, values, lo, hi, opt);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<ExtremalReport> reports;
  for (int v : values) {
    TopClasses merged(opt.near_tie);
    ExtremalReport report;
    report.cls = {kind, n, v};
    report.graphs_scanned = total;
    for (const auto& r : results) {
      merged.merge(r.top.at(v));
      report.class_size += r.sizes.at(v);
    }
    report.predicted = predicted_maximizer(report.cls);
    if (report.predicted) report.predicted_ee = estrada_from_spectrum(jacobi_eigenvalues_extended(*report.predicted, opt.tolerance));
    rank_candidates(merged, opt, report);
    if (report.maximizer) {
      report.membership_revalidated = classify(*report.maximizer, report.cls);
      report.matches_prediction = report.predicted && is_isomorphic(*report.maximizer, *report.predicted);
      report.maximizer_family = describe_family(*report.maximizer);
    }
    reports.push_back(std::move(report));
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : reports) r.duration_seconds = elapsed;
  return reports;
}

/// Class values examined for order n: 1..floor(n/2) for every kind. For bipartite
/// graphs both connectivities are bounded by the smaller side.
inline std::vector<int> class_values(int n) {
  std::vector<int> v;
  for (int x = 1; x <= n / 2; ++x) v.push_back(x);
  return v;
}

inline ExtremalReport find_maximizer(const ClassDescriptor& cls, const SearchOptions& opt = {}) {
  cls.validate();
  return search_maximizers(cls.kind, cls.n, {cls.value}, opt).front();
}

}  // namespace estrada
