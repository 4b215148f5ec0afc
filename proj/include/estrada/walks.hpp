#pragma once

#include <optional>
#include <string>
#include <vector>

#include "estrada/exact.hpp"
#include "estrada/graph.hpp"
#include "estrada/spectral.hpp"

namespace estrada {

/// counts[k](u, v) = number of u-v walks of length k, for k = 0..cutoff.
struct WalkCountTable {
  int order = 0;
  std::vector<BigMatrix> counts;

  int cutoff() const { return static_cast<int>(counts.size()) - 1; }
  const BigInt& operator()(int k, int u, int v) const { return counts[k](u, v); }
  BigInt closed(int k) const { return counts[k].trace(); }
};

inline WalkCountTable walk_counts(const Graph& g, int cutoff) {
  if (cutoff < 0 || cutoff > kMomentBudget)
    throw InvalidInput("walk cutoff must be in 0.." + std::to_string(kMomentBudget));
  WalkCountTable table;
  table.order = g.order();
  table.counts.reserve(cutoff + 1);
  table.counts.push_back(BigMatrix::identity(g.order()));
  for (int k = 1; k <= cutoff; ++k) table.counts.push_back(times_adjacency(table.counts.back(), g));
  return table;
}

struct TwinVerdict {
  bool holds = true;
  std::optional<int> first_violation;
};

/// For N(u) = N(v): checks M_k(u) = M_k(v) = M_k(u,v) = M_k(v,u) for k <= cutoff.
inline TwinVerdict twin_check(const Graph& g, int u, int v, int cutoff) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw InvalidInput("twin_check: vertex out of range");
  if (u == v) throw InvalidInput("twin_check: u and v must be distinct");
  const VertexSet diff = g.neighbors(u) ^ g.neighbors(v);
  if (diff)
    throw InvalidInput("twin_check: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                       " are not twins (neighbour " + std::to_string(std::countr_zero(diff)) +
                       " is adjacent to only one of them)");
  const auto table = walk_counts(g, cutoff);
  TwinVerdict verdict;
  for (int k = 0; k <= cutoff; ++k) {
    // Length-0 walks are the identity: M_0(u,v) = 0 while M_0(u) = 1.
    if (k == 0) continue;
    const BigInt& uu = table(k, u, u);
    if (table(k, v, v) != uu || table(k, u, v) != uu || table(k, v, u) != uu) {
      verdict.holds = false;
      verdict.first_violation = k;
      break;
    }
  }
  return verdict;
}

/// G1 and G2 glued along independent sets: s1[i] in G1 is identified with s2[i] in G2.
struct IdentificationScheme {
  Graph g1{1};
  std::vector<int> s1;
  Graph g2{1};
  std::vector<int> s2;

  int size() const { return static_cast<int>(s1.size()); }

  void validate() const {
    if (s1.size() != s2.size()) throw InvalidInput("identification sets differ in size");
    if (s1.empty()) throw InvalidInput("identification set must be non-empty");
    check_independent(g1, s1, "G1");
    check_independent(g2, s2, "G2");
  }

 private:
  static void check_independent(const Graph& g, const std::vector<int>& s, const char* name) {
    VertexSet seen = 0;
    for (int v : s) {
      if (v < 0 || v >= g.order()) throw InvalidInput(std::string("identification vertex out of range in ") + name);
      if ((seen >> v) & 1U) throw InvalidInput(std::string("repeated identification vertex in ") + name);
      seen |= bit(v);
    }
    for (int v : s)
      if (g.neighbors(v) & seen) throw InvalidInput(std::string("identification set is not independent in ") + name);
  }
};

/// Index of each G2 vertex inside the glued graph. G1 keeps its labels; the
/// non-identified G2 vertices follow in G2 order.
inline std::vector<int> identification_map(const IdentificationScheme& scheme) {
  std::vector<int> map(scheme.g2.order(), -1);
  for (int i = 0; i < scheme.size(); ++i) map[scheme.s2[i]] = scheme.s1[i];
  int next = scheme.g1.order();
  for (int v = 0; v < scheme.g2.order(); ++v)
    if (map[v] < 0) map[v] = next++;
  return map;
}

inline Graph identify_union(const IdentificationScheme& scheme) {
  scheme.validate();
  const int n = scheme.g1.order() + scheme.g2.order() - scheme.size();
  if (n > kMaxOrder) throw InvalidInput("identified graph exceeds the maximum order");
  const auto map = identification_map(scheme);
  Graph::Builder b(n);
  for (auto [u, v] : scheme.g1.edges()) b.edge(u, v);
  for (auto [u, v] : scheme.g2.edges()) b.edge(map[u], map[v]);
  return b.build();
}

struct DominanceReport {
  bool whole_premise = true;     // M_k(G1) <= M_k(G1'), M_k(G2) <= M_k(G2')
  bool anchored_premise = true;  // (Gi; v_a, v_b) precedes (Gi'; v_a', v_b') for all a, b
  bool premise_strict = false;   // some premise inequality is strict
  bool conclusion_holds = true;  // M_k(G) <= M_k(G')
  bool conclusion_strict = false;
  std::optional<int> first_violation;  // first k with M_k(G) > M_k(G')
  int cutoff = 0;

  bool premises_hold() const { return whole_premise && anchored_premise; }
};

/// Checks the premises and the conclusion of the moment-dominance lemma for
/// glued graphs on this instance, exactly, for k = 1..cutoff. This is a
/// falsification harness: nothing beyond the cutoff is claimed.
inline DominanceReport dominance_check(const IdentificationScheme& lhs, const IdentificationScheme& rhs, int cutoff) {
  if (lhs.size() != rhs.size()) throw InvalidInput("dominance_check: identification sizes differ");
  lhs.validate();
  rhs.validate();
  const auto w1 = walk_counts(lhs.g1, cutoff), w1p = walk_counts(rhs.g1, cutoff);
  const auto w2 = walk_counts(lhs.g2, cutoff), w2p = walk_counts(rhs.g2, cutoff);
  const auto w = walk_counts(identify_union(lhs), cutoff), wp = walk_counts(identify_union(rhs), cutoff);

  DominanceReport report;
  report.cutoff = cutoff;
  auto compare = [&report](const BigInt& a, const BigInt& b, bool& premise) {
    if (a > b) premise = false;
    if (a < b) report.premise_strict = true;
  };
  const int s = lhs.size();
  for (int k = 1; k <= cutoff; ++k) {
    compare(w1.closed(k), w1p.closed(k), report.whole_premise);
    compare(w2.closed(k), w2p.closed(k), report.whole_premise);
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        compare(w1(k, lhs.s1[i], lhs.s1[j]), w1p(k, rhs.s1[i], rhs.s1[j]), report.anchored_premise);
        compare(w2(k, lhs.s2[i], lhs.s2[j]), w2p(k, rhs.s2[i], rhs.s2[j]), report.anchored_premise);
      }
    }
    const BigInt mk = w.closed(k), mkp = wp.closed(k);
    if (mk > mkp && !report.first_violation) {
      report.conclusion_holds = false;
      report.first_violation = k;
    }
    if (mk < mkp) report.conclusion_strict = true;
  }
  return report;
}

}  // namespace estrada
