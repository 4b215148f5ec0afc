#pragma once

// Brute-force oracles used only by the tests. None of these share code paths
// with the library routines they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "estrada/graph.hpp"

namespace oracle {

using estrada::Graph;

inline std::vector<std::vector<int>> dense(const Graph& g) {
  std::vector<std::vector<int>> a(g.order(), std::vector<int>(g.order(), 0));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) a[i][j] = g.adjacent(i, j);
  return a;
}

/// Every labelled simple graph on n vertices (n <= 6).
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph::Builder b(n);
    for (std::size_t e = 0; e < slots.size(); ++e)
      if ((mask >> e) & 1U) b.edge(slots[e].first, slots[e].second);
    out.push_back(b.build());
  }
  return out;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Graph::Builder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) b.edge(i, j);
  return b.build();
}

/// Random bipartite graph with a random side assignment.
inline Graph random_bipartite(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density), side(0.5);
  std::vector<int> colour(n);
  for (auto& c : colour) c = side(rng);
  Graph::Builder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (colour[i] != colour[j] && coin(rng)) b.edge(i, j);
  return b.build();
}

/// Bipartite iff some 2-colouring of all 2^n assignments is proper.
inline bool bipartite_by_colouring(const Graph& g) {
  const int n = g.order();
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (((c >> u) & 1U) == ((c >> v) & 1U)) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Components counted by union-find over the surviving vertices/edges.
inline bool connected_after(const Graph& g, std::uint64_t removed_vertices,
                            const std::vector<bool>& removed_edges = {}) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (((removed_vertices >> u) & 1U) || ((removed_vertices >> v) & 1U)) continue;
    if (!removed_edges.empty() && removed_edges[e]) continue;
    parent[find(u)] = find(v);
  }
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if ((removed_vertices >> v) & 1U) continue;
    if (root < 0) root = find(v);
    else if (find(v) != root) return false;
  }
  return true;
}

inline int matching_by_edge_subsets(const Graph& g) {
  const auto edges = g.edges();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (!((mask >> e) & 1U)) continue;
      const auto [u, v] = edges[e];
      const std::uint64_t both = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      ok = !(used & both);
      used |= both;
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline int vertex_connectivity_by_subsets(const Graph& g) {
  const int n = g.order();
  if (!connected_after(g, 0)) return 0;
  int best = n - 1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size >= best || n - size < 2) continue;
    if (!connected_after(g, s)) best = size;
  }
  return best;
}

/// Smallest disconnecting edge set, trying every subset of size 1..max_size in
/// turn. Returns max_size + 1 when none of those disconnects the graph.
inline int edge_connectivity_by_subsets(const Graph& g, int max_size) {
  const int n = g.order();
  if (n == 1 || !connected_after(g, 0)) return 0;
  const int m = static_cast<int>(g.edges().size());
  for (int size = 1; size <= std::min(max_size, m); ++size) {
    std::vector<bool> removed(m, false);
    std::fill(removed.end() - size, removed.end(), true);
    do {
      if (!connected_after(g, 0, removed)) return size;
    } while (std::next_permutation(removed.begin(), removed.end()));
  }
  return max_size + 1;
}

/// trace(A^k) with plain 64-bit dense products (small graphs, small k).
inline std::int64_t trace_power(const Graph& g, int k) {
  const auto a = dense(g);
  const int n = g.order();
  std::vector<std::vector<std::int64_t>> p(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) p[i][i] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<std::int64_t>> next(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (p[i][l])
          for (int j = 0; j < n; ++j) next[i][j] += p[i][l] * a[l][j];
    p = std::move(next);
  }
  std::int64_t t = 0;
  for (int i = 0; i < n; ++i) t += p[i][i];
  return t;
}

/// Number of u-v walks of length k by explicit depth-first enumeration.
inline std::int64_t count_walks(const Graph& g, int u, int v, int k) {
  if (k == 0) return u == v ? 1 : 0;
  std::int64_t total = 0;
  for (int w = 0; w < g.order(); ++w)
    if (g.adjacent(u, w)) total += count_walks(g, w, v, k - 1);
  return total;
}

inline std::int64_t count_closed_walks(const Graph& g, int k) {
  std::int64_t total = 0;
  for (int v = 0; v < g.order(); ++v) total += count_walks(g, v, v, k);
  return total;
}

/// Isomorphism by trying every permutation (n <= 8).
inline bool isomorphic_by_permutation(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!h.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph::Builder b(g.order());
  for (auto [u, v] : g.edges()) b.edge(perm[u], perm[v]);
  return b.build();
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

/// EE = trace(exp(A)) by the truncated Taylor series of the dense matrix in
/// long double; independent of every eigen routine. Small n and degree only.
inline long double estrada_by_matrix_exponential(const Graph& g, int terms = 80) {
  const int n = g.order();
  const auto a = dense(g);
  std::vector<std::vector<long double>> term(n, std::vector<long double>(n, 0));
  for (int i = 0; i < n; ++i) term[i][i] = 1;
  long double sum = n;
  for (int k = 1; k < terms; ++k) {
    std::vector<std::vector<long double>> next(n, std::vector<long double>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (term[i][l] != 0)
          for (int j = 0; j < n; ++j) next[i][j] += term[i][l] * a[l][j];
    for (auto& row : next)
      for (auto& x : row) x /= k;
    term = std::move(next);
    for (int i = 0; i < n; ++i) sum += term[i][i];
  }
  return sum;
}

}  // namespace oracle
