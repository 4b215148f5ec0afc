#pragma once

#include <string>

#include "estrada/graph.hpp"

namespace estrada {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
  Graph::Builder b(n);
  for (int v = 0; v + 1 < n; ++v) b.edge(v, v + 1);
  return b.build();
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  Graph::Builder b(n);
  for (int v = 0; v < n; ++v) b.edge(v, (v + 1) % n);
  return b.build();
}

/// Disjoint union; h's vertices follow g's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph::Builder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.edge(u, v);
  for (auto [u, v] : h.edges()) b.edge(g.order() + u, g.order() + v);
  return b.build();
}

/// K_{p,q}: vertices 0..p-1 on one side, p..p+q-1 on the other.
inline Graph complete_bipartite(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw InvalidInput("complete_bipartite: need p,q >= 0 and p+q >= 1");
  if (p + q > kMaxOrder) throw InvalidInput("complete_bipartite: order too large");
  Graph::Builder b(p + q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) b.edge(i, p + j);
  return b.build();
}

/// O_s joined (on one side) to K_1 and to the p-side of K_{p,q}.
struct JoinFamilyParams {
  int s = 1;
  int p = 0;
  int q = 0;

  int order() const { return s + p + q + 1; }

  void validate() const {
    if (s < 1 || p < 0 || q < 0) throw InvalidInput("join family needs s >= 1, p >= 0, q >= 0");
    if (order() > kMaxOrder) throw InvalidInput("join family order too large");
  }
  bool operator==(const JoinFamilyParams&) const = default;
};

/// Vertex order: u, then O_s, then the p-side, then the q-side.
/// Sides of the bipartition are {u} + p-side and O_s + q-side. With q = 0 this
/// is K_{s,p+1}.
inline Graph join_family(const JoinFamilyParams& params) {
  params.validate();
  const auto [s, p, q] = params;
  const int o0 = 1, p0 = 1 + s, q0 = 1 + s + p;
  Graph::Builder b(params.order());
  for (int i = 0; i < s; ++i) {
    b.edge(0, o0 + i);
    for (int j = 0; j < p; ++j) b.edge(o0 + i, p0 + j);
  }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) b.edge(p0 + i, q0 + j);
  return b.build();
}

inline Graph join_family(int s, int p, int q) { return join_family(JoinFamilyParams{s, p, q}); }

/// O_s joined to the n1-side of K_{n1,n2} and the m1-side of K_{m1,m2}.
/// Vertex order: O_s, n1-side, n2-side, m1-side, m2-side.
inline Graph join_family_double(int s, int n1, int n2, int m1, int m2) {
  if (s < 1 || n1 < 0 || n2 < 0 || m1 < 0 || m2 < 0)
    throw InvalidInput("join_family_double needs s >= 1 and non-negative part sizes");
  const int n = s + n1 + n2 + m1 + m2;
  if (n > kMaxOrder) throw InvalidInput("join_family_double order too large");
  const int a0 = s, b0 = a0 + n1, c0 = b0 + n2, d0 = c0 + m1;
  Graph::Builder b(n);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) b.edge(a0 + i, b0 + j);
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < m2; ++j) b.edge(c0 + i, d0 + j);
  for (int o = 0; o < s; ++o) {
    for (int i = 0; i < n1; ++i) b.edge(o, a0 + i);
    for (int i = 0; i < m1; ++i) b.edge(o, c0 + i);
  }
  return b.build();
}

/// Sizes of X1, X2, Y1, Y2 where X1 + Y1 is a minimum covering of G[X, Y].
/// Vertices are laid out as X1, X2, Y1, Y2 in that order.
struct CoverPartition {
  int x1 = 0;
  int x2 = 0;
  int y1 = 0;
  int y2 = 0;

  int order() const { return x1 + x2 + y1 + y2; }

  void validate() const {
    if (x1 < 0 || x2 < 0 || y1 < 0 || y2 < 0) throw InvalidInput("cover partition sizes must be non-negative");
    if (order() < 1 || order() > kMaxOrder) throw InvalidInput("cover partition order out of range");
    if (x1 < y1) throw InvalidInput("cover partition requires |X1| >= |Y1|");
  }
};

namespace detail {
struct CoverLayout {
  int x1, x2, y1, y2;  // first vertex of each block
};
inline CoverLayout layout(const CoverPartition& c) { return {0, c.x1, c.x1 + c.x2, c.x1 + c.x2 + c.y1}; }
}  // namespace detail

/// X1 joined to all of Y, X2 joined to Y1.
inline Graph g_star(const CoverPartition& c) {
  c.validate();
  const auto at = detail::layout(c);
  Graph::Builder b(c.order());
  for (int i = 0; i < c.x1; ++i) {
    for (int j = 0; j < c.y1; ++j) b.edge(at.x1 + i, at.y1 + j);
    for (int j = 0; j < c.y2; ++j) b.edge(at.x1 + i, at.y2 + j);
  }
  for (int i = 0; i < c.x2; ++i)
    for (int j = 0; j < c.y1; ++j) b.edge(at.x2 + i, at.y1 + j);
  return b.build();
}

/// g_star with the X2-Y1 edges replaced by X2-X1 edges; isomorphic to K_{|X1|, n-|X1|}.
inline Graph g_double_star(const CoverPartition& c) {
  c.validate();
  const auto at = detail::layout(c);
  Graph::Builder b(c.order());
  for (int i = 0; i < c.x1; ++i) {
    for (int j = 0; j < c.x2; ++j) b.edge(at.x1 + i, at.x2 + j);
    for (int j = 0; j < c.y1; ++j) b.edge(at.x1 + i, at.y1 + j);
    for (int j = 0; j < c.y2; ++j) b.edge(at.x1 + i, at.y2 + j);
  }
  return b.build();
}

/// Family predicted to maximise the Estrada index in C_{n,s} and D_{n,s}:
/// O_s joined to K_1 and K_{floor((n-1)/2), ceil((n-1)/2) - s}.
inline JoinFamilyParams predicted_connectivity_params(int n, int s) {
  const int p = (n - 1) / 2;
  const int q = n / 2 - s;  // ceil((n-1)/2) == floor(n/2)
  if (q < 0) throw InvalidInput("no predicted connectivity family for n=" + std::to_string(n) + ", s=" +
                                std::to_string(s));
  return {s, p, q};
}

}  // namespace estrada
