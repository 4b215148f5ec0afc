#pragma once

#include <algorithm>
#include <bit>
#include <string>
#include <string_view>
#include <vector>

#include "estrada/graph.hpp"

namespace estrada {

enum class ClassKind { matching, vertex_connectivity, edge_connectivity };

inline std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::matching: return "matching";
    case ClassKind::vertex_connectivity: return "vertex-connectivity";
    case ClassKind::edge_connectivity: return "edge-connectivity";
  }
  return "?";
}

/// One of M_{n,p} (matching number p), C_{n,s} (vertex connectivity s) or
/// D_{n,s} (edge connectivity s), restricted to bipartite graphs of order n.
struct ClassDescriptor {
  ClassKind kind = ClassKind::matching;
  int n = 1;
  int value = 1;

  void validate() const {
    if (n < 1 || n > kMaxOrder) throw InvalidInput("class order out of range");
    if (kind == ClassKind::matching && (value < 1 || value > n / 2))
      throw InvalidInput("matching class requires 1 <= p <= floor(n/2)");
    if (kind != ClassKind::matching && value < 1)
      throw InvalidInput("connectivity classes require s >= 1");
  }
  bool operator==(const ClassDescriptor&) const = default;
};

namespace detail {

struct BipartiteMatching {
  int size = 0;
  std::vector<int> mate;  // mate[v] or -1
};

inline bool augment(const Graph& g, int x, VertexSet side_y, std::vector<int>& mate, VertexSet& visited) {
  for (VertexSet r = g.neighbors(x) & side_y & ~visited; r; r &= r - 1) {
    const int y = std::countr_zero(r);
    if ((visited >> y) & 1U) continue;
    visited |= bit(y);
    if (mate[y] < 0 || augment(g, mate[y], side_y, mate, visited)) {
      mate[y] = x;
      mate[x] = y;
      return true;
    }
  }
  return false;
}

inline BipartiteMatching bipartite_matching(const Graph& g, const Bipartition& part) {
  BipartiteMatching m;
  m.mate.assign(g.order(), -1);
  for (VertexSet xs = part.side_x; xs; xs &= xs - 1) {
    VertexSet visited = 0;
    if (augment(g, std::countr_zero(xs), part.side_y, m.mate, visited)) ++m.size;
  }
  return m;
}

inline int brute_force_matching(const Graph& g) {
  const int n = g.order();
  std::vector<signed char> memo(std::size_t{1} << n, -1);
  auto solve = [&](auto&& self, VertexSet s) -> int {
    if (s == 0) return 0;
    if (memo[s] >= 0) return memo[s];
    const int v = std::countr_zero(s);
    const VertexSet rest = s & ~bit(v);
    int best = self(self, rest);
    for (VertexSet r = g.neighbors(v) & rest; r; r &= r - 1)
      best = std::max(best, 1 + self(self, rest & ~bit(std::countr_zero(r))));
    memo[s] = static_cast<signed char>(best);
    return best;
  };
  return solve(solve, g.all());
}

/// Dense unit-capacity flow network; augmenting paths found by BFS.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : n_(nodes), cap_(static_cast<std::size_t>(nodes) * nodes, 0) {}
  void add(int u, int v, int c) { cap_[u * n_ + v] += c; }

  /// Max flow from s to t, stopping early once `limit` units have been pushed.
  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> parent(n_);
    std::vector<int> queue(n_);
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[s] = s;
      int head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail && parent[t] < 0) {
        const int u = queue[head++];
        for (int v = 0; v < n_; ++v) {
          if (parent[v] < 0 && cap_[u * n_ + v] > 0) {
            parent[v] = u;
            queue[tail++] = v;
          }
        }
      }
      if (parent[t] < 0) break;
      for (int v = t; v != s; v = parent[v]) {
        cap_[parent[v] * n_ + v] -= 1;
        cap_[v * n_ + parent[v]] += 1;
      }
      ++flow;
    }
    return flow;
  }

 private:
  int n_;
  std::vector<int> cap_;
};

/// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).
inline int local_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  const int n = g.order();
  const int inf = n;
  FlowNetwork net(2 * n);  // v_in = 2v, v_out = 2v+1
  for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
  for (auto [u, v] : g.edges()) {
    net.add(2 * u + 1, 2 * v, inf);
    net.add(2 * v + 1, 2 * u, inf);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

inline int local_edge_connectivity(const Graph& g, int s, int t, int limit) {
  FlowNetwork net(g.order());
  for (auto [u, v] : g.edges()) {
    net.add(u, v, 1);
    net.add(v, u, 1);
  }
  return net.max_flow(s, t, limit);
}

}  // namespace detail

/// Size of a maximum matching. Bipartite graphs use augmenting paths; other
/// graphs fall back to exhaustive search and are rejected above 20 vertices.
inline int matching_number(const Graph& g) {
  if (auto part = find_bipartition(g)) return detail::bipartite_matching(g, *part).size;
  if (g.order() > 20) throw InvalidInput("matching_number: non-bipartite input above 20 vertices");
  return detail::brute_force_matching(g);
}

struct Cover {
  int size = 0;
  VertexSet vertices = 0;
};

/// Minimum vertex cover of a bipartite graph, built from a maximum matching via
/// alternating reachability from the unmatched left vertices.
inline Cover covering_number(const Graph& g) {
  const auto part = find_bipartition(g);
  if (!part) throw InvalidInput("covering_number requires a bipartite graph");
  const auto m = detail::bipartite_matching(g, *part);

  VertexSet z = 0;
  for (VertexSet xs = part->side_x; xs; xs &= xs - 1) {
    const int x = std::countr_zero(xs);
    if (m.mate[x] < 0) z |= bit(x);
  }
  VertexSet frontier = z;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) {
      const int x = std::countr_zero(f);
      for (VertexSet r = g.neighbors(x) & ~z; r; r &= r - 1) {
        const int y = std::countr_zero(r);
        z |= bit(y);
        if (m.mate[y] >= 0 && !((z >> m.mate[y]) & 1U)) next |= bit(m.mate[y]);
      }
    }
    z |= next;
    frontier = next;
  }
  Cover c;
  c.vertices = (part->side_x & ~z) | (part->side_y & z);
  c.size = popcount(c.vertices);
  return c;
}

/// kappa(G) = min{n-1, |S| : S a vertex cut}. Even's scheme: some vertex among
/// the first kappa+1 lies outside a minimum cut and is separated from a later one.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 1 || !is_connected(g)) return 0;
  int best = n - 1;
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, detail::local_vertex_connectivity(g, i, j, best));
    }
  }
  return best;
}

/// kappa'(G): minimum over t of the s-t edge cut with s fixed to vertex 0.
inline int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 1 || !is_connected(g)) return 0;
  int best = g.min_degree();
  for (int t = 1; t < n && best > 0; ++t)
    best = std::min(best, detail::local_edge_connectivity(g, 0, t, best));
  return best;
}

/// The class parameter of `g` for the given kind.
inline int class_value(const Graph& g, ClassKind kind) {
  switch (kind) {
    case ClassKind::matching: return matching_number(g);
    case ClassKind::vertex_connectivity: return vertex_connectivity(g);
    case ClassKind::edge_connectivity: return edge_connectivity(g);
  }
  return -1;
}

}  // namespace estrada
