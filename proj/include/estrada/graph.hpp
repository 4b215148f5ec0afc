#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace estrada {

/// Largest order representable: one graph6 size byte, one 64-bit row per vertex.
inline constexpr int kMaxOrder = 62;

using VertexSet = std::uint64_t;

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }

/// Simple undirected graph on vertices 0..n-1. Rows are neighbourhood bitmasks.
/// Immutable once built through Graph::Builder or one of the constructors below.
class Graph {
 public:
  class Builder;

  explicit Graph(int n) : rows_(check_order(n), 0) {}

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(rows_[v]); }
  VertexSet all() const { return order() == 64 ? ~VertexSet{0} : bit(order()) - 1; }

  int edge_count() const {
    int twice = 0;
    for (VertexSet r : rows_) twice += popcount(r);
    return twice / 2;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
  }

  int min_degree() const {
    int d = order();
    for (int v = 0; v < order(); ++v) d = std::min(d, degree(v));
    return d;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      for (VertexSet r = rows_[u] & ~(bit(u + 1) - 1); r; r &= r - 1)
        out.emplace_back(u, std::countr_zero(r));
    return out;
  }

  /// Copy with edge {u,v} added.
  Graph with_edge(int u, int v) const {
    Graph g = *this;
    g.set(u, v);
    return g;
  }

  /// Subgraph induced by `keep`, vertices renumbered in increasing order.
  Graph induced(VertexSet keep) const;

  bool operator==(const Graph& other) const = default;

 private:
  static int check_order(int n) {
    if (n < 1 || n > kMaxOrder)
      throw InvalidInput("graph order must be in 1.." + std::to_string(kMaxOrder) +
                         ", got " + std::to_string(n));
    return n;
  }

  void set(int u, int v) {
    if (u == v) throw InvalidInput("self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= order() || v >= order())
      throw InvalidInput("edge endpoint out of range");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  std::vector<VertexSet> rows_;
};

class Graph::Builder {
 public:
  explicit Builder(int n) : g_(n) {}
  Builder& edge(int u, int v) {
    g_.set(u, v);
    return *this;
  }
  int order() const { return g_.order(); }
  Graph build() const { return g_; }

 private:
  Graph g_;
};

inline Graph Graph::induced(VertexSet keep) const {
  std::vector<int> index(order(), -1);
  int k = 0;
  for (int v = 0; v < order(); ++v)
    if ((keep >> v) & 1U) index[v] = k++;
  Builder b(k);
  for (auto [u, v] : edges())
    if (index[u] >= 0 && index[v] >= 0) b.edge(index[u], index[v]);
  return b.build();
}

struct Bipartition {
  VertexSet side_x = 0;
  VertexSet side_y = 0;
  bool operator==(const Bipartition&) const = default;
};

/// Row-major a x b bit pattern; `bits[i][j]` joins left vertex i to right vertex a+j.
using BitMatrix = std::vector<std::vector<bool>>;

inline Graph from_biadjacency(int a, int b, const BitMatrix& bits) {
  if (a < 0 || b < 0 || a + b < 1) throw InvalidInput("biadjacency sizes must satisfy a,b >= 0, a+b >= 1");
  if (a + b > kMaxOrder) throw InvalidInput("biadjacency order a+b exceeds " + std::to_string(kMaxOrder));
  if (static_cast<int>(bits.size()) != a) throw InvalidInput("biadjacency row count differs from a");
  Graph::Builder builder(a + b);
  for (int i = 0; i < a; ++i) {
    if (static_cast<int>(bits[i].size()) != b) throw InvalidInput("biadjacency row length differs from b");
    for (int j = 0; j < b; ++j)
      if (bits[i][j]) builder.edge(i, a + j);
  }
  return builder.build();
}

/// Mask variant used by the enumerator: bit (i*b + j) of `mask` is bits[i][j].
inline Graph from_biadjacency_mask(int a, int b, std::uint64_t mask) {
  if (a < 0 || b < 0 || a + b < 1 || a + b > kMaxOrder || a * b > 64)
    throw InvalidInput("biadjacency mask sizes out of range");
  Graph::Builder builder(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if ((mask >> (i * b + j)) & 1U) builder.edge(i, a + j);
  return builder.build();
}

/// Two-colouring by BFS. Within each component the lowest-index vertex lands in side_x.
inline std::optional<Bipartition> find_bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  Bipartition part;
  for (int root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (VertexSet r = g.neighbors(u); r; r &= r - 1) {
        const int v = std::countr_zero(r);
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) (colour[v] == 0 ? part.side_x : part.side_y) |= bit(v);
  return part;
}

inline bool is_bipartite(const Graph& g) { return find_bipartition(g).has_value(); }

/// Vertices reachable from `start` without entering `removed`.
inline VertexSet reachable(const Graph& g, int start, VertexSet removed = 0) {
  VertexSet seen = bit(start), frontier = bit(start);
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= ~seen & ~removed;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) { return reachable(g, 0) == g.all(); }

// graph6 -------------------------------------------------------------------

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("non-printable or out-of-range byte", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n == 63) throw Graph6Error("multi-byte size header is not supported", 0);
  if (n < 1) throw Graph6Error("graph6 order must be at least 1", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() < expected) throw Graph6Error("truncated graph6 body", text.size());
  if (text.size() > expected) throw Graph6Error("trailing bytes after graph6 body", expected);

  Graph::Builder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) b.edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text[expected - 1]) - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("non-zero padding bits", expected - 1);
  }
  return b.build();
}

}  // namespace estrada
