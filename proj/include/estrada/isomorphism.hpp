#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

#include "estrada/graph.hpp"

namespace estrada {

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

namespace detail {

/// Joint colour refinement of two graphs; colours are comparable across both.
inline bool refine_colours(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
  const int n = g.order();
  cg.assign(n, 0);
  ch.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    cg[v] = g.degree(v);
    ch[v] = h.degree(v);
  }
  int classes = -1;
  for (;;) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature = [](const Graph& x, const std::vector<int>& c, int v) {
      Signature sig{c[v], {}};
      for (VertexSet r = x.neighbors(v); r; r &= r - 1) sig.second.push_back(c[std::countr_zero(r)]);
      std::sort(sig.second.begin(), sig.second.end());
      return sig;
    };
    std::vector<Signature> sg(n), sh(n);
    for (int v = 0; v < n; ++v) {
      sg[v] = signature(g, cg, v);
      sh[v] = signature(h, ch, v);
    }
    std::map<Signature, int> ids;
    for (const auto& s : sg) ids.emplace(s, 0);
    for (const auto& s : sh) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> hist_g(next, 0), hist_h(next, 0);
    for (int v = 0; v < n; ++v) {
      cg[v] = ids[sg[v]];
      ch[v] = ids[sh[v]];
      ++hist_g[cg[v]];
      ++hist_h[ch[v]];
    }
    if (hist_g != hist_h) return false;
    if (next == classes) return true;
    classes = next;
  }
}

inline bool extend(const Graph& g, const Graph& h, const std::vector<int>& order, std::size_t depth,
                   const std::vector<int>& cg, const std::vector<int>& ch, std::vector<int>& map, VertexSet used) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  for (int w = 0; w < h.order(); ++w) {
    if (((used >> w) & 1U) || ch[w] != cg[v]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const int u = order[i];
      ok = g.adjacent(u, v) == h.adjacent(map[u], w);
    }
    if (!ok) continue;
    map[v] = w;
    if (extend(g, h, order, depth + 1, cg, ch, map, used | bit(w))) return true;
  }
  return false;
}

}  // namespace detail

/// Exact isomorphism test: colour refinement followed by backtracking over
/// colour-preserving bijections. Intended for n <= 12.
inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  if (g.order() > 12) throw InvalidInput("is_isomorphic supports graphs of order at most 12");
  if (g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  std::vector<int> cg, ch;
  if (!detail::refine_colours(g, h, cg, ch)) return false;

  // Visit G in BFS order from the rarest colour so early choices constrain later ones.
  const int n = g.order();
  std::vector<int> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < n) {
    int root = -1;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1U) continue;
      const auto count = std::count(cg.begin(), cg.end(), cg[v]);
      if (root < 0 || count < std::count(cg.begin(), cg.end(), cg[root])) root = v;
    }
    const std::size_t start = order.size();
    order.push_back(root);
    placed |= bit(root);
    for (std::size_t head = start; head < order.size(); ++head)
      for (VertexSet r = g.neighbors(order[head]) & ~placed; r; r &= r - 1) {
        order.push_back(std::countr_zero(r));
        placed |= bit(order.back());
      }
  }
  std::vector<int> map(n, -1);
  return detail::extend(g, h, order, 0, cg, ch, map, 0);
}

}  // namespace estrada
