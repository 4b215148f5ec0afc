#pragma once

#include <bit>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "estrada/graph.hpp"

namespace estrada {

using BigInt = boost::multiprecision::cpp_int;

/// Dense n x n matrix of exact integers, row-major.
class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

  static BigMatrix identity(int n) {
    BigMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  BigInt& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const BigInt& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  BigInt trace() const {
    BigInt t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  bool operator==(const BigMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<BigInt> data_;
};

/// Returns P * A where A is the adjacency matrix of g. Column j of the product
/// sums the columns of P indexed by N(j), so only additions are needed.
inline BigMatrix times_adjacency(const BigMatrix& p, const Graph& g) {
  const int n = g.order();
  BigMatrix out(n);
  for (int j = 0; j < n; ++j) {
    for (VertexSet r = g.neighbors(j); r; r &= r - 1) {
      const int l = std::countr_zero(r);
      for (int i = 0; i < n; ++i) out(i, j) += p(i, l);
    }
  }
  return out;
}

}  // namespace estrada
