#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "estrada/exact.hpp"
#include "estrada/graph.hpp"

namespace estrada {

/// Defaults shared by the library and the CLI.
inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiSweepBudget = 100;
inline constexpr double kNullityHintThreshold = 1e-6;
inline constexpr double kMomentSeriesTarget = 1e-10;
inline constexpr int kMomentBudget = 64;

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int sweeps, double residual)
      : std::runtime_error("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
                           " sweeps (largest off-diagonal " + std::to_string(residual) + ")"),
        sweeps_(sweeps) {}
  int sweeps() const noexcept { return sweeps_; }

 private:
  int sweeps_;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // descending
  std::vector<long double> extended;  // the same, before rounding to double
  int nullity = 0;                  // exact, from integer rank
  int nullity_hint = 0;             // floating count of |lambda| < kNullityHintThreshold
  double tolerance = kJacobiTolerance;
  int sweeps = 0;
};

/// n - rank(A), rank by fraction-free (Bareiss) elimination over the integers.
inline int nullity_exact(const Graph& g) {
  const int n = g.order();
  BigMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = g.adjacent(i, j) ? 1 : 0;

  int rank = 0;
  BigInt prev_pivot = 1;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot_row = -1;
    for (int r = rank; r < n; ++r)
      if (m(r, col) != 0) {
        pivot_row = r;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != rank)
      for (int c = 0; c < n; ++c) std::swap(m(rank, c), m(pivot_row, c));
    const BigInt pivot = m(rank, col);
    for (int r = rank + 1; r < n; ++r) {
      for (int c = col + 1; c < n; ++c) m(r, c) = (pivot * m(r, c) - m(r, col) * m(rank, c)) / prev_pivot;
      m(r, col) = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return n - rank;
}

namespace detail {

/// Cyclic Jacobi rotations on a private dense copy, carried out in `Real`.
/// Returns the eigenvalues in descending order.
template <typename Real>
std::vector<Real> jacobi(const Graph& g, double tol, int sweep_budget, int* sweeps_out) {
  using std::abs, std::copysign, std::sqrt;
  if (!(tol > 0)) throw InvalidInput("eigenvalues: tolerance must be positive");
  const int n = g.order();
  std::vector<Real> a(static_cast<std::size_t>(n) * n, Real(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = g.adjacent(i, j) ? Real(1) : Real(0);
  auto at = [&](int i, int j) -> Real& { return a[static_cast<std::size_t>(i) * n + j]; };
  const Real threshold = tol;

  auto off_max = [&] {
    Real m = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m = std::max(m, Real(abs(at(i, j))));
    return m;
  };

  int sweep = 0;
  for (; off_max() >= threshold; ++sweep) {
    if (sweep == sweep_budget) throw ConvergenceError(sweep, static_cast<double>(off_max()));
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Real apq = at(p, q);
        if (abs(apq) < threshold) continue;
        const Real theta = (at(q, q) - at(p, p)) / (2 * apq);
        const Real t = Real(copysign(Real(1), theta) / (abs(theta) + sqrt(theta * theta + 1)));
        const Real c = 1 / sqrt(t * t + 1);
        const Real s = t * c;
        const Real tau = s / (1 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Real arp = at(r, p), arq = at(r, q);
          at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
          at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }
  if (sweeps_out) *sweeps_out = sweep;
  std::vector<Real> values(n);
  for (int i = 0; i < n; ++i) values[i] = at(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace detail

/// 50 significant digits.
using Precise = boost::multiprecision::cpp_bin_float_50;

/// Working precision of the eigensolver and of the Estrada sums.
using Extended = long double;

inline std::vector<Extended> jacobi_eigenvalues_extended(const Graph& g, double tol = kJacobiTolerance,
                                                         int sweep_budget = kJacobiSweepBudget,
                                                         int* sweeps_out = nullptr) {
  return detail::jacobi<Extended>(g, tol, sweep_budget, sweeps_out);
}

/// Adjacency eigenvalues, descending.
inline std::vector<double> jacobi_eigenvalues(const Graph& g, double tol = kJacobiTolerance,
                                              int sweep_budget = kJacobiSweepBudget, int* sweeps_out = nullptr) {
  const auto ext = jacobi_eigenvalues_extended(g, tol, sweep_budget, sweeps_out);
  return {ext.begin(), ext.end()};
}

/// Full spectrum record; the nullity comes from exact integer rank and the
/// floating count is kept only as a hint.
inline SpectrumResult eigenvalues(const Graph& g, double tol = kJacobiTolerance,
                                  int sweep_budget = kJacobiSweepBudget) {
  SpectrumResult out;
  out.tolerance = tol;
  out.extended = jacobi_eigenvalues_extended(g, tol, sweep_budget, &out.sweeps);
  out.eigenvalues.assign(out.extended.begin(), out.extended.end());
  out.nullity_hint = static_cast<int>(std::count_if(out.eigenvalues.begin(), out.eigenvalues.end(),
                                                    [](double x) { return std::abs(x) < kNullityHintThreshold; }));
  out.nullity = nullity_exact(g);
  return out;
}

// Exact spectral moments ---------------------------------------------------

struct MomentSeries {
  std::vector<BigInt> moments;  // M_0 .. M_K
  int cutoff() const { return static_cast<int>(moments.size()) - 1; }
};

/// M_0..M_K (closed-walk counts) with no budget guard; callers enforce their own.
inline MomentSeries moment_series_unchecked(const Graph& g, int k_max) {
  MomentSeries series;
  series.moments.reserve(k_max + 1);
  BigMatrix power = BigMatrix::identity(g.order());
  series.moments.push_back(power.trace());
  for (int k = 1; k <= k_max; ++k) {
    power = times_adjacency(power, g);
    series.moments.push_back(power.trace());
  }
  return series;
}

inline MomentSeries moment_series(const Graph& g, int k_max) {
  if (k_max < 0 || k_max > kMomentBudget)
    throw InvalidInput("moment cutoff must be in 0.." + std::to_string(kMomentBudget));
  return moment_series_unchecked(g, k_max);
}

/// trace(A^k): the number of closed walks of length k.
inline BigInt spectral_moment_exact(const Graph& g, int k) { return moment_series(g, k).moments.back(); }

// Estrada index ------------------------------------------------------------

enum class EstradaMethod { eigen, cosh, moment_series };

inline std::string_view to_string(EstradaMethod m) {
  switch (m) {
    case EstradaMethod::eigen: return "eigen";
    case EstradaMethod::cosh: return "cosh";
    case EstradaMethod::moment_series: return "moment-series";
  }
  return "?";
}

struct EstradaValue {
  double value = 0;
  EstradaMethod method = EstradaMethod::eigen;
  double error_bound = 0;  // moment-series only
  int terms = 0;           // moment-series cutoff K
};

template <typename Real>
double estrada_from_spectrum(const std::vector<Real>& eigenvalues) {
  Extended sum = 0;
  for (Real x : eigenvalues) sum += std::exp(static_cast<Extended>(x));
  return static_cast<double>(sum);
}

/// n0 + 2 * sum of cosh over the positive eigenvalues. With the exact nullity,
/// the positive eigenvalues of a bipartite graph are the top (n - n0) / 2.
inline double estrada_from_cosh(const SpectrumResult& spectrum) {
  const int n = static_cast<int>(spectrum.eigenvalues.size());
  const int positives = (n - spectrum.nullity) / 2;
  const bool ext = spectrum.extended.size() == spectrum.eigenvalues.size();
  Extended sum = 0;
  for (int i = 0; i < positives; ++i)
    sum += std::cosh(ext ? spectrum.extended[i] : static_cast<Extended>(spectrum.eigenvalues[i]));
  return static_cast<double>(spectrum.nullity + 2 * sum);
}

/// Lagrange remainder of the truncated series: n * d^(K+1) e^d / (K+1)!.
inline double moment_series_error_bound(int n, int degree_bound, int cutoff) {
  if (degree_bound == 0) return 0.0;
  const double d = degree_bound;
  return std::exp(std::log(static_cast<double>(n)) + (cutoff + 1) * std::log(d) + d - std::lgamma(cutoff + 2.0));
}

inline EstradaValue estrada_moment_series(const Graph& g, double target = kMomentSeriesTarget) {
  const int n = g.order();
  const int delta = g.max_degree();
  int cutoff = 0;
  while (moment_series_error_bound(n, delta, cutoff) >= target) ++cutoff;

  using Float = Precise;
  const MomentSeries series = moment_series_unchecked(g, cutoff);
  Float sum = 0;
  BigInt factorial = 1;
  for (int k = 0; k <= cutoff; ++k) {
    if (k > 0) factorial *= k;
    sum += Float(series.moments[k]) / Float(factorial);
  }
  return {sum.convert_to<double>(), EstradaMethod::moment_series, moment_series_error_bound(n, delta, cutoff),
          cutoff};
}

inline EstradaValue estrada(const Graph& g, EstradaMethod method = EstradaMethod::eigen,
                            double tol = kJacobiTolerance) {
  switch (method) {
    case EstradaMethod::eigen: return {estrada_from_spectrum(jacobi_eigenvalues_extended(g, tol)), method, 0, 0};
    case EstradaMethod::cosh:
      if (!is_bipartite(g)) throw InvalidInput("cosh form of the Estrada index requires a bipartite graph");
      return {estrada_from_cosh(eigenvalues(g, tol)), method, 0, 0};
    case EstradaMethod::moment_series: return estrada_moment_series(g);
  }
  throw InvalidInput("unknown Estrada method");
}

/// Closed form for K_{a,b}: a + b - 2 + 2 cosh(sqrt(ab)).
inline double estrada_complete_bipartite(int a, int b) {
  return static_cast<double>(a + b - 2 + 2 * std::cosh(std::sqrt(static_cast<Extended>(a) * b)));
}

/// Eigen-method value with the whole eigensolve carried out in `Precise`.
inline Precise estrada_eigen_precise(const Graph& g, double tol = kJacobiTolerance) {
  Precise sum = 0;
  for (const Precise& x : detail::jacobi<Precise>(g, tol, kJacobiSweepBudget, nullptr)) sum += exp(x);
  return sum;
}

inline Precise estrada_complete_bipartite_precise(int a, int b) {
  return Precise(a + b - 2) + 2 * cosh(sqrt(Precise(a) * b));
}

// Exact comparison ---------------------------------------------------------

struct MomentComparison {
  std::strong_ordering order = std::strong_ordering::equal;
  int first_difference = -1;       // k where the sequences first differ, -1 if none
  bool equal_up_to_cutoff = false; // all compared moments coincide (cospectral suspected)
  std::vector<BigInt> moments_g;
  std::vector<BigInt> moments_h;
};

inline std::string_view to_string(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "less";
  if (o == std::strong_ordering::greater) return "greater";
  return "equal";
}

/// Lexicographic comparison of M_0..M_kmax. Moments are generated lazily and
/// the walk stops at the first difference, but never before min(8, k_max).
inline MomentComparison compare_ee_exact(const Graph& g, const Graph& h, int k_max = kMomentBudget) {
  if (g.order() != h.order()) throw InvalidInput("compare_ee_exact requires graphs of equal order");
  if (k_max < 0 || k_max > kMomentBudget)
    throw InvalidInput("moment cutoff must be in 0.." + std::to_string(kMomentBudget));
  const int min_report = std::min(8, k_max);
  MomentComparison out;
  BigMatrix pg = BigMatrix::identity(g.order()), ph = BigMatrix::identity(h.order());
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) {
      pg = times_adjacency(pg, g);
      ph = times_adjacency(ph, h);
    }
    out.moments_g.push_back(pg.trace());
    out.moments_h.push_back(ph.trace());
    if (out.first_difference < 0 && out.moments_g.back() != out.moments_h.back()) {
      out.first_difference = k;
      out.order = out.moments_g.back() < out.moments_h.back() ? std::strong_ordering::less
                                                             : std::strong_ordering::greater;
    }
    if (out.first_difference >= 0 && k >= min_report) break;
  }
  out.equal_up_to_cutoff = out.first_difference < 0;
  return out;
}

}  // namespace estrada
