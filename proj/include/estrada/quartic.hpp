#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "estrada/exact.hpp"
#include "estrada/graph.hpp"
#include "estrada/spectral.hpp"

namespace estrada {

/// Non-zero spectrum of O_s v1 (K_1 u K_{p,q}): lambda^4 - c2 lambda^2 + c0 = 0
/// with c2 = s + pq + ps and c0 = pqs. x1 > x2 >= 0 are the positive roots.
struct QuarticForm {
  int p = 0, q = 0, s = 0;
  long long c2 = 0;
  long long c0 = 0;
  double x1 = 0;
  double x2 = 0;
  Extended x1_ext = 0;  // unrounded roots
  Extended x2_ext = 0;

  double r() const { return x1; }
  double k() const { return x1 * x2; }
  int order() const { return s + p + q + 1; }
};

inline QuarticForm quartic_roots(int p, int q, int s) {
  if (s < 1 || p < 1 || q < 0) throw InvalidInput("quartic_roots needs s >= 1, p >= 1, q >= 0");
  QuarticForm f;
  f.p = p;
  f.q = q;
  f.s = s;
  f.c2 = s + static_cast<long long>(p) * q + static_cast<long long>(p) * s;
  f.c0 = static_cast<long long>(p) * q * s;
  const Extended c2 = static_cast<Extended>(f.c2), c0 = static_cast<Extended>(f.c0);
  // Larger root of t^2 - c2 t + c0 directly, smaller one from the product to avoid cancellation.
  const Extended t1 = (c2 + std::sqrt(c2 * c2 - 4 * c0)) / 2;
  const Extended t2 = c0 / t1;
  f.x1_ext = std::sqrt(t1);
  f.x2_ext = std::sqrt(t2);
  f.x1 = static_cast<double>(f.x1_ext);
  f.x2 = static_cast<double>(f.x2_ext);
  return f;
}

/// f(r, k) = n - 4 + 2 cosh(r) + 2 cosh(k / r).
inline double join_estrada_f(int n, double r, double k) { return n - 4 + 2.0 * std::cosh(r) + 2.0 * std::cosh(k / r); }

inline double ee_closed_form(int p, int q, int s) {
  const auto f = quartic_roots(p, q, s);
  return static_cast<double>(f.order() - 4 + 2 * std::cosh(f.x1_ext) + 2 * std::cosh(f.x2_ext));
}

struct Gradient {
  double d_r = 0;
  double d_k = 0;
};

/// Partial derivatives of f(r, k); both are positive whenever r > sqrt(k) > 0.
inline Gradient monotonicity_witness(double r, double k) {
  if (!(k > 0) || !(r > std::sqrt(k))) throw InvalidInput("monotonicity_witness requires r > sqrt(k) > 0");
  const double kr = k / r;
  return {(std::exp(r) - std::exp(-r)) - k / (r * r) * (std::exp(kr) - std::exp(-kr)),
          (std::exp(kr) - std::exp(-kr)) / r};
}

/// g(x, p, q, s) = x^4 - x^2 (s + pq + ps) + pqs, evaluated exactly for integer x^2.
inline BigInt quartic_value_exact(const BigInt& x_squared, int p, int q, int s) {
  const BigInt c2 = BigInt(s) + BigInt(p) * q + BigInt(p) * s;
  const BigInt c0 = BigInt(p) * q * s;
  return x_squared * x_squared - x_squared * c2 + c0;
}

inline double quartic_value(double x, int p, int q, int s) {
  const double x2 = x * x;
  return x2 * x2 - x2 * (s + static_cast<double>(p) * q + static_cast<double>(p) * s) + static_cast<double>(p) * q * s;
}

// Comparison lemmas -------------------------------------------------------

struct LemmaVerdict {
  std::string lemma;  // "4.1", "4.2", "4.3"
  int p = 0, q = 0, s = 0, n = 0;
  bool applicable = false;
  std::string skip_reason;
  double lhs = 0;  // Estrada index of the graph claimed smaller
  double rhs = 0;
  double gap = 0;  // rhs - lhs
  bool holds = false;

  // 4.2: g(x1(p,q,s), p-1, q+1, s), claimed negative.
  double root_shift_value = 0;
  // 4.3: exact g(sqrt(s(n-s)), n-s-2, 1, s) and the factored form it should equal.
  BigInt sign_value = 0;
  BigInt sign_factored = 0;
  bool sign_negative = false;

  std::string verdict() const {
    if (!applicable) return "skipped";
    return holds ? "holds" : "violated";
  }
};

inline LemmaVerdict skipped(std::string lemma, int p, int q, int s, int n, std::string reason) {
  LemmaVerdict v;
  v.lemma = std::move(lemma);
  v.p = p;
  v.q = q;
  v.s = s;
  v.n = n;
  v.skip_reason = std::move(reason);
  return v;
}

/// EE(O_s v1 (K_1 u K_{p,q})) < EE(O_s v1 (K_1 u K_{q+s,p-s})) when p < q + s.
/// The right-hand family needs p >= s, which is checked as well.
inline LemmaVerdict verify_lemma_41(int p, int q, int s) {
  const int n = p + q + s + 1;
  if (s < 1 || p < 1 || q < 0) return skipped("4.1", p, q, s, n, "requires s >= 1 and p >= 1 and q >= 0");
  if (!(p < q + s)) return skipped("4.1", p, q, s, n, "requires p < q + s");
  if (p < s) return skipped("4.1", p, q, s, n, "requires p >= s");
  LemmaVerdict v = skipped("4.1", p, q, s, n, "");
  v.applicable = true;
  v.lhs = ee_closed_form(p, q, s);
  v.rhs = ee_closed_form(q + s, p - s, s);
  v.gap = v.rhs - v.lhs;
  v.holds = v.lhs < v.rhs;
  return v;
}

/// EE(O_s v1 (K_1 u K_{p,q})) < EE(O_s v1 (K_1 u K_{p-1,q+1})) when p > q + s + 1, q > 0.
inline LemmaVerdict verify_lemma_42(int p, int q, int s) {
  const int n = p + q + s + 1;
  if (s < 1 || q < 1) return skipped("4.2", p, q, s, n, "requires s >= 1 and q >= 1");
  if (!(p > q + s + 1)) return skipped("4.2", p, q, s, n, "requires p > q + s + 1");
  LemmaVerdict v = skipped("4.2", p, q, s, n, "");
  v.applicable = true;
  v.lhs = ee_closed_form(p, q, s);
  v.rhs = ee_closed_form(p - 1, q + 1, s);
  v.gap = v.rhs - v.lhs;
  v.root_shift_value = quartic_value(quartic_roots(p, q, s).x1, p - 1, q + 1, s);
  v.holds = v.lhs < v.rhs;
  return v;
}

/// EE(K_{s,n-s}) < EE(O_s v1 (K_1 u K_{n-s-2,1})) when s <= ceil((n-1)/2) - 1,
/// together with the exact sign of g at x^2 = s(n-s).
inline LemmaVerdict verify_lemma_43(int n, int s) {
  const int p = n - s - 2;
  if (s < 1) return skipped("4.3", p, 1, s, n, "requires s >= 1");
  if (s > n / 2 - 1) return skipped("4.3", p, 1, s, n, "requires s <= ceil((n-1)/2) - 1");
  if (p < 1) return skipped("4.3", p, 1, s, n, "requires n - s - 2 >= 1");
  LemmaVerdict v = skipped("4.3", p, 1, s, n, "");
  v.applicable = true;
  v.lhs = estrada_complete_bipartite(s, n - s);
  v.rhs = ee_closed_form(p, 1, s);
  v.gap = v.rhs - v.lhs;
  v.holds = v.lhs < v.rhs;
  v.sign_value = quartic_value_exact(BigInt(s) * (n - s), p, 1, s);
  v.sign_factored = -BigInt(s) * (BigInt(n - 2 * s - 3) * (n - s) + 2);
  v.sign_negative = v.sign_value < 0;
  return v;
}

/// All grid points of one lemma. 4.1/4.2 sweep p, s in 1..max and q in 0..max_q;
/// 4.3 sweeps n in 4..max_n and s in 1..max_s.
inline std::vector<LemmaVerdict> lemma_grid(const std::string& lemma, int max_p, int max_q, int max_s, int max_n) {
  std::vector<LemmaVerdict> out;
  if (lemma == "4.1" || lemma == "4.2") {
    for (int s = 1; s <= max_s; ++s)
      for (int p = 1; p <= max_p; ++p)
        for (int q = 0; q <= max_q; ++q) out.push_back(lemma == "4.1" ? verify_lemma_41(p, q, s) : verify_lemma_42(p, q, s));
  } else if (lemma == "4.3") {
    for (int n = 4; n <= max_n; ++n)
      for (int s = 1; s <= max_s; ++s) out.push_back(verify_lemma_43(n, s));
  } else {
    throw InvalidInput("unknown lemma '" + lemma + "' (expected 4.1, 4.2 or 4.3)");
  }
  return out;
}

}  // namespace estrada
