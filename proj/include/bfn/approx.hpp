#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bfn/spectrum.hpp"

namespace bfn {

enum class ApproxClass { junta, linear };

inline const char* to_string(ApproxClass c) {
  return c == ApproxClass::junta ? "k-junta" : "linear";
}

struct ApproximationReport {
  ApproxClass cls;
  mask_t support;                 // J* (junta) or S* (linear)
  int sign_constant;              // c* for the linear class, +1 otherwise
  BooleanFunction approximant;
  double mismatch;
  double l1;                      // junta: |f^{subseteq J*}|_1; linear: |I_{S*}[f]|
  double bound_lower;             // junta class only
  double bound_upper;
  std::vector<mask_t> ties;       // every support within tolerance of the optimum
};

// Scores within this distance of the maximum count as tied; the canonical
// winner is the smallest popcount, then the smallest bitmask.
inline constexpr double kTieTolerance = 1e-9;

namespace detail {

inline bool support_precedes(mask_t a, mask_t b) {
  int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

struct SupportScan {
  mask_t winner = 0;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<mask_t> candidates;
  std::vector<double> scores;

  void add(mask_t support, double score) {
    candidates.push_back(support);
    scores.push_back(score);
    if (score > best) best = score;
  }

  // Tie-break applied after gathering all scores.
  std::vector<mask_t> finish() {
    std::vector<mask_t> ties;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (scores[i] >= best - kTieTolerance) ties.push_back(candidates[i]);
    winner = ties.front();
    for (mask_t t : ties)
      if (support_precedes(t, winner)) winner = t;
    return ties;
  }
};

}  // namespace detail

// Spectral-weight bounds on the mismatch of sign(f^{subseteq J}):
// (1 - sqrt(w))/2 <= mismatch <= (1 - w)/2 with w = sum_{S subseteq J} f_bar(S)^2.
inline std::pair<double, double> junta_bounds(const BooleanFunction& f, mask_t j,
                                              const Bias& bias) {
  if (j >= (mask_t{1} << f.arity()))
    throw arity_error("junta_bounds: set exceeds arity");
  BiasedSpectrum spec = transform(f, bias);
  double w = 0.0;
  for (mask_t s = 0; s < spec.coeffs.size(); ++s)
    if ((s & ~j) == 0) w += spec.coeffs[s] * spec.coeffs[s];
  return {0.5 * (1.0 - std::sqrt(w)), 0.5 * (1.0 - w)};
}

// Optimal k-junta approximation: maximize |f^{subseteq J}|_1 over |J| = k
// (sufficient: the norm is monotone under set inclusion), approximant is
// sign(f^{subseteq J*}) with sign(0) = +1.
inline ApproximationReport best_k_junta(const BooleanFunction& f, int k,
                                        const Bias& bias) {
  const int n = f.arity();
  if (k < 0 || k >= n)
    throw std::invalid_argument("junta size k must satisfy 0 <= k < n, got k=" +
                                std::to_string(k));

  detail::SupportScan scan;
  if (k == 0) {
    scan.add(0, l1_norm(project(f, 0, bias), bias));
  } else {
    // Gosper's hack over all masks of popcount k.
    const mask_t limit = mask_t{1} << n;
    for (mask_t j = (mask_t{1} << k) - 1; j < limit;) {
      scan.add(j, l1_norm(project(f, j, bias), bias));
      mask_t c = j & -j;
      mask_t r = j + c;
      j = (((r ^ j) >> 2) / c) | r;
    }
  }
  std::vector<mask_t> ties = scan.finish();
  const mask_t j_star = scan.winner;

  RealTable proj = project(f, j_star, bias);
  std::vector<int> table(proj.values.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = sign_of(proj.values[i]);
  BooleanFunction approximant(n, std::move(table));

  const double l1 = l1_norm(proj, bias);
  auto [lo, hi] = junta_bounds(f, j_star, bias);
  return ApproximationReport{ApproxClass::junta, j_star, +1, std::move(approximant),
                             0.5 * (1.0 - l1), l1, lo, hi, std::move(ties)};
}

// All 2^n correlations I_S[f] = E[f(X) prod_{i in S} X_i], computed from the
// spectrum as I_S = sum_{S' subseteq S} f_bar(S') sigma^|S'| mu^(|S|-|S'|)
// via a weighted zeta transform in O(n 2^n).
struct WeightedSubsetStats {
  int n;
  std::vector<double> values;
};

inline WeightedSubsetStats weighted_subset_transform(const BiasedSpectrum& spec) {
  const double mu = spec.bias.mu();
  const double sigma = spec.bias.sigma();
  std::vector<double> a(spec.coeffs.size());
  for (mask_t s = 0; s < a.size(); ++s)
    a[s] = spec.coeffs[s] * std::pow(sigma, popcount(s));
  for (int i = 0; i < spec.n; ++i) {
    const mask_t bit = mask_t{1} << i;
    for (mask_t s = 0; s < a.size(); ++s)
      if (!(s & bit)) a[s | bit] += mu * a[s];
  }
  return WeightedSubsetStats{spec.n, std::move(a)};
}

// Optimal linear Boolean approximation g(x) = c* prod_{i in S*} x_i, with
// S* = argmax |I_S[f]| and c* = sign(I_{S*}[f]). Constants are the S = {}
// members of the class.
inline ApproximationReport best_linear(const BooleanFunction& f, const Bias& bias) {
  const int n = f.arity();
  WeightedSubsetStats stats = weighted_subset_transform(transform(f, bias));

  detail::SupportScan scan;
  for (mask_t s = 0; s < stats.values.size(); ++s)
    scan.add(s, std::abs(stats.values[s]));
  std::vector<mask_t> ties = scan.finish();
  const mask_t s_star = scan.winner;
  const int c_star = sign_of(stats.values[s_star]);

  std::vector<int> table(std::size_t{1} << n);
  for (mask_t x = 0; x < table.size(); ++x)
    table[x] = (popcount(x & s_star) % 2 == 0) ? c_star : -c_star;
  BooleanFunction approximant(n, std::move(table));

  const double corr = std::abs(stats.values[s_star]);
  return ApproximationReport{ApproxClass::linear, s_star, c_star, std::move(approximant),
                             0.5 * (1.0 - corr), corr, 0.0, 0.0, std::move(ties)};
}

}  // namespace bfn
