#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "bfn/boolean_function.hpp"

namespace bfn {

// Real-valued function on the hypercube, same index convention as
// BooleanFunction. Holds projections and other partial results.
struct RealTable {
  int n;
  std::vector<double> values;

  static RealTable from_function(const BooleanFunction& f) {
    return RealTable{f.arity(), std::vector<double>(f.table().begin(), f.table().end())};
  }
};

// 2^n biased Fourier coefficients; entry at mask S is f_bar(S).
struct BiasedSpectrum {
  int n;
  Bias bias;
  std::vector<double> coeffs;
};

// Forward transform: coeffs[S] = E[f(X) phi_S(X)] under the p-biased measure,
// done as n butterfly passes. For each coordinate the pair (value at x_i=+1,
// value at x_i=-1) maps to (expectation over x_i, sigma/2 times the difference).
inline BiasedSpectrum transform(const RealTable& t, const Bias& bias) {
  const double p = bias.p();
  const double half_sigma = bias.sigma() / 2.0;
  std::vector<double> a = t.values;
  const std::size_t size = a.size();
  for (int i = 0; i < t.n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t lo = 0; lo < size; ++lo) {
      if (lo & bit) continue;
      const double f_plus = a[lo];        // x_i = +1
      const double f_minus = a[lo | bit]; // x_i = -1
      a[lo] = (1.0 - p) * f_plus + p * f_minus;
      a[lo | bit] = half_sigma * (f_plus - f_minus);
    }
  }
  return BiasedSpectrum{t.n, bias, std::move(a)};
}

inline BiasedSpectrum transform(const BooleanFunction& f, const Bias& bias) {
  return transform(RealTable::from_function(f), bias);
}

// Inverse transform: f(x) = sum_S f_bar(S) phi_S(x). Exact inverse of the
// forward butterflies coordinate by coordinate.
inline RealTable inverse_transform(const BiasedSpectrum& spec) {
  const double sigma = spec.bias.sigma();
  const double phi_plus = (1.0 - spec.bias.mu()) / sigma;    // phi_{i}(+1)
  const double phi_minus = (-1.0 - spec.bias.mu()) / sigma;  // phi_{i}(-1)
  std::vector<double> a = spec.coeffs;
  const std::size_t size = a.size();
  for (int i = 0; i < spec.n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t lo = 0; lo < size; ++lo) {
      if (lo & bit) continue;
      const double without = a[lo];
      const double with = a[lo | bit];
      a[lo] = without + with * phi_plus;
      a[lo | bit] = without + with * phi_minus;
    }
  }
  return RealTable{spec.n, std::move(a)};
}

// Projection f^{subseteq J} = E[f | X^J]: zero every coefficient not
// contained in J, then invert. The result depends only on coordinates in J.
inline RealTable project(const BooleanFunction& f, mask_t j, const Bias& bias) {
  if (j >= (mask_t{1} << f.arity()))
    throw arity_error("projection set exceeds arity");
  BiasedSpectrum spec = transform(f, bias);
  for (mask_t s = 0; s < spec.coeffs.size(); ++s)
    if (s & ~j) spec.coeffs[s] = 0.0;
  return inverse_transform(spec);
}

// Biased expectation of |t|.
inline double l1_norm(const RealTable& t, const Bias& bias) {
  double acc = 0.0;
  for (mask_t x = 0; x < t.values.size(); ++x)
    acc += point_probability(x, t.n, bias) * std::abs(t.values[x]);
  return acc;
}

// Biased expectation of t^2.
inline double l2_norm_sq(const RealTable& t, const Bias& bias) {
  double acc = 0.0;
  for (mask_t x = 0; x < t.values.size(); ++x)
    acc += point_probability(x, t.n, bias) * t.values[x] * t.values[x];
  return acc;
}

// Parseval route: sum of squared coefficients.
inline double l2_norm_sq(const BiasedSpectrum& spec) {
  double acc = 0.0;
  for (double c : spec.coeffs) acc += c * c;
  return acc;
}

}  // namespace bfn
