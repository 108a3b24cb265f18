#pragma once

// Definition-level brute-force and Monte Carlo oracles. Nothing in this
// header touches the spectral code paths; every quantity is recomputed
// straight from its probabilistic definition.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "bfn/boolean_function.hpp"
#include "bfn/joint.hpp"

namespace bfn::oracle {

struct size_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OracleConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 1'000'000;
};

// P(f(X) != g(Y)) by exact enumeration of all 4^n input pairs. The pair
// weight factors through the counts of the four per-coordinate patterns.
inline double enum_mismatch(const BooleanFunction& f, const BooleanFunction& g,
                            const JointInputModel& m) {
  if (f.arity() != g.arity()) throw arity_error("enum_mismatch: arity mismatch");
  const int n = f.arity();
  if (n > 12)
    throw size_error("enum_mismatch: n > 12; use mc_mismatch for large arities");

  // Bit set in a mask means the coordinate is -1.
  const double ppp = m.pmf(+1, +1), ppm = m.pmf(+1, -1);
  const double pmp = m.pmf(-1, +1), pmm = m.pmf(-1, -1);
  std::vector<double> a(n + 1), b(n + 1), c(n + 1), d(n + 1);
  a[0] = b[0] = c[0] = d[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    a[i] = a[i - 1] * ppp;
    b[i] = b[i - 1] * ppm;
    c[i] = c[i - 1] * pmp;
    d[i] = d[i - 1] * pmm;
  }

  const mask_t size = mask_t{1} << n;
  const mask_t full = size - 1;
  double acc = 0.0;
  for (mask_t x = 0; x < size; ++x) {
    const int fx = f.table()[x];
    for (mask_t y = 0; y < size; ++y) {
      if (fx == g.table()[y]) continue;
      const int both = popcount(x & y);
      const int only_x = popcount(x & ~y & full);
      const int only_y = popcount(~x & y & full);
      acc += a[n - both - only_x - only_y] * b[only_y] * c[only_x] * d[both];
    }
  }
  return acc;
}

struct JuntaWitness {
  mask_t support;          // J, |J| = k
  std::uint64_t h_bits;    // bit c set means h(cell c) = +1
};

// Expands a witness back into a full n-variable function.
inline BooleanFunction junta_to_function(int n, const JuntaWitness& w) {
  std::vector<int> table(std::size_t{1} << n);
  for (mask_t x = 0; x < table.size(); ++x) {
    mask_t cell = 0;
    int out = 0;
    for (int b = 0; b < n; ++b)
      if (w.support & (mask_t{1} << b)) {
        if (x & (mask_t{1} << b)) cell |= mask_t{1} << out;
        ++out;
      }
    table[x] = (w.h_bits >> cell) & 1 ? 1 : -1;
  }
  return BooleanFunction(n, std::move(table));
}

struct JuntaSearchResult {
  double mismatch;
  std::vector<JuntaWitness> witnesses;  // all minimizers within 1e-9
};

// Exhaustive minimum over every subset J with |J| = k and every Boolean h on
// the 2^k cells. The per-(J,h) mismatch is assembled from per-cell masses of
// P(x) split by the value of f.
inline JuntaSearchResult enum_best_junta(const BooleanFunction& f, int k,
                                         const Bias& bias) {
  const int n = f.arity();
  if (k < 0 || k >= n) throw std::invalid_argument("enum_best_junta: need 0 <= k < n");
  if (k > 4 || n > 8)
    throw size_error("enum_best_junta: guarded at k <= 4, n <= 8");

  const mask_t size = mask_t{1} << n;
  std::vector<double> prob(size);
  for (mask_t x = 0; x < size; ++x) prob[x] = point_probability(x, n, bias);

  const int cells = 1 << k;

  auto for_each_support = [&](auto&& body) {
    if (k == 0) { body(mask_t{0}); return; }
    for (mask_t j = (mask_t{1} << k) - 1; j < size;) {
      body(j);
      mask_t c = j & -j;
      mask_t r = j + c;
      j = (((r ^ j) >> 2) / c) | r;
    }
  };

  auto cell_masses = [&](mask_t j, std::vector<double>& mass_pos,
                         std::vector<double>& mass_neg) {
    mass_pos.assign(cells, 0.0);
    mass_neg.assign(cells, 0.0);
    for (mask_t x = 0; x < size; ++x) {
      mask_t cell = 0;
      int out = 0;
      for (int b = 0; b < n; ++b)
        if (j & (mask_t{1} << b)) {
          if (x & (mask_t{1} << b)) cell |= mask_t{1} << out;
          ++out;
        }
      (f.table()[x] > 0 ? mass_pos : mass_neg)[cell] += prob[x];
    }
  };

  // First pass: exact minimum. Second pass: every (J, h) within 1e-9 of it.
  JuntaSearchResult result{std::numeric_limits<double>::infinity(), {}};
  const std::uint64_t h_count = std::uint64_t{1} << cells;
  std::vector<double> mass_pos, mass_neg;
  for_each_support([&](mask_t j) {
    cell_masses(j, mass_pos, mass_neg);
    for (std::uint64_t h = 0; h < h_count; ++h) {
      double mis = 0.0;
      for (int cell = 0; cell < cells; ++cell)
        mis += (h >> cell) & 1 ? mass_neg[cell] : mass_pos[cell];
      if (mis < result.mismatch) result.mismatch = mis;
    }
  });
  for_each_support([&](mask_t j) {
    cell_masses(j, mass_pos, mass_neg);
    for (std::uint64_t h = 0; h < h_count; ++h) {
      double mis = 0.0;
      for (int cell = 0; cell < cells; ++cell)
        mis += (h >> cell) & 1 ? mass_neg[cell] : mass_pos[cell];
      if (mis <= result.mismatch + 1e-9) result.witnesses.push_back({j, h});
    }
  });
  return result;
}

struct LinearWitness {
  mask_t support;
  int sign_constant;
};

struct LinearSearchResult {
  double mismatch;
  std::vector<LinearWitness> witnesses;
};

// Exhaustive minimum over all 2 * 2^n linear Boolean functions c * chi_S by
// direct biased enumeration of the mismatch event.
inline LinearSearchResult enum_best_linear(const BooleanFunction& f, const Bias& bias) {
  const int n = f.arity();
  if (n > 16) throw size_error("enum_best_linear: guarded at n <= 16");

  const mask_t size = mask_t{1} << n;
  std::vector<double> prob(size);
  for (mask_t x = 0; x < size; ++x) prob[x] = point_probability(x, n, bias);

  auto mismatch_of = [&](mask_t s, int c) {
    double mis = 0.0;
    for (mask_t x = 0; x < size; ++x) {
      const int gx = (popcount(x & s) % 2 == 0) ? c : -c;
      if (f.table()[x] != gx) mis += prob[x];
    }
    return mis;
  };

  LinearSearchResult result{std::numeric_limits<double>::infinity(), {}};
  for (mask_t s = 0; s < size; ++s)
    for (int c : {+1, -1}) result.mismatch = std::min(result.mismatch, mismatch_of(s, c));
  for (mask_t s = 0; s < size; ++s)
    for (int c : {+1, -1})
      if (mismatch_of(s, c) <= result.mismatch + 1e-9) result.witnesses.push_back({s, c});
  return result;
}

struct McEstimate {
  double estimate;
  double std_error;
};

// Monte Carlo mismatch estimate: inverse-CDF sampling on the four joint
// outcomes, one draw per coordinate per sample. Deterministic given the seed.
inline McEstimate mc_mismatch(const BooleanFunction& f, const BooleanFunction& g,
                              const JointInputModel& m, const OracleConfig& cfg) {
  if (f.arity() != g.arity()) throw arity_error("mc_mismatch: arity mismatch");
  if (cfg.samples < 1) throw std::invalid_argument("mc_mismatch: samples must be >= 1");
  const int n = f.arity();

  // cumulative over outcomes (+1,+1), (+1,-1), (-1,+1), (-1,-1)
  const double c0 = m.pmf(+1, +1);
  const double c1 = c0 + m.pmf(+1, -1);
  const double c2 = c1 + m.pmf(-1, +1);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::size_t mismatches = 0;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    mask_t x = 0, y = 0;
    for (int i = 0; i < n; ++i) {
      const double u = unif(rng);
      if (u < c0) continue;                       // (+1,+1)
      if (u < c1) { y |= mask_t{1} << i; continue; }  // (+1,-1)
      x |= mask_t{1} << i;
      if (u >= c2) y |= mask_t{1} << i;           // (-1,-1)
    }
    if (f.table()[x] != g.table()[y]) ++mismatches;
  }
  const double est = static_cast<double>(mismatches) / cfg.samples;
  return {est, std::sqrt(est * (1.0 - est) / cfg.samples)};
}

}  // namespace bfn::oracle
