#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bfn/spectrum.hpp"

namespace bfn {

struct infeasible_model_error : std::invalid_argument {
  infeasible_model_error(const std::string& msg, double lo, double hi)
      : std::invalid_argument(msg), rho_min(lo), rho_max(hi) {}
  double rho_min;
  double rho_max;
};

// Bivariate +-1 input pair (X,Y) with marginals P(X=-1)=p, P(Y=-1)=q and
// correlation rho. The joint pmf is
//   P(x,y) = (1 + x*mu + y*mu' + x*y*(mu*mu' + rho*sigma*sigma')) / 4.
class JointInputModel {
 public:
  JointInputModel(double p, double q, double rho)
      : x_bias_(p), y_bias_(q), rho_(rho) {
    if (!(rho >= -1.0 && rho <= 1.0))
      throw std::invalid_argument("rho must be in [-1,1], got " + std::to_string(rho));
    auto [lo, hi] = feasible_rho_interval(p, q);
    // 1e-12 slack so boundary triples construct cleanly.
    if (rho < lo - 1e-12 || rho > hi + 1e-12)
      throw infeasible_model_error(
          "infeasible (p,q,rho): valid rho interval for p=" + std::to_string(p) +
              ", q=" + std::to_string(q) + " is [" + std::to_string(lo) + ", " +
              std::to_string(hi) + "]",
          lo, hi);
  }

  // Nonnegativity of the four pmf entries, intersected with [-1,1].
  static std::pair<double, double> feasible_rho_interval(double p, double q) {
    Bias bx(p), by(q);
    const double mu = bx.mu(), mup = by.mu();
    const double ss = bx.sigma() * by.sigma();
    double lo = std::max(-(1.0 + mu + mup), -(1.0 - mu - mup));
    double hi = std::min(1.0 + mu - mup, 1.0 - mu + mup);
    return {std::max(-1.0, (lo - mu * mup) / ss),
            std::min(1.0, (hi - mu * mup) / ss)};
  }

  const Bias& x_bias() const { return x_bias_; }
  const Bias& y_bias() const { return y_bias_; }
  double p() const { return x_bias_.p(); }
  double q() const { return y_bias_.p(); }
  double rho() const { return rho_; }

  // x, y in {-1, +1}.
  double pmf(int x, int y) const {
    const double mu = x_bias_.mu(), mup = y_bias_.mu();
    const double exy = mu * mup + rho_ * x_bias_.sigma() * y_bias_.sigma();
    return (1.0 + x * mu + y * mup + x * y * exy) / 4.0;
  }

  double exy() const {
    return x_bias_.mu() * y_bias_.mu() + rho_ * x_bias_.sigma() * y_bias_.sigma();
  }

 private:
  Bias x_bias_;
  Bias y_bias_;
  double rho_;
};

inline JointInputModel make_joint(double p, double q, double rho) {
  return JointInputModel(p, q, rho);
}

// E[f(X) g(Y)] = sum_S f_bar(S) g_tilde(S) rho^|S|, with f_bar at bias p and
// g_tilde at bias q.
inline double cross_expectation(const BooleanFunction& f, const BooleanFunction& g,
                                const JointInputModel& m) {
  if (f.arity() != g.arity())
    throw arity_error("cross_expectation: arity mismatch (" +
                      std::to_string(f.arity()) + " vs " + std::to_string(g.arity()) + ")");
  BiasedSpectrum fs = transform(f, m.x_bias());
  BiasedSpectrum gs = transform(g, m.y_bias());
  // rho^0 = 1 including rho = 0.
  std::vector<double> rho_pow(f.arity() + 1);
  rho_pow[0] = 1.0;
  for (int k = 1; k <= f.arity(); ++k) rho_pow[k] = rho_pow[k - 1] * m.rho();
  double acc = 0.0;
  for (mask_t s = 0; s < fs.coeffs.size(); ++s)
    acc += fs.coeffs[s] * gs.coeffs[s] * rho_pow[popcount(s)];
  return acc;
}

inline double mismatch_probability(const BooleanFunction& f, const BooleanFunction& g,
                                   const JointInputModel& m) {
  double v = (1.0 - cross_expectation(f, g, m)) / 2.0;
  return std::clamp(v, 0.0, 1.0);
}

// Noise sensitivity NS_{(p,q,rho)}: mismatch of f with itself under the
// correlated pair model.
inline double noise_sensitivity(const BooleanFunction& f, const JointInputModel& m) {
  return mismatch_probability(f, f, m);
}

}  // namespace bfn
