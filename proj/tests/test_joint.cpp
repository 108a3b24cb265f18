#include <doctest.h>

#include <cmath>
#include <random>

#include "bfn/joint.hpp"
#include "bfn/oracle.hpp"

using namespace bfn;

namespace {

BooleanFunction random_function(int n, std::mt19937_64& rng) {
  std::vector<int> t(std::size_t{1} << n);
  for (int& v : t) v = (rng() & 1) ? 1 : -1;
  return BooleanFunction(n, std::move(t));
}

}  // namespace

TEST_CASE("make_joint") {
  SUBCASE("perfectly correlated fair bits") {
    JointInputModel m = make_joint(0.5, 0.5, 1.0);
    CHECK(m.pmf(+1, +1) == doctest::Approx(0.5));
    CHECK(m.pmf(-1, -1) == doctest::Approx(0.5));
    CHECK(m.pmf(+1, -1) == doctest::Approx(0.0));
    CHECK(m.pmf(-1, +1) == doctest::Approx(0.0));
  }

  SUBCASE("rho = 0 is the product pmf") {
    for (double p : {0.2, 0.5, 0.7}) {
      JointInputModel m = make_joint(p, p, 0.0);
      CHECK(m.pmf(-1, -1) == doctest::Approx(p * p).epsilon(1e-12));
      CHECK(m.pmf(-1, +1) == doctest::Approx(p * (1 - p)).epsilon(1e-12));
      CHECK(m.pmf(+1, +1) == doctest::Approx((1 - p) * (1 - p)).epsilon(1e-12));
    }
  }

  SUBCASE("infeasible triple reports the valid rho interval") {
    // P(-1,+1) goes negative for (p,q,rho) = (0.1, 0.9, 1)
    CHECK_THROWS_AS(make_joint(0.1, 0.9, 1.0), infeasible_model_error);
    try {
      make_joint(0.1, 0.9, 1.0);
    } catch (const infeasible_model_error& e) {
      CHECK(e.rho_min <= e.rho_max);
      CHECK(e.rho_max < 1.0);
      // interval oracle: every pmf entry nonnegative at both endpoints
      for (double r : {e.rho_min, e.rho_max}) {
        JointInputModel m = make_joint(0.1, 0.9, r);
        for (int x : {-1, 1})
          for (int y : {-1, 1}) CHECK(m.pmf(x, y) >= -1e-12);
      }
    }
  }

  SUBCASE("marginals and E[XY] recovered from the pmf") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    int built = 0;
    while (built < 20) {
      double p = unif(rng), q = unif(rng);
      double rho = 2.0 * unif(rng) - 1.0;
      try {
        JointInputModel m = make_joint(p, q, rho);
        ++built;
        double px = m.pmf(-1, -1) + m.pmf(-1, +1);
        double py = m.pmf(-1, -1) + m.pmf(+1, -1);
        CHECK(px == doctest::Approx(p).epsilon(1e-12));
        CHECK(py == doctest::Approx(q).epsilon(1e-12));
        double exy = 0.0;
        for (int x : {-1, 1})
          for (int y : {-1, 1}) exy += x * y * m.pmf(x, y);
        CHECK(exy == doctest::Approx(m.exy()).epsilon(1e-12));
      } catch (const infeasible_model_error&) {
      }
    }
  }
}

TEST_CASE("cross_expectation") {
  SUBCASE("constants give 1") {
    BooleanFunction one = builtin::constant(1, 3);
    for (double rho : {-0.5, 0.0, 0.5})
      CHECK(cross_expectation(one, one, make_joint(0.3, 0.6, rho)) ==
            doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("dictator pair at p=q=1/2 gives rho") {
    BooleanFunction d = builtin::parity(0b1, 4);
    for (double rho : {-0.8, 0.0, 0.3, 1.0})
      CHECK(cross_expectation(d, d, make_joint(0.5, 0.5, rho)) ==
            doctest::Approx(rho).epsilon(1e-12));
  }
  SUBCASE("MAJ3 pair matches the enumeration oracle") {
    BooleanFunction f = builtin::maj(3);
    JointInputModel m = make_joint(0.3, 0.3, 0.5);
    double closed = cross_expectation(f, f, m);
    double mismatch = oracle::enum_mismatch(f, f, m);
    CHECK((1.0 - closed) / 2.0 == doctest::Approx(mismatch).epsilon(1e-9));
  }
  SUBCASE("arity mismatch throws") {
    CHECK_THROWS_AS(cross_expectation(builtin::maj(3), builtin::or_fn(4),
                                      make_joint(0.5, 0.5, 0.5)),
                    arity_error);
  }
  SUBCASE("rho = 0 factorizes into the product of the means") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 1 + int(rng() % 5);
      BooleanFunction f = random_function(n, rng);
      BooleanFunction g = random_function(n, rng);
      JointInputModel m = make_joint(0.3, 0.6, 0.0);
      double fmean = transform(f, m.x_bias()).coeffs[0];
      double gmean = transform(g, m.y_bias()).coeffs[0];
      CHECK(cross_expectation(f, g, m) == doctest::Approx(fmean * gmean).epsilon(1e-12));
    }
  }
}

TEST_CASE("mismatch_probability") {
  SUBCASE("identical functions on identical inputs never mismatch") {
    for (double p : {0.2, 0.5, 0.8}) {
      JointInputModel m = make_joint(p, p, 1.0);
      CHECK(mismatch_probability(builtin::maj(5), builtin::maj(5), m) ==
            doctest::Approx(0.0).epsilon(1e-12));
    }
  }
  SUBCASE("dictator pair reduces to P(X1 != Y1) = (1-rho)/2") {
    BooleanFunction d = builtin::parity(0b1, 3);
    for (double rho : {-1.0, -0.3, 0.0, 0.6})
      CHECK(mismatch_probability(d, d, make_joint(0.5, 0.5, rho)) ==
            doctest::Approx((1.0 - rho) / 2.0).epsilon(1e-12));
  }
  SUBCASE("parity([3]) at p=q=1/2, rho=0.8 gives 0.244") {
    BooleanFunction f = builtin::parity(0b111, 3);
    CHECK(mismatch_probability(f, f, make_joint(0.5, 0.5, 0.8)) ==
          doctest::Approx(0.244).epsilon(1e-9));
  }
  SUBCASE("symmetry under swapping (f,p) with (g,q)") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 1 + int(rng() % 4);
      BooleanFunction f = random_function(n, rng);
      BooleanFunction g = random_function(n, rng);
      double a = mismatch_probability(f, g, make_joint(0.3, 0.7, 0.4));
      double b = mismatch_probability(g, f, make_joint(0.7, 0.3, 0.4));
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
  }
}

TEST_CASE("noise_sensitivity") {
  SUBCASE("zero at rho=1 with equal marginals") {
    CHECK(noise_sensitivity(builtin::maj(5), make_joint(0.5, 0.5, 1.0)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(noise_sensitivity(builtin::or_fn(4), make_joint(0.3, 0.3, 1.0)) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("parity([n]) at p=q=1/2 gives (1 - rho^n)/2") {
    for (int n : {1, 2, 4, 6}) {
      BooleanFunction f = builtin::parity((mask_t{1} << n) - 1, n);
      for (double rho : {-0.7, 0.2, 0.9})
        CHECK(noise_sensitivity(f, make_joint(0.5, 0.5, rho)) ==
              doctest::Approx((1.0 - std::pow(rho, n)) / 2.0).epsilon(1e-12));
    }
  }
  SUBCASE("range and Monte Carlo agreement for MAJ5") {
    JointInputModel m = make_joint(0.4, 0.5, 0.7);
    BooleanFunction f = builtin::maj(5);
    double ns = noise_sensitivity(f, m);
    CHECK(ns >= 0.0);
    CHECK(ns <= 1.0);
    auto est = oracle::mc_mismatch(f, f, m, {42, 1'000'000});
    CHECK(std::abs(est.estimate - ns) <= 3.0 * est.std_error);
  }
  SUBCASE("parity noise sensitivity approaches 1/2 monotonically in n") {
    for (double rho : {-0.6, 0.4, 0.9}) {
      for (int n = 1; n <= 8; ++n) {
        BooleanFunction fn = builtin::parity((mask_t{1} << n) - 1, n);
        BooleanFunction fn1 = builtin::parity((mask_t{1} << (n + 1)) - 1, n + 1);
        double a = noise_sensitivity(fn, make_joint(0.5, 0.5, rho));
        double b = noise_sensitivity(fn1, make_joint(0.5, 0.5, rho));
        CHECK(std::abs(b - 0.5) < std::abs(a - 0.5));
      }
    }
  }
}
