#include <doctest.h>

#include <algorithm>
#include <random>

#include "bfn/boolean_function.hpp"

using namespace bfn;

TEST_CASE("evaluate on builtin families") {
  BooleanFunction or5 = builtin::or_fn(5);
  CHECK(or5.evaluate(0) == 1);  // all-(+1) point
  for (mask_t x = 1; x < 32; ++x) CHECK(or5.evaluate(x) == -1);

  BooleanFunction maj3 = builtin::maj(3);
  CHECK(maj3.evaluate(0b001) == 1);  // exactly one -1
  CHECK(maj3.evaluate(0b010) == 1);
  CHECK(maj3.evaluate(0b011) == -1);

  CHECK_THROWS_AS(or5.evaluate(32), arity_error);
}

TEST_CASE("builtin parameter validation") {
  CHECK_THROWS(builtin::maj(4));  // even arity
  CHECK_THROWS(builtin::or_fn(25));
  CHECK_THROWS(builtin::or_fn(0));
  CHECK_THROWS(builtin::constant(0, 3));
}

TEST_CASE("maj(3) at (+1,+1,-1)") {
  // bit 2 set encodes x_3 = -1
  CHECK(builtin::maj(3).evaluate(0b100) == 1);
}

TEST_CASE("parity({1,2}) at (-1,-1)") {
  BooleanFunction f = builtin::parity(0b11, 2);
  CHECK(f.evaluate(0b11) == 1);
  CHECK(f.evaluate(0b01) == -1);
}

TEST_CASE("parity equals the product of selected coordinates, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (mask_t s = 0; s < (mask_t{1} << n); ++s) {
      BooleanFunction f = builtin::parity(s, n);
      for (mask_t x = 0; x < f.size(); ++x) {
        int prod = 1;
        for (int b = 0; b < n; ++b)
          if (s & (mask_t{1} << b)) prod *= (x & (mask_t{1} << b)) ? -1 : 1;
        CHECK(f.evaluate(x) == prod);
      }
    }
  }
}

TEST_CASE("index convention: flipping bit b flips coordinate x_{b+1}") {
  // The dictator on x_{b+1} changes value exactly when bit b of the index flips.
  for (int n = 1; n <= 4; ++n) {
    for (int b = 0; b < n; ++b) {
      BooleanFunction dict = builtin::parity(mask_t{1} << b, n);
      for (mask_t x = 0; x < dict.size(); ++x)
        CHECK(dict.evaluate(x) == -dict.evaluate(x ^ (mask_t{1} << b)));
    }
  }
}

TEST_CASE("maj is invariant under input permutation") {
  std::mt19937 rng(7);
  for (int n : {3, 5}) {
    BooleanFunction f = builtin::maj(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      for (mask_t x = 0; x < f.size(); ++x) {
        mask_t px = 0;
        for (int b = 0; b < n; ++b)
          if (x & (mask_t{1} << b)) px |= mask_t{1} << perm[b];
        CHECK(f.evaluate(x) == f.evaluate(px));
      }
    }
  }
}

TEST_CASE("threshold and tribes definitions") {
  // threshold(3,2): +1 iff at least 2 inputs are +1
  BooleanFunction t = builtin::threshold(3, 2);
  CHECK(t.evaluate(0) == 1);
  CHECK(t.evaluate(0b001) == 1);
  CHECK(t.evaluate(0b011) == -1);

  // tribes(2,2): +1 iff some pair of adjacent inputs is all +1
  BooleanFunction tr = builtin::tribes(2, 2);
  CHECK(tr.arity() == 4);
  CHECK(tr.evaluate(0) == 1);
  CHECK(tr.evaluate(0b0011) == 1);   // second tribe all +1
  CHECK(tr.evaluate(0b0110) == -1);  // both tribes broken
}

TEST_CASE("bias derived quantities") {
  Bias b(0.3);
  CHECK(b.mu() == doctest::Approx(0.4));
  CHECK(b.mu() * b.mu() + b.sigma() * b.sigma() == doctest::Approx(1.0));
  CHECK(Bias::from_p_one(0.7).p() == doctest::Approx(0.3));
  CHECK_THROWS(Bias(0.0));
  CHECK_THROWS(Bias(1.0));
  CHECK_THROWS(Bias(1.5));
}

TEST_CASE("builtin spec strings") {
  CHECK(builtin_from_spec("or:5") == builtin::or_fn(5));
  CHECK(builtin_from_spec("maj:3") == builtin::maj(3));
  CHECK(builtin_from_spec("parity:1,3:5") == builtin::parity(0b101, 5));
  CHECK(builtin_from_spec("constant:+1:4") == builtin::constant(1, 4));
  CHECK(builtin_from_spec("threshold:5:2") == builtin::threshold(5, 2));
  CHECK(builtin_from_spec("tribes:2:3") == builtin::tribes(2, 3));
  CHECK_THROWS(builtin_from_spec("nope:3"));
  CHECK_THROWS(builtin_from_spec("maj:x"));
}

TEST_CASE("truth table parse and emit") {
  BooleanFunction dict = parse_truth_table("n=1\n+ -\n");
  CHECK(dict.evaluate(0) == 1);
  CHECK(dict.evaluate(1) == -1);

  SUBCASE("round trip on canonical form") {
    std::string text = emit_truth_table(builtin::maj(3));
    CHECK(emit_truth_table(parse_truth_table(text)) == text);
    CHECK(parse_truth_table(text) == builtin::maj(3));
  }

  SUBCASE("comments and +1/-1 tokens accepted") {
    BooleanFunction f = parse_truth_table("# a comment\nn=2\n+1 -1 +1 -1\n");
    CHECK(f == parse_truth_table("n=2\n+ - + -"));
  }

  SUBCASE("entry count mismatch") {
    CHECK_THROWS_AS(parse_truth_table("n=2\n+ + +\n"), parse_error);
    CHECK_THROWS_AS(parse_truth_table("n=2\n+ + + + +\n"), parse_error);
  }

  SUBCASE("bad symbols reported with position") {
    try {
      parse_truth_table("n=2\n+ z + -\n");
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
      CHECK(std::string(e.what()).find("'z'") != std::string::npos);
    }
  }

  SUBCASE("missing or bad header") {
    CHECK_THROWS_AS(parse_truth_table("+ -\n"), parse_error);
    CHECK_THROWS_AS(parse_truth_table("n=zero\n+ -\n"), parse_error);
    CHECK_THROWS_AS(parse_truth_table("n=30\n+\n"), parse_error);
  }
}
