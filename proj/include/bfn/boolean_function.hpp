#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bfn {

// Hard cap on arity: dense 2^n tables stay exact and fit in memory.
inline constexpr int kMaxArity = 24;

using mask_t = std::uint32_t;

inline int popcount(mask_t m) { return std::popcount(m); }

// Pretty-print a subset bitmask as {1,3,...} (bit b <-> variable b+1).
inline std::string subset_pretty(mask_t s) {
  std::string out = "{";
  bool first = true;
  for (int b = 0; s >> b; ++b) {
    if ((s >> b) & 1u) {
      if (!first) out += ',';
      out += std::to_string(b + 1);
      first = false;
    }
  }
  out += '}';
  return out;
}

struct arity_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input bias: p = P(X = -1). mu and sigma are the per-bit mean and stddev.
class Bias {
 public:
  explicit Bias(double p) : p_(p) {
    if (!(p > 0.0 && p < 1.0))
      throw std::invalid_argument("bias out of range: p must be in (0,1), got " +
                                  std::to_string(p));
  }

  // The figures' x-axis is P(X=+1); convert at the boundary.
  static Bias from_p_one(double p_one) { return Bias(1.0 - p_one); }

  double p() const { return p_; }
  double p_one() const { return 1.0 - p_; }
  double mu() const { return 1.0 - 2.0 * p_; }
  double sigma() const { return 2.0 * std::sqrt(p_ * (1.0 - p_)); }

 private:
  double p_;
};

// Probability of the point encoded by `point` under the p-biased product
// measure: each set bit is a -1 coordinate.
inline double point_probability(mask_t point, int n, const Bias& bias) {
  int minus = popcount(point);
  return std::pow(bias.p(), minus) * std::pow(1.0 - bias.p(), n - minus);
}

// Dense +-1 truth table over n bits. Index i encodes the point where bit b
// set means x_{b+1} = -1; index 0 is the all-(+1) point.
class BooleanFunction {
 public:
  BooleanFunction(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
    if (n < 1 || n > kMaxArity)
      throw arity_error("arity must be in [1," + std::to_string(kMaxArity) +
                        "], got " + std::to_string(n));
    if (table_.size() != (std::size_t{1} << n))
      throw std::invalid_argument("truth table must have 2^n entries");
    for (int v : table_)
      if (v != -1 && v != 1)
        throw std::invalid_argument("truth table entries must be -1 or +1");
  }

  int arity() const { return n_; }
  std::size_t size() const { return table_.size(); }
  const std::vector<int>& table() const { return table_; }

  int evaluate(mask_t point) const {
    if (point >= size())
      throw arity_error("point " + std::to_string(point) +
                        " out of range for arity " + std::to_string(n_));
    return table_[point];
  }

  bool operator==(const BooleanFunction& o) const = default;

 private:
  int n_;
  std::vector<int> table_;
};

inline int sign_of(double x) { return x >= 0.0 ? 1 : -1; }  // sign(0) = +1

namespace builtin {

inline void check_arity(int n) {
  if (n < 1 || n > kMaxArity)
    throw std::invalid_argument("arity must be in [1," +
                                std::to_string(kMaxArity) + "]");
}

// OR_n(x) = +1 iff every input is +1.
inline BooleanFunction or_fn(int n) {
  check_arity(n);
  std::vector<int> t(std::size_t{1} << n, -1);
  t[0] = 1;
  return BooleanFunction(n, std::move(t));
}

// AND_n(x) = -1 iff every input is -1.
inline BooleanFunction and_fn(int n) {
  check_arity(n);
  std::vector<int> t(std::size_t{1} << n, 1);
  t.back() = -1;
  return BooleanFunction(n, std::move(t));
}

// MAJ_n(x) = sign(sum x_i); requires odd n so there is no tie.
inline BooleanFunction maj(int n) {
  check_arity(n);
  if (n % 2 == 0)
    throw std::invalid_argument("maj requires odd arity, got " + std::to_string(n));
  std::vector<int> t(std::size_t{1} << n);
  for (mask_t x = 0; x < t.size(); ++x) {
    int minus = popcount(x);
    t[x] = (n - 2 * minus) >= 0 ? 1 : -1;
  }
  return BooleanFunction(n, std::move(t));
}

// Product of the selected coordinates.
inline BooleanFunction parity(mask_t s, int n) {
  check_arity(n);
  if (s >= (mask_t{1} << n))
    throw std::invalid_argument("parity subset exceeds arity");
  std::vector<int> t(std::size_t{1} << n);
  for (mask_t x = 0; x < t.size(); ++x)
    t[x] = (popcount(x & s) % 2 == 0) ? 1 : -1;
  return BooleanFunction(n, std::move(t));
}

inline BooleanFunction constant(int value, int n) {
  check_arity(n);
  if (value != 1 && value != -1)
    throw std::invalid_argument("constant value must be -1 or +1");
  return BooleanFunction(n, std::vector<int>(std::size_t{1} << n, value));
}

// +1 iff at least t of the n inputs are +1.
inline BooleanFunction threshold(int n, int t) {
  check_arity(n);
  if (t < 0 || t > n) throw std::invalid_argument("threshold t must be in [0,n]");
  std::vector<int> tab(std::size_t{1} << n);
  for (mask_t x = 0; x < tab.size(); ++x)
    tab[x] = (n - popcount(x)) >= t ? 1 : -1;
  return BooleanFunction(n, std::move(tab));
}

// s tribes of width w; +1 iff some tribe is all +1. n = w*s.
inline BooleanFunction tribes(int w, int s) {
  if (w < 1 || s < 1) throw std::invalid_argument("tribes parameters must be >= 1");
  int n = w * s;
  check_arity(n);
  std::vector<int> t(std::size_t{1} << n);
  mask_t tribe = (mask_t{1} << w) - 1;
  for (mask_t x = 0; x < t.size(); ++x) {
    int v = -1;
    for (int b = 0; b < s; ++b)
      if ((x & (tribe << (b * w))) == 0) { v = 1; break; }
    t[x] = v;
  }
  return BooleanFunction(n, std::move(t));
}

}  // namespace builtin

// Parses a compact builtin spec string, the same syntax the CLI accepts:
//   or:5  and:4  maj:5  parity:1,3:5  constant:+1:5  threshold:5:2  tribes:2:3
inline BooleanFunction builtin_from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') { parts.push_back(cur); cur.clear(); }
    else cur += c;
  }
  parts.push_back(cur);

  auto as_int = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::invalid_argument("bad integer '" + s + "' in function spec '" + spec + "'");
    }
  };

  const std::string& name = parts[0];
  if (name == "or" && parts.size() == 2) return builtin::or_fn(as_int(parts[1]));
  if (name == "and" && parts.size() == 2) return builtin::and_fn(as_int(parts[1]));
  if (name == "maj" && parts.size() == 2) return builtin::maj(as_int(parts[1]));
  if (name == "constant" && parts.size() == 3) {
    const std::string& v = parts[1];
    if (v == "+1" || v == "+") return builtin::constant(+1, as_int(parts[2]));
    if (v == "-1" || v == "-") return builtin::constant(-1, as_int(parts[2]));
    throw std::invalid_argument("constant value must be +1 or -1 in '" + spec + "'");
  }
  if (name == "threshold" && parts.size() == 3)
    return builtin::threshold(as_int(parts[1]), as_int(parts[2]));
  if (name == "tribes" && parts.size() == 3)
    return builtin::tribes(as_int(parts[1]), as_int(parts[2]));
  if (name == "parity" && parts.size() == 3) {
    mask_t s = 0;
    std::stringstream ss(parts[1]);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int v = as_int(tok);
      if (v < 1 || v > kMaxArity)
        throw std::invalid_argument("parity variable index out of range in '" + spec + "'");
      s |= mask_t{1} << (v - 1);
    }
    return builtin::parity(s, as_int(parts[2]));
  }
  throw std::invalid_argument("unknown function spec '" + spec + "'");
}

// Truth-table text format: first line `n=<arity>`, then 2^n tokens from
// {+, -, +1, -1} in index order. Lines starting with # are comments.
inline BooleanFunction parse_truth_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;

  // header
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("n=", 0) != 0)
      throw parse_error("line " + std::to_string(lineno) +
                        ": expected header 'n=<arity>', got '" + line + "'");
    try {
      std::size_t pos = 0;
      n = std::stoi(line.substr(2), &pos);
      if (pos != line.size() - 2) throw std::invalid_argument("");
    } catch (...) {
      throw parse_error("line " + std::to_string(lineno) + ": bad arity in '" + line + "'");
    }
    break;
  }
  if (n < 1 || n > kMaxArity)
    throw parse_error("arity must be in [1," + std::to_string(kMaxArity) + "]");

  std::vector<int> table;
  table.reserve(std::size_t{1} << n);
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (table.size() >= (std::size_t{1} << n))
        throw parse_error("line " + std::to_string(lineno) +
                          ": too many entries (expected " +
                          std::to_string(std::size_t{1} << n) + ")");
      if (tok == "+" || tok == "+1") table.push_back(1);
      else if (tok == "-" || tok == "-1") table.push_back(-1);
      else
        throw parse_error("line " + std::to_string(lineno) + ": bad token '" +
                          tok + "' at entry " + std::to_string(table.size()));
    }
  }
  if (table.size() != (std::size_t{1} << n))
    throw parse_error("expected " + std::to_string(std::size_t{1} << n) +
                      " entries, got " + std::to_string(table.size()));
  return BooleanFunction(n, std::move(table));
}

inline std::string emit_truth_table(const BooleanFunction& f) {
  std::string out = "n=" + std::to_string(f.arity()) + "\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ' ';
    out += f.table()[i] > 0 ? '+' : '-';
  }
  out += '\n';
  return out;
}

}  // namespace bfn
