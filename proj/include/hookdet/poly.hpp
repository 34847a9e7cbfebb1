#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hookdet/errors.hpp"

namespace hookdet {

using BigInt = boost::multiprecision::cpp_int;

// One symbol x[i,j,k]: level k of the variable family attached to block (i,j).
// Plain (non-block) variables x_k live at block (1,1). All indices 1-based.
struct VarId {
  int block_row = 1;
  int block_col = 1;
  int level = 1;

  auto operator<=>(const VarId&) const = default;
};

// Product of variable powers, kept sorted by VarId with positive exponents.
// The empty monomial is 1. Ordering is lexicographic on (VarId, exponent)
// pairs, which makes serialization deterministic.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, int exponent = 1);

  // Normalizes: sorts, merges duplicates, drops zero exponents.
  explicit Monomial(std::vector<std::pair<VarId, int>> factors);

  bool is_one() const { return factors_.empty(); }
  int degree() const;
  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<VarId, int>> factors_;
};

using Assignment = std::map<VarId, BigInt>;

// Sparse multivariate polynomial over arbitrary-precision integers, the
// single number system of the artifact. Canonical form: no zero coefficients,
// term map ordered by Monomial. Values are immutable in spirit: operations
// return new polynomials and never mutate their inputs.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(BigInt(c)) {}
  explicit Polynomial(BigInt c);
  static Polynomial variable(VarId v);
  static Polynomial variable(int block_row, int block_col, int level);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  std::set<VarId> variables() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  bool operator==(const Polynomial&) const = default;

  // Exact value under the assignment; a ring homomorphism. Throws
  // MissingVariable if some variable of the polynomial has no value.
  BigInt eval(const Assignment& assignment) const;

  // Canonical rendering, e.g. "x[1,1,1]*x[1,1,2] - x[1,1,2]^2"; bit-stable
  // across runs. parse() accepts exactly this grammar (whitespace-tolerant)
  // and is a left inverse of str().
  std::string str() const;
  static Polynomial parse(std::string_view text);

 private:
  std::map<Monomial, BigInt> terms_;
};

inline Polynomial operator*(const BigInt& c, const Polynomial& p) {
  return Polynomial(c) * p;
}

}  // namespace hookdet
