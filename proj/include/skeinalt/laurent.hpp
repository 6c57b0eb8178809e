#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "skeinalt/error.hpp"

namespace skeinalt {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial over the integers in one variable q.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;  // the zero polynomial

  static LaurentPoly monomial(BigInt c, int exponent);
  static LaurentPoly constant(BigInt c) { return monomial(std::move(c), 0); }
  static LaurentPoly one() { return constant(1); }
  /// q + q^-1, the value of a removed loop.
  static LaurentPoly loop_value();

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, BigInt>& terms() const { return coeffs_; }
  BigInt coeff(int exponent) const;
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero

  void add_term(int exponent, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  /// Multiplication by q^d.
  LaurentPoly shifted(int d) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ < b.coeffs_; }

  /// Canonical text, ascending exponents, e.g. "-q^-2 + q^-1".
  std::string to_text() const;
  static LaurentPoly from_text(const std::string& text);

  /// JSON object mapping exponent strings to integer coefficients.
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

private:
  std::map<int, BigInt> coeffs_;
};

struct LeadingTerm {
  int sign;          // +1 or -1
  BigInt magnitude;  // > 0
  int exponent;

  friend bool operator==(const LeadingTerm& a, const LeadingTerm& b) {
    return a.sign == b.sign && a.magnitude == b.magnitude && a.exponent == b.exponent;
  }
};

/// Terms at the minimal and maximal stored exponent. Requires nonzero input.
std::pair<LeadingTerm, LeadingTerm> leading_terms(const LaurentPoly& p);

/// True iff p is zero, or all exponents share one parity and the coefficient
/// signs alternate with exponent step 2 (interior zero coefficients allowed:
/// signs at distance 4 agree, at distance 2 differ).
bool is_alternating_poly(const LaurentPoly& p);

/// Residue class mod 4 shared by all positively-signed exponents of a nonzero
/// alternating polynomial. Two such polynomials have the same parity iff their
/// classes agree.
struct ParityClass {
  std::uint8_t residue = 0;  // element of Z/4

  friend bool operator==(const ParityClass& a, const ParityClass& b) { return a.residue == b.residue; }
  friend bool operator!=(const ParityClass& a, const ParityClass& b) { return a.residue != b.residue; }
};

/// Requires p nonzero and alternating.
ParityClass parity_class(const LaurentPoly& p);

inline int mod4(long long v) { return static_cast<int>(((v % 4) + 4) % 4); }

/// Exact quotient p / d in Z[q, q^-1]; throws when d is zero or no exact
/// quotient exists.
LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& d);

}  // namespace skeinalt
