#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cayley {

using BigInt = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[k] is the coefficient of x^k; the stored vector never ends in a
/// zero, so the zero polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(std::size_t degree, const BigInt& c = 1);
  /// 1 + x^k, the building block of every fixed-set product.
  static IntPoly one_plus_x_pow(std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  void set_coeff(std::size_t k, const BigInt& c);

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  IntPoly scale(const BigInt& c) const;
  IntPoly pow(unsigned k) const;
  BigInt eval(const BigInt& t) const;

  /// Coefficientwise exact division. Throws InternalError when some
  /// coefficient is not divisible by c; c must be positive.
  IntPoly divide_exact(const BigInt& c) const;

  /// Copy with the x^0 coefficient removed.
  IntPoly without_constant() const;

  bool all_nonnegative() const;

  /// Ascending-degree text form: "2x^2+x^4", "x", "0", "x^2-3x^5".
  std::string to_string() const;

  /// Parses the text form; repeated degrees are summed.
  static IntPoly parse(std::string_view text);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// One term of a polynomial as written, before like terms are combined.
struct Term {
  std::size_t degree;
  BigInt coeff;
};

/// Splits a text polynomial into its written terms, keeping duplicates.
/// Throws std::invalid_argument on malformed input.
std::vector<Term> parse_terms(std::string_view text);

BigInt eval_int(const IntPoly& p, const BigInt& t);
IntPoly divide_exact_by_int(const IntPoly& p, const BigInt& c);

/// JSON form: array of [degree, "coefficient"] pairs for nonzero terms.
inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

nlohmann::json to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

}  // namespace cayley
