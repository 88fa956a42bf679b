#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace multfree {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

/*
  Sparse multivariate Laurent polynomial with exact integer coefficients.

  Terms are kept sorted by exponent (lexicographic, ascending) with no
  zero coefficients, so the leading term under lex order is terms().back().
  Lex order on Z^v is compatible with addition, which makes exact division
  by leading terms well defined.
*/
class LaurentPoly {
 public:
  using Term = std::pair<Exponent, Integer>;

  explicit LaurentPoly(std::size_t variables = 0) : variables_(variables) {}

  static LaurentPoly monomial(Exponent exponent, Integer coefficient = 1);

  std::size_t variables() const { return variables_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of x^exponent (0 when absent).
  Integer coefficient(const Exponent& exponent) const;

  // Sum of coefficients, i.e. the value at x = (1,...,1).
  Integer value_at_identity() const;

  const Term& leading_term() const { return terms_.back(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& scalar);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Multiplies by the monomial coefficient * x^shift.
  LaurentPoly shifted(const Exponent& shift, const Integer& coefficient = 1) const;

  // Exact quotient; throws std::domain_error when divisor does not divide
  // this polynomial.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Build from arbitrary (possibly repeated, possibly zero) terms.
  static LaurentPoly from_terms(std::size_t variables, std::vector<Term> terms);

 private:
  std::size_t variables_;
  std::vector<Term> terms_;

  void check_arity(const LaurentPoly& other) const;
};

}  // namespace multfree
