#include "multfree/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace multfree {

namespace {

// Merge two sorted term lists, with b scaled by sign.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign > 0 ? j->second : Integer(-j->second));
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(i->second + j->second) : Integer(i->second - j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(Exponent exponent, Integer coefficient) {
  LaurentPoly p(exponent.size());
  if (coefficient != 0) p.terms_.emplace_back(std::move(exponent), std::move(coefficient));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::size_t variables, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.first.size() != variables)
      throw std::invalid_argument("laurent: exponent arity mismatch");
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  LaurentPoly p(variables);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void LaurentPoly::check_arity(const LaurentPoly& other) const {
  if (variables_ != other.variables_)
    throw std::invalid_argument("laurent: variable count mismatch");
}

Integer LaurentPoly::coefficient(const Exponent& exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, const Exponent& e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

Integer LaurentPoly::value_at_identity() const {
  Integer sum = 0;
  for (const auto& t : terms_) sum += t.second;
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_arity(other);
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_arity(other);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= scalar;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_arity(b);
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) raw.emplace_back(add(x.first, y.first), x.second * y.second);
  return LaurentPoly::from_terms(a.variables_, std::move(raw));
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift, const Integer& coefficient) const {
  if (shift.size() != variables_) throw std::invalid_argument("laurent: shift arity mismatch");
  LaurentPoly out(variables_);
  if (coefficient == 0) return out;
  out.terms_.reserve(terms_.size());
  // Translation preserves lex order.
  for (const auto& t : terms_) out.terms_.emplace_back(add(t.first, shift), t.second * coefficient);
  return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  check_arity(divisor);
  if (divisor.is_zero()) throw std::domain_error("laurent: division by zero");
  const auto& [lead_exp, lead_coef] = divisor.leading_term();
  std::vector<Term> quotient;
  if (is_zero()) return LaurentPoly(variables_);
  // An exact quotient's lowest exponent is lowest(dividend) - lowest(divisor).
  Exponent floor_exp(variables_);
  for (std::size_t k = 0; k < variables_; ++k)
    floor_exp[k] = terms_.front().first[k] - divisor.terms_.front().first[k];
  LaurentPoly remainder = *this;
  while (!remainder.is_zero()) {
    const auto& [r_exp, r_coef] = remainder.leading_term();
    if (r_coef % lead_coef != 0) throw std::domain_error("laurent: inexact division");
    Exponent q_exp(variables_);
    for (std::size_t k = 0; k < variables_; ++k) q_exp[k] = r_exp[k] - lead_exp[k];
    if (q_exp < floor_exp) throw std::domain_error("laurent: inexact division");
    Integer q_coef = r_coef / lead_coef;
    remainder -= divisor.shifted(q_exp, q_coef);
    quotient.emplace_back(std::move(q_exp), std::move(q_coef));
  }
  return from_terms(variables_, std::move(quotient));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.str() + "*x^(";
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(it->first[k]);
    }
    out += ')';
  }
  return out;
}

}  // namespace multfree
