#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "frieze/scalar.hpp"

namespace frieze {

// Sparse Laurent polynomial with integer coefficients in variables x1..xm.
class Laurent {
 public:
  using Exponent = std::vector<int>;

  explicit Laurent(int nvars = 0) : nvars_(nvars) {}
  static Laurent constant(int nvars, const mpz_class& c);
  static Laurent variable(int nvars, int i);  // 0-based
  static Laurent monomial(Exponent e, const mpz_class& c = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }
  const std::map<Exponent, mpz_class>& terms() const { return terms_; }

  // Integer power; negative exponents only for monomials.
  Laurent pow(int e) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  bool positive_coefficients() const;
  // e.g. "x1^-1*x2^2 + x1^-1"; highest lex term first.
  std::string str() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator/=(const Laurent& o);  // exact, throws NonLaurentQuotient

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend Laurent operator/(Laurent a, const Laurent& b) { return a /= b; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

 private:
  void add_term(const Exponent& e, const mpz_class& c);
  void check_vars(const Laurent& o) const;

  int nvars_;
  std::map<Exponent, mpz_class> terms_;
};

// Exact quotient a / b; throws NonLaurentQuotient when b does not divide a.
Laurent divide_exact(const Laurent& a, const Laurent& b);

}  // namespace frieze
