#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace frieze {

enum class ScalarKind { Rational, Gaussian, Complex };

std::string to_string(ScalarKind k);
ScalarKind parse_kind(std::string_view s);

struct Gaussian {
  mpq_class re;
  mpq_class im;
};

// Absolute zero threshold used by ComplexFloat comparisons.
double float_tolerance();
void set_float_tolerance(double tol);

// Field element of one of three kinds. Binary operations require both
// operands to share a kind and throw KindMismatch otherwise.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(int x) : v_(mpq_class(x)) {}
  Scalar(long x) : v_(mpq_class(x)) {}
  Scalar(const mpz_class& x) : v_(mpq_class(x)) {}
  Scalar(mpq_class x) : v_(std::move(x)) { std::get<0>(v_).canonicalize(); }
  Scalar(Gaussian g) : v_(std::move(g)) {
    std::get<1>(v_).re.canonicalize();
    std::get<1>(v_).im.canonicalize();
  }
  Scalar(std::complex<double> z) : v_(z) {}

  static Scalar rational(long p, long q = 1);
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar complex(double re, double im = 0.0);
  static Scalar from_int(long x, ScalarKind k);
  static Scalar zero(ScalarKind k) { return from_int(0, k); }
  static Scalar one(ScalarKind k) { return from_int(1, k); }

  ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }
  bool is_zero() const;
  bool is_integer() const;  // rational kind with denominator 1
  bool is_positive() const; // rational kind and > 0

  const mpq_class& q() const;
  const Gaussian& g() const;
  std::complex<double> z() const;  // any kind, converted
  Scalar as(ScalarKind k) const;   // exact promotion; complex cannot go back

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total order for rationals only; used for canonical keys.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string str() const;
  static Scalar parse(std::string_view text, ScalarKind k);

 private:
  std::variant<mpq_class, Gaussian, std::complex<double>> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace frieze
