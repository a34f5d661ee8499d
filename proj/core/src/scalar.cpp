#include "frieze/scalar.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "frieze/error.hpp"

namespace frieze {

namespace {

std::atomic<double> g_tolerance{1e-9};

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw KindMismatch("scalar kinds differ: " + to_string(a.kind()) + " vs " +
                     to_string(b.kind()));
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty number");
  std::string t = s[0] == '+' ? s.substr(1) : s;
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
      throw ParseError("not a rational: '" + s + "'");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Splits "re(+|-)im i" into its two textual parts. The imaginary part keeps its
// sign and loses the trailing 'i'; a bare sign means unit magnitude.
bool split_complex(const std::string& s, std::string& re, std::string& im) {
  if (s.empty() || s.back() != 'i') return false;
  std::string body = s.substr(0, s.size() - 1);
  size_t cut = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  if (cut == std::string::npos) {
    re = "0";
    im = body;
  } else {
    re = body.substr(0, cut);
    im = body.substr(cut);
  }
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return true;
}

double parse_double(const std::string& s) {
  size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("not a float: '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("not a float: '" + s + "'");
  return v;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(ScalarKind k) {
  switch (k) {
    case ScalarKind::Rational: return "rational";
    case ScalarKind::Gaussian: return "gaussian";
    case ScalarKind::Complex: return "complex-float";
  }
  return "?";
}

ScalarKind parse_kind(std::string_view s) {
  if (s == "rational") return ScalarKind::Rational;
  if (s == "gaussian") return ScalarKind::Gaussian;
  if (s == "complex-float" || s == "complex") return ScalarKind::Complex;
  throw ParseError("unknown scalar kind '" + std::string(s) + "'");
}

double float_tolerance() { return g_tolerance.load(); }
void set_float_tolerance(double tol) { g_tolerance.store(tol); }

Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw DivisionByZero("zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  return Scalar(std::move(r));
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  return Scalar(Gaussian{re, im});
}

Scalar Scalar::complex(double re, double im) { return Scalar(std::complex<double>(re, im)); }

Scalar Scalar::from_int(long x, ScalarKind k) {
  switch (k) {
    case ScalarKind::Rational: return Scalar(mpq_class(x));
    case ScalarKind::Gaussian: return Scalar(Gaussian{mpq_class(x), mpq_class(0)});
    case ScalarKind::Complex: return Scalar(std::complex<double>(double(x), 0.0));
  }
  return Scalar();
}

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0: return sgn(std::get<0>(v_)) == 0;
    case 1: return sgn(std::get<1>(v_).re) == 0 && sgn(std::get<1>(v_).im) == 0;
    default: return std::abs(std::get<2>(v_)) <= float_tolerance();
  }
}

bool Scalar::is_integer() const {
  return v_.index() == 0 && std::get<0>(v_).get_den() == 1;
}

bool Scalar::is_positive() const { return v_.index() == 0 && sgn(std::get<0>(v_)) > 0; }

const mpq_class& Scalar::q() const {
  if (v_.index() != 0) throw KindMismatch("expected a rational scalar");
  return std::get<0>(v_);
}

const Gaussian& Scalar::g() const {
  if (v_.index() != 1) throw KindMismatch("expected a gaussian scalar");
  return std::get<1>(v_);
}

std::complex<double> Scalar::z() const {
  switch (v_.index()) {
    case 0: return {std::get<0>(v_).get_d(), 0.0};
    case 1: return {std::get<1>(v_).re.get_d(), std::get<1>(v_).im.get_d()};
    default: return std::get<2>(v_);
  }
}

Scalar Scalar::as(ScalarKind k) const {
  if (kind() == k) return *this;
  if (k == ScalarKind::Complex) return Scalar(z());
  if (kind() == ScalarKind::Rational && k == ScalarKind::Gaussian)
    return Scalar(Gaussian{std::get<0>(v_), mpq_class(0)});
  if (kind() == ScalarKind::Gaussian && k == ScalarKind::Rational && sgn(g().im) == 0)
    return Scalar(g().re);
  throw KindMismatch("cannot convert " + to_string(kind()) + " to " + to_string(k));
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0: return Scalar(mpq_class(-std::get<0>(v_)));
    case 1: return Scalar(Gaussian{-std::get<1>(v_).re, -std::get<1>(v_).im});
    default: return Scalar(-std::get<2>(v_));
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (v_.index() != o.v_.index()) mismatch(*this, o);
  switch (v_.index()) {
    case 0: std::get<0>(v_) += std::get<0>(o.v_); break;
    case 1:
      std::get<1>(v_).re += std::get<1>(o.v_).re;
      std::get<1>(v_).im += std::get<1>(o.v_).im;
      break;
    default: std::get<2>(v_) += std::get<2>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (v_.index() != o.v_.index()) mismatch(*this, o);
  switch (v_.index()) {
    case 0: std::get<0>(v_) -= std::get<0>(o.v_); break;
    case 1:
      std::get<1>(v_).re -= std::get<1>(o.v_).re;
      std::get<1>(v_).im -= std::get<1>(o.v_).im;
      break;
    default: std::get<2>(v_) -= std::get<2>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (v_.index() != o.v_.index()) mismatch(*this, o);
  switch (v_.index()) {
    case 0: std::get<0>(v_) *= std::get<0>(o.v_); break;
    case 1: {
      const Gaussian& a = std::get<1>(v_);
      const Gaussian& b = std::get<1>(o.v_);
      Gaussian r{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
      v_ = std::move(r);
      break;
    }
    default: std::get<2>(v_) *= std::get<2>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (v_.index() != o.v_.index()) mismatch(*this, o);
  if (o.is_zero()) throw DivisionByZero("scalar division by zero");
  switch (v_.index()) {
    case 0: std::get<0>(v_) /= std::get<0>(o.v_); break;
    case 1: {
      const Gaussian& a = std::get<1>(v_);
      const Gaussian& b = std::get<1>(o.v_);
      mpq_class n = b.re * b.re + b.im * b.im;
      Gaussian r{(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
      v_ = std::move(r);
      break;
    }
    default: std::get<2>(v_) /= std::get<2>(o.v_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mismatch(a, b);
  switch (a.v_.index()) {
    case 0: return std::get<0>(a.v_) == std::get<0>(b.v_);
    case 1:
      return std::get<1>(a.v_).re == std::get<1>(b.v_).re &&
             std::get<1>(a.v_).im == std::get<1>(b.v_).im;
    default: return std::abs(std::get<2>(a.v_) - std::get<2>(b.v_)) <= float_tolerance();
  }
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mismatch(a, b);
  switch (a.v_.index()) {
    case 0: return std::get<0>(a.v_) < std::get<0>(b.v_);
    case 1: {
      const Gaussian& x = std::get<1>(a.v_);
      const Gaussian& y = std::get<1>(b.v_);
      return x.re < y.re || (x.re == y.re && x.im < y.im);
    }
    default: {
      auto x = std::get<2>(a.v_), y = std::get<2>(b.v_);
      return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
    }
  }
}

std::string Scalar::str() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_).get_str();
    case 1: {
      const Gaussian& x = std::get<1>(v_);
      if (sgn(x.im) == 0) return x.re.get_str();
      std::string im = x.im.get_str() + "i";
      if (sgn(x.re) == 0) return im;
      return x.re.get_str() + (sgn(x.im) > 0 ? "+" : "") + im;
    }
    default: {
      auto z = std::get<2>(v_);
      if (z.imag() == 0.0) return fmt_double(z.real());
      std::string im = fmt_double(z.imag()) + "i";
      return fmt_double(z.real()) + (z.imag() >= 0 ? "+" : "") + im;
    }
  }
}

Scalar Scalar::parse(std::string_view text, ScalarKind k) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty scalar");
  std::string re, im;
  bool cplx = split_complex(s, re, im);
  switch (k) {
    case ScalarKind::Rational:
      if (cplx) throw ParseError("imaginary part in rational scalar '" + s + "'");
      return Scalar(parse_rational(s));
    case ScalarKind::Gaussian:
      if (!cplx) return Scalar(Gaussian{parse_rational(s), mpq_class(0)});
      return Scalar(Gaussian{parse_rational(re), parse_rational(im)});
    case ScalarKind::Complex:
      if (!cplx) return Scalar(std::complex<double>(parse_double(s), 0.0));
      return Scalar(std::complex<double>(parse_double(re), parse_double(im)));
  }
  throw ParseError("bad scalar kind");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace frieze
