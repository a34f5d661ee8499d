#include "frieze/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "frieze/error.hpp"

namespace frieze {

Laurent Laurent::constant(int nvars, const mpz_class& c) {
  Laurent p(nvars);
  p.add_term(Exponent(static_cast<size_t>(nvars), 0), c);
  return p;
}

Laurent Laurent::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw DimensionError("variable index out of range");
  Exponent e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = 1;
  return monomial(std::move(e));
}

Laurent Laurent::monomial(Exponent e, const mpz_class& c) {
  Laurent p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void Laurent::add_term(const Exponent& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Laurent::check_vars(const Laurent& o) const {
  if (o.nvars_ != nvars_) throw DimensionError("Laurent polynomials in different rings");
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  check_vars(o);
  Laurent r(nvars_);
  Exponent e(static_cast<size_t>(nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

Laurent& Laurent::operator/=(const Laurent& o) {
  *this = divide_exact(*this, o);
  return *this;
}

Laurent Laurent::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw NonLaurentQuotient("negative power of a non-monomial");
    const auto& [ex, c] = *terms_.begin();
    if (c != 1 && c != -1) throw NonLaurentQuotient("negative power with non-unit coefficient");
    Exponent ne = ex;
    for (auto& x : ne) x *= e;
    mpz_class nc = (c == -1 && (e % 2 != 0)) ? mpz_class(-1) : mpz_class(1);
    return monomial(ne, nc);
  }
  Laurent r = constant(nvars_, 1);
  Laurent base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

namespace {

Scalar scalar_pow(const Scalar& x, int e) {
  Scalar r = Scalar::one(x.kind());
  Scalar b = e < 0 ? Scalar::one(x.kind()) / x : x;
  for (int k = std::abs(e); k > 0; --k) r *= b;
  return r;
}

// Splits p = monomial(shift) * q with q having no monomial factor.
Laurent::Exponent min_exponents(const Laurent& p) {
  Laurent::Exponent m(static_cast<size_t>(p.nvars()), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (size_t v = 0; v < m.size(); ++v) m[v] = first ? e[v] : std::min(m[v], e[v]);
    first = false;
  }
  return m;
}

}  // namespace

Scalar Laurent::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw DimensionError("point has wrong dimension");
  if (point.empty()) {
    return terms_.empty() ? Scalar(0) : Scalar(terms_.begin()->second);
  }
  const ScalarKind kind = point[0].kind();
  for (size_t v = 0; v < point.size(); ++v)
    if (point[v].is_zero()) throw ZeroSubstitution("variable x" + std::to_string(v + 1) + " set to zero");
  Scalar sum = Scalar::zero(kind);
  for (const auto& [e, c] : terms_) {
    Scalar t = Scalar(mpq_class(c)).as(kind);
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) t *= scalar_pow(point[v], e[v]);
    sum += t;
  }
  return sum;
}

bool Laurent::positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool wrote = false;
    if (a != 1 || constant_term) {
      os << a.get_str();
      wrote = true;
    }
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (wrote) os << "*";
      os << "x" << v + 1;
      if (e[v] != 1) os << "^" << e[v];
      wrote = true;
    }
  }
  return os.str();
}

Laurent divide_exact(const Laurent& a, const Laurent& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("Laurent polynomials in different rings");
  if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
  if (a.is_zero()) return Laurent(a.nvars());
  const size_t m = static_cast<size_t>(a.nvars());

  Laurent::Exponent sa = min_exponents(a), sb = min_exponents(b);
  auto shifted = [&](const Laurent& p, const Laurent::Exponent& s) {
    Laurent r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
      Laurent::Exponent ne = e;
      for (size_t v = 0; v < m; ++v) ne[v] -= s[v];
      r += Laurent::monomial(ne, c);
    }
    return r;
  };
  Laurent rem = shifted(a, sa);
  const Laurent pb = shifted(b, sb);
  const auto& [lead_e, lead_c] = *pb.terms().rbegin();

  Laurent q(a.nvars());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    Laurent::Exponent qe(m);
    for (size_t v = 0; v < m; ++v) {
      qe[v] = re[v] - lead_e[v];
      if (qe[v] < 0) throw NonLaurentQuotient("leading monomial not divisible");
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      throw NonLaurentQuotient("coefficient not divisible");
    mpz_class qc = rc / lead_c;
    Laurent t = Laurent::monomial(qe, qc);
    q += t;
    rem -= t * pb;
  }
  Laurent::Exponent s(m);
  for (size_t v = 0; v < m; ++v) s[v] = sb[v] - sa[v];
  return shifted(q, s);
}

}  // namespace frieze
