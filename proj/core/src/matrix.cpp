#include "frieze/matrix.hpp"

#include <cmath>
#include <sstream>

#include "frieze/error.hpp"

namespace frieze {

namespace {

struct GaussInt {
  mpz_class re, im;
};

bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
bool is_zero(const GaussInt& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
mpz_class neg(const mpz_class& a) { return -a; }
GaussInt neg(const GaussInt& a) { return {-a.re, -a.im}; }

mpz_class divexact(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

GaussInt divexact(const GaussInt& a, const GaussInt& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  return {divexact(re, n), divexact(im, n)};
}

// Bareiss elimination over an integral domain; every division is exact.
template <class R>
R bareiss(std::vector<std::vector<R>> a, R one) {
  const size_t n = a.size();
  if (n == 0) return one;
  bool negate = false;
  R prev = one;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      size_t p = k + 1;
      while (p < n && is_zero(a[p][k])) ++p;
      if (p == n) return R{};
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = divexact(sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j])), prev);
    }
    prev = a[k][k];
  }
  R d = a[n - 1][n - 1];
  return negate ? neg(d) : d;
}

mpz_class row_lcm(const Matrix& m, size_t i) {
  mpz_class l = 1;
  for (size_t j = 0; j < m.cols(); ++j) {
    const Scalar& s = m(i, j);
    if (s.kind() == ScalarKind::Rational) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.q().get_den_mpz_t());
    } else {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.g().re.get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.g().im.get_den_mpz_t());
    }
  }
  return l;
}

Scalar det_rational(const Matrix& m) {
  const size_t n = m.rows();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (size_t i = 0; i < n; ++i) {
    mpz_class l = row_lcm(m, i);
    scale *= l;
    for (size_t j = 0; j < n; ++j) {
      mpq_class v = m(i, j).q() * l;
      a[i][j] = v.get_num();
    }
  }
  mpz_class d = bareiss<mpz_class>(std::move(a), mpz_class(1));
  return Scalar(mpq_class(d, scale));
}

Scalar det_gaussian(const Matrix& m) {
  const size_t n = m.rows();
  std::vector<std::vector<GaussInt>> a(n, std::vector<GaussInt>(n));
  mpz_class scale = 1;
  for (size_t i = 0; i < n; ++i) {
    mpz_class l = row_lcm(m, i);
    scale *= l;
    for (size_t j = 0; j < n; ++j) {
      mpq_class re = m(i, j).g().re * l, im = m(i, j).g().im * l;
      a[i][j] = {re.get_num(), im.get_num()};
    }
  }
  GaussInt d = bareiss<GaussInt>(std::move(a), GaussInt{1, 0});
  return Scalar::gaussian(mpq_class(d.re, scale), mpq_class(d.im, scale));
}

Scalar det_complex(const Matrix& m) {
  const size_t n = m.rows();
  std::vector<std::vector<std::complex<double>>> a(n, std::vector<std::complex<double>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m(i, j).z();
  std::complex<double> d = 1.0;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    for (size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (a[p][k] == 0.0) return Scalar::complex(0.0);
    if (p != k) {
      std::swap(a[p], a[k]);
      d = -d;
    }
    d *= a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      std::complex<double> f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return Scalar(d);
}

void require_same_kind(const Matrix& a, const Matrix& b) {
  if (a.rows() && b.rows() && a.kind() != b.kind())
    throw KindMismatch("matrix kinds differ");
}

}  // namespace

Matrix::Matrix(size_t rows, size_t cols, ScalarKind kind)
    : r_(rows), c_(cols), kind_(kind), e_(rows * cols, Scalar::zero(kind)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Matrix m;
  m.r_ = rows.size();
  m.c_ = rows.empty() ? 0 : rows[0].size();
  m.kind_ = (m.r_ && m.c_) ? rows[0][0].kind() : ScalarKind::Rational;
  for (const auto& r : rows) {
    if (r.size() != m.c_) throw DimensionError("ragged matrix rows");
    for (const auto& s : r) {
      if (s.kind() != m.kind_) throw KindMismatch("matrix entries of mixed kinds");
      m.e_.push_back(s);
    }
  }
  return m;
}

Matrix Matrix::identity(size_t n, ScalarKind kind) {
  Matrix m(n, n, kind);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(kind);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_, kind_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix t = *this;
  for (auto& s : t.e_) s = -s;
  return t;
}

Matrix Matrix::submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
  Matrix s(rows.size(), cols.size(), kind_);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= r_) throw DimensionError("row index out of range");
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= c_) throw DimensionError("column index out of range");
      s(i, j) = (*this)(rows[i], cols[j]);
    }
  }
  return s;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (size_t k = 0; k < a.e_.size(); ++k)
    if (a.e_[k] != b.e_[k]) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < r_; ++i) {
    os << "[";
    for (size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("inner dimensions differ");
  require_same_kind(a, b);
  Matrix c(a.rows(), b.cols(), a.kind());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) {
      Scalar s = Scalar::zero(a.kind());
      for (size_t k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch");
  require_same_kind(a, b);
  Matrix r = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

Scalar det(const Matrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  switch (m.kind()) {
    case ScalarKind::Rational: return det_rational(m);
    case ScalarKind::Gaussian: return det_gaussian(m);
    case ScalarKind::Complex: return det_complex(m);
  }
  return Scalar();
}

Scalar minor(const Matrix& m, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
  if (rows.size() != cols.size()) throw DimensionError("minor index sets differ in size");
  return det(m.submatrix(rows, cols));
}

Scalar det_cofactor(const Matrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return Scalar::one(m.kind());
  if (n == 1) return m(0, 0);
  Scalar acc = Scalar::zero(m.kind());
  std::vector<size_t> rest;
  for (size_t i = 1; i < n; ++i) rest.push_back(i);
  for (size_t j = 0; j < n; ++j) {
    std::vector<size_t> cols;
    for (size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    Scalar term = m(0, j) * det_cofactor(m.submatrix(rest, cols));
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

std::vector<Scalar> solve(const Matrix& m, const std::vector<Scalar>& rhs) {
  if (!m.square() || rhs.size() != m.rows()) throw DimensionError("solve: shape mismatch");
  const size_t n = m.rows();
  std::vector<std::vector<Scalar>> a(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
    a[i].push_back(rhs[i]);
  }
  const bool flt = m.kind() == ScalarKind::Complex;
  for (size_t k = 0; k < n; ++k) {
    size_t p = n;
    for (size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (p == n || (flt && std::abs(a[i][k].z()) > std::abs(a[p][k].z()))) p = i;
      if (!flt) break;
    }
    if (p == n) throw DivisionByZero("singular system");
    std::swap(a[p], a[k]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      Scalar f = a[i][k] / a[k][k];
      for (size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Scalar> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace frieze
