#include "frieze/legendrian.hpp"

#include <cmath>

#include "frieze/error.hpp"
#include "frieze/lattice.hpp"

namespace frieze {

Matrix omega_matrix(const Scalar& a) {
  const ScalarKind k = a.kind();
  const Scalar z = Scalar::zero(k), o = Scalar::one(k), m = -o;
  return Matrix{{z, z, o, a}, {z, z, z, o}, {m, z, z, z}, {-a, m, z, z}};
}

Matrix omega_check_matrix(const Scalar& a) {
  const ScalarKind k = a.kind();
  const Scalar z = Scalar::zero(k), o = Scalar::one(k), m = -o;
  return Matrix{{z, z, o, z}, {z, z, -a, o}, {m, a, z, z}, {z, m, z, z}};
}

Matrix SymplecticForm::matrix() const {
  return variant == FormVariant::Omega ? omega_matrix(a) : omega_check_matrix(a);
}

Scalar omega(const SymplecticForm& f, const Vec4& u, const Vec4& v) {
  if (u.size() != 4 || v.size() != 4) throw DimensionError("omega needs 4-vectors");
  const Matrix m = f.matrix();
  Scalar s = Scalar::zero(f.a.kind());
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      if (!m(i, j).is_zero()) s += u[i] * m(i, j) * v[j];
  return s;
}

Vec4 Polygon::vertex(int j) const {
  const int t = j - first;
  const int q = floor_div(t, n());
  Vec4 v = vertices[static_cast<size_t>(t - q * n())];
  if (q % 2 != 0)
    for (auto& x : v) x = -x;
  return v;
}

Polygon polygon_from_frieze(const FriezeGrid& g, int i0) {
  Polygon p;
  p.first = i0 - 1;
  p.form = SymplecticForm{g.black(i0, i0), FormVariant::OmegaCheck};
  for (int j = p.first; j < p.first + g.period(); ++j) {
    Vec4 v;
    for (int r = 0; r < 4; ++r) v.push_back(g.black(i0 + r, j));
    p.vertices.push_back(std::move(v));
  }
  return p;
}

void check_normalized(const Polygon& p) {
  const ScalarKind k = p.form.a.kind();
  for (int j = p.first; j < p.first + p.n(); ++j) {
    if (omega(p.form, p.vertex(j), p.vertex(j + 1)) != Scalar::zero(k))
      throw NormalizationViolated("omega(V_" + std::to_string(j) + ", V_" + std::to_string(j + 1) +
                                  ") != 0");
    if (omega(p.form, p.vertex(j), p.vertex(j + 2)) != Scalar::one(k))
      throw NormalizationViolated("omega(V_" + std::to_string(j) + ", V_" + std::to_string(j + 2) +
                                  ") != 1");
  }
}

FriezeGrid frieze_from_polygon(const Polygon& p) {
  if (p.n() < 5) throw DimensionError("polygon needs n >= 5");
  check_normalized(p);
  const int w = p.n() - 5;
  FriezeGrid g = make_grid(w, p.form.a.kind());
  auto d = [&](int i, int j) {
    const int r = j - i;
    if (r == -1 || r == w) return Scalar::one(p.form.a.kind());
    return omega(p.form, p.vertex(i - 3), p.vertex(j));
  };
  for (int r = 0; r < w; ++r) {
    for (int x = 0; x < g.columns(); ++x) {
      if (is_black_cell(r, x)) {
        const int i = (x - r) / 2;
        g.cell(r, x) = d(i, i + r);
      } else {
        const int i = floor_div(x - r - 1, 2), j = i + r;
        g.cell(r, x) = d(i, j) * d(i + 1, j + 1) - d(i + 1, j) * d(i, j + 1);
      }
    }
  }
  return g;
}

namespace {

Scalar det_columns(const std::vector<Vec4>& cols) {
  Matrix m(4, 4, cols[0][0].kind());
  for (size_t c = 0; c < 4; ++c)
    for (size_t r = 0; r < 4; ++r) m(r, c) = cols[c][r];
  return det(m);
}

}  // namespace

std::pair<Scalar, Scalar> frieze_entries_by_4x4(const Polygon& p, int i, int j) {
  Scalar black = det_columns({p.vertex(i - 4), p.vertex(i - 3), p.vertex(i - 2), p.vertex(j)});
  Scalar white = det_columns({p.vertex(i - 4), p.vertex(i - 3), p.vertex(j - 1), p.vertex(j)});
  return {black, white};
}

Matrix block_d(const FriezeGrid& g, int i, int j) {
  Matrix m(4, 4, kind_of(g));
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      m(static_cast<size_t>(p), static_cast<size_t>(q)) = g.black(i + p, j - 3 + q);
  return m;
}

bool block_symplectic_check(const FriezeGrid& g) {
  const int n = g.period();
  for (int i = 0; i < n; ++i) {
    const Matrix left = omega_check_matrix(g.black(i, i));
    for (int j = i - n; j < i + n; ++j) {
      const Matrix d = block_d(g, i, j);
      if (d.transpose() * left * d != omega_matrix(g.black(j, j))) return false;
    }
  }
  return true;
}

Polygon normalize_lift(const Polygon& raw) {
  const int n = raw.n();
  if (n % 2 == 0) throw EvenPeriod("normalization needs an odd number of vertices");
  Polygon p = raw;
  p.form.a = p.form.a.as(ScalarKind::Complex);
  for (auto& v : p.vertices)
    for (auto& x : v) x = x.as(ScalarKind::Complex);
  const double tol = float_tolerance();
  std::vector<std::complex<double>> gamma(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) {
    const int j = p.first + t;
    if (std::abs(omega(p.form, p.vertex(j), p.vertex(j + 1)).z()) > tol)
      throw NormalizationViolated("consecutive vertices are not omega-orthogonal at " +
                                  std::to_string(j));
    gamma[static_cast<size_t>(t)] = omega(p.form, p.vertex(j), p.vertex(j + 2)).z();
    if (std::abs(gamma[static_cast<size_t>(t)]) <= tol) throw DegenerateGamma(j);
  }
  // lambda_t = c_t * s^{e_t}; walk t -> t+2 around the odd cycle.
  std::vector<std::complex<double>> c(static_cast<size_t>(n));
  std::vector<int> e(static_cast<size_t>(n));
  int t = 0;
  std::complex<double> ct = 1.0;
  int et = 1;
  for (int step = 0; step < n; ++step) {
    c[static_cast<size_t>(t)] = ct;
    e[static_cast<size_t>(t)] = et;
    ct = 1.0 / (gamma[static_cast<size_t>(t)] * ct);
    et = -et;
    t = (t + 2) % n;
  }
  // Back at t = 0 with lambda_0 = ct / s, so s^2 = ct.
  std::complex<double> s = std::sqrt(ct);
  if (s.real() < -tol || (std::abs(s.real()) <= tol && s.imag() < 0)) s = -s;
  for (int k = 0; k < n; ++k) {
    std::complex<double> lam = c[static_cast<size_t>(k)] *
                               (e[static_cast<size_t>(k)] > 0 ? s : 1.0 / s);
    for (auto& x : p.vertices[static_cast<size_t>(k)]) x = x * Scalar(lam);
  }
  return p;
}

Coeffs coeffs_from_polygon(const Polygon& p) {
  const int n = p.n();
  const ScalarKind kind = p.form.a.kind();
  Coeffs out;
  out.a.assign(static_cast<size_t>(n), Scalar::zero(kind));
  out.b.assign(static_cast<size_t>(n), Scalar::zero(kind));
  std::vector<Scalar> c3(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) {
    const int i = p.first + t;
    Matrix m(4, 4, kind);
    for (size_t col = 0; col < 4; ++col) {
      Vec4 v = p.vertex(i - 1 - static_cast<int>(col));
      for (size_t r = 0; r < 4; ++r) m(r, col) = v[r];
    }
    if (det(m).is_zero()) throw SingularFrame(i);
    std::vector<Scalar> sol = solve(m, p.vertex(i));
    const size_t idx = static_cast<size_t>(mod(i, n));
    out.a[idx] = sol[0];
    out.b[idx] = -sol[1];
    c3[idx] = sol[2];
    if (sol[3] != Scalar::from_int(-1, kind))
      throw NormalizationViolated("recurrence coefficient of V_{i-4} differs from -1 at " +
                                  std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    if (c3[static_cast<size_t>(i)] != out.a[static_cast<size_t>(mod(i - 1, n))])
      throw NormalizationViolated("recurrence is not symmetric at " + std::to_string(i));
  return out;
}

}  // namespace frieze
