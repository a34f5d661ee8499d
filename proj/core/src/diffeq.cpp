#include "frieze/diffeq.hpp"

#include "frieze/error.hpp"
#include "frieze/lattice.hpp"

namespace frieze {

SymmetricDiffEq::SymmetricDiffEq(std::vector<Scalar> a_, std::vector<Scalar> b_)
    : a(std::move(a_)), b(std::move(b_)) {
  if (a.empty() || a.size() != b.size()) throw DimensionError("coefficient lists differ in length");
  for (const auto& x : a)
    if (x.kind() != kind()) throw KindMismatch("mixed scalar kinds in coefficients");
  for (const auto& x : b)
    if (x.kind() != kind()) throw KindMismatch("mixed scalar kinds in coefficients");
}

const Scalar& SymmetricDiffEq::a_at(int i) const { return a[static_cast<size_t>(mod(i, n()))]; }
const Scalar& SymmetricDiffEq::b_at(int i) const { return b[static_cast<size_t>(mod(i, n()))]; }

Solution solve(const SymmetricDiffEq& eq, const std::vector<Scalar>& init, int first, int last) {
  if (init.size() != 4) throw DimensionError("need four initial values");
  Solution s;
  s.offset = first - 4;
  s.values = init;
  for (int j = first; j <= last; ++j) {
    const size_t k = s.values.size();
    const auto& v = s.values;
    Scalar next = eq.a_at(j) * v[k - 1] - eq.b_at(j) * v[k - 2] + eq.a_at(j - 1) * v[k - 3] - v[k - 4];
    s.values.push_back(std::move(next));
  }
  return s;
}

bool is_superperiodic(const SymmetricDiffEq& eq) {
  const int n = eq.n();
  for (int e = 0; e < 4; ++e) {
    std::vector<Scalar> init(4, Scalar::zero(eq.kind()));
    init[static_cast<size_t>(e)] = Scalar::one(eq.kind());
    Solution s = solve(eq, init, 0, n - 1);
    for (int j = -4; j < 0; ++j)
      if (s.at(j + n) != -s.at(j)) return false;
  }
  return true;
}

Matrix companion(const SymmetricDiffEq& eq, int j) {
  const ScalarKind k = eq.kind();
  Matrix e(4, 4, k);
  for (size_t c = 0; c < 3; ++c) e(c + 1, c) = Scalar::one(k);
  e(0, 3) = Scalar::from_int(-1, k);
  e(1, 3) = eq.a_at(j);
  e(2, 3) = -eq.b_at(j + 1);
  e(3, 3) = eq.a_at(j + 1);
  return e;
}

Matrix monodromy(const SymmetricDiffEq& eq) {
  Matrix m = Matrix::identity(4, eq.kind());
  for (int j = 0; j < eq.n(); ++j) m = m * companion(eq, j);
  return m;
}

Scalar delta(const SymmetricDiffEq& eq, int i, int j) {
  const int size = j - i + 1;
  if (size < 0) throw DimensionError("delta needs j >= i - 1");
  const ScalarKind k = eq.kind();
  Matrix m(static_cast<size_t>(size), static_cast<size_t>(size), k);
  for (int r = 0; r < size; ++r) {
    const int t = i + r;
    auto put = [&](int c, const Scalar& v) {
      if (c >= 0 && c < size) m(static_cast<size_t>(r), static_cast<size_t>(c)) = v;
    };
    put(r - 1, Scalar::one(k));
    put(r, eq.a_at(t));
    put(r + 1, eq.b_at(t + 1));
    put(r + 2, eq.a_at(t + 1));
    put(r + 3, Scalar::one(k));
  }
  return det(m);
}

std::vector<Scalar> variety_residuals(const SymmetricDiffEq& eq) {
  const int n = eq.n();
  if (n < 6) throw DimensionError("variety equations need n >= 6");
  const Scalar one = Scalar::one(eq.kind());
  std::vector<Scalar> out;
  out.push_back(delta(eq, 3, n - 3) - eq.a_at(n));
  for (int k = 0; k <= 1; ++k) out.push_back(delta(eq, k + 2, n - 3 + k) - one);
  for (int k = 0; k <= 2; ++k) out.push_back(delta(eq, k + 1, n - 3 + k));
  for (int k = 0; k <= 3; ++k) out.push_back(delta(eq, k, n - 3 + k));
  return out;
}

SymmetricDiffEq width1_family(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroParameter("width-1 family needs a != 0 and b != 0");
  const Scalar one = Scalar::one(a.kind());
  Scalar a3 = a, b3 = b;
  Scalar a2 = (one + b) / a;
  Scalar a1 = (one + b + a * a) / (a * b);
  Scalar b1 = (one + a * a) / b;
  Scalar b2 = ((one + b) * (one + b) + a * a) / (a * a * b);
  // indices 0..5 with period 3: a_0 = a_3, b_0 = b_3
  std::vector<Scalar> av = {a3, a1, a2, a3, a1, a2};
  std::vector<Scalar> bv = {b3, b1, b2, b3, b1, b2};
  return SymmetricDiffEq(av, bv);
}

}  // namespace frieze
