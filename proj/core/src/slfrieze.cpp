#include "frieze/slfrieze.hpp"

#include "frieze/error.hpp"
#include "frieze/lattice.hpp"

namespace frieze {

const Scalar& SLCoeffs::at(int j, int i) const {
  return rows.at(static_cast<size_t>(j - 1))[static_cast<size_t>(mod(i, n()))];
}

SLFrieze::SLFrieze(int k, int w, ScalarKind kind) : k_(k), w_(w), kind_(kind) {
  if (k < 1 || w < 0) throw DimensionError("SL frieze needs k >= 1 and w >= 0");
  cells_.assign(static_cast<size_t>(period() * w), Scalar::zero(kind));
}

Scalar& SLFrieze::cell(int i, int r) {
  return cells_[static_cast<size_t>(mod(i, period()) * w_ + r)];
}
const Scalar& SLFrieze::cell(int i, int r) const {
  return cells_[static_cast<size_t>(mod(i, period()) * w_ + r)];
}

Scalar SLFrieze::at(int i, int j) const {
  const int n = period();
  int r = j - i;
  int q = floor_div(r + 1, n);
  r -= q * n;
  bool neg = (k_ % 2 == 1) && (q % 2 != 0);
  Scalar v;
  if (r == -1 || r == w_) v = Scalar::one(kind_);
  else if (r > w_) return Scalar::zero(kind_);
  else v = cell(i, r);
  return neg ? -v : v;
}

Matrix sl_window(const SLFrieze& f, int i, int j, int size) {
  Matrix m(static_cast<size_t>(size), static_cast<size_t>(size), f.kind());
  for (int p = 0; p < size; ++p)
    for (int q = 0; q < size; ++q) m(static_cast<size_t>(p), static_cast<size_t>(q)) = f.at(i + p, j + q);
  return m;
}

SLReport check_sl(const SLFrieze& f) {
  const int n = f.period();
  for (int s = f.k() + 1; s <= f.k() + 2; ++s) {
    Scalar want = Scalar::from_int(s == f.k() + 1 ? 1 : 0, f.kind());
    for (int i = 0; i < n; ++i) {
      for (int off = -n; off < n; ++off) {
        Scalar d = det(sl_window(f, i, i + off, s));
        if (d != want) return SLReport{false, s, i, i + off, d, want};
      }
    }
  }
  return SLReport{};
}

SLFrieze from_equation(const SLCoeffs& c, int w) {
  const int k = c.k, n = c.n();
  if (static_cast<int>(c.rows.size()) != k) throw DimensionError("need k coefficient rows");
  if (n != w + k + 2) throw DimensionError("period must equal w + k + 2");
  const ScalarKind kind = c.rows[0][0].kind();
  const Scalar zero = Scalar::zero(kind), one = Scalar::one(kind);
  SLFrieze f(k, w, kind);
  for (int i = 0; i < n; ++i) {
    // v[t] = V_{i-k-1+t}
    std::vector<Scalar> v(static_cast<size_t>(k + 1), zero);
    v.back() = one;
    for (int j = i; j <= i + w + k; ++j) {
      Scalar next = zero;
      const size_t m = v.size();
      for (int t = 1; t <= k + 1; ++t) {
        Scalar term = t <= k ? c.at(t, j) * v[m - static_cast<size_t>(t)] : v[m - static_cast<size_t>(t)];
        if (t % 2 == 1) next += term;
        else next -= term;
      }
      v.push_back(std::move(next));
    }
    auto V = [&](int j) -> const Scalar& { return v[static_cast<size_t>(j - i + k + 1)]; };
    if (V(i + w) != one) throw NotSuperperiodic(i, i + w);
    for (int j = i + w + 1; j <= i + w + k; ++j)
      if (!V(j).is_zero()) throw NotSuperperiodic(i, j);
    for (int r = 0; r < w; ++r) f.cell(i, r) = V(i + r);
  }
  return f;
}

SLCoeffs coeffs_of(const SLFrieze& f) {
  const int k = f.k(), w = f.width(), n = f.period();
  SLCoeffs c;
  c.k = k;
  c.rows.assign(static_cast<size_t>(k), std::vector<Scalar>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < k; ++t) {
      Matrix m(static_cast<size_t>(t + 1), static_cast<size_t>(t + 1), f.kind());
      for (int p = 0; p <= t; ++p)
        for (int q = 0; q <= t; ++q)
          m(static_cast<size_t>(p), static_cast<size_t>(q)) = f.at(i + 1 + p, i + w + q);
      // a_{i-1}^{k-t}
      c.rows[static_cast<size_t>(k - t - 1)][static_cast<size_t>(mod(i - 1, n))] = det(m);
    }
  }
  return c;
}

Scalar entry_detq1(const SLCoeffs& c, int i, int j) {
  const int k = c.k, size = j - i + 1;
  if (size < 0) throw DimensionError("entry index below the boundary row");
  const ScalarKind kind = c.rows[0][0].kind();
  Matrix m(static_cast<size_t>(size), static_cast<size_t>(size), kind);
  for (int p = 0; p < size; ++p) {
    for (int q = std::max(0, p - k + 1); q <= p; ++q)
      m(static_cast<size_t>(p), static_cast<size_t>(q)) = c.at(p - q + 1, i + p);
    if (p - k >= 0) m(static_cast<size_t>(p), static_cast<size_t>(p - k)) = Scalar::one(kind);
    if (p + 1 < size) m(static_cast<size_t>(p), static_cast<size_t>(p + 1)) = Scalar::one(kind);
  }
  return det(m);
}

Scalar entry_detq2(const SLCoeffs& c, int w, int i, int j) {
  const int k = c.k, size = w - (j - i);
  if (size < 0) throw DimensionError("entry index above the boundary row");
  const ScalarKind kind = c.rows[0][0].kind();
  const int m0 = j - w - 1;
  Matrix m(static_cast<size_t>(size), static_cast<size_t>(size), kind);
  for (int p = 0; p < size; ++p) {
    for (int q = p; q < std::min(size, p + k); ++q)
      m(static_cast<size_t>(p), static_cast<size_t>(q)) = c.at(k - (q - p), m0 + p);
    if (p >= 1) m(static_cast<size_t>(p), static_cast<size_t>(p - 1)) = Scalar::one(kind);
    if (p + k < size) m(static_cast<size_t>(p), static_cast<size_t>(p + k)) = Scalar::one(kind);
  }
  return det(m);
}

SLFrieze black_of(const FriezeGrid& g) {
  SLFrieze f(3, g.width(), kind_of(g));
  for (int i = 0; i < f.period(); ++i)
    for (int r = 0; r < f.width(); ++r) f.cell(i, r) = g.black(i, i + r);
  return f;
}

FriezeGrid symplectic_of(const SLFrieze& f) {
  if (f.k() != 3) throw DimensionError("symplectic friezes correspond to k = 3");
  const int n = f.period();
  for (int i = 0; i < n; ++i) {
    for (int off = -n; off < n; ++off) {
      const int j = i + off;
      if (det(sl_window(f, i, j, 3)) != f.at(i + 1, j + 1))
        throw MinorCondition("3x3 minor at (" + std::to_string(i) + "," + std::to_string(j) +
                             ") differs from its central entry");
    }
  }
  FriezeGrid g = make_grid(f.width(), f.kind());
  for (int r = 0; r < f.width(); ++r) {
    for (int x = 0; x < g.columns(); ++x) {
      if (is_black_cell(r, x)) {
        int i = (x - r) / 2;
        g.cell(r, x) = f.at(i, i + r);
      } else {
        int i = floor_div(x - r - 1, 2), j = i + r;
        g.cell(r, x) = f.at(i, j) * f.at(i + 1, j + 1) - f.at(i + 1, j) * f.at(i, j + 1);
      }
    }
  }
  return g;
}

SLFrieze projective_dual(const SLFrieze& f) {
  SLFrieze out(f.k(), f.width(), f.kind());
  for (int i = 0; i < f.period(); ++i)
    for (int r = 0; r < f.width(); ++r) out.cell(i, r) = det(sl_window(f, i, i + r, f.k()));
  return out;
}

SLFrieze mirror_rows(const SLFrieze& f) {
  SLFrieze out(f.k(), f.width(), f.kind());
  for (int i = 0; i < f.period(); ++i)
    for (int r = 0; r < f.width(); ++r) {
      int j = i + r;
      out.cell(i, r) = f.at(j + f.k() + 1, i + f.width() + f.k());
    }
  return out;
}

SLFrieze shift_diagonal(const SLFrieze& f, int s) {
  SLFrieze out(f.k(), f.width(), f.kind());
  for (int i = 0; i < f.period(); ++i)
    for (int r = 0; r < f.width(); ++r) out.cell(i, r) = f.at(i + s, i + r + s);
  return out;
}

SLFrieze gale_dual(const SLFrieze& f) {
  SLCoeffs c = coeffs_of(f);
  SLFrieze out(f.width(), f.k(), f.kind());
  for (int i = 0; i < out.period(); ++i)
    for (int r = 0; r < out.width(); ++r) out.cell(i, r) = c.at(r + 1, i + r);
  return out;
}

bool check_middle_symmetry(const SLFrieze& f) {
  const int w = f.width();
  if (w % 2 == 0) throw WidthParity("middle-row symmetry needs odd width");
  for (int i = 0; i < f.period(); ++i) {
    for (int r = 0; r < w; ++r) {
      const int x = 2 * i + r, rr = w - 1 - r;
      const int ii = (x - rr) / 2;
      if (f.at(i, i + r) != f.at(ii, ii + rr)) return false;
    }
  }
  return true;
}

}  // namespace frieze
