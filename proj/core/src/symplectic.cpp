#include "frieze/symplectic.hpp"

#include <functional>

#include "frieze/matrix.hpp"

namespace frieze {

namespace {

const Scalar& coeff(const std::vector<Scalar>& v, int i) {
  return v[static_cast<size_t>(mod(i, static_cast<int>(v.size())))];
}

Matrix black_window(const FriezeGrid& g, int i, int j, int s) {
  Matrix m(s, s, kind_of(g));
  for (int p = 0; p < s; ++p)
    for (int q = 0; q < s; ++q) m(p, q) = g.black(i + p, j + q);
  return m;
}

}  // namespace

FriezeGrid make_grid(int w, ScalarKind kind) {
  return FriezeGrid(w, Scalar::zero(kind), Scalar::one(kind));
}

ScalarKind kind_of(const FriezeGrid& g) { return g.one().kind(); }

FriezeGrid grid_from_rows(int w, const std::vector<std::vector<Scalar>>& rows, int x0) {
  if (static_cast<int>(rows.size()) != w) throw DimensionError("row count differs from width");
  ScalarKind kind = w > 0 && !rows[0].empty() ? rows[0][0].kind() : ScalarKind::Rational;
  FriezeGrid g = make_grid(w, kind);
  const int cols = g.columns();
  for (int r = 0; r < w; ++r) {
    const int len = static_cast<int>(rows[r].size());
    if (len == 0 || cols % len != 0) throw DimensionError("row length must divide 2n");
    for (int x = 0; x < cols; ++x) g.cell(r, x0 + x) = rows[r][x % len];
  }
  return g;
}

Scalar get_entry(const FriezeGrid& g, GridIndex idx) {
  if (!idx.valid()) throw DimensionError("grid index parities differ");
  return g.at(idx);
}

FriezeGrid translate(const FriezeGrid& g, int shift) {
  if (mod(shift, 2) != 0) throw DimensionError("translation must preserve colors (even shift)");
  FriezeGrid out = g;
  for (int r = 0; r < g.width(); ++r)
    for (int x = 0; x < g.columns(); ++x) out.cell(r, x) = g.cell(r, x + shift);
  return out;
}

FriezeGrid mirror(const FriezeGrid& g) {
  FriezeGrid out = g;
  for (int r = 0; r < g.width(); ++r)
    for (int x = 0; x < g.columns(); ++x) out.cell(r, x) = g.cell(r, -x);
  return out;
}

// ---- zig-zags ---------------------------------------------------------------

bool valid_shape(const ZigZagShape& s) {
  for (size_t r = 1; r < s.left.size(); ++r)
    if (std::abs(s.left[r] - s.left[r - 1]) > 1) return false;
  return true;
}

std::vector<GridIndex> shape_cells(const ZigZagShape& s) {
  std::vector<GridIndex> out;
  for (int r = 0; r < s.width(); ++r) {
    out.push_back(GridIndex::at(r, s.left[r]));
    out.push_back(GridIndex::at(r, s.left[r] + 1));
  }
  return out;
}

ZigZagShape shape_of(const ZigZag& z, int w) {
  if (static_cast<int>(z.size()) != 2 * w) throw DimensionError("zig-zag must have 2w cells");
  std::vector<std::vector<int>> cols(w);
  for (const auto& c : z) {
    if (!c.idx.valid()) throw DimensionError("zig-zag index parities differ");
    int r = c.idx.row();
    if (r < 0 || r >= w) throw DimensionError("zig-zag cell outside rows 0..w-1");
    cols[r].push_back(c.idx.col());
  }
  ZigZagShape s;
  for (int r = 0; r < w; ++r) {
    if (cols[r].size() != 2) throw DimensionError("zig-zag needs two cells in every row");
    int a = std::min(cols[r][0], cols[r][1]), b = std::max(cols[r][0], cols[r][1]);
    if (b != a + 1) throw DimensionError("zig-zag cells of a row must be adjacent");
    s.left.push_back(a);
  }
  if (!valid_shape(s)) throw DimensionError("zig-zag rows drift by more than one column");
  return s;
}

ZigZag make_zigzag(const ZigZagShape& s, const std::vector<Scalar>& values) {
  auto cells = shape_cells(s);
  if (values.size() != cells.size()) throw DimensionError("zig-zag needs 2w values");
  ZigZag z;
  for (size_t k = 0; k < cells.size(); ++k) z.push_back({cells[k], values[k]});
  return z;
}

ZigZagShape straight_shape(int w, int x0) { return ZigZagShape{std::vector<int>(w, x0)}; }

FriezeGrid propagate_from_zigzag(const ZigZag& z, int w, ScalarKind kind) {
  shape_of(z, w);
  std::vector<std::tuple<int, int, Scalar>> seeds;
  for (const auto& c : z) seeds.emplace_back(c.idx.row(), c.idx.col(), c.value.as(kind));
  return propagate_cells<Scalar>(w, seeds, Scalar::zero(kind), Scalar::one(kind));
}

// ---- coefficients -------------------------------------------------------------

FriezeGrid propagate_from_coeffs(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  const int n = static_cast<int>(a.size());
  if (n < 5 || b.size() != a.size()) throw DimensionError("need two coefficient lists of length n >= 5");
  const int w = n - 5;
  const ScalarKind kind = a[0].kind();
  FriezeGrid g = make_grid(w, kind);
  const Scalar zero = Scalar::zero(kind), one = Scalar::one(kind);
  for (int i = 0; i < n; ++i) {
    // v[k] holds V_{i-4+k}
    std::vector<Scalar> v = {zero, zero, zero, one};
    for (int j = i; j <= i + w + 3; ++j) {
      const size_t k = v.size();
      Scalar next = coeff(a, j) * v[k - 1] - coeff(b, j) * v[k - 2] +
                    coeff(a, j - 1) * v[k - 3] - v[k - 4];
      v.push_back(std::move(next));
    }
    for (int t = 0; t < 4; ++t) {
      int j = i + w + t;
      const Scalar& want = t == 0 ? one : zero;
      if (v[static_cast<size_t>(j - i + 4)] != want) throw NotSuperperiodic(i, j);
    }
    for (int r = 0; r < w; ++r) g.cell(r, 2 * i + r) = v[static_cast<size_t>(r + 4)];
  }
  for (int r = 0; r < w; ++r) {
    for (int x = 0; x < g.columns(); ++x) {
      if (is_black_cell(r, x)) continue;
      int i = (x - r - 1) / 2;
      if (mod(x - r - 1, 2) != 0) continue;
      i = floor_div(x - r - 1, 2);
      int j = i + r;
      g.cell(r, x) = g.black(i, j) * g.black(i + 1, j + 1) - g.black(i + 1, j) * g.black(i, j + 1);
    }
  }
  return g;
}

Coeffs extract_coeffs(const FriezeGrid& g) {
  Coeffs c;
  for (int i = 0; i < g.period(); ++i) {
    c.a.push_back(g.at(0, 2 * i));
    c.b.push_back(g.at(0, 2 * i - 1));
  }
  return c;
}

Scalar entry_by_determinant(const std::vector<Scalar>& a, const std::vector<Scalar>& b, int i,
                            int j) {
  const ScalarKind kind = a.at(0).kind();
  const int m = j - i + 1;
  if (m < 0) throw DimensionError("band determinant needs j >= i - 1");
  Matrix M(m, m, kind);
  for (int p = 0; p < m; ++p) {
    M(p, p) = coeff(a, i + p);
    if (p + 1 < m) M(p, p + 1) = coeff(b, i + p + 1);
    if (p + 2 < m) M(p, p + 2) = coeff(a, i + p + 1);
    if (p + 3 < m) M(p, p + 3) = Scalar::one(kind);
    if (p >= 1) M(p, p - 1) = Scalar::one(kind);
  }
  return det(M);
}

Scalar white_entry_by_determinant(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                  int i, int j) {
  const ScalarKind kind = a.at(0).kind();
  const int m = j - i + 1;
  if (m < 0) throw DimensionError("band determinant needs j >= i - 1");
  Matrix M(m, m, kind);
  for (int p = 0; p < m; ++p) {
    M(p, p) = coeff(b, i + p);
    if (p + 1 < m) M(p, p + 1) = M(p + 1, p) = coeff(a, i + p);
    if (p + 2 < m) M(p, p + 2) = M(p + 2, p) = Scalar::one(kind);
  }
  return det(M);
}

// ---- verification -----------------------------------------------------------

std::vector<RuleViolation> check_local_rules(const FriezeGrid& g) {
  std::vector<RuleViolation> out;
  for (int r = 0; r < g.width(); ++r) {
    for (int x = 0; x < g.columns(); ++x) {
      Scalar c = g.at(r, x);
      Scalar lhs = is_black_cell(r, x) ? c * c : c;
      Scalar rhs = g.at(r, x - 1) * g.at(r, x + 1) - g.at(r - 1, x) * g.at(r + 1, x);
      if (lhs != rhs) out.push_back({GridIndex::at(r, x), lhs, rhs});
    }
  }
  return out;
}

TameReport check_tame(const FriezeGrid& g) {
  const int n = g.period();
  const ScalarKind kind = kind_of(g);
  for (int s = 3; s <= 5; ++s) {
    for (int i = 0; i < n; ++i) {
      for (int off = -n; off < n; ++off) {
        int j = i + off;
        Scalar d = det(black_window(g, i, j, s));
        Scalar want = s == 3 ? g.black(i + 1, j + 1) : Scalar::from_int(s == 4 ? 1 : 0, kind);
        if (d != want) return TameReport{false, s, i, j, d, want};
      }
    }
  }
  return TameReport{};
}

bool check_glide(const FriezeGrid& g) {
  const int w = g.width(), n = g.period();
  for (int r = 0; r < w; ++r)
    for (int x = 0; x < g.columns(); ++x)
      if (g.at(r, x) != g.at(w - 1 - r, x + n)) return false;
  return true;
}

int check_periodicity(const FriezeGrid& g) {
  const int cols = g.columns();
  for (int p = 2; p < cols; p += 2) {
    if (cols % p) continue;
    bool ok = true;
    for (int r = 0; r < g.width() && ok; ++r)
      for (int x = 0; x < cols && ok; ++x) ok = g.cell(r, x + p) == g.cell(r, x);
    if (ok) return p;
  }
  return cols;
}

FriezeGrid sign_twist(const FriezeGrid& g) {
  if (g.width() % 2 == 0)
    throw WidthParity("sign twist needs odd width (even period) to keep the bounding rows");
  FriezeGrid out = g;
  for (int r = 0; r < g.width(); r += 2)
    for (int x = 0; x < g.columns(); ++x)
      if (is_black_cell(r, x)) out.cell(r, x) = -g.cell(r, x);
  return out;
}

Scalar extend_through_zero(const PartialFrieze& p, GridIndex target) {
  if (!target.is_black()) throw Underdetermined("only black entries are fixed by tameness");
  const int ti = target.I / 2, tj = target.J / 2;
  const ScalarKind kind = p.one().kind();
  const Scalar zero = Scalar::zero(kind), one = Scalar::one(kind);
  for (int s = 3; s <= 5; ++s) {
    for (int i0 = ti - s + 1; i0 <= ti; ++i0) {
      for (int j0 = tj - s + 1; j0 <= tj; ++j0) {
        Matrix m(s, s, kind);
        int tp = -1, tq = -1;
        bool complete = true;
        for (int a = 0; a < s && complete; ++a) {
          for (int b = 0; b < s && complete; ++b) {
            int i = i0 + a, j = j0 + b;
            if (i == ti && j == tj) {
              tp = a;
              tq = b;
              continue;
            }
            const Scalar* v = p.get(j - i, i + j);
            if (!v) complete = false;
            else m(a, b) = *v;
          }
        }
        if (!complete) continue;
        auto f = [&](const Scalar& t) {
          Matrix mm = m;
          mm(tp, tq) = t;
          Scalar d = det(mm);
          if (s == 3) d -= mm(1, 1);
          else if (s == 4) d -= one;
          return d;
        };
        Scalar f0 = f(zero);
        Scalar alpha = f(one) - f0;
        if (alpha.is_zero()) continue;
        return -f0 / alpha;
      }
    }
  }
  throw Underdetermined("no tameness window determines the entry at (" + std::to_string(target.I) +
                        "," + std::to_string(target.J) + ")");
}

PartialFrieze continue_partial(PartialFrieze p, int x_end) {
  const int w = p.width();
  if (w == 0 || p.cells().empty()) return p;
  int x_start = p.cells().begin()->first.second;
  for (const auto& kv : p.cells()) x_start = std::max(x_start, kv.first.second);
  for (int x = x_start + 1; x <= x_end; ++x) {
    for (int r = 0; r < w; ++r) {
      if (p.known(r, x)) continue;
      const Scalar* c = p.get(r, x - 1);
      const Scalar* lf = p.get(r, x - 2);
      const Scalar* up = p.get(r - 1, x - 1);
      const Scalar* dn = p.get(r + 1, x - 1);
      if (!c || !lf || !up || !dn) throw Underdetermined("missing neighbours to extend row");
      if (!lf->is_zero()) {
        Scalar lhs = is_black_cell(r, x - 1) ? (*c) * (*c) : *c;
        p.set(r, x, (lhs + (*up) * (*dn)) / (*lf));
      } else {
        p.set(r, x, extend_through_zero(p, GridIndex::at(r, x)));
      }
    }
  }
  return p;
}

std::optional<ZigZag> find_nonzero_double_zigzag(const FriezeGrid& g) {
  const int w = g.width();
  if (w == 0) return ZigZag{};
  ZigZagShape s{std::vector<int>(w)};
  std::function<bool(int)> rec = [&](int r) -> bool {
    if (r == w) return true;
    int lo = r == 0 ? 0 : s.left[r - 1] - 1;
    int hi = r == 0 ? g.columns() - 1 : s.left[r - 1] + 1;
    for (int x = lo; x <= hi; ++x) {
      if (g.at(r, x).is_zero() || g.at(r, x + 1).is_zero()) continue;
      s.left[r] = x;
      if (rec(r + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::vector<Scalar> vals;
  for (const auto& c : shape_cells(s)) vals.push_back(g.at(c));
  return make_zigzag(s, vals);
}

}  // namespace frieze
