#include "frieze/cluster.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <map>
#include <numeric>
#include <sstream>

#include "frieze/error.hpp"

namespace frieze {

std::optional<std::vector<int>> find_symmetrizer(const std::vector<std::vector<int>>& b) {
  const size_t m = b.size();
  for (const auto& row : b)
    if (row.size() != m) return std::nullopt;
  std::vector<mpq_class> d(m, mpq_class(0));
  std::vector<int> out(m, 0);
  for (size_t root = 0; root < m; ++root) {
    if (d[root] != 0) continue;
    std::vector<size_t> comp{root};
    d[root] = 1;
    std::deque<size_t> queue{root};
    while (!queue.empty()) {
      size_t i = queue.front();
      queue.pop_front();
      for (size_t j = 0; j < m; ++j) {
        if (b[i][j] == 0 && b[j][i] == 0) continue;
        if (i == j || b[i][j] == 0 || b[j][i] == 0) return std::nullopt;
        if ((b[i][j] > 0) == (b[j][i] > 0)) return std::nullopt;
        mpq_class dj = -d[i] * b[i][j] / b[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          comp.push_back(j);
          queue.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    mpz_class l = 1;
    for (size_t v : comp) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[v].get_den_mpz_t());
    mpz_class g = 0;
    for (size_t v : comp) {
      mpz_class x = d[v].get_num() * (l / d[v].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    for (size_t v : comp) {
      mpz_class x = d[v].get_num() * (l / d[v].get_den()) / g;
      out[v] = static_cast<int>(x.get_si());
    }
  }
  return out;
}

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<int>> b) : b_(std::move(b)) {
  for (const auto& row : b_)
    if (row.size() != b_.size()) throw DimensionError("exchange matrix must be square");
  auto d = find_symmetrizer(b_);
  if (!d) throw NotSkewSymmetrizable("matrix is not skew-symmetrizable");
  d_ = std::move(*d);
}

ExchangeMatrix ExchangeMatrix::opposite() const {
  auto b = b_;
  for (auto& row : b)
    for (auto& x : row) x = -x;
  return ExchangeMatrix(std::move(b));
}

std::string ExchangeMatrix::str() const {
  std::ostringstream os;
  for (const auto& row : b_) {
    os << "[";
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "]\n";
  }
  return os.str();
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
  const int m = b.size();
  if (k < 0 || k >= m) throw DimensionError("mutation vertex out of range");
  std::vector<std::vector<int>> out(b.rows());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int& x = out[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i == k || j == k) x = -b(i, j);
      else if (b(i, k) > 0 && b(k, j) > 0) x = b(i, j) + b(i, k) * b(k, j);
      else if (b(i, k) < 0 && b(k, j) < 0) x = b(i, j) - b(i, k) * b(k, j);
    }
  }
  return ExchangeMatrix(std::move(out));
}

std::string ValuedQuiver::str() const {
  std::ostringstream os;
  for (const auto& a : arrows)
    os << a.from + 1 << " -> " << a.to + 1 << " (" << a.w_from << "," << a.w_to << ")\n";
  return os.str();
}

ValuedQuiver quiver_of(const ExchangeMatrix& b) {
  ValuedQuiver q{b.size(), {}};
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      if (b(i, j) > 0) q.arrows.push_back({i, j, b(i, j), -b(j, i)});
  return q;
}

ExchangeMatrix matrix_of(const ValuedQuiver& q) {
  std::vector<std::vector<int>> b(static_cast<size_t>(q.vertices),
                                  std::vector<int>(static_cast<size_t>(q.vertices), 0));
  for (const auto& a : q.arrows) {
    if (a.w_from <= 0 || a.w_to <= 0 || a.from == a.to)
      throw NotSkewSymmetrizable("arrow weights must be positive and arrows non-loops");
    auto& f = b[static_cast<size_t>(a.from)][static_cast<size_t>(a.to)];
    auto& t = b[static_cast<size_t>(a.to)][static_cast<size_t>(a.from)];
    if (f != 0 || t != 0) throw NotSkewSymmetrizable("parallel or opposite arrows");
    f = a.w_from;
    t = -a.w_to;
  }
  return ExchangeMatrix(std::move(b));
}

ValuedQuiver mutate_quiver(const ValuedQuiver& q, int k) {
  if (k < 0 || k >= q.vertices) throw DimensionError("mutation vertex out of range");
  // Signed weights per ordered pair (i<j): positive means i -> j.
  std::map<std::pair<int, int>, std::pair<int, int>> net;
  auto add = [&](int i, int j, int a, int b) {
    if (i < j) {
      auto& [x, y] = net[{i, j}];
      x += a;
      y += b;
    } else {
      auto& [x, y] = net[{j, i}];
      x -= b;
      y -= a;
    }
  };
  for (const auto& a : q.arrows) add(a.from, a.to, a.w_from, a.w_to);
  for (const auto& in : q.arrows) {
    if (in.to != k) continue;
    for (const auto& out : q.arrows) {
      if (out.from != k) continue;
      add(in.from, out.to, in.w_from * out.w_from, in.w_to * out.w_to);
    }
  }
  ValuedQuiver r{q.vertices, {}};
  for (const auto& [key, wts] : net) {
    auto [i, j] = key;
    auto [x, y] = wts;
    if ((x > 0) != (y > 0) && x != 0 && y != 0)
      throw NotSkewSymmetrizable("inconsistent weights after mutation");
    if (x == 0 && y == 0) continue;
    int from = i, to = j;
    if (x < 0) {
      std::swap(from, to);
      std::tie(x, y) = std::make_pair(-y, -x);
    }
    if (i == k || j == k) {
      std::swap(from, to);
      std::swap(x, y);
    }
    r.arrows.push_back({from, to, x, y});
  }
  std::sort(r.arrows.begin(), r.arrows.end());
  return r;
}

ExchangeMatrix c2_square_aw(int w) {
  if (w < 1) throw DimensionError("C2 x A_w needs w >= 1");
  const size_t m = static_cast<size_t>(2 * w);
  std::vector<std::vector<int>> b(m, std::vector<int>(m, 0));
  auto set = [&](int i, int j, int v) { b[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = v; };
  for (int i = 1; i < w; ++i) {
    int s = i % 2 == 1 ? -1 : 1;
    set(i, i + 1, s);
    set(i + 1, i, -s);
    set(w + i, w + i + 1, -s);
    set(w + i + 1, w + i, s);
  }
  for (int i = 1; i <= w; ++i) {
    int t = i % 2 == 1 ? 1 : -1;
    set(i, w + i, t);
    set(w + i, i, -2 * t);
  }
  return ExchangeMatrix(std::move(b));
}

std::vector<int> bipartite_coloring(const ExchangeMatrix& b) {
  const int m = b.size();
  std::vector<int> color(static_cast<size_t>(m), -1);
  for (int root = 0; root < m; ++root) {
    if (color[static_cast<size_t>(root)] != -1) continue;
    color[static_cast<size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < m; ++j) {
        if (b(i, j) == 0) continue;
        int want = 1 - color[static_cast<size_t>(i)];
        if (color[static_cast<size_t>(j)] == -1) {
          color[static_cast<size_t>(j)] = want;
          queue.push_back(j);
        } else if (color[static_cast<size_t>(j)] != want) {
          throw NotBipartite("exchange matrix has an odd cycle");
        }
      }
    }
  }
  return color;
}

Seed initial_seed(const ExchangeMatrix& b) {
  Seed s;
  s.matrix = b;
  for (int i = 0; i < b.size(); ++i) s.cluster.push_back(Laurent::variable(b.size(), i));
  return s;
}

Seed mutate_seed(const Seed& s, int k) {
  const int m = s.matrix.size();
  if (k < 0 || k >= m) throw DimensionError("mutation vertex out of range");
  Laurent plus = Laurent::constant(m, 1), minus = Laurent::constant(m, 1);
  for (int i = 0; i < m; ++i) {
    int e = s.matrix(i, k);
    if (e > 0) plus *= s.cluster[static_cast<size_t>(i)].pow(e);
    else if (e < 0) minus *= s.cluster[static_cast<size_t>(i)].pow(-e);
  }
  Seed out = s;
  out.cluster[static_cast<size_t>(k)] = divide_exact(plus + minus, s.cluster[static_cast<size_t>(k)]);
  out.matrix = mutate_matrix(s.matrix, k);
  out.path.push_back(k);
  return out;
}

bool same_seed(const Seed& a, const Seed& b) { return a.cluster == b.cluster && a.matrix == b.matrix; }

Seed belt_step(const Seed& s, BeltSign sign) {
  auto color = bipartite_coloring(s.matrix);
  const int want = sign == BeltSign::Plus ? 0 : 1;
  Seed out = s;
  for (int k = 0; k < s.matrix.size(); ++k)
    if (color[static_cast<size_t>(k)] == want) out = mutate_seed(out, k);
  return out;
}

GridIndex vertex_cell(const ZigZagShape& s, int v) {
  const int w = s.width();
  if (v < 0 || v >= 2 * w) throw DimensionError("vertex out of range");
  const int r = v % w;
  const bool black = v >= w;
  const int x = s.left[static_cast<size_t>(r)];
  return GridIndex::at(r, is_black_cell(r, x) == black ? x : x + 1);
}

FormalFrieze formal_frieze(int w) {
  if (w < 1) throw DimensionError("formal frieze needs w >= 1");
  const int m = 2 * w;
  ZigZagShape s = straight_shape(w, 1);
  std::vector<std::tuple<int, int, Laurent>> seeds;
  for (int v = 0; v < m; ++v) {
    GridIndex g = vertex_cell(s, v);
    seeds.emplace_back(g.row(), g.col(), Laurent::variable(m, v));
  }
  return propagate_cells<Laurent>(w, seeds, Laurent(m), Laurent::constant(m, 1));
}

ExchangeMatrix zigzag_matrix(const ZigZagShape& s) {
  if (!valid_shape(s) || s.width() < 1) throw DimensionError("invalid zig-zag shape");
  const int w = s.width();
  const size_t m = static_cast<size_t>(2 * w);
  std::vector<std::vector<int>> b(m, std::vector<int>(m, 0));
  auto vertex_at = [&](int r, int x) { return is_black_cell(r, x) ? w + r : r; };
  auto arrow = [&](int u, int v) {
    auto mag = [&](int from, int to) { return from >= w && to < w ? 2 : 1; };
    b[static_cast<size_t>(u)][static_cast<size_t>(v)] = mag(u, v);
    b[static_cast<size_t>(v)][static_cast<size_t>(u)] = -mag(v, u);
  };
  for (int r = 0; r < w; ++r) {
    const int p = s.left[static_cast<size_t>(r)];
    arrow(vertex_at(r, p), vertex_at(r, p + 1));
    if (r + 1 == w) continue;
    const int q = s.left[static_cast<size_t>(r + 1)];
    for (int xu = p; xu <= p + 1; ++xu) {
      for (int xv = q; xv <= q + 1; ++xv) {
        const int u = vertex_at(r, xu), v = vertex_at(r + 1, xv);
        if (xv == xu - 1) arrow(u, v);
        else if (xv == xu + 1) arrow(v, u);
        else if (xv == xu && q == p + 1) arrow(u, v);
        else if (xv == xu && q == p - 1) arrow(v, u);
      }
    }
  }
  return ExchangeMatrix(std::move(b));
}

ValuedQuiver zigzag_quiver(const ZigZagShape& s) { return quiver_of(zigzag_matrix(s)); }

FriezeGrid evaluate_frieze(const Seed& chi, int w, const std::vector<Scalar>& point) {
  const int m = 2 * w;
  if (static_cast<int>(point.size()) != m) throw DimensionError("point must have 2w values");
  for (const auto& z : point)
    if (z.is_zero()) throw ZeroSubstitution("cluster variable set to zero");
  std::vector<ExchangeMatrix> mats{c2_square_aw(w)};
  for (int k : chi.path) mats.push_back(mutate_matrix(mats.back(), k));
  std::vector<Scalar> vals = point;
  const ScalarKind kind = point[0].kind();
  for (size_t t = chi.path.size(); t-- > 0;) {
    const int k = chi.path[t];
    const ExchangeMatrix& b = mats[t + 1];
    Scalar plus = Scalar::one(kind), minus = Scalar::one(kind);
    for (int i = 0; i < m; ++i) {
      int e = b(i, k);
      for (int c = 0; c < std::abs(e); ++c) (e > 0 ? plus : minus) *= vals[static_cast<size_t>(i)];
    }
    Scalar& u = vals[static_cast<size_t>(k)];
    if (u.is_zero()) throw ZeroSubstitution("zero cluster variable along the mutation path");
    u = (plus + minus) / u;
  }
  ZigZagShape s = straight_shape(w, 1);
  ZigZag z;
  for (int v = 0; v < m; ++v) z.push_back({vertex_cell(s, v), vals[static_cast<size_t>(v)]});
  return propagate_from_zigzag(z, w, kind);
}

}  // namespace frieze
