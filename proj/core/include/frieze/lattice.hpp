#pragma once

// Storage and propagation for bicolored frieze lattices.
//
// An entry is addressed by (r, x): r is the row (r = j - i), x = i + j for a
// black entry d_{i,j} and x = i + j + 1 for a white entry d_{i+1/2,j+1/2}.
// The entry is black iff x - r is even. Doubled indices are I = x - r and
// J = x + r for both colors.

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "frieze/error.hpp"

namespace frieze {

inline int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline int mod(int a, int b) {
  int m = a % b;
  return m < 0 ? m + b : m;
}

struct GridIndex {
  int I = 0;
  int J = 0;

  static GridIndex black(int i, int j) { return {2 * i, 2 * j}; }
  // d_{i+1/2, j+1/2}
  static GridIndex white(int i, int j) { return {2 * i + 1, 2 * j + 1}; }
  static GridIndex at(int r, int x) { return {x - r, x + r}; }

  bool is_black() const { return mod(I, 2) == 0; }
  int row() const { return (J - I) / 2; }
  int col() const { return (I + J) / 2; }
  bool valid() const { return mod(I, 2) == mod(J, 2); }

  friend bool operator==(const GridIndex& a, const GridIndex& b) {
    return a.I == b.I && a.J == b.J;
  }
  friend bool operator<(const GridIndex& a, const GridIndex& b) {
    return std::tie(a.I, a.J) < std::tie(b.I, b.J);
  }
};

inline bool is_black_cell(int r, int x) { return mod(x - r, 2) == 0; }

// Symplectic 2-frieze lattice of width w over a ring-like T. Stores rows
// 0..w-1 over one horizontal period of 2n columns (n = w + 5); everything else
// is resolved by the boundary, guard and (anti)periodicity conventions.
template <class T>
class FriezeArray {
 public:
  FriezeArray(int w, T zero, T one)
      : w_(w), n_(w + 5), zero_(std::move(zero)), one_(std::move(one)) {
    if (w < 0) throw DimensionError("negative width");
    cells_.assign(static_cast<size_t>(w) * columns(), zero_);
  }

  int width() const { return w_; }
  int period() const { return n_; }
  int columns() const { return 2 * n_; }
  const T& zero() const { return zero_; }
  const T& one() const { return one_; }

  T& cell(int r, int x) { return cells_[index(r, x)]; }
  const T& cell(int r, int x) const { return cells_[index(r, x)]; }

  // Total accessor. Black entries flip sign across a row period of n, whites
  // do not (they are 2x2 minors of blacks).
  T at(int r, int x) const {
    int q = floor_div(r + 1, n_);
    int rr = r - q * n_;
    int xx = x - q * n_;
    const T* v;
    if (rr == -1 || rr == w_) v = &one_;
    else if (rr > w_) v = &zero_;
    else v = &cell(rr, xx);
    if (is_black_cell(r, x) && (q & 1)) return -*v;
    return *v;
  }

  T at(GridIndex g) const { return at(g.row(), g.col()); }

  // Black entry d_{i,j} and white entry d_{i+1/2,j+1/2}.
  T black(int i, int j) const { return at(j - i, i + j); }
  T white(int i, int j) const { return at(j - i, i + j + 1); }

  friend bool operator==(const FriezeArray& a, const FriezeArray& b) {
    return a.w_ == b.w_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const FriezeArray& a, const FriezeArray& b) { return !(a == b); }

 private:
  size_t index(int r, int x) const {
    return static_cast<size_t>(r) * columns() + static_cast<size_t>(mod(x, columns()));
  }

  int w_;
  int n_;
  T zero_;
  T one_;
  std::vector<T> cells_;
};

// Sparse interior cells of a partially known frieze; rows -1 and w read as one.
template <class T>
class PartialArray {
 public:
  PartialArray(int w, T zero, T one) : w_(w), zero_(std::move(zero)), one_(std::move(one)) {}

  int width() const { return w_; }
  const T& zero() const { return zero_; }
  const T& one() const { return one_; }

  void set(int r, int x, T v) { cells_.insert_or_assign({r, x}, std::move(v)); }
  bool known(int r, int x) const { return get(r, x) != nullptr; }

  // Rows -4..-2 and w+1..w+3 are the zero guard rows.
  const T* get(int r, int x) const {
    if (r == -1 || r == w_) return &one_;
    if ((r >= -4 && r <= -2) || (r > w_ && r <= w_ + 3)) return &zero_;
    auto it = cells_.find({r, x});
    return it == cells_.end() ? nullptr : &it->second;
  }

  const std::map<std::pair<int, int>, T>& cells() const { return cells_; }

 private:
  int w_;
  T zero_;
  T one_;
  std::map<std::pair<int, int>, T> cells_;
};

// Applies the frieze rule horizontally until nothing changes, restricted to
// columns [lo, hi]. Returns the first cell where a zero divisor blocked
// progress, if any remains unresolved.
template <class T>
std::optional<GridIndex> flood_fill(PartialArray<T>& p, int lo, int hi) {
  const int w = p.width();
  std::optional<GridIndex> stall;
  bool progress = true;
  while (progress) {
    progress = false;
    stall.reset();
    for (int x = lo; x <= hi; ++x) {
      for (int r = 0; r < w; ++r) {
        const T* c = p.get(r, x);
        if (!c) continue;
        const T* up = p.get(r - 1, x);
        const T* dn = p.get(r + 1, x);
        if (!up || !dn) continue;
        const T* lf = x - 1 >= lo ? p.get(r, x - 1) : nullptr;
        const T* rt = x + 1 <= hi ? p.get(r, x + 1) : nullptr;
        bool need_left = !lf && x - 1 >= lo && rt;
        bool need_right = !rt && x + 1 <= hi && lf;
        if (!need_left && !need_right) continue;
        const T* div = need_left ? rt : lf;
        int dx = need_left ? x + 1 : x - 1;
        if (div->is_zero()) {
          if (!stall) stall = GridIndex::at(r, dx);
          continue;
        }
        T lhs = is_black_cell(r, x) ? (*c) * (*c) : *c;
        T v = (lhs + (*up) * (*dn)) / (*div);
        p.set(r, need_left ? x - 1 : x + 1, std::move(v));
        progress = true;
      }
    }
  }
  return stall;
}

// Propagates a finite set of interior cells (a double zig-zag, or two full
// columns) to a full frieze. Throws ZeroPivot when a zero divisor blocks the
// rule and NotClosed when the result is not 2n-periodic.
template <class T>
FriezeArray<T> propagate_cells(int w, const std::vector<std::tuple<int, int, T>>& seeds,
                               const T& zero, const T& one) {
  FriezeArray<T> out(w, zero, one);
  if (w == 0) return out;
  if (seeds.empty()) throw NotClosed("no seed cells");
  const int n = w + 5;
  int lo = std::get<1>(seeds.front()), hi = lo;
  PartialArray<T> p(w, zero, one);
  for (const auto& [r, x, v] : seeds) {
    if (r < 0 || r >= w) throw DimensionError("seed row out of range");
    p.set(r, x, v);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const int right = hi + 2 * n + 2;
  std::optional<GridIndex> stall = flood_fill(p, lo, right);

  auto column_full = [&](int x) {
    for (int r = 0; r < w; ++r)
      if (!p.known(r, x)) return false;
    return true;
  };
  int start = lo;
  while (start <= hi && !(column_full(start) && column_full(start + 1))) ++start;
  if (start > hi) {
    if (stall) throw ZeroPivot(stall->I, stall->J);
    throw NotClosed("seed cells do not determine two full columns");
  }
  for (int x = start; x <= start + 2 * n + 1; ++x) {
    for (int r = 0; r < w; ++r) {
      if (p.known(r, x)) continue;
      if (stall) throw ZeroPivot(stall->I, stall->J);
      GridIndex g = GridIndex::at(r, x);
      throw ZeroPivot(g.I, g.J);
    }
  }
  for (int x = start; x < start + 2 * n; ++x)
    for (int r = 0; r < w; ++r) out.cell(r, x) = *p.get(r, x);
  for (const auto& [key, v] : p.cells()) {
    if (!(v == out.cell(key.first, key.second))) {
      GridIndex g = GridIndex::at(key.first, key.second);
      throw NotClosed("propagation does not close up at (" + std::to_string(g.I) + "," +
                      std::to_string(g.J) + ")");
    }
  }
  return out;
}

}  // namespace frieze
