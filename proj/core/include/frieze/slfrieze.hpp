#pragma once

#include <vector>

#include "frieze/matrix.hpp"
#include "frieze/scalar.hpp"
#include "frieze/symplectic.hpp"

namespace frieze {

// Coefficients a_i^j (1 <= j <= k) of
// V_i = a_i^1 V_{i-1} - a_i^2 V_{i-2} + ... + (-1)^{k-1} a_i^k V_{i-k} + (-1)^k V_{i-k-1}.
struct SLCoeffs {
  int k = 0;
  std::vector<std::vector<Scalar>> rows;  // rows[j-1][i] = a_i^j, each of length n

  int n() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  const Scalar& at(int j, int i) const;  // a_i^j, i taken mod n
};

// Tame SL_{k+1}-frieze of width w; n = w + k + 2.
// d_{i,i-1} = d_{i,i+w} = 1, k zero rows beyond each border,
// d_{i+n,j+n} = d_{i,j} and d_{i,j+n} = (-1)^k d_{i,j}.
class SLFrieze {
 public:
  SLFrieze(int k, int w, ScalarKind kind);

  int k() const { return k_; }
  int width() const { return w_; }
  int period() const { return w_ + k_ + 2; }
  ScalarKind kind() const { return kind_; }

  Scalar at(int i, int j) const;
  // Interior storage, 0 <= r < w.
  Scalar& cell(int i, int r);
  const Scalar& cell(int i, int r) const;

  friend bool operator==(const SLFrieze& a, const SLFrieze& b) {
    return a.k_ == b.k_ && a.w_ == b.w_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const SLFrieze& a, const SLFrieze& b) { return !(a == b); }

 private:
  int k_, w_;
  ScalarKind kind_;
  std::vector<Scalar> cells_;
};

// Square block of adjacent entries with top-left d_{i,j}.
Matrix sl_window(const SLFrieze& f, int i, int j, int size);

struct SLReport {
  bool ok = true;
  int size = 0;
  int i = 0, j = 0;
  Scalar value, expected;
};
// All (k+1)-minors equal 1 and all (k+2)-minors vanish, guard windows included.
SLReport check_sl(const SLFrieze& f);

SLFrieze from_equation(const SLCoeffs& c, int w);
SLCoeffs coeffs_of(const SLFrieze& f);

// Entry d_{i,j} from the coefficients: (j-i+1)- and (w-j+i)-size determinants.
Scalar entry_detq1(const SLCoeffs& c, int i, int j);
Scalar entry_detq2(const SLCoeffs& c, int w, int i, int j);

SLFrieze black_of(const FriezeGrid& g);
// Throws MinorCondition when an adjacent 3x3 minor differs from its center.
FriezeGrid symplectic_of(const SLFrieze& f);

// Adjacent k x k minors: result(i,j) = det of the k x k window at (i,j).
// Applying it twice translates the array by k-1 along the diagonal.
SLFrieze projective_dual(const SLFrieze& f);
// Mirror about the median row: result(i,j) = f(j+k+1, i+w+k).
SLFrieze mirror_rows(const SLFrieze& f);
// Translation along the diagonal: result(i,j) = f(i+s, j+s).
SLFrieze shift_diagonal(const SLFrieze& f, int s);

// SL_{w+1}-frieze of width k whose row r is a^{r+1}: result(i,i+r) = a_{i+r}^{r+1}.
SLFrieze gale_dual(const SLFrieze& f);

// Compares entries of rows r and w-1-r at the same horizontal position i+j.
bool check_middle_symmetry(const SLFrieze& f);

}  // namespace frieze
