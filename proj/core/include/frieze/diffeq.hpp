#pragma once

#include <vector>

#include "frieze/matrix.hpp"
#include "frieze/scalar.hpp"

namespace frieze {

// V_i = a_i V_{i-1} - b_i V_{i-2} + a_{i-1} V_{i-3} - V_{i-4}, coefficients n-periodic.
struct SymmetricDiffEq {
  std::vector<Scalar> a;
  std::vector<Scalar> b;

  SymmetricDiffEq() = default;
  SymmetricDiffEq(std::vector<Scalar> a, std::vector<Scalar> b);

  int n() const { return static_cast<int>(a.size()); }
  ScalarKind kind() const { return a.front().kind(); }
  const Scalar& a_at(int i) const;
  const Scalar& b_at(int i) const;
};

// Values V_{first-4}, ..., V_last; the first four are the initial data.
struct Solution {
  int offset = 0;  // index of values[0]
  std::vector<Scalar> values;
  const Scalar& at(int j) const { return values.at(static_cast<size_t>(j - offset)); }
};

Solution solve(const SymmetricDiffEq& eq, const std::vector<Scalar>& init, int first, int last);

bool is_superperiodic(const SymmetricDiffEq& eq);

// E_{j+1}: D_{i,j+1} = D_{i,j} E_{j+1} for the 4x4 blocks of consecutive solution values.
Matrix companion(const SymmetricDiffEq& eq, int j);
// E_1 E_2 ... E_n.
Matrix monodromy(const SymmetricDiffEq& eq);

// Pentadiagonal band determinant with rows (1, a_k, b_{k+1}, a_{k+1}, 1).
Scalar delta(const SymmetricDiffEq& eq, int i, int j);

// The ten polynomial conditions for superperiodicity, as residuals.
std::vector<Scalar> variety_residuals(const SymmetricDiffEq& eq);

// Width-1 equations parametrized by (a, b) = (a_3, b_3).
SymmetricDiffEq width1_family(const Scalar& a, const Scalar& b);

}  // namespace frieze
