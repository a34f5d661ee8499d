#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "frieze/matrix.hpp"

namespace oracles {

using QMat = std::vector<std::vector<mpq_class>>;

// Leibniz expansion over all permutations.
inline mpq_class det_leibniz(const QMat& m) {
  const size_t n = m.size();
  std::vector<size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    mpq_class term = inversions % 2 ? -1 : 1;
    for (size_t i = 0; i < n; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline QMat random_qmat(std::mt19937& rng, size_t n, int range = 9, bool fractions = true) {
  std::uniform_int_distribution<int> num(-range, range), den(1, fractions ? 5 : 1);
  QMat m(n, std::vector<mpq_class>(n));
  for (auto& row : m)
    for (auto& x : row) {
      x = mpq_class(num(rng), den(rng));
      x.canonicalize();
    }
  return m;
}

inline frieze::Matrix to_matrix(const QMat& q) {
  frieze::Matrix m(q.size(), q.empty() ? 0 : q[0].size());
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = 0; j < q[i].size(); ++j) m(i, j) = frieze::Scalar(q[i][j]);
  return m;
}

inline QMat drop(const QMat& m, std::vector<size_t> rows, std::vector<size_t> cols) {
  QMat out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
    std::vector<mpq_class> row;
    for (size_t j = 0; j < m[i].size(); ++j)
      if (std::find(cols.begin(), cols.end(), j) == cols.end()) row.push_back(m[i][j]);
    out.push_back(row);
  }
  return out;
}

}  // namespace oracles
