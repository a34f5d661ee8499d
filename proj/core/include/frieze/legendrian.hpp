#pragma once

#include <utility>
#include <vector>

#include "frieze/matrix.hpp"
#include "frieze/symplectic.hpp"

namespace frieze {

using Vec4 = std::vector<Scalar>;

// Omega_a = [[0,0,1,a],[0,0,0,1],[-1,0,0,0],[-a,-1,0,0]];
// OmegaCheck_a = -Omega_a^{-1} = [[0,0,1,0],[0,0,-a,1],[-1,a,0,0],[0,-1,0,0]].
Matrix omega_matrix(const Scalar& a);
Matrix omega_check_matrix(const Scalar& a);

enum class FormVariant { Omega, OmegaCheck };

struct SymplecticForm {
  Scalar a;
  FormVariant variant = FormVariant::Omega;
  Matrix matrix() const;
};

// u^t F v
Scalar omega(const SymplecticForm& f, const Vec4& u, const Vec4& v);

// Vertices V_first .. V_{first+n-1}, extended by V_{j+n} = -V_j.
struct Polygon {
  int first = 0;
  std::vector<Vec4> vertices;
  SymplecticForm form;

  int n() const { return static_cast<int>(vertices.size()); }
  Vec4 vertex(int j) const;
};

// Columns W_j = (d_{i0,j}, ..., d_{i0+3,j}) for j = i0-1 .. i0+n-2, with the
// form OmegaCheck_{a_{i0}}; then omega(W_{i-3}, W_j) = d_{i,j}.
Polygon polygon_from_frieze(const FriezeGrid& g, int i0);

// Throws NormalizationViolated unless omega(V_j,V_{j+1}) = 0 and omega(V_j,V_{j+2}) = 1.
void check_normalized(const Polygon& p);
// d_{i,j} = omega(V_{i-3}, V_j); whites from 2x2 minors.
FriezeGrid frieze_from_polygon(const Polygon& p);

// (d_{i,j}, d_{i-1/2,j-1/2}) from 4x4 determinants of vertices.
std::pair<Scalar, Scalar> frieze_entries_by_4x4(const Polygon& p, int i, int j);

// Rows i..i+3 and columns j-3..j of the black array.
Matrix block_d(const FriezeGrid& g, int i, int j);
// D_{i,j}^t OmegaCheck_{a_i} D_{i,j} = Omega_{a_j} on every block of one period.
bool block_symplectic_check(const FriezeGrid& g);

// Rescales V_i by lambda_i so that omega(V_i, V_{i+2}) = 1 for all i (odd n,
// complex-float scalars). Of the two solutions +-lambda the one with
// Re(lambda_first) > 0 (ties: Im > 0) is returned.
Polygon normalize_lift(const Polygon& raw);

// a_i, b_i indexed by vertex label mod n.
Coeffs coeffs_from_polygon(const Polygon& p);

}  // namespace frieze
