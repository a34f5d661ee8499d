#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frieze/lattice.hpp"
#include "frieze/scalar.hpp"

namespace frieze {

using FriezeGrid = FriezeArray<Scalar>;
using PartialFrieze = PartialArray<Scalar>;

FriezeGrid make_grid(int w, ScalarKind kind);
ScalarKind kind_of(const FriezeGrid& g);

// Builds a grid from interior rows 0..w-1. Row r lists consecutive entries
// starting at column x0; its length must divide 2n and is tiled.
FriezeGrid grid_from_rows(int w, const std::vector<std::vector<Scalar>>& rows, int x0 = 0);

Scalar get_entry(const FriezeGrid& g, GridIndex idx);

// Horizontal translation: result(r, x) = g(r, x + shift).
FriezeGrid translate(const FriezeGrid& g, int shift);
// Reflection x -> -x.
FriezeGrid mirror(const FriezeGrid& g);

// ---- double zig-zags -------------------------------------------------------

struct ZigZagCell {
  GridIndex idx;
  Scalar value;
};
using ZigZag = std::vector<ZigZagCell>;

// left[r] is the left column of the pair of cells occupied in row r.
struct ZigZagShape {
  std::vector<int> left;
  int width() const { return static_cast<int>(left.size()); }
};

bool valid_shape(const ZigZagShape& s);
// Cells of the shape ordered row by row, left before right.
std::vector<GridIndex> shape_cells(const ZigZagShape& s);
ZigZagShape shape_of(const ZigZag& z, int w);
ZigZag make_zigzag(const ZigZagShape& s, const std::vector<Scalar>& values);
// Two straight columns x0, x0+1.
ZigZagShape straight_shape(int w, int x0);

FriezeGrid propagate_from_zigzag(const ZigZag& z, int w, ScalarKind kind);

// ---- coefficients ----------------------------------------------------------

// Black diagonals from the recurrence with initial (0,0,0,1); whites from
// 2x2 black minors. Throws NotSuperperiodic when a diagonal does not close.
FriezeGrid propagate_from_coeffs(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

struct Coeffs {
  std::vector<Scalar> a;  // a_i = d_{i,i}, i = 0..n-1
  std::vector<Scalar> b;  // b_i = d_{i-1/2,i-1/2}
};
Coeffs extract_coeffs(const FriezeGrid& g);

// Band determinants of an interior entry computed from the coefficients only.
Scalar entry_by_determinant(const std::vector<Scalar>& a, const std::vector<Scalar>& b, int i,
                            int j);
// d_{i-1/2, j-1/2}
Scalar white_entry_by_determinant(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                  int i, int j);

// ---- verification ----------------------------------------------------------

struct RuleViolation {
  GridIndex center;
  Scalar lhs;  // center (white) or its square (black)
  Scalar rhs;  // left*right - above*below
};
std::vector<RuleViolation> check_local_rules(const FriezeGrid& g);

struct TameReport {
  bool tame = true;
  int size = 0;        // 3, 4 or 5 for the failing window
  int i = 0, j = 0;    // top-left black index d_{i,j} of the window
  Scalar value;        // determinant found
  Scalar expected;     // central entry, 1 or 0
};
TameReport check_tame(const FriezeGrid& g);

// entry(i,j) = entry(j+3, i+w+2) on every lattice point, both colors.
bool check_glide(const FriezeGrid& g);
// Smallest color-preserving horizontal period dividing 2n.
int check_periodicity(const FriezeGrid& g);

// Negates black entries of even rows (r = j - i): d'_{i,j} = (-1)^{j-i+1} d_{i,j}.
// Requires odd width so that the bounding rows stay equal to 1.
FriezeGrid sign_twist(const FriezeGrid& g);

// Solves the lowest-order tameness condition that is linear and non-degenerate
// in the unknown black entry at `target`, using only known cells.
Scalar extend_through_zero(const PartialFrieze& p, GridIndex target);

// Extends every row eastward up to column x_end, using the frieze rule where
// possible and tameness when the rule stalls on a zero.
PartialFrieze continue_partial(PartialFrieze p, int x_end);

std::optional<ZigZag> find_nonzero_double_zigzag(const FriezeGrid& g);

}  // namespace frieze
