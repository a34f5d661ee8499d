#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frieze/lattice.hpp"
#include "frieze/laurent.hpp"
#include "frieze/symplectic.hpp"

namespace frieze {

// Square integer matrix with a positive integer symmetrizer d: d_i b_ij = -d_j b_ji.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  explicit ExchangeMatrix(std::vector<std::vector<int>> b);

  int size() const { return static_cast<int>(b_.size()); }
  int operator()(int i, int j) const { return b_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const std::vector<std::vector<int>>& rows() const { return b_; }
  const std::vector<int>& symmetrizer() const { return d_; }
  ExchangeMatrix opposite() const;
  std::string str() const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) { return a.b_ == b.b_; }
  friend bool operator!=(const ExchangeMatrix& a, const ExchangeMatrix& b) { return !(a == b); }

 private:
  std::vector<std::vector<int>> b_;
  std::vector<int> d_;
};

// Smallest positive integer symmetrizer per connected component, if any.
std::optional<std::vector<int>> find_symmetrizer(const std::vector<std::vector<int>>& b);

// Vertices are 0-based throughout.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);

struct Arrow {
  int from = 0, to = 0;
  int w_from = 0, w_to = 0;  // (|b_{from,to}|, |b_{to,from}|)
  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct ValuedQuiver {
  int vertices = 0;
  std::vector<Arrow> arrows;  // sorted
  friend bool operator==(const ValuedQuiver&, const ValuedQuiver&) = default;
  std::string str() const;  // 1-based labels
};

ValuedQuiver quiver_of(const ExchangeMatrix& b);
ExchangeMatrix matrix_of(const ValuedQuiver& q);
// Path rule (e,f) -> (e+ac, f+bd) for every i -> k -> j, then reversal at k.
ValuedQuiver mutate_quiver(const ValuedQuiver& q, int k);

// Vertices 0..w-1 form the A_w line of weight-2 vertices, w..2w-1 its partner line.
ExchangeMatrix c2_square_aw(int w);

// 0 = white, 1 = black; vertex 0 is white. Throws NotBipartite.
std::vector<int> bipartite_coloring(const ExchangeMatrix& b);

struct Seed {
  std::vector<Laurent> cluster;
  ExchangeMatrix matrix;
  std::vector<int> path;  // mutations applied to the initial seed, in order
};

Seed initial_seed(const ExchangeMatrix& b);
Seed mutate_seed(const Seed& s, int k);
// Strict equality of ordered clusters and matrices.
bool same_seed(const Seed& a, const Seed& b);

enum class BeltSign { Plus, Minus };
// Plus mutates every white vertex, Minus every black one.
Seed belt_step(const Seed& s, BeltSign sign);

using FormalFrieze = FriezeArray<Laurent>;
// Frieze propagated from columns 1 and 2 holding x1..x2w; vertex v sits in
// row v mod w, on the white cell for v < w and the black cell otherwise.
FormalFrieze formal_frieze(int w);

// Cell of vertex v inside the two-cell rows of a zig-zag shape.
GridIndex vertex_cell(const ZigZagShape& s, int v);
ExchangeMatrix zigzag_matrix(const ZigZagShape& s);
ValuedQuiver zigzag_quiver(const ZigZagShape& s);

// Numeric frieze at the point where the cluster of chi takes the given values.
FriezeGrid evaluate_frieze(const Seed& chi, int w, const std::vector<Scalar>& point);

}  // namespace frieze
