#pragma once

// Frieze displays transcribed entry by entry. Tokens with a leading '*' are
// black entries; x0 is the column of the first token of row 0.

#include <sstream>
#include <string>
#include <vector>

#include "frieze/symplectic.hpp"

namespace fixtures {

struct Display {
  int w;
  int x0;
  std::vector<std::string> rows;  // interior rows, top to bottom
  frieze::ScalarKind kind = frieze::ScalarKind::Rational;
};

inline std::vector<std::string> tokens(const std::string& row) {
  std::istringstream is(row);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

// Grid whose rows repeat the displayed tokens. Throws if a star disagrees
// with the lattice coloring or the token count does not divide 2n.
inline frieze::FriezeGrid grid(const Display& d) {
  using namespace frieze;
  FriezeGrid g = make_grid(d.w, d.kind);
  for (int r = 0; r < d.w; ++r) {
    auto t = tokens(d.rows[static_cast<size_t>(r)]);
    const int len = static_cast<int>(t.size());
    if (g.columns() % len != 0) throw std::logic_error("row length must divide 2n");
    for (int x = d.x0; x < d.x0 + g.columns(); ++x) {
      const std::string& tok = t[static_cast<size_t>((x - d.x0) % len)];
      const bool star = tok[0] == '*';
      if (star != is_black_cell(r, x)) throw std::logic_error("color mismatch in fixture: " + tok);
      g.cell(r, x) = Scalar::parse(star ? tok.substr(1) : tok, d.kind);
    }
  }
  return g;
}

inline std::vector<frieze::Scalar> ints(std::initializer_list<long> v) {
  std::vector<frieze::Scalar> out;
  for (long x : v) out.push_back(frieze::Scalar::rational(x));
  return out;
}

inline const Display w1_signed{1, 0, {"*0 -1 *1 -2 *-1 -1 *0 -1 *1 -2 *-1 -1"}};

inline const Display w1_positive{1, 0, {"*1 2 *3 5 *2 1 *1 2 *3 5 *2 1"}};

inline const Display w2_positive{2, 0,
                           {"*6 14 *3 1 *1 2 *3 6 *4 5 *2 1 *1 3",
                            "6 *4 5 *2 1 *1 3 *6 14 *3 1 *1 2 *3"}};

inline const Display w3_positive{3, -1,
                           {"1 *2 5 *4 6 *4 6 *3 2 *1 1 *4 30 *10 4 *1",
                            "*1 1 *3 14 *10 20 *6 3 *1 1 *3 14 *10 20 *6 3",
                            "2 *1 1 *4 30 *10 4 *1 1 *2 5 *4 6 *4 6 *3"}};

// Sign-twisted width-3 display, one column to the left of w3_positive's.
inline const Display w3_twisted{3, -2,
                                   {"*-1 1 *-2 5 *-4 6 *-4 6 *-3 2 *-1 1 *-4 30 *-10 4",
                                    "3 *1 1 *3 14 *10 20 *6 3 *1 1 *3 14 *10 20 *6",
                                    "*-3 2 *-1 1 *-4 30 *-10 4 *-1 1 *-2 5 *-4 6 *-4 6"}};

inline const Display w1_singular{1, -1, {"-1 *0"}};

inline const Display w7_sparse{7, 0, {"*0 0", "0 *0", "*0 0", "1 *-1", "*0 0", "0 *0", "*0 0"}};

inline const Display w2_untame{2, 0, {"*0 0", "0 *0"}};

inline const Display w1_gaussian{1, -1, {"0 *1i 0 *-1i"}, frieze::ScalarKind::Gaussian};

// Coefficients read off row 0: a_i at column 2i, b_i at column 2i-1.
inline frieze::Coeffs row0_coeffs(const frieze::FriezeGrid& g) {
  frieze::Coeffs c;
  for (int i = 0; i < g.period(); ++i) {
    c.a.push_back(g.at(0, 2 * i));
    c.b.push_back(g.at(0, 2 * i - 1));
  }
  return c;
}

// SL3 (W, 3x7) and SL4 (V, 4x7) blocks of the dual friezes attached to w2_positive.
inline const std::vector<std::vector<long>> gale_W{
    {1, 1, 3, 6, 1, 0, 0}, {0, 1, 6, 14, 3, 1, 0}, {0, 0, 1, 3, 1, 1, 1}};
inline const std::vector<std::vector<long>> gale_V{
    {1, 4, 3, 1, 0, 0, 0}, {0, 1, 2, 1, 1, 0, 0}, {0, 0, 1, 1, 3, 1, 0}, {0, 0, 0, 1, 6, 4, 1}};

}  // namespace fixtures
