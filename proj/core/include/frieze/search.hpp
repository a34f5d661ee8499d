#pragma once

#include <vector>

#include "frieze/symplectic.hpp"

namespace frieze {

enum class Dedup { None, Translation, Dihedral };

struct SearchConfig {
  int w = 1;
  int bound = 5;  // seed entries range over 1..bound
  Dedup dedup = Dedup::None;
  // false: exact propagation of every seed, no early abort (reference path)
  bool prune = true;
  unsigned threads = 1;
};

// Positive-integer friezes whose columns x = 1, 2 hold entries in 1..bound,
// ordered by seed (row by row, left before right).
std::vector<FriezeGrid> enumerate(const SearchConfig& cfg);

// Lexicographically least image under the even horizontal shifts (and the
// reflection x -> -x when with_mirror is set).
FriezeGrid canonical_form(const FriezeGrid& g, bool with_mirror);

struct Orbit {
  FriezeGrid representative;
  std::vector<size_t> members;  // indices into the input list
};
// Classes under the dihedral group generated by even shifts and x -> -x.
std::vector<Orbit> dihedral_orbits(const std::vector<FriezeGrid>& friezes);

}  // namespace frieze
