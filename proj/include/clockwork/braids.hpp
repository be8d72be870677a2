#pragma once

#include <string>
#include <vector>

#include "clockwork/diagram.hpp"

namespace clockwork {

// Braid letter: generator index i (1-based, crossing strand positions i and
// i+1), positive when the left strand passes over.
struct BraidLetter {
  int index{1};
  bool positive{true};
};

using BraidWord = std::vector<BraidLetter>;

BraidWord braid_word(const std::vector<int>& signed_indices);  // e.g. {1,1,-2}

// Trace closure of a braid on `strands` strands. strand_colors gives one
// color label per starting position; closure components inherit them.
// Positions run left to right, strands travel downward, closure returns
// around the right side.
PdData braid_closure(int strands, const BraidWord& word,
                     const std::vector<std::string>& strand_colors,
                     const std::string& name);

// Crossing-free round circle, counterclockwise or clockwise.
PdData round_unknot(bool ccw, const std::string& color, const std::string& name);

// Disjoint union placed side by side (split diagram).
PdData disjoint_union(const PdData& a, const PdData& b, const std::string& name);

}  // namespace clockwork
