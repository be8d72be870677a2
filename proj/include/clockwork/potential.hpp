#pragma once

#include <functional>
#include <map>
#include <string>

#include "clockwork/diagram.hpp"
#include "clockwork/polyring.hpp"
#include "clockwork/statesum.hpp"

namespace clockwork {

// Stable interning of color labels into VarId::color indices (shared across
// diagrams so values from different diagrams can be compared).
int intern_color(const std::string& label);
std::string color_label(int color_id);

// Name resolver that prints color variables as X_<label>.
std::function<std::string(const VarId&)> pretty_names();

// |S| for the given star pair: X^(-2p) X_K^-1 (X_K - X_K^-1), with p read
// from the star region holding the smaller K coordinate.
struct NormFactor {
  std::vector<int> star_region_index;
  int strand_component{0};
  LaurentPoly value;
};
NormFactor norm_factor(const Diagram& d, const StarPair& stars);

// F = <L|S>/|S|, the star-pair normalized state sum before the curvature
// factor. Star independence makes the choice of pair immaterial; the verify
// module checks that claim explicitly.
PotentialValue state_ratio(const Diagram& d, const StarPair& stars,
                           const Conventions& conv = {});

// The potential in the per-component link variables X_K. Zero for split
// diagrams.
PotentialValue kauffman_potential(const Diagram& d, const Conventions& conv = {});

// The colored potential: X_K replaced by the color variable of component K.
// color_map overrides the diagram's own coloring (component -> label).
PotentialValue colored_potential(const Diagram& d,
                                 const std::map<int, std::string>& color_map = {},
                                 const Conventions& conv = {});

PotentialValue apply_coloring(const Diagram& d, const PotentialValue& v,
                              const std::map<int, std::string>& color_map = {});

}  // namespace clockwork
