#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "clockwork/diagram.hpp"
#include "clockwork/polyring.hpp"
#include "clockwork/states.hpp"

namespace clockwork {

enum class SchemeKind { Formal, BW, LinkVars };

enum class StrandRole { Under, Over };
enum class SigmaCorner { InIn, OutOut };

// The discrete geometric choices left open by the corner-labeling figures.
// The defaults are the calibrated values; the acceptance suite pins them via
// the exact unknot, Hopf and trefoil values and tests the alternatives as
// negative controls.
struct Conventions {
  StrandRole positive_weight_strand = StrandRole::Over;
  StrandRole negative_weight_strand = StrandRole::Over;
  SigmaCorner positive_sigma = SigmaCorner::InIn;
  SigmaCorner negative_sigma = SigmaCorner::InIn;
};

// Quadrant geometry of one crossing: which corner is the I/O/U/D corner and
// which link variables the potential-function scheme attaches.
struct CrossingCorners {
  int delta;    // quadrant left of both strands (lowest Alexander index)
  int top;      // opposite corner (highest index)
  int in_in;    // between the two incoming ports
  int out_out;  // between the two outgoing ports
  int sigma;    // the I corner under the given conventions
};
CrossingCorners crossing_corners(const Crossing& c, const Conventions& conv);

struct WeightScheme {
  SchemeKind kind{SchemeKind::Formal};
  struct Entry {
    LaurentPoly weight;
    bool sigma_corner{false};
  };
  std::map<int, std::array<Entry, 4>> table;  // by crossing id, quadrant 0..3

  const Entry& at(int crossing, int quadrant) const {
    return table.at(crossing)[quadrant];
  }
};

WeightScheme make_scheme(const Diagram& d, SchemeKind kind, const Conventions& conv = {});

// (-1)^(number of markers on I corners).
int sigma(const Diagram& d, const KState& s, const Conventions& conv = {});

// Product over crossings of the marked corner's weight.
LaurentPoly bracket(const Diagram& d, const KState& s, const WeightScheme& w);

struct StateSum {
  LaurentPoly value;
  SchemeKind kind{SchemeKind::Formal};
  StarPair stars;
};

// Sum over all states of sigma(S) * bracket(S); zero for split projections.
StateSum state_sum(const Diagram& d, const StarPair& stars, const WeightScheme& w,
                   const Conventions& conv = {});

// Image of a formal-scheme state sum under I->B, O->W, U->1, D->1.
LaurentPoly bw_specialize(const LaurentPoly& formal_sum);

// The two per-crossing vanishing identities of the link-variable scheme:
// sum over quadrants of (parity sign) * weight and of (parity sign) *
// (index monomial) * weight both vanish. Returns a witness on failure.
std::optional<std::string> crossing_identity_witness(const Diagram& d,
                                                     const WeightScheme& linkvars);

}  // namespace clockwork
