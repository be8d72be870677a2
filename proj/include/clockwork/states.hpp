#pragma once

#include <map>
#include <string>
#include <vector>

#include "clockwork/diagram.hpp"

namespace clockwork {

// Two adjacent starred regions sharing a strand of component K; region_low
// carries the smaller K coordinate (indices differ by e_K).
struct StarPair {
  int region_low{0}, region_high{0};
  int shared_arc{0};
  int strand_component{0};

  friend auto operator<=>(const StarPair&, const StarPair&) = default;
};

StarPair star_pair_from_adjacent(const Diagram& d, const Diagram::AdjacentPair& p);
// The pair flanking the given arc.
StarPair star_pair_at_arc(const Diagram& d, int arc_id);
// Default choice: the pair across the lowest-numbered arc.
StarPair default_star_pair(const Diagram& d);
std::vector<StarPair> all_star_pairs(const Diagram& d);

// A Kauffman state: one marker (corner) per crossing, exactly one marker in
// every non-starred region, none in the starred ones.
struct KState {
  std::vector<Corner> markers;  // indexed by crossing id - 1
  StarPair stars;

  std::string key() const;  // canonical "c:q,..." form
  friend bool operator==(const KState&, const KState&) = default;
};

bool state_is_valid(const Diagram& d, const KState& s);

// Exhaustive enumeration by backtracking over crossing -> region matchings,
// in (crossing id, quadrant) order.
std::vector<KState> enumerate_states(const Diagram& d, const StarPair& stars);

enum class Turn { Clockwise, CounterClockwise };

struct Transposition {
  Turn direction;
  KState result;
};

// All single transpositions available from s: two crossings at the ends of a
// shared arc swap their markers between the regions flanking that arc.
std::vector<Transposition> transpositions(const Diagram& d, const KState& s);

struct ClockGraph {
  std::vector<KState> nodes;
  // Directed clockwise edges as index pairs into nodes.
  std::vector<std::pair<int, int>> cw_edges;

  std::string to_dot() const;
  std::string to_json() const;
};

ClockGraph clock_graph(const Diagram& d, const StarPair& stars);

// The unique state admitting only clockwise moves, reached by exhausting
// counterclockwise moves from any seed state.
KState clocked_state(const Diagram& d, const StarPair& stars);
KState counter_clocked_state(const Diagram& d, const StarPair& stars);

}  // namespace clockwork
