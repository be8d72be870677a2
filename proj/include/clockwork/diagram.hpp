#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace clockwork {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency failure; carries a witness description.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One crossing. ports[] lists the four incident arc ids counterclockwise
// starting at the incoming under-arc, so ports[0] -> ports[2] is the under
// strand. over_in_ccw selects which of ports[1]/ports[3] is the incoming
// over-arc: true means ports[1]. The crossing sign is +1 exactly when
// over_in_ccw (rotating the under direction a quarter turn counterclockwise
// then matches the over direction).
struct Crossing {
  int id{0};
  std::array<int, 4> ports{};
  bool over_in_ccw{true};

  int sign() const { return over_in_ccw ? +1 : -1; }
  int over_in_port() const { return over_in_ccw ? 1 : 3; }
  int over_out_port() const { return over_in_ccw ? 3 : 1; }
};

// Oriented edge of the projection. Free circles (components without
// crossings) are arcs with no endpoints.
struct Arc {
  int id{0};
  std::string color;
  int component{0};  // derived, 1-based
  int tail_crossing{0}, tail_port{-1};
  int head_crossing{0}, head_port{-1};

  bool is_free_circle() const { return tail_crossing == 0 && head_crossing == 0; }
};

struct Corner {
  int crossing{0};
  int quadrant{0};  // quadrant q lies CCW between ports[q] and ports[q+1 mod 4]
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct Region {
  int id{0};
  std::vector<Corner> corners;
  // Boundary darts in trace order: (arc id, walked forward?).
  std::vector<std::pair<int, bool>> boundary;
  std::vector<int> index;  // multiple Alexander index (p_1..p_N)
};

// Raw diagram data prior to derivation; what the PD text encodes and what
// the rewriters manipulate.
struct PdData {
  std::string name;
  std::vector<Crossing> crossings;        // ids 1..n in order
  std::map<int, Arc> arcs;                // keyed by arc id; color filled
  int outer_arc{0};
  bool outer_side_left{true};

  int fresh_arc_id() const;
  std::string to_pd_text() const;  // needs component/color data in arcs

  // Renumbers arcs canonically (strand order, components by smallest old arc
  // id) and crossings in first-use order. Used for rewrite identity checks.
  PdData canonical() const;
};

class Diagram {
 public:
  explicit Diagram(PdData data);

  const PdData& pd() const { return pd_; }
  const std::string& name() const { return pd_.name; }
  int num_crossings() const { return static_cast<int>(pd_.crossings.size()); }
  int num_components() const { return num_components_; }
  const std::vector<Crossing>& crossings() const { return pd_.crossings; }
  const std::map<int, Arc>& arcs() const { return arcs_; }
  const Arc& arc(int id) const;
  const Crossing& crossing(int id) const { return pd_.crossings.at(id - 1); }
  const std::string& component_color(int k) const { return component_colors_.at(k - 1); }
  // Interned color ids, 1-based, assigned in sorted label order.
  int color_id(const std::string& label) const;
  const std::vector<std::string>& color_labels() const { return color_labels_; }

  bool is_split() const { return split_; }
  bool is_connected_projection() const { return !split_; }

  // Faces of the projection; only available for connected projections.
  const std::vector<Region>& regions() const;
  const Region& region(int id) const { return regions().at(id - 1); }
  int unbounded_region() const;
  int region_of(const Corner& c) const;
  int left_region(int arc_id) const;
  int right_region(int arc_id) const;

  int crossing_sign(int crossing_id) const { return crossing(crossing_id).sign(); }

  // Whitney rotation number of the closed curve obtained from component J by
  // deleting the other components.
  int curvature(int component) const;

  // Unordered adjacent region pairs, each with one shared arc that realizes
  // the adjacency (the smallest arc id).
  struct AdjacentPair {
    int region_a{0}, region_b{0};  // region_a holds the smaller K-index
    int shared_arc{0};
    int strand_component{0};  // K with index(b) = index(a) + e_K
  };
  const std::vector<AdjacentPair>& adjacent_region_pairs() const;

  int component_of_arc(int arc_id) const { return arc(arc_id).component; }
  std::vector<int> arcs_of_component(int k) const;

 private:
  PdData pd_;
  std::map<int, Arc> arcs_;  // same as pd_.arcs but with components derived
  int num_components_{0};
  std::vector<std::string> component_colors_;
  std::vector<std::string> color_labels_;
  bool split_{false};
  bool faces_valid_{false};
  std::vector<Region> regions_;
  int outer_region_{0};
  std::map<int, std::pair<int, int>> arc_faces_;  // arc -> (left region, right region)
  std::map<int, std::array<int, 4>> corner_region_;
  std::vector<AdjacentPair> adjacent_pairs_;

  void derive_components();
  void trace_faces();
  void assign_indices();
  void find_adjacent_pairs();
};

Diagram parse_diagram(const std::string& text);
Diagram parse_diagram_file(const std::string& path);

// Convenience for tests and builders.
Crossing make_crossing(int id, int under_in, int over_in, int under_out, int over_out,
                       bool positive);

}  // namespace clockwork
