#include "clockwork/states.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace clockwork {

StarPair star_pair_from_adjacent(const Diagram& d, const Diagram::AdjacentPair& p) {
  (void)d;
  return {p.region_a, p.region_b, p.shared_arc, p.strand_component};
}

StarPair star_pair_at_arc(const Diagram& d, int arc_id) {
  for (const auto& p : d.adjacent_region_pairs()) {
    if (d.left_region(arc_id) == p.region_a && d.right_region(arc_id) == p.region_b)
      return star_pair_from_adjacent(d, p);
    if (d.left_region(arc_id) == p.region_b && d.right_region(arc_id) == p.region_a)
      return star_pair_from_adjacent(d, p);
  }
  throw InvariantError("arc " + std::to_string(arc_id) +
                       " has the same region on both sides; no star pair there");
}

StarPair default_star_pair(const Diagram& d) {
  return star_pair_at_arc(d, d.arcs().begin()->first);
}

std::vector<StarPair> all_star_pairs(const Diagram& d) {
  std::vector<StarPair> out;
  for (const auto& p : d.adjacent_region_pairs())
    out.push_back(star_pair_from_adjacent(d, p));
  return out;
}

std::string KState::key() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < markers.size(); ++i) {
    if (i) out << ",";
    out << markers[i].crossing << ":" << markers[i].quadrant;
  }
  return out.str();
}

bool state_is_valid(const Diagram& d, const KState& s) {
  int n = d.num_crossings();
  if (static_cast<int>(s.markers.size()) != n) return false;
  std::set<int> used;
  for (int c = 1; c <= n; ++c) {
    const Corner& m = s.markers[c - 1];
    if (m.crossing != c || m.quadrant < 0 || m.quadrant > 3) return false;
    int r = d.region_of(m);
    if (r == s.stars.region_low || r == s.stars.region_high) return false;
    if (!used.insert(r).second) return false;
  }
  // n markers in n distinct non-starred regions covers all of them.
  return true;
}

std::vector<KState> enumerate_states(const Diagram& d, const StarPair& stars) {
  if (!d.is_connected_projection())
    throw InvariantError("state enumeration needs a connected projection");
  int n = d.num_crossings();
  std::vector<KState> out;
  KState cur;
  cur.stars = stars;
  cur.markers.assign(n, Corner{});
  std::set<int> used;

  auto rec = [&](auto&& self, int c) -> void {
    if (c > n) {
      out.push_back(cur);
      return;
    }
    for (int q = 0; q < 4; ++q) {
      Corner m{c, q};
      int r = d.region_of(m);
      if (r == stars.region_low || r == stars.region_high) continue;
      if (used.count(r)) continue;
      used.insert(r);
      cur.markers[c - 1] = m;
      self(self, c + 1);
      used.erase(r);
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Transposition> transpositions(const Diagram& d, const KState& s) {
  std::vector<Transposition> out;
  // Flanking quadrants of arc e: at the tail end (port t) the left side of e
  // is quadrant t and the right side t-1; at the head end (port u) the left
  // side is u-1 and the right side u.
  for (const auto& [aid, a] : d.arcs()) {
    if (a.is_free_circle()) continue;
    if (a.tail_crossing == a.head_crossing) continue;  // one crossing cannot swap
    int ct = a.tail_crossing, ch = a.head_crossing;
    int t = a.tail_port, u = a.head_port;
    int tail_left = t, tail_right = (t + 3) % 4;
    int head_left = (u + 3) % 4, head_right = u;
    const Corner& mt = s.markers[ct - 1];
    const Corner& mh = s.markers[ch - 1];

    auto swap_state = [&](int new_tail_q, int new_head_q) {
      KState next = s;
      next.markers[ct - 1] = {ct, new_tail_q};
      next.markers[ch - 1] = {ch, new_head_q};
      return next;
    };

    // Markers sit in the two regions flanking e, on opposite sides, at the
    // corners adjacent to e. Clockwise: tail marker moves left -> right.
    if (mt.quadrant == tail_left && mh.quadrant == head_right &&
        d.region_of(mt) == d.left_region(aid) && d.region_of(mh) == d.right_region(aid)) {
      out.push_back({Turn::Clockwise, swap_state(tail_right, head_left)});
    }
    if (mt.quadrant == tail_right && mh.quadrant == head_left &&
        d.region_of(mt) == d.right_region(aid) && d.region_of(mh) == d.left_region(aid)) {
      out.push_back({Turn::CounterClockwise, swap_state(tail_left, head_right)});
    }
  }
  return out;
}

ClockGraph clock_graph(const Diagram& d, const StarPair& stars) {
  ClockGraph g;
  g.nodes = enumerate_states(d, stars);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    index[g.nodes[i].key()] = static_cast<int>(i);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& tr : transpositions(d, g.nodes[i])) {
      auto it = index.find(tr.result.key());
      if (it == index.end())
        throw InvariantError("transposition left the enumerated state set at " +
                             g.nodes[i].key());
      if (tr.direction == Turn::Clockwise)
        g.cw_edges.emplace_back(static_cast<int>(i), it->second);
    }
  }
  std::sort(g.cw_edges.begin(), g.cw_edges.end());
  return g;
}

std::string ClockGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph clock {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << nodes[i].key() << "\"];\n";
  for (const auto& [a, b] : cw_edges)
    out << "  n" << a << " -> n" << b << " [label=\"cw\"];\n";
  out << "}\n";
  return out.str();
}

std::string ClockGraph::to_json() const {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : nodes) j["nodes"].push_back(n.key());
  j["cw_edges"] = nlohmann::json::array();
  for (const auto& [a, b] : cw_edges) j["cw_edges"].push_back({a, b});
  return j.dump(2);
}

static KState exhaust(const Diagram& d, const StarPair& stars, Turn direction) {
  auto states = enumerate_states(d, stars);
  if (states.empty()) throw InvariantError("no Kauffman state exists for these stars");
  KState cur = states.front();
  std::set<std::string> seen;
  for (;;) {
    if (!seen.insert(cur.key()).second)
      throw InvariantError("clock moves cycled; lattice structure violated");
    bool moved = false;
    for (const auto& tr : transpositions(d, cur)) {
      if (tr.direction == direction) {
        cur = tr.result;
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
}

KState clocked_state(const Diagram& d, const StarPair& stars) {
  // The clocked state is the one admitting only clockwise moves.
  return exhaust(d, stars, Turn::CounterClockwise);
}

KState counter_clocked_state(const Diagram& d, const StarPair& stars) {
  return exhaust(d, stars, Turn::Clockwise);
}

}  // namespace clockwork
