#include "clockwork/braids.hpp"

#include <algorithm>
#include <stdexcept>

namespace clockwork {

BraidWord braid_word(const std::vector<int>& signed_indices) {
  BraidWord w;
  for (int s : signed_indices) {
    if (s == 0) throw std::invalid_argument("braid letter index cannot be 0");
    w.push_back({s > 0 ? s : -s, s > 0});
  }
  return w;
}

PdData braid_closure(int strands, const BraidWord& word,
                     const std::vector<std::string>& strand_colors,
                     const std::string& name) {
  if (strands < 1) throw std::invalid_argument("need at least one strand");
  if (static_cast<int>(strand_colors.size()) != strands)
    throw std::invalid_argument("one color per strand required");

  PdData pd;
  pd.name = name;
  int next_arc = 1;
  auto new_arc = [&](const std::string& color) {
    Arc a;
    a.id = next_arc++;
    a.color = color;
    pd.arcs[a.id] = a;
    return a.id;
  };

  // cur[i] = arc currently hanging at position i (0-based), start[i] = the
  // arc entering the braid at the top; the trace closure identifies them.
  std::vector<int> cur(strands), start(strands);
  std::vector<std::string> color_at(strand_colors);
  for (int i = 0; i < strands; ++i) start[i] = cur[i] = new_arc(color_at[i]);

  int cid = 0;
  for (const auto& letter : word) {
    int i = letter.index - 1;
    if (i < 0 || i + 1 >= strands) throw std::invalid_argument("braid letter out of range");
    // Strands head south; the left strand runs NW->SE, the right NE->SW.
    if (letter.positive) {
      // Left over right: under passage is the right strand (NE in, SW out).
      int u_in = cur[i + 1], o_in = cur[i];
      int u_out = new_arc(color_at[i + 1]);
      int o_out = new_arc(color_at[i]);
      pd.crossings.push_back(make_crossing(++cid, u_in, o_in, u_out, o_out, true));
      cur[i] = u_out;      // right strand lands at position i
      cur[i + 1] = o_out;  // left strand lands at position i+1
    } else {
      // Right over left: under passage is the left strand (NW in, SE out).
      int u_in = cur[i], o_in = cur[i + 1];
      int u_out = new_arc(color_at[i]);
      int o_out = new_arc(color_at[i + 1]);
      pd.crossings.push_back(make_crossing(++cid, u_in, o_in, u_out, o_out, false));
      cur[i] = o_out;
      cur[i + 1] = u_out;
    }
    std::swap(color_at[i], color_at[i + 1]);
  }

  // Close up: the arc hanging at position i is the same edge as start[i].
  // Merge ids, keeping the start id.
  for (int i = 0; i < strands; ++i) {
    int from = cur[i], to = start[i];
    if (from == to) continue;  // untouched strand: a free circle
    for (auto& c : pd.crossings)
      for (int t = 0; t < 4; ++t)
        if (c.ports[t] == from) c.ports[t] = to;
    pd.arcs.erase(from);
  }

  // Closure loops nest with position 1 outermost. Along that loop's
  // northbound return the unbounded face sits on the right, and the same
  // face flanks the position-1 segment inside the braid on its west side.
  pd.outer_arc = start[0];
  pd.outer_side_left = false;
  return pd;
}

PdData round_unknot(bool ccw, const std::string& color, const std::string& name) {
  PdData pd;
  pd.name = name;
  Arc a;
  a.id = 1;
  a.color = color;
  pd.arcs[1] = a;
  pd.outer_arc = 1;
  // Counterclockwise: interior on the left, unbounded face on the right.
  pd.outer_side_left = !ccw;
  return pd;
}

PdData disjoint_union(const PdData& a, const PdData& b, const std::string& name) {
  PdData out = a;
  out.name = name;
  int arc_shift = a.arcs.empty() ? 0 : a.arcs.rbegin()->first;
  int cross_shift = static_cast<int>(a.crossings.size());
  for (const auto& [id, arc] : b.arcs) {
    Arc na = arc;
    na.id = id + arc_shift;
    na.component = 0;
    out.arcs[na.id] = na;
  }
  for (const auto& c : b.crossings) {
    Crossing nc = c;
    nc.id = c.id + cross_shift;
    for (int t = 0; t < 4; ++t) nc.ports[t] += arc_shift;
    out.crossings.push_back(nc);
  }
  for (auto& [id, arc] : out.arcs) arc.component = 0;  // re-derived downstream
  // Keep a's outer declaration: b is placed inside a's unbounded face.
  return out;
}

}  // namespace clockwork
