#include "clockwork/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace clockwork {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Crossing make_crossing(int id, int under_in, int over_in, int under_out, int over_out,
                       bool positive) {
  Crossing c;
  c.id = id;
  if (positive) {
    c.ports = {under_in, over_in, under_out, over_out};
    c.over_in_ccw = true;
  } else {
    c.ports = {under_in, over_out, under_out, over_in};
    c.over_in_ccw = false;
  }
  return c;
}

int PdData::fresh_arc_id() const {
  return arcs.empty() ? 1 : arcs.rbegin()->first + 1;
}

std::string PdData::to_pd_text() const {
  std::ostringstream out;
  out << "link " << (name.empty() ? "unnamed" : name) << "\n";
  int ncomp = 0;
  std::map<int, std::string> colors;
  for (const auto& [id, a] : arcs) {
    ncomp = std::max(ncomp, a.component);
    if (a.component > 0) colors[a.component] = a.color;
  }
  out << "components " << ncomp << "\n";
  for (const auto& [k, col] : colors) out << "color " << k << " " << col << "\n";
  for (const auto& [id, a] : arcs) out << "arc " << id << " component " << a.component << "\n";
  for (const auto& c : crossings) {
    out << "X(" << c.ports[0] << "," << c.ports[1] << "," << c.ports[2] << ","
        << c.ports[3] << ") o=" << (c.over_in_ccw ? "ccw" : "cw") << "\n";
  }
  out << "outer arc " << outer_arc << " side " << (outer_side_left ? "left" : "right")
      << "\n";
  return out.str();
}

const Arc& Diagram::arc(int id) const {
  auto it = arcs_.find(id);
  if (it == arcs_.end()) throw InvariantError("unknown arc id " + std::to_string(id));
  return it->second;
}

int Diagram::color_id(const std::string& label) const {
  auto it = std::lower_bound(color_labels_.begin(), color_labels_.end(), label);
  if (it == color_labels_.end() || *it != label)
    throw InvariantError("unknown color label " + label);
  return static_cast<int>(it - color_labels_.begin()) + 1;
}

Diagram::Diagram(PdData data) : pd_(std::move(data)) {
  arcs_ = pd_.arcs;
  derive_components();
  // Write derived components back so pd().to_pd_text() is complete.
  pd_.arcs = arcs_;
  trace_faces();
  if (faces_valid_) {
    assign_indices();
    find_adjacent_pairs();
  }
}

void Diagram::derive_components() {
  // Locate every port use of every arc.
  struct Use {
    int head_crossing = 0, head_port = -1;
    int tail_crossing = 0, tail_port = -1;
    int heads = 0, tails = 0;
  };
  std::map<int, Use> uses;
  for (const auto& c : pd_.crossings) {
    for (int t = 0; t < 4; ++t) {
      int a = c.ports[t];
      if (!arcs_.count(a))
        throw ParseError("crossing references undeclared arc " + std::to_string(a));
      bool is_head = (t == 0 || t == c.over_in_port());
      auto& u = uses[a];
      if (is_head) {
        ++u.heads;
        u.head_crossing = c.id;
        u.head_port = t;
      } else {
        ++u.tails;
        u.tail_crossing = c.id;
        u.tail_port = t;
      }
    }
  }
  for (auto& [id, a] : arcs_) {
    auto it = uses.find(id);
    if (it == uses.end()) {
      a.tail_crossing = a.head_crossing = 0;
      continue;  // free circle
    }
    if (it->second.heads != 1 || it->second.tails != 1)
      throw ParseError("arc " + std::to_string(id) + " used " +
                       std::to_string(it->second.heads + it->second.tails) +
                       " times, expected 2 (one head, one tail)");
    a.head_crossing = it->second.head_crossing;
    a.head_port = it->second.head_port;
    a.tail_crossing = it->second.tail_crossing;
    a.tail_port = it->second.tail_port;
  }

  // Follow strands: the under passage continues ports[0] -> ports[2], the
  // over passage continues over-in -> over-out.
  auto next_arc = [&](int id) {
    const Arc& a = arcs_.at(id);
    const Crossing& c = pd_.crossings.at(a.head_crossing - 1);
    if (a.head_port == 0) return c.ports[2];
    return c.ports[c.over_out_port()];
  };

  std::map<int, int> cycle_of;  // arc -> cycle index (derivation order)
  std::vector<std::vector<int>> cycles;
  for (const auto& [id, a] : arcs_) {
    if (a.is_free_circle() || cycle_of.count(id)) continue;
    std::vector<int> cyc;
    int cur = id;
    do {
      if (cycle_of.count(cur))
        throw ParseError("strand through arc " + std::to_string(cur) +
                         " does not close up consistently");
      cycle_of[cur] = static_cast<int>(cycles.size());
      cyc.push_back(cur);
      cur = next_arc(cur);
    } while (cur != id);
    cycles.push_back(std::move(cyc));
  }
  for (const auto& [id, a] : arcs_)
    if (a.is_free_circle()) {
      cycle_of[id] = static_cast<int>(cycles.size());
      cycles.push_back({id});
    }

  int ncomp = static_cast<int>(cycles.size());
  if (ncomp == 0) throw ParseError("diagram has no components");

  // Respect declared component numbers when present, else number by the
  // smallest arc id in each cycle.
  bool declared = false, undeclared = false;
  for (const auto& [id, a] : arcs_) (a.component > 0 ? declared : undeclared) = true;
  std::vector<int> comp_number(cycles.size(), 0);
  if (declared && undeclared)
    throw ParseError("component declarations are incomplete");
  if (declared) {
    std::set<int> seen;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      int k = arcs_.at(cycles[i][0]).component;
      for (int aid : cycles[i])
        if (arcs_.at(aid).component != k)
          throw ParseError("component mismatch across the strand through arc " +
                           std::to_string(aid));
      if (k < 1 || k > ncomp || !seen.insert(k).second)
        throw ParseError("component numbers must be a bijection onto 1.." +
                         std::to_string(ncomp));
      comp_number[i] = k;
    }
  } else {
    std::vector<std::size_t> order(cycles.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return *std::min_element(cycles[x].begin(), cycles[x].end()) <
             *std::min_element(cycles[y].begin(), cycles[y].end());
    });
    for (std::size_t rank = 0; rank < order.size(); ++rank)
      comp_number[order[rank]] = static_cast<int>(rank) + 1;
  }
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (int aid : cycles[i]) arcs_.at(aid).component = comp_number[i];

  num_components_ = ncomp;
  component_colors_.assign(ncomp, "");
  for (const auto& [id, a] : arcs_) {
    std::string& col = component_colors_[a.component - 1];
    if (col.empty())
      col = a.color;
    else if (!a.color.empty() && col != a.color)
      throw ParseError("color mismatch on component " + std::to_string(a.component));
  }
  for (int k = 0; k < ncomp; ++k)
    if (component_colors_[k].empty()) component_colors_[k] = "c" + std::to_string(k + 1);
  for (auto& [id, a] : arcs_) a.color = component_colors_[a.component - 1];

  std::set<std::string> labels(component_colors_.begin(), component_colors_.end());
  color_labels_.assign(labels.begin(), labels.end());

  // Connectivity of the underlying projection.
  int n = num_crossings();
  int free_circles = 0;
  for (const auto& [id, a] : arcs_)
    if (a.is_free_circle()) ++free_circles;
  if (n == 0) {
    split_ = free_circles > 1;
  } else {
    UnionFind uf(n);
    for (const auto& [id, a] : arcs_)
      if (!a.is_free_circle()) uf.unite(a.tail_crossing - 1, a.head_crossing - 1);
    std::set<int> roots;
    for (int i = 0; i < n; ++i) roots.insert(uf.find(i));
    split_ = (static_cast<int>(roots.size()) + free_circles) > 1;
  }
}

void Diagram::trace_faces() {
  faces_valid_ = false;
  int n = num_crossings();
  if (n == 0) {
    if (split_) return;
    // A single crossing-free circle: two faces, no corners.
    const Arc& a = arcs_.begin()->second;
    regions_.clear();
    regions_.push_back({1, {}, {{a.id, true}}, {}});
    regions_.push_back({2, {}, {{a.id, false}}, {}});
    arc_faces_[a.id] = {1, 2};
    if (pd_.outer_arc != a.id) throw ParseError("outer declaration names a missing arc");
    outer_region_ = pd_.outer_side_left ? 1 : 2;
    faces_valid_ = true;
    return;
  }

  // Trace boundary walks of the rotation system. Walking an arc with the face
  // kept on the left: arriving through port t we turn into port (t+3)%4 and
  // pick up the corner at quadrant (t+3)%4.
  std::map<std::pair<int, bool>, int> face_of_dart;
  regions_.clear();
  for (const auto& [start_id, start_arc] : arcs_) {
    if (start_arc.is_free_circle()) continue;
    for (bool fwd : {true, false}) {
      if (face_of_dart.count({start_id, fwd})) continue;
      Region r;
      r.id = static_cast<int>(regions_.size()) + 1;
      int aid = start_id;
      bool dir = fwd;
      do {
        face_of_dart[{aid, dir}] = r.id;
        r.boundary.emplace_back(aid, dir);
        const Arc& a = arcs_.at(aid);
        int c_id = dir ? a.head_crossing : a.tail_crossing;
        int t = dir ? a.head_port : a.tail_port;
        const Crossing& c = pd_.crossings.at(c_id - 1);
        int t2 = (t + 3) % 4;
        r.corners.push_back({c_id, t2});
        int next = c.ports[t2];
        const Arc& na = arcs_.at(next);
        bool next_dir = (na.tail_crossing == c_id && na.tail_port == t2);
        aid = next;
        dir = next_dir;
      } while (!(aid == start_id && dir == fwd));
      regions_.push_back(std::move(r));
    }
  }

  for (const auto& [id, a] : arcs_)
    if (!a.is_free_circle())
      arc_faces_[id] = {face_of_dart.at({id, true}), face_of_dart.at({id, false})};
  for (const auto& r : regions_)
    for (const auto& cor : r.corners) {
      auto& slots = corner_region_[cor.crossing];
      slots[cor.quadrant] = r.id;
    }

  // Euler check per connected piece of the projection.
  UnionFind uf(n);
  for (const auto& [id, a] : arcs_)
    if (!a.is_free_circle()) uf.unite(a.tail_crossing - 1, a.head_crossing - 1);
  std::map<int, int> piece_crossings, piece_faces;
  for (int i = 0; i < n; ++i) piece_crossings[uf.find(i)]++;
  std::set<int> counted;
  for (const auto& r : regions_) {
    int piece = uf.find(r.corners.front().crossing - 1);
    piece_faces[piece]++;
    counted.insert(piece);
  }
  for (const auto& [piece, cnt] : piece_crossings) {
    if (piece_faces[piece] != cnt + 2)
      throw ParseError("rotation system is not planar (face count " +
                       std::to_string(piece_faces[piece]) + " for " +
                       std::to_string(cnt) + " crossings)");
  }

  if (split_) return;  // faces exist but the split pipeline does not use them
  faces_valid_ = true;

  auto it = arcs_.find(pd_.outer_arc);
  if (it == arcs_.end()) throw ParseError("outer declaration names a missing arc");
  outer_region_ = pd_.outer_side_left ? arc_faces_.at(pd_.outer_arc).first
                                      : arc_faces_.at(pd_.outer_arc).second;
}

void Diagram::assign_indices() {
  // p_K steps by +1 when an arc of component K is crossed from its left side
  // to its right side; the unbounded region carries the zero vector.
  int nreg = static_cast<int>(regions_.size());
  int N = num_components_;
  std::vector<std::vector<int>> p(nreg + 1);
  std::vector<bool> have(nreg + 1, false);
  p[outer_region_] = std::vector<int>(N, 0);
  have[outer_region_] = true;
  std::vector<int> queue{outer_region_};
  // Edges of the region adjacency graph, one per arc.
  std::vector<std::tuple<int, int, int>> edges;  // (left, right, component)
  for (const auto& [id, a] : arcs_)
    edges.emplace_back(arc_faces_.at(id).first, arc_faces_.at(id).second, a.component);
  while (!queue.empty()) {
    int r = queue.back();
    queue.pop_back();
    for (const auto& [l, rr, k] : edges) {
      int other = -1;
      std::vector<int> want;
      if (l == r) {
        want = p[r];
        want[k - 1] += 1;
        other = rr;
      } else if (rr == r) {
        want = p[r];
        want[k - 1] -= 1;
        other = l;
      } else {
        continue;
      }
      if (!have[other]) {
        p[other] = want;
        have[other] = true;
        queue.push_back(other);
      } else if (p[other] != want) {
        throw InvariantError("Alexander index assignment is inconsistent at region " +
                             std::to_string(other));
      }
    }
  }
  for (int r = 1; r <= nreg; ++r) {
    if (!have[r]) throw InvariantError("region unreachable in index assignment");
    regions_[r - 1].index = p[r];
  }
}

void Diagram::find_adjacent_pairs() {
  std::set<std::pair<int, int>> seen;
  for (const auto& [id, a] : arcs_) {
    auto [l, r] = arc_faces_.at(id);
    if (l == r) continue;  // both sides the same face: no star pair across it
    auto key = std::minmax(l, r);
    if (!seen.insert(key).second) continue;
    AdjacentPair pair;
    pair.shared_arc = id;
    pair.strand_component = a.component;
    // right = left + e_K, so the left face holds the smaller K coordinate.
    pair.region_a = l;
    pair.region_b = r;
    adjacent_pairs_.push_back(pair);
  }
}

const std::vector<Region>& Diagram::regions() const {
  if (!faces_valid_)
    throw InvariantError("projection is not connected; no region structure");
  return regions_;
}

int Diagram::unbounded_region() const {
  if (!faces_valid_)
    throw InvariantError("projection is not connected; no region structure");
  return outer_region_;
}

int Diagram::region_of(const Corner& c) const {
  if (!faces_valid_)
    throw InvariantError("projection is not connected; no region structure");
  return corner_region_.at(c.crossing)[c.quadrant];
}

int Diagram::left_region(int arc_id) const {
  if (!faces_valid_)
    throw InvariantError("projection is not connected; no region structure");
  return arc_faces_.at(arc_id).first;
}

int Diagram::right_region(int arc_id) const {
  if (!faces_valid_)
    throw InvariantError("projection is not connected; no region structure");
  return arc_faces_.at(arc_id).second;
}

const std::vector<Diagram::AdjacentPair>& Diagram::adjacent_region_pairs() const {
  if (!faces_valid_)
    throw InvariantError("projection is not connected; no region structure");
  return adjacent_pairs_;
}

std::vector<int> Diagram::arcs_of_component(int k) const {
  std::vector<int> out;
  for (const auto& [id, a] : arcs_)
    if (a.component == k) out.push_back(id);
  return out;
}

int Diagram::curvature(int component) const {
  if (!faces_valid_)
    throw InvariantError("curvature needs a connected projection");
  int N = num_components_;
  if (component < 1 || component > N) throw InvariantError("no such component");

  // Winding number of component J around a region is -p_J there. Deleting
  // the other components merges regions across their arcs; the rotation
  // number is sum over merged faces F of w_J(F) * (1 - corners(F)/4), with
  // corners counted at self-crossings of J only.
  int nreg = static_cast<int>(regions_.size());
  if (num_crossings() == 0) {
    // Lone crossing-free circle.
    int interior = (outer_region_ == 1) ? 2 : 1;
    return -regions_[interior - 1].index[component - 1];
  }
  UnionFind uf(nreg);
  for (const auto& [id, a] : arcs_) {
    if (a.component == component) continue;
    auto [l, r] = arc_faces_.at(id);
    uf.unite(l - 1, r - 1);
  }
  std::map<int, int> class_w;
  for (int r = 1; r <= nreg; ++r) {
    int w = -regions_[r - 1].index[component - 1];
    auto [it, inserted] = class_w.emplace(uf.find(r - 1), w);
    if (!inserted && it->second != w)
      throw InvariantError("winding is not constant on merged faces");
  }
  long long quarter_sum = 0;  // sum of w over self-crossing corners
  for (const auto& c : pd_.crossings) {
    int under_comp = arcs_.at(c.ports[0]).component;
    int over_comp = arcs_.at(c.ports[c.over_in_port()]).component;
    if (under_comp != component || over_comp != component) continue;
    for (int q = 0; q < 4; ++q) {
      int reg = corner_region_.at(c.id)[q];
      quarter_sum += -regions_[reg - 1].index[component - 1];
    }
  }
  long long total = 0;
  for (const auto& [root, w] : class_w) total += w;
  long long four_rot = 4 * total - quarter_sum;
  if (four_rot % 4 != 0) throw InvariantError("rotation number is not an integer");
  return static_cast<int>(four_rot / 4);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected integer for " + what + ", got '" + s + "'");
  }
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  PdData pd;
  std::map<int, std::string> colors;          // component -> label
  std::map<int, int> declared_component;      // arc -> component
  int declared_n = -1;
  bool have_outer = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = strip(raw);
    if (line.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };

    if (line[0] == 'X') {
      std::string flat;
      for (char ch : line)
        if (!isspace(static_cast<unsigned char>(ch))) flat += ch;
      auto open = flat.find('('), close = flat.find(')');
      if (open != 1 || close == std::string::npos)
        throw ParseError("malformed crossing line" + where());
      std::string inner = flat.substr(2, close - 2);
      std::vector<int> ids;
      std::string cur;
      for (char ch : inner + ",") {
        if (ch == ',') {
          ids.push_back(parse_int(cur, "crossing port"));
          cur.clear();
        } else {
          cur += ch;
        }
      }
      if (ids.size() != 4) throw ParseError("crossing needs 4 ports" + where());
      std::string rest = flat.substr(close + 1);
      bool ccw;
      if (rest == "o=ccw")
        ccw = true;
      else if (rest == "o=cw")
        ccw = false;
      else
        throw ParseError("crossing needs o=ccw or o=cw" + where());
      Crossing c;
      c.id = static_cast<int>(pd.crossings.size()) + 1;
      c.ports = {ids[0], ids[1], ids[2], ids[3]};
      c.over_in_ccw = ccw;
      pd.crossings.push_back(c);
      continue;
    }

    auto tok = tokens(line);
    if (tok[0] == "link") {
      if (tok.size() != 2) throw ParseError("malformed link line" + where());
      pd.name = tok[1];
    } else if (tok[0] == "components") {
      if (tok.size() != 2) throw ParseError("malformed components line" + where());
      declared_n = parse_int(tok[1], "component count");
    } else if (tok[0] == "color") {
      if (tok.size() != 3) throw ParseError("malformed color line" + where());
      colors[parse_int(tok[1], "component")] = tok[2];
    } else if (tok[0] == "arc") {
      if (tok.size() != 4 || tok[2] != "component")
        throw ParseError("malformed arc line" + where());
      int id = parse_int(tok[1], "arc id");
      int k = parse_int(tok[3], "component");
      if (id < 1) throw ParseError("arc ids are positive" + where());
      if (declared_component.count(id))
        throw ParseError("arc " + std::to_string(id) + " declared twice" + where());
      declared_component[id] = k;
    } else if (tok[0] == "outer") {
      if (tok.size() != 5 || tok[1] != "arc" || tok[3] != "side")
        throw ParseError("malformed outer line" + where());
      pd.outer_arc = parse_int(tok[2], "outer arc");
      if (tok[4] == "left")
        pd.outer_side_left = true;
      else if (tok[4] == "right")
        pd.outer_side_left = false;
      else
        throw ParseError("outer side must be left or right" + where());
      have_outer = true;
    } else {
      throw ParseError("unrecognized line '" + tok[0] + "'" + where());
    }
  }

  if (declared_component.empty()) throw ParseError("diagram declares no arcs");
  if (!have_outer) throw ParseError("missing outer region declaration");
  if (!declared_component.count(pd.outer_arc))
    throw ParseError("outer declaration names an undeclared arc");
  for (const auto& [id, k] : declared_component) {
    Arc a;
    a.id = id;
    a.component = k;
    auto cit = colors.find(k);
    a.color = cit == colors.end() ? "" : cit->second;
    pd.arcs[id] = a;
  }
  if (declared_n >= 0) {
    std::set<int> comps;
    for (const auto& [id, k] : declared_component) comps.insert(k);
    if (static_cast<int>(comps.size()) != declared_n)
      throw ParseError("components line disagrees with arc declarations");
  }
  return Diagram(std::move(pd));
}

Diagram parse_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

PdData PdData::canonical() const {
  // Renumber arcs along each strand starting from the component's smallest
  // arc id; components ordered by that id; crossings in first-visit order.
  Diagram d(*this);  // derive endpoints/components on a copy
  const auto& arcs = d.arcs();

  std::map<int, int> arc_new, crossing_new;
  int next_arc_id = 1, next_crossing_id = 1;

  std::map<int, std::vector<int>> comp_arcs;
  for (const auto& [id, a] : arcs) comp_arcs[a.component].push_back(id);

  auto next_arc = [&](int id) {
    const Arc& a = arcs.at(id);
    const Crossing& c = d.crossing(a.head_crossing);
    return a.head_port == 0 ? c.ports[2] : c.ports[c.over_out_port()];
  };

  for (const auto& [k, ids] : comp_arcs) {
    int start = *std::min_element(ids.begin(), ids.end());
    if (arcs.at(start).is_free_circle()) {
      arc_new[start] = next_arc_id++;
      continue;
    }
    int cur = start;
    do {
      arc_new[cur] = next_arc_id++;
      int hc = arcs.at(cur).head_crossing;
      if (!crossing_new.count(hc)) crossing_new[hc] = next_crossing_id++;
      cur = next_arc(cur);
    } while (cur != start);
  }

  PdData out;
  out.name = name;
  out.outer_arc = arc_new.at(outer_arc);
  out.outer_side_left = outer_side_left;
  for (const auto& [id, a] : arcs) {
    Arc na;
    na.id = arc_new.at(id);
    na.color = a.color;
    na.component = 0;
    out.arcs[na.id] = na;
  }
  out.crossings.resize(crossings.size());
  for (const auto& c : crossings) {
    Crossing nc;
    nc.id = crossing_new.at(c.id);
    nc.over_in_ccw = c.over_in_ccw;
    for (int t = 0; t < 4; ++t) nc.ports[t] = arc_new.at(c.ports[t]);
    out.crossings[nc.id - 1] = nc;
  }
  // Components re-derive deterministically from the new numbering.
  Diagram redo(out);
  return redo.pd();
}

}  // namespace clockwork
