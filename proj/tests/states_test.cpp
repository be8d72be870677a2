#include <algorithm>
#include <set>

#include "clockwork/braids.hpp"
#include "clockwork/states.hpp"
#include "doctest.h"

using namespace clockwork;

namespace {

Diagram curl() {
  return parse_diagram(
      "link curl\ncomponents 1\ncolor 1 a\narc 1 component 1\narc 2 component 1\n"
      "X(1,2,2,1) o=ccw\nouter arc 1 side left\n");
}

Diagram trefoil() {
  return Diagram(braid_closure(2, braid_word({1, 1, 1}), {"a", "a"}, "trefoil"));
}

Diagram fig8() {
  return Diagram(braid_closure(3, braid_word({1, -2, 1, -2}), {"a", "a", "a"}, "fig8"));
}

int count_sources(const ClockGraph& g) {
  std::set<int> has_in;
  for (auto [a, b] : g.cw_edges) has_in.insert(b);
  int n = 0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (!has_in.count(static_cast<int>(i))) ++n;
  return n;
}

int count_sinks(const ClockGraph& g) {
  std::set<int> has_out;
  for (auto [a, b] : g.cw_edges) has_out.insert(a);
  int n = 0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (!has_out.count(static_cast<int>(i))) ++n;
  return n;
}

bool cw_reaches_all(const ClockGraph& g, int source) {
  std::set<int> seen{source};
  std::vector<int> stack{source};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : g.cw_edges)
      if (a == v && seen.insert(b).second) stack.push_back(b);
  }
  return seen.size() == g.nodes.size();
}

}  // namespace

TEST_CASE("curl has exactly one state and no transpositions") {
  Diagram d = curl();
  for (const auto& sp : all_star_pairs(d)) {
    auto states = enumerate_states(d, sp);
    REQUIRE(states.size() == 1);
    CHECK(state_is_valid(d, states[0]));
    CHECK(transpositions(d, states[0]).empty());
  }
}

TEST_CASE("trefoil has three states forming a two-edge clock path") {
  Diagram d = trefoil();
  for (const auto& sp : all_star_pairs(d)) {
    auto states = enumerate_states(d, sp);
    CHECK(states.size() == 3);
    ClockGraph g = clock_graph(d, sp);
    CHECK(g.nodes.size() == 3);
    CHECK(g.cw_edges.size() == 2);
    CHECK(count_sources(g) == 1);
    CHECK(count_sinks(g) == 1);
  }
}

TEST_CASE("figure eight has five states with a unique source and sink") {
  Diagram d = fig8();
  for (const auto& sp : all_star_pairs(d)) {
    auto states = enumerate_states(d, sp);
    CHECK(states.size() == 5);
    ClockGraph g = clock_graph(d, sp);
    CHECK(count_sources(g) == 1);
    CHECK(count_sinks(g) == 1);
    int source = -1;
    std::set<int> has_in;
    for (auto [a, b] : g.cw_edges) has_in.insert(b);
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      if (!has_in.count(static_cast<int>(i))) source = static_cast<int>(i);
    CHECK(cw_reaches_all(g, source));
  }
}

TEST_CASE("enumerated states satisfy the defining conditions") {
  for (Diagram d : {trefoil(), fig8()}) {
    int n = d.num_crossings();
    for (const auto& sp : all_star_pairs(d)) {
      // Two starred regions leave exactly n of the n+2 regions for markers.
      int non_starred = static_cast<int>(d.regions().size()) - 2;
      CHECK(non_starred == n);
      for (const auto& s : enumerate_states(d, sp)) {
        CHECK(state_is_valid(d, s));
        std::set<int> regions_used;
        for (const auto& m : s.markers) regions_used.insert(d.region_of(m));
        CHECK(static_cast<int>(regions_used.size()) == n);
        CHECK_FALSE(regions_used.count(sp.region_low));
        CHECK_FALSE(regions_used.count(sp.region_high));
      }
    }
  }
}

TEST_CASE("transpositions swap exactly two markers and invert") {
  Diagram d = fig8();
  auto sp = default_star_pair(d);
  for (const auto& s : enumerate_states(d, sp)) {
    for (const auto& tr : transpositions(d, s)) {
      CHECK(state_is_valid(d, tr.result));
      int moved = 0;
      for (int c = 0; c < d.num_crossings(); ++c)
        if (s.markers[c] != tr.result.markers[c]) ++moved;
      CHECK(moved == 2);
      // The reverse move exists with the opposite chirality.
      bool found = false;
      for (const auto& back : transpositions(d, tr.result))
        if (back.result == s && back.direction != tr.direction) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("clocked and counter-clocked states are the extremes") {
  for (Diagram d : {curl(), trefoil(), fig8()}) {
    for (const auto& sp : all_star_pairs(d)) {
      KState clocked = clocked_state(d, sp);
      KState counter = counter_clocked_state(d, sp);
      for (const auto& tr : transpositions(d, clocked))
        CHECK(tr.direction == Turn::Clockwise);
      for (const auto& tr : transpositions(d, counter))
        CHECK(tr.direction == Turn::CounterClockwise);
    }
  }
}

TEST_CASE("clock graph export formats") {
  Diagram d = trefoil();
  ClockGraph g = clock_graph(d, default_star_pair(d));
  CHECK(g.to_dot().find("digraph clock") != std::string::npos);
  CHECK(g.to_json().find("cw_edges") != std::string::npos);
}

TEST_CASE("state enumeration requires a connected projection") {
  Diagram split(disjoint_union(round_unknot(true, "a", "u1"),
                               round_unknot(true, "b", "u2"), "unlink2"));
  CHECK_THROWS_AS(enumerate_states(split, StarPair{}), InvariantError);
}
