#include "clockwork/braids.hpp"
#include "clockwork/potential.hpp"
#include "doctest.h"

using namespace clockwork;

namespace {

// Skein-recursion oracle built only from the axioms: the unknot value, the
// crossing-switch relation at a same-colored crossing, and split vanishing.
// Independent of the diagram/state machinery.
PotentialValue oracle_unknot(int color) {
  LaurentPoly x = LaurentPoly::var(VarId::color(color));
  LaurentPoly xi = LaurentPoly::var(VarId::color(color), -1);
  return PotentialValue(LaurentPoly::one(), x - xi);
}

LaurentPoly oracle_g(int color) {
  return LaurentPoly::var(VarId::color(color)) - LaurentPoly::var(VarId::color(color), -1);
}

// Hopf+ (both strands colored mu): switch one crossing to reach the split
// unlink (value 0), smooth to reach the unknot.
PotentialValue oracle_hopf_plus(int color) {
  PotentialValue split = PotentialValue::zero();
  return split.plus(oracle_unknot(color).times(oracle_g(color)));
}

// Right trefoil: switch one crossing to reach the unknot, smooth to Hopf+.
PotentialValue oracle_trefoil(int color) {
  return oracle_unknot(color).plus(oracle_hopf_plus(color).times(oracle_g(color)));
}

Diagram from_corpus(const std::string& name) {
  return parse_diagram_file(std::string(CLOCKWORK_CORPUS_DIR) + "/" + name + ".pd");
}

}  // namespace

TEST_CASE("norm factor reads the smaller star index") {
  Diagram u = from_corpus("unknot_ccw");
  auto sp = default_star_pair(u);
  NormFactor nf = norm_factor(u, sp);
  CHECK(nf.strand_component == 1);
  // Stars are the two faces of the circle with indices (-1) and (0); p is
  // read from the smaller, so |S| = X^2 X^-1 (X - X^-1) = X^2 - 1.
  CHECK(nf.star_region_index == std::vector<int>{-1});
  LaurentPoly expect = LaurentPoly::var(VarId::link(1), 2) - LaurentPoly::one();
  CHECK(nf.value == expect);
}

TEST_CASE("unknot potential is the axiom value") {
  int a = intern_color("a");
  for (const char* name : {"unknot_ccw", "unknot_cw", "unknot_curl"}) {
    Diagram d = from_corpus(name);
    CHECK(rat_eq(colored_potential(d), oracle_unknot(a)));
  }
}

TEST_CASE("split links vanish") {
  CHECK(colored_potential(from_corpus("unlink2")).is_zero());
  CHECK(colored_potential(from_corpus("trefoil_unknot")).is_zero());
  CHECK(kauffman_potential(from_corpus("unlink2")).is_zero());
}

TEST_CASE("trefoil and hopf match the skein oracle") {
  int a = intern_color("a");
  CHECK(rat_eq(colored_potential(from_corpus("trefoil_plus")), oracle_trefoil(a)));
  CHECK(rat_eq(colored_potential(from_corpus("trefoil_minus")), oracle_trefoil(a)));
  // Hopf with both components recolored to a.
  Diagram hopf = from_corpus("hopf_plus");
  std::map<int, std::string> both_a{{1, "a"}, {2, "a"}};
  CHECK(rat_eq(colored_potential(hopf, both_a), oracle_hopf_plus(a)));
}

TEST_CASE("identity coloring is plain substitution") {
  Diagram hopf = from_corpus("hopf_plus");
  PotentialValue uncolored = kauffman_potential(hopf);
  PotentialValue colored = colored_potential(hopf);
  CHECK(rat_eq(apply_coloring(hopf, uncolored), colored));
}

TEST_CASE("two-variable hopf specializes to the one-color value") {
  Diagram hopf = from_corpus("hopf_plus");
  // X1, X2 -> X_a commutes with assembling the potential.
  std::map<int, std::string> both_a{{1, "a"}, {2, "a"}};
  PotentialValue direct = colored_potential(hopf, both_a);
  PotentialValue via_two = apply_coloring(hopf, kauffman_potential(hopf), both_a);
  CHECK(rat_eq(direct, via_two));
}

TEST_CASE("state ratio is star independent on the corpus") {
  for (const char* name :
       {"unknot_curl", "hopf_plus", "hopf_minus", "trefoil_plus", "figure_eight"}) {
    Diagram d = from_corpus(name);
    auto pairs = all_star_pairs(d);
    PotentialValue ref = state_ratio(d, pairs.front());
    for (const auto& sp : pairs) CHECK(rat_eq(state_ratio(d, sp), ref));
  }
}

TEST_CASE("miscalibrated conventions are detected by the unknot value") {
  Conventions wrong;
  wrong.positive_sigma = SigmaCorner::OutOut;  // out-out with over-strand weights
  int a = intern_color("a");
  Diagram hopf = from_corpus("hopf_plus");
  std::map<int, std::string> both_a{{1, "a"}, {2, "a"}};
  CHECK_FALSE(rat_eq(colored_potential(hopf, both_a, wrong), oracle_hopf_plus(a)));
}
