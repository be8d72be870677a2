// Regenerates the PD files shipped under corpus/. Usage: gen_corpus <dir>
#include <fstream>
#include <iostream>
#include <vector>

#include "clockwork/braids.hpp"
#include "clockwork/diagram.hpp"

using namespace clockwork;

static void emit(const std::string& dir, const std::string& name, const PdData& pd) {
  Diagram d(pd);  // validate before writing
  std::ofstream out(dir + "/" + name + ".pd");
  out << "# " << name << "\n" << d.pd().to_pd_text();
  std::cout << name << ": " << d.num_crossings() << " crossings, "
            << d.num_components() << " components"
            << (d.is_split() ? ", split" : "") << "\n";
}

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "corpus";

  emit(dir, "unknot_ccw", round_unknot(true, "a", "unknot_ccw"));
  emit(dir, "unknot_cw", round_unknot(false, "a", "unknot_cw"));

  PdData curl;
  curl.name = "unknot_curl";
  curl.arcs[1] = {1, "a", 0, 0, -1, 0, -1};
  curl.arcs[2] = {2, "a", 0, 0, -1, 0, -1};
  curl.crossings.push_back(make_crossing(1, 1, 2, 2, 1, true));
  curl.outer_arc = 1;
  curl.outer_side_left = true;
  emit(dir, "unknot_curl", curl);

  emit(dir, "hopf_plus", braid_closure(2, braid_word({1, 1}), {"a", "b"}, "hopf_plus"));
  emit(dir, "hopf_minus", braid_closure(2, braid_word({-1, -1}), {"a", "b"}, "hopf_minus"));
  emit(dir, "trefoil_plus", braid_closure(2, braid_word({1, 1, 1}), {"a", "a"}, "trefoil_plus"));
  emit(dir, "trefoil_minus",
       braid_closure(2, braid_word({-1, -1, -1}), {"a", "a"}, "trefoil_minus"));
  emit(dir, "figure_eight",
       braid_closure(3, braid_word({1, -2, 1, -2}), {"a", "a", "a"}, "figure_eight"));
  emit(dir, "torus_2_4", braid_closure(2, braid_word({1, 1, 1, 1}), {"a", "b"}, "torus_2_4"));
  emit(dir, "whitehead",
       braid_closure(3, braid_word({1, -2, 1, -2, 1}), {"a", "b", "b"}, "whitehead"));
  emit(dir, "borromean",
       braid_closure(3, braid_word({1, -2, 1, -2, 1, -2}), {"a", "b", "c"}, "borromean"));

  emit(dir, "unlink2",
       disjoint_union(round_unknot(true, "a", "u1"), round_unknot(true, "b", "u2"),
                      "unlink2"));
  emit(dir, "trefoil_unknot",
       disjoint_union(braid_closure(2, braid_word({1, 1, 1}), {"a", "a"}, "t"),
                      round_unknot(true, "b", "u"), "trefoil_unknot"));
  return 0;
}
