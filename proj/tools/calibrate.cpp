// Development-time calibration of the corner-labeling conventions.
#include <cstdio>
#include <string>

#include "clockwork/braids.hpp"
#include "clockwork/diagram.hpp"
#include "clockwork/potential.hpp"
#include "clockwork/statesum.hpp"

using namespace clockwork;

static PotentialValue one_over_g(int color_id) {
  LaurentPoly x = LaurentPoly::var(VarId::color(color_id));
  LaurentPoly xi = LaurentPoly::var(VarId::color(color_id), -1);
  return PotentialValue(LaurentPoly::one(), x - xi);
}

int main() {
  int a = intern_color("a"), b = intern_color("b");

  Diagram unknot_ccw(round_unknot(true, "a", "u+"));
  Diagram unknot_cw(round_unknot(false, "a", "u-"));
  Diagram hopf(braid_closure(2, braid_word({1, 1}), {"a", "b"}, "hopf"));
  Diagram hopf_mu(braid_closure(2, braid_word({1, 1}), {"a", "a"}, "hopf_mu"));
  Diagram trefoil(braid_closure(2, braid_word({1, 1, 1}), {"a", "a"}, "t"));
  Diagram fig8(braid_closure(3, braid_word({1, -2, 1, -2}), {"a", "a", "a"}, "f8"));
  Diagram t24(braid_closure(2, braid_word({1, 1, 1, 1}), {"a", "b"}, "t24"));

  const char* curl_pd[4] = {
      // the four one-crossing unknots (kink sign x side)
      "link c1\ncomponents 1\ncolor 1 a\narc 1 component 1\narc 2 component 1\n"
      "X(1,2,2,1) o=ccw\nouter arc 1 side left\n",
      "link c2\ncomponents 1\ncolor 1 a\narc 1 component 1\narc 2 component 1\n"
      "X(1,1,2,2) o=cw\nouter arc 1 side left\n",
      "link c3\ncomponents 1\ncolor 1 a\narc 1 component 1\narc 2 component 1\n"
      "X(2,1,1,2) o=ccw\nouter arc 2 side left\n",
      "link c4\ncomponents 1\ncolor 1 a\narc 2 component 1\narc 1 component 1\n"
      "X(2,2,1,1) o=cw\nouter arc 2 side left\n",
  };

  Diagram hopf_neg(braid_closure(2, braid_word({-1, -1}), {"a", "a"}, "hopf_neg"));
  Diagram t24_neg(braid_closure(2, braid_word({-1, -1, -1, -1}), {"a", "a"}, "t24n"));

  LaurentPoly xa = LaurentPoly::var(VarId::color(a));
  LaurentPoly xa_inv = LaurentPoly::var(VarId::color(a), -1);
  LaurentPoly xb = LaurentPoly::var(VarId::color(b));
  PotentialValue unknot_val = one_over_g(a);
  PotentialValue hopf_val = PotentialValue::of_poly(LaurentPoly::one());
  LaurentPoly tre_num = LaurentPoly::var(VarId::color(a), 2) - LaurentPoly::one() +
                        LaurentPoly::var(VarId::color(a), -2);
  PotentialValue tre_val(tre_num, xa - xa_inv);
  PotentialValue t24_val = PotentialValue::of_poly(
      xa * xb + LaurentPoly::var(VarId::color(a), -1) * LaurentPoly::var(VarId::color(b), -1));
  PotentialValue hopf_neg_val = PotentialValue::of_poly(-LaurentPoly::one());
  PotentialValue t24_neg_val = PotentialValue::of_poly(
      -(LaurentPoly::var(VarId::color(a), 2) + LaurentPoly::var(VarId::color(a), -2)));
  // figure eight: (3 - x^2 - x^-2)/(x - x^-1)
  PotentialValue fig8_val(LaurentPoly::constant(3) - LaurentPoly::var(VarId::color(a), 2) -
                              LaurentPoly::var(VarId::color(a), -2),
                          xa - xa_inv);

  for (int pw = 0; pw < 2; ++pw)
    for (int nw = 0; nw < 2; ++nw)
      for (int ps = 0; ps < 2; ++ps)
        for (int ns = 0; ns < 2; ++ns) {
          Conventions conv;
          conv.positive_weight_strand = pw ? StrandRole::Over : StrandRole::Under;
          conv.negative_weight_strand = nw ? StrandRole::Over : StrandRole::Under;
          conv.positive_sigma = ps ? SigmaCorner::OutOut : SigmaCorner::InIn;
          conv.negative_sigma = ns ? SigmaCorner::OutOut : SigmaCorner::InIn;

          std::string fails;
          auto expect = [&](const char* tag, bool ok) {
            if (!ok) fails += std::string(" ") + tag;
          };

          expect("unknot+", rat_eq(colored_potential(unknot_ccw, {}, conv), unknot_val));
          expect("unknot-", rat_eq(colored_potential(unknot_cw, {}, conv), unknot_val));
          for (int i = 0; i < 4; ++i) {
            Diagram curl = parse_diagram(curl_pd[i]);
            expect(("curl" + std::to_string(i)).c_str(),
                   rat_eq(colored_potential(curl, {}, conv), unknot_val));
          }
          expect("hopf", rat_eq(colored_potential(hopf, {}, conv), hopf_val));
          expect("hopf_mu", rat_eq(colored_potential(hopf_mu, {}, conv), hopf_val));
          expect("trefoil", rat_eq(colored_potential(trefoil, {}, conv), tre_val));
          expect("t24", rat_eq(colored_potential(t24, {}, conv), t24_val));
          expect("hopf_neg", rat_eq(colored_potential(hopf_neg, {}, conv), hopf_neg_val));
          expect("t24_neg", rat_eq(colored_potential(t24_neg, {}, conv), t24_neg_val));
          expect("fig8", rat_eq(colored_potential(fig8, {}, conv), fig8_val));

          // Star independence of <L|S>/|S| across all pairs.
          for (const Diagram* d : {&trefoil, &hopf, &fig8}) {
            auto pairs = all_star_pairs(*d);
            PotentialValue ref = state_ratio(*d, pairs.front(), conv);
            bool ok = true;
            for (const auto& sp : pairs)
              ok = ok && rat_eq(state_ratio(*d, sp, conv), ref);
            expect("stars", ok);
          }

          // Per-crossing vanishing identities.
          for (const Diagram* d : {&trefoil, &hopf, &fig8, &t24}) {
            auto lv = make_scheme(*d, SchemeKind::LinkVars, conv);
            expect("ident", !crossing_identity_witness(*d, lv).has_value());
          }

          std::printf("pw=%s nw=%s ps=%s ns=%s : %s%s\n", pw ? "over " : "under",
                      nw ? "over " : "under", ps ? "outout" : "inin  ",
                      ns ? "outout" : "inin  ", fails.empty() ? "PASS" : "FAIL:",
                      fails.c_str());
        }
  return 0;
}
