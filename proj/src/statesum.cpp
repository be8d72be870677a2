#include "clockwork/statesum.hpp"

#include <sstream>

namespace clockwork {

namespace {

// Quadrants on the left of a strand passage entering at port `in` and
// leaving at port `out`: {in-1, out} (mod 4).
std::array<int, 2> left_quadrants(int in, int out) {
  return {(in + 3) % 4, out};
}

bool contains(const std::array<int, 2>& qs, int q) { return qs[0] == q || qs[1] == q; }

}  // namespace

CrossingCorners crossing_corners(const Crossing& c, const Conventions& conv) {
  auto under_left = left_quadrants(0, 2);
  auto over_left = left_quadrants(c.over_in_port(), c.over_out_port());
  CrossingCorners out{};
  out.delta = -1;
  for (int q = 0; q < 4; ++q)
    if (contains(under_left, q) && contains(over_left, q)) out.delta = q;
  if (out.delta < 0) throw InvariantError("no quadrant lies left of both strands");
  out.top = (out.delta + 2) % 4;
  if (c.over_in_ccw) {          // incoming ports 0 and 1, outgoing 2 and 3
    out.in_in = 0;
    out.out_out = 2;
  } else {                      // incoming 0 and 3, outgoing 1 and 2
    out.in_in = 3;
    out.out_out = 1;
  }
  SigmaCorner sc = c.sign() > 0 ? conv.positive_sigma : conv.negative_sigma;
  out.sigma = sc == SigmaCorner::InIn ? out.in_in : out.out_out;
  return out;
}

WeightScheme make_scheme(const Diagram& d, SchemeKind kind, const Conventions& conv) {
  WeightScheme ws;
  ws.kind = kind;
  for (const auto& c : d.crossings()) {
    CrossingCorners cc = crossing_corners(c, conv);
    std::array<WeightScheme::Entry, 4> row;
    row[cc.sigma].sigma_corner = true;
    int other_middle = cc.sigma == cc.in_in ? cc.out_out : cc.in_in;

    switch (kind) {
      case SchemeKind::Formal: {
        int k = c.id;
        row[cc.sigma].weight = LaurentPoly::var(VarId::formal(VarKind::FormalI, k));
        row[other_middle].weight = LaurentPoly::var(VarId::formal(VarKind::FormalO, k));
        row[cc.delta].weight = LaurentPoly::var(VarId::formal(VarKind::FormalU, k));
        row[cc.top].weight = LaurentPoly::var(VarId::formal(VarKind::FormalD, k));
        break;
      }
      case SchemeKind::BW: {
        row[cc.sigma].weight = LaurentPoly::var(VarId::b());
        row[other_middle].weight = LaurentPoly::var(VarId::w());
        row[cc.delta].weight = LaurentPoly::one();
        row[cc.top].weight = LaurentPoly::one();
        break;
      }
      case SchemeKind::LinkVars: {
        StrandRole role = c.sign() > 0 ? conv.positive_weight_strand
                                       : conv.negative_weight_strand;
        int in = role == StrandRole::Under ? 0 : c.over_in_port();
        int outp = role == StrandRole::Under ? 2 : c.over_out_port();
        int comp = d.arc(c.ports[in]).component;
        auto lows = left_quadrants(in, outp);  // index steps up left to right
        for (int q = 0; q < 4; ++q)
          row[q].weight = LaurentPoly::var(VarId::link(comp), contains(lows, q) ? -1 : 1);
        break;
      }
    }
    ws.table[c.id] = row;
  }
  return ws;
}

int sigma(const Diagram& d, const KState& s, const Conventions& conv) {
  int count = 0;
  for (const auto& m : s.markers) {
    CrossingCorners cc = crossing_corners(d.crossing(m.crossing), conv);
    if (m.quadrant == cc.sigma) ++count;
  }
  return count % 2 == 0 ? +1 : -1;
}

LaurentPoly bracket(const Diagram& d, const KState& s, const WeightScheme& w) {
  (void)d;
  LaurentPoly out = LaurentPoly::one();
  for (const auto& m : s.markers) out = out * w.at(m.crossing, m.quadrant).weight;
  return out;
}

StateSum state_sum(const Diagram& d, const StarPair& stars, const WeightScheme& w,
                   const Conventions& conv) {
  StateSum out;
  out.kind = w.kind;
  out.stars = stars;
  if (d.is_split()) {
    out.value = LaurentPoly::zero();
    return out;
  }
  LaurentPoly acc;
  for (const auto& s : enumerate_states(d, stars)) {
    LaurentPoly term = bracket(d, s, w);
    if (sigma(d, s, conv) < 0)
      acc -= term;
    else
      acc += term;
  }
  out.value = acc;
  return out;
}

LaurentPoly bw_specialize(const LaurentPoly& formal_sum) {
  std::map<VarId, LaurentPoly::UnitImage> images;
  for (const auto& [m, c] : formal_sum.terms()) {
    (void)c;
    for (const auto& [v, e] : m.entries()) {
      (void)e;
      switch (v.kind) {
        case VarKind::FormalI:
          images[v] = {1, Monomial::of(VarId::b())};
          break;
        case VarKind::FormalO:
          images[v] = {1, Monomial::of(VarId::w())};
          break;
        case VarKind::FormalU:
        case VarKind::FormalD:
          images[v] = {1, Monomial::unit()};
          break;
        default:
          break;
      }
    }
  }
  return formal_sum.substitute(images);
}

std::optional<std::string> crossing_identity_witness(const Diagram& d,
                                                     const WeightScheme& linkvars) {
  for (const auto& c : d.crossings()) {
    LaurentPoly plain, weighted;
    for (int q = 0; q < 4; ++q) {
      int reg = d.region_of({c.id, q});
      const auto& index = d.region(reg).index;
      long long parity_sum = 0;
      Monomial mono;
      for (int k = 1; k <= d.num_components(); ++k) {
        parity_sum += index[k - 1];
        if (index[k - 1] != 0) mono = mono.times(Monomial::of(VarId::link(k), -2 * index[k - 1]));
      }
      long long sign = (parity_sum % 2 == 0) ? 1 : -1;
      const LaurentPoly& w = linkvars.at(c.id, q).weight;
      plain += w.times_term(Monomial::unit(), sign);
      weighted += w.times_term(mono, sign);
    }
    if (!plain.is_zero())
      return "crossing " + std::to_string(c.id) + ": parity-weight sum is " +
             plain.to_string();
    if (!weighted.is_zero())
      return "crossing " + std::to_string(c.id) + ": index-monomial sum is " +
             weighted.to_string();
  }
  return std::nullopt;
}

}  // namespace clockwork
