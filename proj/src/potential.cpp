#include "clockwork/potential.hpp"

#include <mutex>

namespace clockwork {

namespace {

std::mutex color_mutex;
std::map<int, std::string>& color_registry() {
  static std::map<int, std::string> reg;
  return reg;
}

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

}  // namespace

int intern_color(const std::string& label) {
  if (label.empty()) throw InvariantError("empty color label");
  int id = static_cast<int>(fnv1a(label) & 0x7fffffffu);
  if (id == 0) id = 1;
  std::lock_guard<std::mutex> lock(color_mutex);
  auto [it, inserted] = color_registry().emplace(id, label);
  if (!inserted && it->second != label)
    throw InvariantError("color label hash collision: '" + label + "' vs '" +
                         it->second + "'");
  return id;
}

std::string color_label(int color_id) {
  std::lock_guard<std::mutex> lock(color_mutex);
  auto it = color_registry().find(color_id);
  if (it == color_registry().end())
    throw InvariantError("unknown color id " + std::to_string(color_id));
  return it->second;
}

std::function<std::string(const VarId&)> pretty_names() {
  return [](const VarId& v) -> std::string {
    if (v.kind == VarKind::Color) return "X_" + color_label(v.index);
    return default_var_name(v);
  };
}

NormFactor norm_factor(const Diagram& d, const StarPair& stars) {
  NormFactor out;
  const auto& p_low = d.region(stars.region_low).index;
  const auto& p_high = d.region(stars.region_high).index;
  int K = 0;
  for (int k = 1; k <= d.num_components(); ++k) {
    int diff = p_high[k - 1] - p_low[k - 1];
    if (diff == 0) continue;
    if (diff != 1 || K != 0)
      throw InvariantError("star pair indices do not differ by a single e_K step");
    K = k;
  }
  if (K == 0) throw InvariantError("star pair indices are equal; no shared strand");
  out.strand_component = K;
  out.star_region_index = p_low;
  Monomial shift;
  for (int k = 1; k <= d.num_components(); ++k)
    if (p_low[k - 1] != 0)
      shift = shift.times(Monomial::of(VarId::link(k), -2 * p_low[k - 1]));
  LaurentPoly xk = LaurentPoly::var(VarId::link(K));
  LaurentPoly xk_inv = LaurentPoly::var(VarId::link(K), -1);
  out.value = (xk - xk_inv).times_term(shift.times(Monomial::of(VarId::link(K), -1)), 1);
  return out;
}

PotentialValue state_ratio(const Diagram& d, const StarPair& stars,
                           const Conventions& conv) {
  WeightScheme lv = make_scheme(d, SchemeKind::LinkVars, conv);
  LaurentPoly sum = state_sum(d, stars, lv, conv).value;
  NormFactor nf = norm_factor(d, stars);
  return PotentialValue(sum, nf.value);
}

PotentialValue kauffman_potential(const Diagram& d, const Conventions& conv) {
  if (d.is_split()) return PotentialValue::zero();
  PotentialValue f = state_ratio(d, default_star_pair(d), conv);
  Monomial curl_factor;
  for (int k = 1; k <= d.num_components(); ++k) {
    int c = d.curvature(k);
    if (c != 0) curl_factor = curl_factor.times(Monomial::of(VarId::link(k), c));
  }
  return f.times(LaurentPoly::term(curl_factor, 1));
}

PotentialValue apply_coloring(const Diagram& d, const PotentialValue& v,
                              const std::map<int, std::string>& color_map) {
  std::map<VarId, LaurentPoly::UnitImage> images;
  for (int k = 1; k <= d.num_components(); ++k) {
    auto it = color_map.find(k);
    const std::string& label = it != color_map.end() ? it->second : d.component_color(k);
    images[VarId::link(k)] = {1, Monomial::of(VarId::color(intern_color(label)))};
  }
  return PotentialValue(v.num().substitute(images), v.den().substitute(images));
}

PotentialValue colored_potential(const Diagram& d,
                                 const std::map<int, std::string>& color_map,
                                 const Conventions& conv) {
  if (d.is_split()) return PotentialValue::zero();
  return apply_coloring(d, kauffman_potential(d, conv), color_map);
}

}  // namespace clockwork
