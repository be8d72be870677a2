#include "clockwork/alexander.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace clockwork {

AlexanderMatrix alexander_matrix(const Diagram& d, const WeightScheme& w) {
  AlexanderMatrix a;
  a.kind = w.kind;
  int n = d.num_crossings();
  int nreg = static_cast<int>(d.regions().size());
  a.entry.assign(n, std::vector<LaurentPoly>(nreg));
  for (const auto& c : d.crossings())
    for (int q = 0; q < 4; ++q) {
      int reg = d.region_of({c.id, q});
      a.entry[c.id - 1][reg - 1] += w.at(c.id, q).weight;
    }
  return a;
}

PolyMatrix reduced(const AlexanderMatrix& a, int region_i1, int region_i2) {
  if (region_i1 == region_i2) throw InvariantError("reduced: columns must differ");
  if (region_i1 < 1 || region_i1 > a.cols() || region_i2 < 1 || region_i2 > a.cols())
    throw InvariantError("reduced: column index out of range");
  PolyMatrix m;
  for (const auto& row : a.entry) {
    std::vector<LaurentPoly> r;
    for (int j = 1; j <= a.cols(); ++j)
      if (j != region_i1 && j != region_i2) r.push_back(row[j - 1]);
    m.push_back(std::move(r));
  }
  return m;
}

LaurentPoly det(const PolyMatrix& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::one();
  if (static_cast<int>(m[0].size()) != n) throw InvariantError("det: matrix not square");
  if (n > 30) throw InvariantError("det: matrix too large for cofactor expansion");
  // Expand along rows top-down; memoize on the set of still-available columns.
  std::map<unsigned, LaurentPoly> memo;
  unsigned full = (n == 32) ? ~0u : ((1u << n) - 1u);

  auto rec = [&](auto&& self, unsigned cols) -> LaurentPoly {
    if (cols == 0) return LaurentPoly::one();
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    int row = n - __builtin_popcount(cols);
    LaurentPoly acc;
    int parity = 0;
    for (int j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      if (!m[row][j].is_zero()) {
        LaurentPoly sub = self(self, cols & ~(1u << j));
        LaurentPoly term = m[row][j] * sub;
        if (parity % 2)
          acc -= term;
        else
          acc += term;
      }
      ++parity;
    }
    memo[cols] = acc;
    return acc;
  };
  return rec(rec, full);
}

std::string matrix_to_json(const AlexanderMatrix& a) {
  nlohmann::json j;
  j["scheme"] = a.kind == SchemeKind::Formal  ? "formal"
                : a.kind == SchemeKind::BW    ? "bw"
                                              : "linkvars";
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : a.entry) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& p : row) r.push_back(nlohmann::json::parse(p.to_json()));
    rows.push_back(r);
  }
  j["entries"] = rows;
  return j.dump(2);
}

int DetLabeling::position_of(int region_id) const {
  for (std::size_t i = 0; i < region_order.size(); ++i)
    if (region_order[i] == region_id) return static_cast<int>(i) + 1;
  throw InvariantError("region not present in labeling");
}

namespace {

int non_multiple_index(const Diagram& d, int region_id) {
  int m = 0;
  for (int v : d.region(region_id).index) m += v;
  return m;
}

LaurentPoly labeled_reduced_det(const AlexanderMatrix& a, const DetLabeling& lab,
                                int pos_i, int pos_j) {
  PolyMatrix m;
  int n = a.rows();
  for (int r = 0; r < n; ++r) {
    int rr = r;
    if (lab.rows_swapped && n >= 2) {
      if (r == 0) rr = 1;
      else if (r == 1) rr = 0;
    }
    std::vector<LaurentPoly> row;
    for (int p = 1; p <= static_cast<int>(lab.region_order.size()); ++p) {
      if (p == pos_i || p == pos_j) continue;
      row.push_back(a.entry[rr][lab.region_order[p - 1] - 1]);
    }
    m.push_back(std::move(row));
  }
  return det(m);
}

}  // namespace

LaurentPoly labeled_det(const Diagram& d, const AlexanderMatrix& a,
                        const DetLabeling& lab, int pos_i, int pos_j) {
  (void)d;
  return labeled_reduced_det(a, lab, pos_i, pos_j);
}

DetLabeling build_compliant_labeling(const Diagram& d, const WeightScheme& w,
                                     const StarPair& base, const Conventions& conv) {
  int n = d.num_crossings();
  int nreg = static_cast<int>(d.regions().size());
  DetLabeling lab;
  for (int r = 1; r <= nreg; ++r)
    if (r != base.region_low && r != base.region_high) lab.region_order.push_back(r);
  // Lower-index star region at position n+1.
  lab.region_order.push_back(base.region_low);
  lab.region_order.push_back(base.region_high);

  AlexanderMatrix a = alexander_matrix(d, w);
  LaurentPoly sum = state_sum(d, base, w, conv).value;
  LaurentPoly base_det = labeled_reduced_det(a, lab, n + 1, n + 2);
  if (base_det == sum) return lab;
  if (base_det == -sum && n >= 2) {
    lab.rows_swapped = true;
    return lab;
  }
  throw InvariantError("no compliant labeling: base determinant is not the base "
                       "state sum up to a row swap");
}

int signed_det_relation(const Diagram& d, const DetLabeling& lab, int pos_i, int pos_j) {
  if (pos_i >= pos_j) throw InvariantError("signed_det_relation needs i < j");
  int ri = lab.region_order[pos_i - 1], rj = lab.region_order[pos_j - 1];
  int diff = non_multiple_index(d, rj) - non_multiple_index(d, ri);
  if (diff != 1 && diff != -1)
    throw InvariantError("signed_det_relation: regions are not adjacent across a strand");
  // det(i,j) = (-1)^(i+j) * s_ij * s_base * det(n+1,n+2) with the base pair
  // normalized to s_base = -1 (lower-index region at position n+1).
  int s_ij = diff;
  int parity = (pos_i + pos_j) % 2 == 0 ? 1 : -1;
  return -parity * s_ij;
}

// --- column relations ------------------------------------------------------

namespace {

// Elements u + v*alpha of Z[B,W][alpha] with alpha^2 = -(B+W) alpha - 1.
struct AlphaElem {
  LaurentPoly u, v;
  bool is_zero() const { return u.is_zero() && v.is_zero(); }
};

AlphaElem alpha_mul(const AlphaElem& x, const AlphaElem& y) {
  LaurentPoly bw = LaurentPoly::var(VarId::b()) + LaurentPoly::var(VarId::w());
  LaurentPoly vv = x.v * y.v;
  AlphaElem out;
  out.u = x.u * y.u - vv;
  out.v = x.u * y.v + x.v * y.u - bw * vv;
  return out;
}

AlphaElem alpha_pow(int e) {
  // alpha^0 = 1, alpha^1 = alpha, alpha^-1 = -(B+W) - alpha.
  AlphaElem one{LaurentPoly::one(), LaurentPoly::zero()};
  if (e == 0) return one;
  AlphaElem base;
  if (e > 0) {
    base = {LaurentPoly::zero(), LaurentPoly::one()};
  } else {
    base = {-(LaurentPoly::var(VarId::b()) + LaurentPoly::var(VarId::w())),
            -LaurentPoly::one()};
    e = -e;
  }
  AlphaElem acc = one;
  for (int i = 0; i < e; ++i) acc = alpha_mul(acc, base);
  return acc;
}

AlphaElem beta(int mj, int mk) {
  AlphaElem a = alpha_pow(mj - mk), b = alpha_pow(mk - mj);
  return {a.u - b.u, a.v - b.v};
}

}  // namespace

std::optional<std::string> bw_column_relation_witness(const Diagram& d,
                                                      const AlexanderMatrix& bw) {
  int nreg = bw.cols();
  for (int k = 1; k <= nreg; ++k) {
    for (int row = 0; row < bw.rows(); ++row) {
      AlphaElem acc{LaurentPoly::zero(), LaurentPoly::zero()};
      for (int j = 1; j <= nreg; ++j) {
        const LaurentPoly& e = bw.entry[row][j - 1];
        if (e.is_zero()) continue;
        AlphaElem b = beta(non_multiple_index(d, j), non_multiple_index(d, k));
        acc.u += b.u * e;
        acc.v += b.v * e;
      }
      if (!acc.is_zero())
        return "B/W column relation fails at row " + std::to_string(row + 1) +
               ", k = " + std::to_string(k);
    }
  }
  return std::nullopt;
}

std::optional<std::string> linkvar_column_relation_witness(const Diagram& d,
                                                           const AlexanderMatrix& lv) {
  int nreg = lv.cols();
  int N = d.num_components();
  auto beta_prime = [&](int j, int k) {
    const auto& pj = d.region(j).index;
    const auto& pk = d.region(k).index;
    long long parity = 0;
    Monomial mono;
    for (int c = 1; c <= N; ++c) {
      int diff = pj[c - 1] - pk[c - 1];
      parity += diff;
      if (diff != 0) mono = mono.times(Monomial::of(VarId::link(c), -2 * diff));
    }
    LaurentPoly val = LaurentPoly::one() - LaurentPoly::term(mono, 1);
    if (parity % 2 != 0) val = -val;
    return val;
  };
  for (int k = 1; k <= nreg; ++k) {
    for (int row = 0; row < lv.rows(); ++row) {
      LaurentPoly acc;
      for (int j = 1; j <= nreg; ++j) {
        const LaurentPoly& e = lv.entry[row][j - 1];
        if (e.is_zero()) continue;
        acc += beta_prime(j, k) * e;
      }
      if (!acc.is_zero())
        return "link-variable column relation fails at row " + std::to_string(row + 1) +
               ", k = " + std::to_string(k) + ": " + acc.to_string();
    }
  }
  return std::nullopt;
}

}  // namespace clockwork
