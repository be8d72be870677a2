#include "clockwork/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace clockwork {

std::string default_var_name(const VarId& v) {
  switch (v.kind) {
    case VarKind::Link:
      return "X" + std::to_string(v.index);
    case VarKind::Color:
      return "C" + std::to_string(v.index);
    case VarKind::B:
      return "B";
    case VarKind::W:
      return "W";
    case VarKind::FormalI:
      return "I" + std::to_string(v.index);
    case VarKind::FormalO:
      return "O" + std::to_string(v.index);
    case VarKind::FormalU:
      return "U" + std::to_string(v.index);
    case VarKind::FormalD:
      return "D" + std::to_string(v.index);
  }
  return "?";
}

static VarId var_from_name(const std::string& s) {
  if (s == "B") return VarId::b();
  if (s == "W") return VarId::w();
  if (s.size() < 2) throw std::invalid_argument("bad variable name: " + s);
  int idx = std::stoi(s.substr(1));
  switch (s[0]) {
    case 'X':
      return VarId::link(idx);
    case 'C':
      return VarId::color(idx);
    case 'I':
      return VarId::formal(VarKind::FormalI, idx);
    case 'O':
      return VarId::formal(VarKind::FormalO, idx);
    case 'U':
      return VarId::formal(VarKind::FormalU, idx);
    case 'D':
      return VarId::formal(VarKind::FormalD, idx);
  }
  throw std::invalid_argument("bad variable name: " + s);
}

Monomial Monomial::of(const VarId& v, int exp) {
  Monomial m;
  if (exp != 0) m.exps_.emplace_back(v, exp);
  return m;
}

int Monomial::exponent(const VarId& v) const {
  for (const auto& [var, e] : exps_)
    if (var == v) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.exps_.reserve(exps_.size() + other.exps_.size());
  std::size_t i = 0, j = 0;
  while (i < exps_.size() || j < other.exps_.size()) {
    if (j == other.exps_.size() || (i < exps_.size() && exps_[i].first < other.exps_[j].first)) {
      out.exps_.push_back(exps_[i++]);
    } else if (i == exps_.size() || other.exps_[j].first < exps_[i].first) {
      out.exps_.push_back(other.exps_[j++]);
    } else {
      int e = exps_[i].second + other.exps_[j].second;
      if (e != 0) out.exps_.emplace_back(exps_[i].first, e);
      ++i, ++j;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& [v, e] : out.exps_) e = -e;
  return out;
}

Monomial Monomial::pow(int e) const {
  Monomial out;
  if (e == 0) return out;
  out = *this;
  for (auto& [v, ex] : out.exps_) ex *= e;
  return out;
}

LaurentPoly LaurentPoly::constant(long long c) {
  LaurentPoly p;
  p.add_term(Monomial::unit(), c);
  return p;
}

LaurentPoly LaurentPoly::term(const Monomial& m, long long c) {
  LaurentPoly p;
  p.add_term(m, c);
  return p;
}

LaurentPoly LaurentPoly::var(const VarId& v, int exp) {
  return term(Monomial::of(v, exp), 1);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial::unit() &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_ring_unit() const {
  if (terms_.size() != 1) return false;
  long long c = terms_.begin()->second;
  return c == 1 || c == -1;
}

long long LaurentPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const Monomial& m, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

LaurentPoly LaurentPoly::times_term(const Monomial& m, long long c) const {
  LaurentPoly out;
  for (const auto& [mt, ct] : terms_) out.add_term(mt.times(m), ct * c);
  return out;
}

std::pair<Monomial, long long> LaurentPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading() of zero polynomial");
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

LaurentPoly LaurentPoly::substitute(const std::map<VarId, UnitImage>& images) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial acc;
    long long sign = 1;
    for (const auto& [v, e] : m.entries()) {
      auto it = images.find(v);
      if (it == images.end()) {
        acc = acc.times(Monomial::of(v, e));
      } else {
        if (it->second.sign != 1 && it->second.sign != -1)
          throw std::invalid_argument("substitution image is not a ring unit");
        acc = acc.times(it->second.mono.pow(e));
        if (it->second.sign == -1 && (e % 2 != 0)) sign = -sign;
      }
    }
    out.add_term(acc, c * sign);
  }
  return out;
}

Monomial LaurentPoly::content() const {
  if (terms_.empty()) return Monomial::unit();
  bool first = true;
  std::map<VarId, int> mins;
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (first) {
      for (const auto& [v, e] : m.entries()) mins[v] = e;
      first = false;
      continue;
    }
    for (auto& [v, e] : mins) e = std::min(e, m.exponent(v));
    for (const auto& [v, e] : m.entries())
      if (!mins.count(v)) mins[v] = std::min(0, e);
  }
  Monomial out;
  for (const auto& [v, e] : mins)
    if (e != 0) out = out.times(Monomial::of(v, e));
  return out;
}

static std::string mono_to_string(const Monomial& m,
                                  const std::function<std::string(const VarId&)>& name) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [v, e] : m.entries()) {
    if (!out.empty()) out += " ";
    out += name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string LaurentPoly::to_string(
    const std::function<std::string(const VarId&)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending canonical order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out = "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.is_unit()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + " ";
      out += mono_to_string(m, name);
    }
  }
  return out;
}

std::string LaurentPoly::to_json(
    const std::function<std::string(const VarId&)>& name) const {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    nlohmann::json t;
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : it->first.entries()) exps[name(v)] = e;
    t["exps"] = exps;
    t["coeff"] = it->second;
    arr.push_back(t);
  }
  return arr.dump();
}

LaurentPoly LaurentPoly::from_json(const std::string& text) {
  nlohmann::json arr = nlohmann::json::parse(text);
  LaurentPoly out;
  for (const auto& t : arr) {
    Monomial m;
    for (auto it = t.at("exps").begin(); it != t.at("exps").end(); ++it)
      m = m.times(Monomial::of(var_from_name(it.key()), it.value().get<int>()));
    out.add_term(m, t.at("coeff").get<long long>());
  }
  return out;
}

PotentialValue::PotentialValue(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  canonicalize();
}

void PotentialValue::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  // Strip the numerator's monomial content from both sides, then fix the
  // denominator's leading sign.
  Monomial g = num_.content();
  num_ = num_.times_term(g.inverse(), 1);
  den_ = den_.times_term(g.inverse(), 1);
  if (den_.leading().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

PotentialValue PotentialValue::times(const LaurentPoly& p) const {
  if (p.is_zero()) return PotentialValue::zero();
  return PotentialValue(num_ * p, den_);
}

PotentialValue PotentialValue::plus(const PotentialValue& other) const {
  return PotentialValue(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

PotentialValue PotentialValue::minus(const PotentialValue& other) const {
  return PotentialValue(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

std::string PotentialValue::to_string(
    const std::function<std::string(const VarId&)>& name) const {
  if (num_.is_zero()) return "0";
  if (den_.is_one()) return num_.to_string(name);
  std::string n = num_.to_string(name);
  if (num_.term_count() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string(name) + ")";
}

bool rat_eq(const PotentialValue& a, const PotentialValue& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace clockwork
