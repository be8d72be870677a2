#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clockwork {

// Variable universe of the engine: per-component link variables X_K, color
// variables for colored links, the two-variable specialization B/W, and the
// four formal corner variables attached to crossing k.
enum class VarKind : std::uint8_t {
  Link,     // X_K, K = component number
  Color,    // X_mu, mu = interned color id
  B,
  W,
  FormalI,  // I_k
  FormalO,  // O_k
  FormalU,  // U_k
  FormalD,  // D_k
};

struct VarId {
  VarKind kind{VarKind::Link};
  int index{0};

  friend auto operator<=>(const VarId&, const VarId&) = default;

  static VarId link(int component) { return {VarKind::Link, component}; }
  static VarId color(int color_id) { return {VarKind::Color, color_id}; }
  static VarId b() { return {VarKind::B, 0}; }
  static VarId w() { return {VarKind::W, 0}; }
  static VarId formal(VarKind k, int crossing) { return {k, crossing}; }
};

std::string default_var_name(const VarId& v);

// Sparse exponent vector. Entries sorted by VarId; zero exponents are never
// stored, so equal monomials compare equal structurally.
class Monomial {
 public:
  Monomial() = default;
  static Monomial unit() { return {}; }
  static Monomial of(const VarId& v, int exp = 1);

  bool is_unit() const { return exps_.empty(); }
  int exponent(const VarId& v) const;
  const std::vector<std::pair<VarId, int>>& entries() const { return exps_; }

  Monomial times(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int e) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, int>> exps_;
};

// Multivariable Laurent polynomial with exact integer coefficients.
// Canonical: no zero coefficients stored; equality is term-map equality.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, long long>;

  LaurentPoly() = default;
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly constant(long long c);
  static LaurentPoly term(const Monomial& m, long long c);
  static LaurentPoly var(const VarId& v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // A unit of the Laurent ring: a single term with coefficient +-1.
  bool is_ring_unit() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  long long coeff(const Monomial& m) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly times_term(const Monomial& m, long long c) const;

  // Leading term under the canonical (descending) term order.
  std::pair<Monomial, long long> leading() const;

  // Substitutes variables by ring units c*m (|c| = 1). Every variable that
  // occurs in this polynomial and is present in the map must have a unit
  // image, otherwise negative exponents would leave the ring.
  struct UnitImage {
    int sign{1};  // +-1
    Monomial mono;
  };
  LaurentPoly substitute(const std::map<VarId, UnitImage>& images) const;

  // Per-variable minimum exponent over all terms (the monomial content).
  Monomial content() const;

  std::string to_string(const std::function<std::string(const VarId&)>& name =
                            default_var_name) const;
  std::string to_json(const std::function<std::string(const VarId&)>& name =
                          default_var_name) const;
  static LaurentPoly from_json(const std::string& text);

 private:
  TermMap terms_;
  void add_term(const Monomial& m, long long c);
};

inline LaurentPoly g_plus(const LaurentPoly& x_mono);   // x + x^-1
inline LaurentPoly g_minus(const LaurentPoly& x_mono);  // x - x^-1

// Exact rational value num/den over the Laurent ring, den != 0.
// Equality is by cross-multiplication; no polynomial gcd is attempted, only
// the common monomial content is stripped and the denominator sign fixed.
class PotentialValue {
 public:
  PotentialValue() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
  PotentialValue(LaurentPoly num, LaurentPoly den);

  static PotentialValue zero() { return {}; }
  static PotentialValue of_poly(LaurentPoly p) {
    return PotentialValue(std::move(p), LaurentPoly::one());
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  PotentialValue times(const LaurentPoly& p) const;
  PotentialValue plus(const PotentialValue& other) const;
  PotentialValue minus(const PotentialValue& other) const;

  std::string to_string(const std::function<std::string(const VarId&)>& name =
                            default_var_name) const;

 private:
  LaurentPoly num_, den_;
  void canonicalize();
};

bool rat_eq(const PotentialValue& a, const PotentialValue& b);

inline LaurentPoly g_plus(const LaurentPoly& x) {
  if (!x.is_ring_unit()) throw std::invalid_argument("g_plus needs a unit argument");
  auto [m, c] = x.leading();
  return LaurentPoly::term(m, c) + LaurentPoly::term(m.inverse(), c);
}

inline LaurentPoly g_minus(const LaurentPoly& x) {
  if (!x.is_ring_unit()) throw std::invalid_argument("g_minus needs a unit argument");
  auto [m, c] = x.leading();
  return LaurentPoly::term(m, c) - LaurentPoly::term(m.inverse(), c);
}

}  // namespace clockwork
