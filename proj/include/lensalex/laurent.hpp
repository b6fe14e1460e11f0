#ifndef LENSALEX_LAURENT_HPP_
#define LENSALEX_LAURENT_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lensalex {

using Integer = mpz_class;
using VarId = std::uint32_t;
using Exponent = long;

// Names for the variables of one computation. Polynomials carry only VarIds;
// the context is needed to parse and print them.
class VariableContext {
 public:
  VariableContext() = default;
  VariableContext(std::initializer_list<std::string> names);
  explicit VariableContext(std::vector<std::string> names);

  // Adds a new variable; throws std::invalid_argument on a duplicate name.
  VarId add(std::string name);
  VarId id(std::string_view name) const;
  std::optional<VarId> find(std::string_view name) const;
  const std::string& name(VarId v) const;
  std::size_t size() const noexcept { return names_.size(); }

  friend bool operator==(const VariableContext&, const VariableContext&) = default;

 private:
  std::vector<std::string> names_;
};

// Exponent vector indexed by VarId. Trailing zeros are trimmed so equal
// monomials have equal representations.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial variable(VarId v, Exponent e = 1);

  Exponent exponent(VarId v) const noexcept {
    return v < exps_.size() ? exps_[v] : 0;
  }
  // One past the largest VarId with a nonzero exponent.
  std::size_t width() const noexcept { return exps_.size(); }
  bool is_one() const noexcept { return exps_.empty(); }
  Exponent total_degree() const noexcept;
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  Monomial inverse() const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic on (VarId, exponent): compares the exponent of variable 0
  // first, then variable 1, ... with absent exponents read as 0.
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y);

 private:
  void trim();
  std::vector<Exponent> exps_;
};

// Sparse Laurent polynomial in Z[x_0^{±1}, x_1^{±1}, ...]. No stored
// coefficient is zero, so structural and mathematical equality coincide.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& c);
  LaurentPoly(const Integer& c, const Monomial& m);

  static LaurentPoly variable(VarId v, Exponent e = 1);
  static LaurentPoly monomial(const Monomial& m) { return LaurentPoly(Integer(1), m); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Integer coefficient(const Monomial& m) const;
  // Lexicographically greatest / least term. Precondition: nonzero.
  const TermMap::value_type& leading_term() const;
  const TermMap::value_type& trailing_term() const;

  Exponent max_degree(VarId v) const;
  Exponent min_degree(VarId v) const;
  // One past the largest VarId occurring in any term.
  std::size_t width() const noexcept;
  bool involves(VarId v) const;

  // If the polynomial is ±monomial, returns (monomial, sign).
  std::optional<std::pair<Monomial, int>> as_unit() const;

  void add_term(const Monomial& m, const Integer& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(LaurentPoly x, const Integer& c) { return x *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly x) { return x *= c; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

// Ring homomorphism v ↦ target^k fixing every other variable. k = 0 sends v
// to 1.
LaurentPoly substitute(const LaurentPoly& p, VarId v, VarId target, Exponent k);

// Simultaneous substitution of monomials for variables. Variables without an
// entry are fixed.
LaurentPoly substitute(const LaurentPoly& p,
                       const std::vector<std::pair<VarId, Monomial>>& images);

// Returns q with p = d·q. Throws NotDivisible if no Laurent polynomial q
// exists, std::domain_error if d is zero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

struct UnitNormalization {
  LaurentPoly canonical;
  Monomial unit_monomial;  // canonical = sign · unit_monomial · p
  int sign = 1;
};

// Canonical associate: every variable's minimum exponent is 0 and the
// lexicographically greatest term has a positive coefficient.
UnitNormalization normalize_units(const LaurentPoly& p);
LaurentPoly canonical(const LaurentPoly& p);
bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q);

// Greatest common divisor in Z[vars^{±1}], integer content included,
// returned in canonical form. gcd of zeros is zero.
LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly gcd(std::span<const LaurentPoly> ps);

}  // namespace lensalex

#endif  // LENSALEX_LAURENT_HPP_
