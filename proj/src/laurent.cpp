#include "lensalex/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "lensalex/errors.hpp"

namespace lensalex {

// ---------------------------------------------------------------------------
// VariableContext

VariableContext::VariableContext(std::initializer_list<std::string> names)
    : VariableContext(std::vector<std::string>(names)) {}

VariableContext::VariableContext(std::vector<std::string> names) {
  for (auto& n : names) add(std::move(n));
}

VarId VariableContext::add(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  if (find(name)) throw std::invalid_argument("duplicate variable name: " + name);
  names_.push_back(std::move(name));
  return static_cast<VarId>(names_.size() - 1);
}

std::optional<VarId> VariableContext::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VarId>(it - names_.begin());
}

VarId VariableContext::id(std::string_view name) const {
  auto v = find(name);
  if (!v) throw std::out_of_range("unknown variable: " + std::string(name));
  return *v;
}

const std::string& VariableContext::name(VarId v) const {
  if (v >= names_.size()) throw std::out_of_range("variable id out of range");
  return names_[v];
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  trim();
}

Monomial Monomial::variable(VarId v, Exponent e) {
  std::vector<Exponent> exps(v + 1, 0);
  exps[v] = e;
  return Monomial(std::move(exps));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Exponent Monomial::total_degree() const noexcept {
  Exponent d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& e : r.exps_) e = -e;
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < r.exps_.size(); ++i)
    r.exps_[i] = exponent(static_cast<VarId>(i)) + other.exponent(static_cast<VarId>(i));
  r.trim();
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  return *this * other.inverse();
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
  const std::size_t w = std::max(x.width(), y.width());
  for (std::size_t i = 0; i < w; ++i) {
    const auto v = static_cast<VarId>(i);
    if (auto c = x.exponent(v) <=> y.exponent(v); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(const Integer& c) : LaurentPoly(c, Monomial()) {}

LaurentPoly::LaurentPoly(const Integer& c, const Monomial& m) {
  if (c != 0) terms_.emplace(m, c);
}

LaurentPoly LaurentPoly::variable(VarId v, Exponent e) {
  return LaurentPoly(Integer(1), Monomial::variable(v, e));
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

const LaurentPoly::TermMap::value_type& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

const LaurentPoly::TermMap::value_type& LaurentPoly::trailing_term() const {
  if (terms_.empty()) throw std::domain_error("trailing term of zero polynomial");
  return *terms_.begin();
}

Exponent LaurentPoly::max_degree(VarId v) const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  Exponent d = terms_.begin()->first.exponent(v);
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

Exponent LaurentPoly::min_degree(VarId v) const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  Exponent d = terms_.begin()->first.exponent(v);
  for (const auto& [m, c] : terms_) d = std::min(d, m.exponent(v));
  return d;
}

std::size_t LaurentPoly::width() const noexcept {
  std::size_t w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, m.width());
  return w;
}

bool LaurentPoly::involves(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const auto& t) { return t.first.exponent(v) != 0; });
}

std::optional<std::pair<Monomial, int>> LaurentPoly::as_unit() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  if (c == 1) return std::make_pair(m, 1);
  if (c == -1) return std::make_pair(m, -1);
  return std::nullopt;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly r;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) r.add_term(mx * my, cx * cy);
  return r;
}

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result(1);
  LaurentPoly b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Substitution

LaurentPoly substitute(const LaurentPoly& p, VarId v, VarId target, Exponent k) {
  return substitute(p, {{v, Monomial::variable(target, k)}});
}

LaurentPoly substitute(const LaurentPoly& p,
                       const std::vector<std::pair<VarId, Monomial>>& images) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Exponent> fixed = m.exponents();
    Monomial image;
    for (const auto& [v, img] : images) {
      const Exponent e = m.exponent(v);
      if (e == 0) continue;
      fixed[v] = 0;
      std::vector<Exponent> scaled = img.exponents();
      for (auto& x : scaled) x *= e;
      image = image * Monomial(std::move(scaled));
    }
    r.add_term(Monomial(std::move(fixed)) * image, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exact division

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return {};

  if (auto unit = d.as_unit()) {
    LaurentPoly q = p * LaurentPoly::monomial(unit->first.inverse());
    return unit->second > 0 ? q : -q;
  }

  // Degrees in each variable are additive, so every quotient term lies in the
  // box [min_v(p) - min_v(d), max_v(p) - max_v(d)].
  const std::size_t w = std::max(p.width(), d.width());
  std::vector<Exponent> lo(w), hi(w);
  for (std::size_t i = 0; i < w; ++i) {
    const auto v = static_cast<VarId>(i);
    lo[i] = p.min_degree(v) - d.min_degree(v);
    hi[i] = p.max_degree(v) - d.max_degree(v);
    if (lo[i] > hi[i]) throw NotDivisible("degree bounds exclude any quotient");
  }
  auto in_box = [&](const Monomial& m) {
    if (m.width() > w) return false;
    for (std::size_t i = 0; i < w; ++i) {
      const Exponent e = m.exponent(static_cast<VarId>(i));
      if (e < lo[i] || e > hi[i]) return false;
    }
    return true;
  };

  const auto& [dm, dc] = d.leading_term();
  LaurentPoly q;
  LaurentPoly r = p;
  while (!r.is_zero()) {
    const auto [rm, rc] = r.leading_term();
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
      throw NotDivisible("leading coefficient not divisible");
    Monomial qm = rm / dm;
    if (!in_box(qm)) throw NotDivisible("remainder outside quotient support");
    Integer qc = rc / dc;
    q.add_term(qm, qc);
    r -= LaurentPoly(qc, qm) * d;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Units

UnitNormalization normalize_units(const LaurentPoly& p) {
  UnitNormalization out;
  if (p.is_zero()) return out;
  const std::size_t w = p.width();
  std::vector<Exponent> shift(w);
  for (std::size_t i = 0; i < w; ++i) shift[i] = -p.min_degree(static_cast<VarId>(i));
  out.unit_monomial = Monomial(std::move(shift));
  out.canonical = p * LaurentPoly::monomial(out.unit_monomial);
  if (out.canonical.leading_term().second < 0) {
    out.sign = -1;
    out.canonical = -out.canonical;
  }
  return out;
}

LaurentPoly canonical(const LaurentPoly& p) { return normalize_units(p).canonical; }

bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q) {
  return canonical(p) == canonical(q);
}

}  // namespace lensalex
