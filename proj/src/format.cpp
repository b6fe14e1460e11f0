#include "lensalex/format.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "lensalex/errors.hpp"

namespace lensalex {

std::vector<std::pair<Monomial, Integer>> display_order(const LaurentPoly& p) {
  std::vector<std::pair<Monomial, Integer>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const auto dx = x.first.total_degree(), dy = y.first.total_degree();
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  return terms;
}

namespace {

std::string render(const LaurentPoly& p, const VariableContext& ctx, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : display_order(p)) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    const Integer magnitude = abs(c);
    std::vector<std::string> factors;
    if (magnitude != 1 || m.is_one()) factors.push_back(magnitude.get_str());
    for (std::size_t i = 0; i < m.width(); ++i) {
      const Exponent e = m.exponent(static_cast<VarId>(i));
      if (e == 0) continue;
      std::string f = ctx.name(static_cast<VarId>(i));
      if (e != 1) f += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    const char* sep = latex ? " " : "*";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out += sep;
      out += factors[k];
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const VariableContext& ctx) : text_(text), ctx_(ctx) {}

  LaurentPoly parse() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty polynomial");
    LaurentPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected character");
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  LaurentPoly expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    LaurentPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    for (;;) {
      if (accept('*')) acc *= factor();
      else if (starts_factor()) acc *= factor();
      else return acc;
    }
  }

  LaurentPoly factor() {
    LaurentPoly base = atom();
    if (!accept('^')) return base;
    const bool braced = accept('{');
    const std::size_t at = pos_;
    const long e = integer_literal(true).get_si();
    if (braced && !accept('}')) throw SyntaxError(pos_, "expected '}'");
    if (e >= 0) return pow(base, static_cast<unsigned>(e));
    auto unit = base.as_unit();
    if (!unit) throw SyntaxError(at, "negative power of a non-monomial");
    LaurentPoly inv(Integer(unit->second), unit->first.inverse());
    return pow(inv, static_cast<unsigned>(-e));
  }

  LaurentPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly(integer_literal(false));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto v = ctx_.find(name);
      if (!v) throw SyntaxError(start, "unknown variable '" + name + "'");
      return LaurentPoly::variable(*v);
    }
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  Integer integer_literal(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw SyntaxError(start, "expected integer");
    std::string s(text_.substr(start, pos_ - start));
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s);
  }

  std::string_view text_;
  const VariableContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const LaurentPoly& p, const VariableContext& ctx) {
  return render(p, ctx, false);
}

std::string to_latex(const LaurentPoly& p, const VariableContext& ctx) {
  return render(p, ctx, true);
}

nlohmann::json to_json(const LaurentPoly& p, const VariableContext& ctx) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : display_order(p)) {
    nlohmann::json coef;
    if (c.fits_slong_p()) coef = c.get_si();
    else coef = c.get_str();
    auto exps = nlohmann::json::object();
    for (std::size_t i = 0; i < m.width(); ++i) {
      const Exponent e = m.exponent(static_cast<VarId>(i));
      if (e != 0) exps[ctx.name(static_cast<VarId>(i))] = e;
    }
    out.push_back(nlohmann::json::array({coef, exps}));
  }
  return out;
}

LaurentPoly poly_from_json(const nlohmann::json& j, const VariableContext& ctx) {
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("bad JSON term");
    Integer c = term[0].is_string() ? Integer(term[0].get<std::string>())
                                    : Integer(term[0].get<long>());
    std::vector<Exponent> exps(ctx.size(), 0);
    for (const auto& [name, e] : term[1].items()) exps[ctx.id(name)] = e.get<Exponent>();
    p.add_term(Monomial(std::move(exps)), c);
  }
  return p;
}

LaurentPoly parse_laurent(std::string_view text, const VariableContext& ctx) {
  return Parser(text, ctx).parse();
}

}  // namespace lensalex
