#ifndef LENSALEX_FORMAT_HPP_
#define LENSALEX_FORMAT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "lensalex/laurent.hpp"

namespace lensalex {

// Terms in decreasing total degree (ties: lexicographically greater first).
std::vector<std::pair<Monomial, Integer>> display_order(const LaurentPoly& p);

// "t^6 - t^3 + 1", "-2*a*b^2 + a - 1", "t^-1".
std::string to_string(const LaurentPoly& p, const VariableContext& ctx);
// "t^{6} - t^{3} + 1", "-2 a b^{2}".
std::string to_latex(const LaurentPoly& p, const VariableContext& ctx);

// List of [coefficient, {var: exponent}] pairs in display order. Coefficients
// outside the int64 range are written as decimal strings.
nlohmann::json to_json(const LaurentPoly& p, const VariableContext& ctx);
LaurentPoly poly_from_json(const nlohmann::json& j, const VariableContext& ctx);

// Parses sums of products of integers, variables and parenthesized
// subexpressions, with integer powers (`x^-2`, `x^{3}`). `*` is optional
// between factors. Throws SyntaxError.
LaurentPoly parse_laurent(std::string_view text, const VariableContext& ctx);

}  // namespace lensalex

#endif  // LENSALEX_FORMAT_HPP_
