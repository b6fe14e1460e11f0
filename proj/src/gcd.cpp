// Multivariate gcd over Z by content / primitive-part recursion on the
// highest variable, with a primitive pseudo-remainder sequence in that
// variable. All intermediate values are ordinary polynomials (exponents >= 0).

#include <algorithm>
#include <optional>

#include "lensalex/laurent.hpp"

namespace lensalex {
namespace {

std::vector<LaurentPoly> coefficients_in(const LaurentPoly& p, VarId v) {
  std::vector<LaurentPoly> out(static_cast<std::size_t>(p.max_degree(v)) + 1);
  for (const auto& [m, c] : p.terms()) {
    const Exponent e = m.exponent(v);
    std::vector<Exponent> rest = m.exponents();
    if (v < rest.size()) rest[v] = 0;
    out[static_cast<std::size_t>(e)].add_term(Monomial(std::move(rest)), c);
  }
  return out;
}

std::optional<VarId> top_variable(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t w = std::max(a.width(), b.width());
  for (std::size_t i = w; i-- > 0;) {
    const auto v = static_cast<VarId>(i);
    if (a.involves(v) || b.involves(v)) return v;
  }
  return std::nullopt;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content(const LaurentPoly& p, VarId v) {
  LaurentPoly g;
  for (const auto& c : coefficients_in(p, v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? canonical(c) : poly_gcd(g, c);
    if (g == LaurentPoly(1)) break;
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& p, VarId v) {
  return exact_div(p, content(p, v));
}

// lc(h)^(deg f - deg h + 1) · f  mod  h, as polynomials in v.
LaurentPoly pseudo_remainder(const LaurentPoly& f, const LaurentPoly& h, VarId v) {
  auto rem = coefficients_in(f, v);
  const auto div = coefficients_in(h, v);
  const std::size_t dh = div.size() - 1;
  const LaurentPoly& lc = div.back();
  const std::size_t df = rem.size() - 1;
  std::size_t steps = 0;
  auto trim = [&rem] {
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  };
  trim();
  while (!rem.empty() && rem.size() - 1 >= dh) {
    const std::size_t shift = rem.size() - 1 - dh;
    const LaurentPoly lead = rem.back();
    for (auto& c : rem) c *= lc;
    for (std::size_t j = 0; j <= dh; ++j) rem[j + shift] -= lead * div[j];
    trim();
    ++steps;
  }
  LaurentPoly r;
  for (std::size_t e = 0; e < rem.size(); ++e)
    r += rem[e] * LaurentPoly::variable(v, static_cast<Exponent>(e));
  if (df + 1 >= dh + steps) r *= pow(lc, static_cast<unsigned>(df + 1 - dh - steps));
  return r;
}

// Both arguments nonzero polynomials. Result is canonical.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  const auto top = top_variable(a, b);
  if (!top) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.coefficient(Monomial()).get_mpz_t(),
            b.coefficient(Monomial()).get_mpz_t());
    return LaurentPoly(g);
  }
  const VarId v = *top;
  if (!a.involves(v)) return poly_gcd(a, content(b, v));
  if (!b.involves(v)) return poly_gcd(content(a, v), b);

  const LaurentPoly ca = content(a, v);
  const LaurentPoly cb = content(b, v);
  const LaurentPoly g = poly_gcd(ca, cb);

  LaurentPoly f = exact_div(a, ca);
  LaurentPoly h = exact_div(b, cb);
  if (f.max_degree(v) < h.max_degree(v)) std::swap(f, h);
  for (;;) {
    LaurentPoly r = pseudo_remainder(f, h, v);
    if (r.is_zero()) break;
    if (!r.involves(v)) {
      h = LaurentPoly(1);
      break;
    }
    f = std::move(h);
    h = primitive_part(r, v);
  }
  return canonical(g * primitive_part(h, v));
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return canonical(q);
  if (q.is_zero()) return canonical(p);
  return poly_gcd(canonical(p), canonical(q));
}

LaurentPoly gcd(std::span<const LaurentPoly> ps) {
  LaurentPoly g;
  for (const auto& p : ps) {
    g = gcd(g, p);
    if (g == LaurentPoly(1)) break;
  }
  return g;
}

}  // namespace lensalex
