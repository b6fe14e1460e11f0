#include "lensalex/alexander.hpp"

#include <numeric>
#include <string>

#include "lensalex/errors.hpp"

namespace lensalex {

SurgeryParams SurgeryParams::make(long p, long q, long beta_class) {
  if (p < 1) throw InvalidSurgery("p must be positive");
  if (p == 1) {
    if (q != 0) throw InvalidSurgery("p = 1 requires q = 0");
  } else {
    if (q <= 0 || q >= p)
      throw InvalidSurgery("q must satisfy 0 < q < p (got p = " + std::to_string(p) +
                           ", q = " + std::to_string(q) + ")");
    if (std::gcd(p, q) != 1)
      throw InvalidSurgery("gcd(p, q) must be 1 (got p = " + std::to_string(p) +
                           ", q = " + std::to_string(q) + ")");
  }
  SurgeryParams s;
  s.p = p;
  s.q = q;
  s.beta_class = beta_class;
  const long g = std::gcd(p, std::labs(beta_class));  // gcd(p, 0) = p
  s.p_prime = p / g;
  s.beta_prime = beta_class / g;
  return s;
}

VariableContext lens_context() { return VariableContext{"a", "b", "t"}; }

namespace {

LaurentPoly power_of(VarId v, Exponent e) { return LaurentPoly::variable(v, e); }

LaurentPoly one_minus(const LaurentPoly& x) { return LaurentPoly(1) - x; }

}  // namespace

LaurentPoly rho_determinant(const MixedBraidWord& w, const MixedColors& colors) {
  const RingMatrix rho = rho_word(w, colors);
  return det(RingMatrix::identity(rho.size()) - rho);
}

LaurentPoly alex_classical_knot(const PlainBraidWord& w, VarId t) {
  const ComponentPartition parts = component_partition(w);
  if (parts.count() != 1)
    throw NotAKnot("closure has " + std::to_string(parts.count()) + " components");
  const int m = w.strands();
  const ColorAssignment colors(static_cast<std::size_t>(m), t);
  const RingMatrix burau = colored_burau_word(w, colors).matrix;
  const LaurentPoly d = det(RingMatrix::identity(burau.size()) - burau);
  const LaurentPoly tt = power_of(t, 1);
  return canonical(exact_div(one_minus(tt) * d, one_minus(power_of(t, m))));
}

MultivariableResult alex_classical_multivariable(const PlainBraidWord& w) {
  MultivariableResult out;
  out.components = component_partition(w);
  const int nu = out.components.count();
  for (int k = 1; k <= nu; ++k) out.context.add("t_" + std::to_string(k));

  ColorAssignment colors;
  LaurentPoly strand_product(1);
  for (int c : out.components.component_of) {
    colors.push_back(static_cast<VarId>(c));
    strand_product *= power_of(static_cast<VarId>(c), 1);
  }
  const RingMatrix burau = colored_burau_word(w, colors).matrix;
  LaurentPoly d = det(RingMatrix::identity(burau.size()) - burau);
  if (nu == 1) d *= one_minus(power_of(0, 1));
  out.polynomial = canonical(exact_div(d, one_minus(strand_product)));
  return out;
}

LaurentPoly alex_solid_torus(const MixedBraidWord& w, const MixedColors& colors) {
  const LaurentPoly d = rho_determinant(w, colors);
  const LaurentPoly denom =
      one_minus(power_of(colors.fixed, 1) * power_of(colors.moving, w.strands()));
  return canonical(exact_div(d, denom));
}

LaurentPoly alex_from_surgery(const LaurentPoly& delta2, const SurgeryParams& params,
                              const MixedColors& slots, VarId result) {
  if (params.beta_class == 0) {
    return canonical(substitute(delta2, {{slots.fixed, Monomial::variable(result, params.q)},
                                         {slots.moving, Monomial::variable(result, 1)}}));
  }
  const LaurentPoly sub =
      substitute(delta2, {{slots.fixed, Monomial::variable(result, params.q * params.beta_prime)},
                          {slots.moving, Monomial::variable(result, params.p_prime)}});
  const LaurentPoly numer = (power_of(result, 1) - LaurentPoly(1)) * sub;
  const LaurentPoly denom = power_of(result, params.beta_prime) - LaurentPoly(1);
  return canonical(exact_div(numer, denom));
}

AlexResult alex_lens(const MixedBraidWord& w, long p, long q, const LensVariables& vars) {
  AlexResult out;
  out.variable = vars.result;
  out.params = SurgeryParams::make(p, q, t_exponent_sum(w));
  out.nu = component_partition(w).count();
  const SurgeryParams& sp = out.params;
  const long n = w.strands();
  const VarId t = vars.result;

  const LaurentPoly det2 = rho_determinant(w, vars.colors());
  if (sp.beta_class == 0) {
    out.determinant = substitute(det2, {{vars.fixed, Monomial::variable(t, sp.q)},
                                        {vars.moving, Monomial::variable(t, 1)}});
    out.polynomial = canonical(exact_div(out.determinant, one_minus(power_of(t, n + sp.q))));
    return out;
  }

  out.determinant =
      substitute(det2, {{vars.fixed, Monomial::variable(t, sp.q * sp.beta_prime)},
                        {vars.moving, Monomial::variable(t, sp.p_prime)}});
  const long axis = n * sp.p_prime + sp.q * sp.beta_prime;
  if (axis == 0) {
    // 1 - ab^n maps to 0 under the substitution; divide it out first.
    out.factored_route = true;
    out.polynomial = alex_from_surgery(alex_solid_torus(w, vars.colors()), sp, vars.colors(), t);
    return out;
  }
  const LaurentPoly numer = (power_of(t, 1) - LaurentPoly(1)) * out.determinant;
  const LaurentPoly denom =
      (power_of(t, sp.beta_prime) - LaurentPoly(1)) * one_minus(power_of(t, axis));
  out.polynomial = canonical(exact_div(numer, denom));
  return out;
}

LensCrossCheck alex_lens_checked(const MixedBraidWord& w, long p, long q,
                                 const LensVariables& vars) {
  LensCrossCheck out;
  out.direct = alex_lens(w, p, q, vars);
  out.factored =
      alex_from_surgery(alex_solid_torus(w, vars.colors()), out.direct.params, vars.colors(),
                        vars.result);
  out.agree = equal_up_to_units(out.direct.polynomial, out.factored);
  return out;
}

}  // namespace lensalex
