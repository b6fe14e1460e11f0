#ifndef LENSALEX_ALEXANDER_HPP_
#define LENSALEX_ALEXANDER_HPP_

#include "lensalex/braid.hpp"
#include "lensalex/laurent.hpp"
#include "lensalex/repr.hpp"

namespace lensalex {

// Surgery data for L(p,q) together with the reduced homology class of the
// closed mixed braid. p = 1, q = 0 stands for S³.
struct SurgeryParams {
  long p = 1;
  long q = 0;
  long beta_class = 0;  // t-exponent sum [β̂]
  long p_prime = 1;     // p / gcd(p, |[β̂]|)
  long beta_prime = 0;  // [β̂] / gcd(p, |[β̂]|), sign of [β̂]

  // Throws InvalidSurgery unless gcd(p,q) = 1 and 0 < q < p (or p = 1, q = 0).
  static SurgeryParams make(long p, long q, long beta_class);
};

// Context {a, b, t}: fixed color, moving color, and the lens-space variable.
struct LensVariables {
  VarId fixed;
  VarId moving;
  VarId result;

  MixedColors colors() const { return {fixed, moving}; }
};
VariableContext lens_context();
inline constexpr LensVariables kDefaultLensVariables{0, 1, 2};

struct AlexResult {
  LaurentPoly polynomial;  // canonical associate
  VarId variable = 2;
  int nu = 0;  // components of β̂
  SurgeryParams params;
  LaurentPoly determinant;  // det(I - ρ(w)) after the substitution
  // Set when the one-step quotient degenerates to 0/0 and the result was
  // obtained by dividing out 1 - ab^n before substituting.
  bool factored_route = false;
};

// det(I - ρ(w)) over Z[a^{±1}, b^{±1}].
LaurentPoly rho_determinant(const MixedBraidWord& w,
                            const MixedColors& colors = kDefaultMixedColors);

// Δ_K(t) = (1 - t) / (1 - t^m) · det(I - β_*) for a braid closing to a knot.
// Throws NotAKnot or NotDivisible.
LaurentPoly alex_classical_knot(const PlainBraidWord& w, VarId t = 0);

struct MultivariableResult {
  LaurentPoly polynomial;
  VariableContext context;  // t_1, ..., t_ν
  ComponentPartition components;
};

// Multivariable formula: det(I - B̄) / (1 - ∏ strand colors), one color per
// closure component; for ν = 1 the result is multiplied by (1 - t_1).
MultivariableResult alex_classical_multivariable(const PlainBraidWord& w);

// Two-variable polynomial of Î ∪ β̂ in the solid torus:
// det(I - ρ(w)) / (1 - a b^n), canonical. Zero for split closures.
LaurentPoly alex_solid_torus(const MixedBraidWord& w,
                             const MixedColors& colors = kDefaultMixedColors);

// Lens-space polynomial from the two-variable one, `slots.fixed` being the
// fixed-component variable:
//   [β̂] ≠ 0:  (t - 1) / (t^{[β̂]'} - 1) · Δ(t^{q[β̂]'}, t^{p'})
//   [β̂] = 0:  Δ(t^q, t)
LaurentPoly alex_from_surgery(const LaurentPoly& delta2, const SurgeryParams& params,
                              const MixedColors& slots = kDefaultMixedColors,
                              VarId result = kDefaultLensVariables.result);

// Alexander polynomial of Î^{-p/q} ∪ β̂ in L(p,q), computed in one step from
// det(I - ρ(w)) with the denominators (t^{[β̂]'} - 1)(1 - t^{np' + q[β̂]'}) or
// (1 - t^{n+q}). Throws InvalidSurgery or NotDivisible.
AlexResult alex_lens(const MixedBraidWord& w, long p, long q,
                     const LensVariables& vars = kDefaultLensVariables);

struct LensCrossCheck {
  AlexResult direct;
  LaurentPoly factored;  // alex_from_surgery(alex_solid_torus(w))
  bool agree = false;
};

// Computes both routes and compares them up to units.
LensCrossCheck alex_lens_checked(const MixedBraidWord& w, long p, long q,
                                 const LensVariables& vars = kDefaultLensVariables);

}  // namespace lensalex

#endif  // LENSALEX_ALEXANDER_HPP_
