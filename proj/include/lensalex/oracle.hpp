#ifndef LENSALEX_ORACLE_HPP_
#define LENSALEX_ORACLE_HPP_

#include <compare>
#include <map>
#include <vector>

#include "lensalex/braid.hpp"
#include "lensalex/laurent.hpp"
#include "lensalex/linalg.hpp"
#include "lensalex/repr.hpp"

namespace lensalex {

// Link-group computations by Fox free differential calculus. Nothing here
// goes through the Burau matrices, so the results check the Burau route
// independently.

struct FreeLetter {
  int generator = 1;  // 1-based
  int sign = 1;
  friend auto operator<=>(const FreeLetter&, const FreeLetter&) = default;
};

// Element of the free group on x_1, x_2, ...; always freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<FreeLetter>& letters);

  static FreeWord generator(int g, int sign = 1) { return FreeWord({{g, sign}}); }

  const std::vector<FreeLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& other) const;

  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<FreeLetter> letters_;
};

// Integer combination of free-group elements.
using GroupRingElement = std::map<FreeWord, Integer>;

struct GroupPresentation {
  int generators = 0;
  std::vector<FreeWord> relators;
  std::vector<int> component_of;  // component_of[g - 1]
};

// Images of x_1..x_m under the automorphism of the braid, built from
// σ_i: x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i and its inverse.
std::vector<FreeWord> artin_action(const PlainBraidWord& w);

// ⟨x_1..x_m | β(x_j) x_j^{-1}⟩ for the closed braid, with generator j
// assigned to the closure component through bottom position j.
GroupPresentation closure_presentation(const PlainBraidWord& w);

GroupRingElement fox_derivative(const FreeWord& u, int j);

// Linear extension of x_g ↦ variable_of_generator[g - 1].
LaurentPoly abelianize(const GroupRingElement& elem,
                       const std::vector<VarId>& variable_of_generator);

// η∘α: generators on the fixed component (that of generator 1) go to
// vars.fixed, all others to vars.moving.
LaurentPoly eta_abelianize(const GroupRingElement& elem, const GroupPresentation& pres,
                           const MixedColors& vars);

// Rows are relators, columns generators.
RingMatrix alexander_fox_matrix(const GroupPresentation& pres,
                                const std::vector<VarId>& variable_of_generator);

// gcd of all (m-1)×(m-1) minors, canonical.
LaurentPoly first_elementary_gcd(const RingMatrix& fox);

// Context {s, t}.
VariableContext oracle_context();
inline constexpr MixedColors kDefaultOracleVariables{0, 1};

// Δ_{Î∪β̂}(s, t) from the closure presentation of embed_in_plain(w).
LaurentPoly oracle_two_variable(const MixedBraidWord& w,
                                const MixedColors& vars = kDefaultOracleVariables);

// Alexander polynomial of a closed plain braid with closure component k
// mapped to variable_of_component[k]. Several components may share a
// variable.
LaurentPoly fox_alexander(const PlainBraidWord& w, const std::vector<VarId>& variable_of_component);

}  // namespace lensalex

#endif  // LENSALEX_ORACLE_HPP_
