#ifndef LENSALEX_REPR_HPP_
#define LENSALEX_REPR_HPP_

#include <vector>

#include "lensalex/braid.hpp"
#include "lensalex/linalg.hpp"

namespace lensalex {

// The two colors of a mixed braid: one for the fixed strand, one shared by
// every moving strand.
struct MixedColors {
  VarId fixed;
  VarId moving;
};

// Context {a, b} with a on the fixed strand and b on the moving strands.
VariableContext mixed_context();
inline constexpr MixedColors kDefaultMixedColors{0, 1};

// Color of each strand, indexed by bottom position (0-based vector, position
// j stored at j - 1).
using ColorAssignment = std::vector<VarId>;

// ρ of one letter as an n×n matrix:
//   ρ(t):   identity except row 1 = (ab, 1 - a, 0, ...)    ([ab] when n = 1)
//   ρ(σ_i): identity except row i+1 = (..., b, -b, 1, ...) at columns i..i+2
// with a = colors.fixed, b = colors.moving. Inverse letters are exact
// matrix inverses.
RingMatrix rho_generator(const BraidLetter& letter, int n, const MixedColors& colors);

// Product of rho_generator over the letters, left to right.
RingMatrix rho_word(const MixedBraidWord& w, const MixedColors& colors = kDefaultMixedColors);

// Reduced Burau matrix C̄_i(x) of B_m, size (m-1)×(m-1): identity except row
// i = (..., x, -x, 1, ...) at columns i-1..i+1, truncated at the borders.
RingMatrix reduced_burau_generator(int i, VarId label, int m);

struct ColoredBurau {
  RingMatrix matrix;
  StrandPermutation permutation;
};

// Coloured reduced Burau matrix ∏ C̄_{i_r}(a_r)^{ε_r}. The walk runs
// over the letters bottom to top carrying the color at each position; a
// positive crossing σ_i takes the color at position i, a negative crossing
// the color at position i + 1 (the strand passing under in both cases).
ColoredBurau colored_burau_word(const PlainBraidWord& w, const ColorAssignment& colors);

}  // namespace lensalex

#endif  // LENSALEX_REPR_HPP_
