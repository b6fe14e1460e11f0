#include "lensalex/repr.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "lensalex/errors.hpp"

namespace lensalex {

VariableContext mixed_context() { return VariableContext{"a", "b"}; }

RingMatrix reduced_burau_generator(int i, VarId label, int m) {
  if (m < 2 || i < 1 || i > m - 1)
    throw IndexOutOfRange("C_" + std::to_string(i) + " undefined on " + std::to_string(m) +
                          " strands");
  const auto size = static_cast<std::size_t>(m - 1);
  RingMatrix c = RingMatrix::identity(size);
  const auto row = static_cast<std::size_t>(i - 1);
  const LaurentPoly x = LaurentPoly::variable(label);
  if (row >= 1) c(row, row - 1) = x;
  c(row, row) = -x;
  if (row + 1 < size) c(row, row + 1) = LaurentPoly(1);
  return c;
}

namespace {

RingMatrix rho_positive(const BraidLetter& letter, int n, const MixedColors& colors) {
  if (!letter.is_loop()) return reduced_burau_generator(letter.index + 1, colors.moving, n + 1);
  RingMatrix m = RingMatrix::identity(static_cast<std::size_t>(n));
  const LaurentPoly a = LaurentPoly::variable(colors.fixed);
  const LaurentPoly b = LaurentPoly::variable(colors.moving);
  m(0, 0) = a * b;
  if (n >= 2) m(0, 1) = LaurentPoly(1) - a;
  return m;
}

}  // namespace

RingMatrix rho_generator(const BraidLetter& letter, int n, const MixedColors& colors) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!letter.is_loop() && (letter.index < 1 || letter.index >= n))
    throw IndexOutOfRange("s" + std::to_string(letter.index) + " out of range for n = " +
                          std::to_string(n));
  RingMatrix m = rho_positive(letter, n, colors);
  return letter.exponent > 0 ? m : invert_unimodular(m);
}

RingMatrix rho_word(const MixedBraidWord& w, const MixedColors& colors) {
  const int n = w.strands();
  std::map<BraidLetter, RingMatrix> cache;
  RingMatrix product = RingMatrix::identity(static_cast<std::size_t>(n));
  for (const auto& letter : w.letters()) {
    auto it = cache.find(letter);
    if (it == cache.end()) it = cache.emplace(letter, rho_generator(letter, n, colors)).first;
    product = product * it->second;
  }
  return product;
}

ColoredBurau colored_burau_word(const PlainBraidWord& w, const ColorAssignment& colors) {
  const int m = w.strands();
  if (colors.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("need one color per strand");
  ColorAssignment current = colors;
  std::map<std::pair<PlainLetter, VarId>, RingMatrix> cache;
  RingMatrix product = RingMatrix::identity(static_cast<std::size_t>(m - 1));
  for (const auto& letter : w.letters()) {
    const auto left = static_cast<std::size_t>(letter.index - 1);
    const VarId under = letter.exponent > 0 ? current[left] : current[left + 1];
    const auto key = std::make_pair(letter, under);
    auto it = cache.find(key);
    if (it == cache.end()) {
      RingMatrix c = reduced_burau_generator(letter.index, under, m);
      if (letter.exponent < 0) c = invert_unimodular(c);
      it = cache.emplace(key, std::move(c)).first;
    }
    product = product * it->second;
    std::swap(current[left], current[left + 1]);
  }
  return {std::move(product), permutation(w)};
}

}  // namespace lensalex
