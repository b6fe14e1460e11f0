#ifndef LENSALEX_TESTS_SUPPORT_HPP_
#define LENSALEX_TESTS_SUPPORT_HPP_

#include <gmpxx.h>

#include <random>
#include <vector>

#include "lensalex/braid.hpp"
#include "lensalex/format.hpp"
#include "lensalex/laurent.hpp"
#include "lensalex/linalg.hpp"

namespace lensalex::testing {

// Evaluates at a rational point by summing c · ∏ x_v^{e_v} term by term,
// without touching any of the library's ring operations.
inline mpq_class evaluate(const LaurentPoly& p, const std::vector<mpq_class>& point) {
  mpq_class sum = 0;
  for (const auto& [m, c] : p.terms()) {
    mpq_class term = c;
    for (std::size_t v = 0; v < m.width(); ++v) {
      const Exponent e = m.exponent(static_cast<VarId>(v));
      for (Exponent k = 0; k < e; ++k) term *= point.at(v);
      for (Exponent k = 0; k < -e; ++k) term /= point.at(v);
    }
    sum += term;
  }
  return sum;
}

inline std::vector<std::vector<mpq_class>> sample_points(std::size_t vars) {
  const std::vector<mpq_class> values = {mpq_class(2), mpq_class(-3), mpq_class(5, 7),
                                         mpq_class(-4, 3), mpq_class(11, 2)};
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    std::vector<mpq_class> pt;
    for (std::size_t v = 0; v < vars; ++v) pt.push_back(values[(k + 2 * v) % values.size()]);
    out.push_back(pt);
  }
  return out;
}

inline LaurentPoly random_poly(std::mt19937& rng, std::size_t vars, int max_terms = 4,
                               int max_exp = 2, bool laurent = true) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> ex(laurent ? -max_exp : 0, max_exp);
  LaurentPoly p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<Exponent> e(vars);
    for (auto& x : e) x = ex(rng);
    p.add_term(Monomial(e), Integer(coef(rng)));
  }
  return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937& rng, std::size_t vars, int max_terms = 4,
                                       int max_exp = 2, bool laurent = true) {
  for (;;) {
    LaurentPoly p = random_poly(rng, vars, max_terms, max_exp, laurent);
    if (!p.is_zero()) return p;
  }
}

inline RingMatrix random_matrix(std::mt19937& rng, std::size_t n, std::size_t vars) {
  RingMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, vars, 3, 1);
  return m;
}

inline MixedBraidWord random_mixed_word(std::mt19937& rng, int n, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(0, n - 1);  // 0 = t, k = σ_k
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<BraidLetter> letters;
  const int l = len(rng);
  for (int k = 0; k < l; ++k) {
    const int g = gen(rng);
    const int e = sign(rng) ? 1 : -1;
    letters.push_back(g == 0 ? BraidLetter::loop(e) : BraidLetter::sigma(g, e));
  }
  return MixedBraidWord(n, std::move(letters));
}

inline PlainBraidWord random_plain_word(std::mt19937& rng, int m, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, m - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<PlainLetter> letters;
  const int l = m > 1 ? len(rng) : 0;
  for (int k = 0; k < l; ++k) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
  return PlainBraidWord(m, std::move(letters));
}

// Every word of exactly `length` letters over {t^±1, σ_1^±1, ..., σ_{n-1}^±1}.
inline std::vector<MixedBraidWord> all_words(int n, int length) {
  std::vector<BraidLetter> alphabet = {BraidLetter::loop(1), BraidLetter::loop(-1)};
  for (int i = 1; i < n; ++i) {
    alphabet.push_back(BraidLetter::sigma(i, 1));
    alphabet.push_back(BraidLetter::sigma(i, -1));
  }
  std::vector<MixedBraidWord> out;
  std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
  for (;;) {
    std::vector<BraidLetter> letters;
    for (auto d : digits) letters.push_back(alphabet[d]);
    out.emplace_back(n, std::move(letters));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == alphabet.size()) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

}  // namespace lensalex::testing

#endif  // LENSALEX_TESTS_SUPPORT_HPP_
