#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "lensalex/errors.hpp"
#include "lensalex/format.hpp"
#include "lensalex/linalg.hpp"
#include "support.hpp"

using namespace lensalex;

namespace {

const VariableContext& ctx() {
  static const VariableContext c{"a", "b", "t"};
  return c;
}

LaurentPoly P(std::string_view text) { return parse_laurent(text, ctx()); }

RingMatrix M(std::size_t n, std::initializer_list<const char*> entries) {
  std::vector<LaurentPoly> e;
  for (const char* s : entries) e.push_back(P(s));
  return RingMatrix(n, std::move(e));
}

// Leibniz formula, summing over all permutations.
LaurentPoly det_leibniz(const RingMatrix& a) {
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly sum;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPoly term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= a(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

constexpr VarId A = 0, B = 1, T = 2;

}  // namespace

TEST_CASE("identity") {
  CHECK(RingMatrix::identity(1) == M(1, {"1"}));
  CHECK(RingMatrix::identity(2) == M(2, {"1", "0", "0", "1"}));
  const RingMatrix x = M(2, {"a", "b - 1", "t^-1", "3"});
  CHECK(RingMatrix::identity(2) * x == x);
  CHECK(x * RingMatrix::identity(2) == x);
}

TEST_CASE("product of the generators of t s1^3") {
  // Exchanged naming: a on the σ row.
  const RingMatrix rho_t = M(2, {"a*b", "1 - b", "0", "1"});
  const RingMatrix rho_s = M(2, {"1", "0", "a", "-a"});
  const RingMatrix expected =
      M(2, {"-b*a^3 + a^3 + b*a^2 - a^2 + a", "a^3*b - a^3", "a^3 - a^2 + a", "-a^3"});
  CHECK(rho_t * rho_s * rho_s * rho_s == expected);
  CHECK(rho_s * invert_unimodular(rho_s) == RingMatrix::identity(2));
  CHECK_THROWS_AS(rho_s * RingMatrix::identity(3), SizeMismatch);
}

TEST_CASE("determinant") {
  // Same product with a on the fixed strand, then a ↦ t, b ↦ t^3.
  const RingMatrix rho_t = M(2, {"a*b", "1 - a", "0", "1"});
  const RingMatrix rho_s = M(2, {"1", "0", "b", "-b"});
  const RingMatrix rho = rho_t * rho_s * rho_s * rho_s;
  const RingMatrix sub =
      substitute(RingMatrix::identity(2) - rho, {{A, Monomial::variable(T, 1)},
                                                 {B, Monomial::variable(T, 3)}});
  CHECK(det(sub) == P("1 - t^3 + t^6 - t^7 + t^10 - t^13"));

  for (std::size_t n = 1; n <= 6; ++n) CHECK(det(RingMatrix::identity(n)) == P("1"));
  CHECK(det(M(2, {"a*b", "1 - b", "0", "1"})) == P("a*b"));
  CHECK(det(RingMatrix(0)) == P("1"));
}

TEST_CASE("unimodular inverse") {
  const RingMatrix rho_t = M(2, {"a*b", "1 - b", "0", "1"});
  const RingMatrix inv = invert_unimodular(rho_t);
  CHECK(inv == M(2, {"a^-1*b^-1", "a^-1*b^-1*(b - 1)", "0", "1"}));
  CHECK(rho_t * inv == RingMatrix::identity(2));
  CHECK(invert_unimodular(RingMatrix::identity(3)) == RingMatrix::identity(3));
  CHECK_THROWS_AS(invert_unimodular(M(2, {"1", "1", "1", "1"})), NotUnimodular);
  CHECK_THROWS_AS(invert_unimodular(M(1, {"2*t"})), NotUnimodular);
  CHECK(invert_unimodular(M(1, {"-t^2"})) == M(1, {"-t^-2"}));
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const RingMatrix x = testing::random_matrix(rng, n, 2);
    const RingMatrix y = testing::random_matrix(rng, n, 2);
    CHECK(det(x * y) == det(x) * det(y));
  }
}

TEST_CASE("Bareiss, cofactor and Leibniz agree") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    RingMatrix x = testing::random_matrix(rng, n, 2);
    if (trial % 5 == 0) x(0, 0) = LaurentPoly();  // force a pivot search
    if (trial % 7 == 0)
      for (std::size_t i = 0; i < n; ++i) x(i, 1) = LaurentPoly();  // zero column
    const LaurentPoly reference = det_leibniz(x);
    CHECK(det_cofactor(x) == reference);
    CHECK(det_bareiss(x) == reference);
  }
}

TEST_CASE("inverse of a product of unimodular matrices") {
  std::mt19937 rng(37);
  const RingMatrix gens[] = {M(3, {"a*b", "1 - a", "0", "0", "1", "0", "0", "0", "1"}),
                             M(3, {"1", "0", "0", "b", "-b", "1", "0", "0", "1"}),
                             M(3, {"1", "0", "0", "0", "1", "0", "0", "b", "-b"})};
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    RingMatrix x = RingMatrix::identity(3);
    for (int k = 0; k < 5; ++k) x = x * gens[pick(rng)];
    const RingMatrix inv = invert_unimodular(x);
    CHECK(inv * x == RingMatrix::identity(3));
    CHECK(x * inv == RingMatrix::identity(3));
  }
}
