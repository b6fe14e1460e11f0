#include "doctest.h"
#include "lensalex/errors.hpp"
#include "lensalex/format.hpp"
#include "lensalex/repr.hpp"
#include "support.hpp"

using namespace lensalex;

namespace {

const VariableContext& ctx() {
  static const VariableContext c{"a", "b", "x", "y", "z"};
  return c;
}

LaurentPoly P(std::string_view text) { return parse_laurent(text, ctx()); }

RingMatrix M(std::size_t n, std::initializer_list<const char*> entries) {
  std::vector<LaurentPoly> e;
  for (const char* s : entries) e.push_back(P(s));
  return RingMatrix(n, std::move(e));
}

constexpr VarId A = 0, B = 1, X = 2, Y = 3, Z = 4;

// Common alternative naming with the letters exchanged:
// its "b" is the fixed-strand color and its "a" the moving one.
constexpr MixedColors kDisplayColors{B, A};

}  // namespace

TEST_CASE("rho generators in B_{1,4} in the exchanged naming") {
  const int n = 4;
  CHECK(rho_generator(BraidLetter::loop(), n, kDisplayColors) ==
        M(4, {"a*b", "1 - b", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1"}));
  CHECK(rho_generator(BraidLetter::sigma(1), n, kDisplayColors) ==
        M(4, {"1", "0", "0", "0", "a", "-a", "1", "0", "0", "0", "1", "0", "0", "0", "0", "1"}));
  CHECK(rho_generator(BraidLetter::sigma(2), n, kDisplayColors) ==
        M(4, {"1", "0", "0", "0", "0", "1", "0", "0", "0", "a", "-a", "1", "0", "0", "0", "1"}));
  CHECK(rho_generator(BraidLetter::sigma(3), n, kDisplayColors) ==
        M(4, {"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "a", "-a"}));
}

TEST_CASE("rho generators with a on the fixed strand") {
  CHECK(rho_generator(BraidLetter::loop(), 2, kDefaultMixedColors) ==
        M(2, {"a*b", "1 - a", "0", "1"}));
  CHECK(rho_generator(BraidLetter::sigma(1), 2, kDefaultMixedColors) ==
        M(2, {"1", "0", "b", "-b"}));
  CHECK(rho_generator(BraidLetter::loop(), 2, kDisplayColors) == M(2, {"a*b", "1 - b", "0", "1"}));

  // n = 1: ρ(t) = C̄_1(a) C̄_1(b) in B_2, i.e. (-a)(-b).
  const RingMatrix c1 = reduced_burau_generator(1, A, 2) * reduced_burau_generator(1, B, 2);
  CHECK(c1 == M(1, {"a*b"}));
  CHECK(rho_generator(BraidLetter::loop(), 1, kDefaultMixedColors) == c1);

  CHECK(rho_generator(BraidLetter::loop(-1), 2, kDefaultMixedColors) *
            rho_generator(BraidLetter::loop(), 2, kDefaultMixedColors) ==
        RingMatrix::identity(2));
  CHECK_THROWS_AS(rho_generator(BraidLetter::sigma(2), 2, kDefaultMixedColors), IndexOutOfRange);
}

TEST_CASE("rho of t s1^3") {
  const MixedBraidWord w = parse_braid("t s1^3", 2);
  CHECK(rho_word(w, kDisplayColors) ==
        M(2, {"-b*a^3 + a^3 + b*a^2 - a^2 + a", "a^3*b - a^3", "a^3 - a^2 + a", "-a^3"}));
  // Same matrix with the letters exchanged.
  CHECK(rho_word(w) ==
        M(2, {"-a*b^3 + b^3 + a*b^2 - b^2 + b", "b^3*a - b^3", "b^3 - b^2 + b", "-b^3"}));
  CHECK(rho_word(parse_braid("", 3)) == RingMatrix::identity(3));
}

TEST_CASE("reduced Burau generators") {
  CHECK(reduced_burau_generator(1, A, 2) == M(1, {"-a"}));
  CHECK(reduced_burau_generator(1, A, 3) == M(2, {"-a", "1", "0", "1"}));
  CHECK(reduced_burau_generator(2, B, 3) == M(2, {"1", "0", "b", "-b"}));
  CHECK(reduced_burau_generator(2, X, 4) == M(3, {"1", "0", "0", "x", "-x", "1", "0", "0", "1"}));
  CHECK_THROWS_AS(reduced_burau_generator(3, A, 3), IndexOutOfRange);
}

TEST_CASE("coloured Burau walk") {
  // σ_1 in B_2 picks up the color entering at position 1.
  const auto one = colored_burau_word(parse_plain_braid("s1", 2), {X, Y});
  CHECK(one.matrix == M(1, {"-x"}));
  CHECK(one.permutation == StrandPermutation(std::vector<int>{2, 1}));
  // σ_1^{-1} takes the color at position 2.
  CHECK(colored_burau_word(parse_plain_braid("s1^-1", 2), {X, Y}).matrix == M(1, {"-y^-1"}));

  // Hopf link: det(I - B̄) / (1 - xy) = 1.
  const auto hopf = colored_burau_word(parse_plain_braid("s1^2", 2), {X, Y});
  CHECK(hopf.matrix == M(1, {"x*y"}));
  CHECK(exact_div(det(RingMatrix::identity(1) - hopf.matrix), P("1 - x*y")) == P("1"));

  const auto empty = colored_burau_word(PlainBraidWord(3, {}), {X, Y, Z});
  CHECK(empty.matrix == RingMatrix::identity(2));
  CHECK(empty.permutation.is_identity());

  // Embedding identity on t s1^3.
  const PlainBraidWord embedded = embed_in_plain(parse_braid("t s1^3", 2));
  CHECK(colored_burau_word(embedded, {A, B, B}).matrix == rho_word(parse_braid("t s1^3", 2)));
}

TEST_CASE("rho satisfies the mixed braid relations") {
  for (int n = 1; n <= 5; ++n) {
    auto rho = [n](const char* text) { return rho_word(parse_braid(text, n)); };
    for (int i = 1; i < n; ++i) {
      const std::string si = "s" + std::to_string(i);
      for (int j = i + 2; j < n; ++j) {
        const std::string sj = "s" + std::to_string(j);
        CHECK(rho((si + " " + sj).c_str()) == rho((sj + " " + si).c_str()));
      }
      if (i + 1 < n) {
        const std::string sk = "s" + std::to_string(i + 1);
        CHECK(rho((si + " " + sk + " " + si).c_str()) == rho((sk + " " + si + " " + sk).c_str()));
      }
      if (i >= 2) CHECK(rho(("t " + si).c_str()) == rho((si + " t").c_str()));
    }
    if (n >= 2) CHECK(rho("t s1 t s1") == rho("s1 t s1 t"));
  }
}

TEST_CASE("rho is a homomorphism and unimodular") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const auto w1 = testing::random_mixed_word(rng, n, 6);
    const auto w2 = testing::random_mixed_word(rng, n, 6);
    CHECK(rho_word(w1 * w2) == rho_word(w1) * rho_word(w2));
    CHECK(rho_word(w1 * w1.inverse()) == RingMatrix::identity(static_cast<std::size_t>(n)));
    const auto unit = det(rho_word(w1)).as_unit();
    REQUIRE(unit.has_value());
    // Only a and b can appear.
    CHECK(unit->first.width() <= 2);
  }
}

TEST_CASE("single-color Burau satisfies the braid relations") {
  for (int m = 2; m <= 5; ++m) {
    const ColorAssignment mono(static_cast<std::size_t>(m), X);
    auto burau = [&](const std::string& text) {
      return colored_burau_word(parse_plain_braid(text, m), mono).matrix;
    };
    for (int i = 1; i < m; ++i) {
      const std::string si = "s" + std::to_string(i);
      CHECK(burau(si + " " + si + "^-1") == RingMatrix::identity(static_cast<std::size_t>(m - 1)));
      if (i + 1 < m) {
        const std::string sk = "s" + std::to_string(i + 1);
        CHECK(burau(si + " " + sk + " " + si) == burau(sk + " " + si + " " + sk));
      }
      for (int j = i + 2; j < m; ++j) {
        const std::string sj = "s" + std::to_string(j);
        CHECK(burau(si + " " + sj) == burau(sj + " " + si));
      }
    }
  }
  // With distinct colors the braid relation still holds.
  CHECK(colored_burau_word(parse_plain_braid("s1 s2 s1", 3), {X, Y, Z}).matrix ==
        colored_burau_word(parse_plain_braid("s2 s1 s2", 3), {X, Y, Z}).matrix);
}

TEST_CASE("embedding identity on random words") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const auto w = testing::random_mixed_word(rng, n, 8);
    ColorAssignment colors(static_cast<std::size_t>(n + 1), B);
    colors[0] = A;
    CHECK(colored_burau_word(embed_in_plain(w), colors).matrix == rho_word(w));
  }
}
