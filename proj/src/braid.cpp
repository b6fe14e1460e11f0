#include "lensalex/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "lensalex/errors.hpp"

namespace lensalex {

// ---------------------------------------------------------------------------
// Words

MixedBraidWord::MixedBraidWord(int n, std::vector<BraidLetter> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw std::invalid_argument("mixed braid needs at least one moving strand");
  for (const auto& l : letters_) {
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("letter exponent must be ±1");
    if (!l.is_loop() && (l.index < 1 || l.index >= n))
      throw IndexOutOfRange("s" + std::to_string(l.index) + " out of range for n = " +
                            std::to_string(n));
  }
}

MixedBraidWord MixedBraidWord::inverse() const {
  std::vector<BraidLetter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return MixedBraidWord(n_, std::move(inv));
}

MixedBraidWord MixedBraidWord::operator*(const MixedBraidWord& other) const {
  if (other.n_ != n_) throw std::invalid_argument("braid words on different strand counts");
  std::vector<BraidLetter> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return MixedBraidWord(n_, std::move(letters));
}

PlainBraidWord::PlainBraidWord(int m, std::vector<PlainLetter> letters)
    : m_(m), letters_(std::move(letters)) {
  if (m < 1) throw std::invalid_argument("braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("letter exponent must be ±1");
    if (l.index < 1 || l.index >= m)
      throw IndexOutOfRange("s" + std::to_string(l.index) + " out of range for " +
                            std::to_string(m) + " strands");
  }
}

PlainBraidWord PlainBraidWord::inverse() const {
  std::vector<PlainLetter> inv;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    inv.push_back({it->index, -it->exponent});
  return PlainBraidWord(m_, std::move(inv));
}

PlainBraidWord PlainBraidWord::operator*(const PlainBraidWord& other) const {
  if (other.m_ != m_) throw std::invalid_argument("braid words on different strand counts");
  std::vector<PlainLetter> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return PlainBraidWord(m_, std::move(letters));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  bool loop;
  int index;
  long power;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&](std::size_t at) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw SyntaxError(at, "expected digits");
    const std::string_view d = text.substr(start, pos - start);
    if (d.size() > 9) throw SyntaxError(start, "number too large");
    return std::stol(std::string(d));
  };

  for (skip(); pos < text.size(); skip()) {
    Token tok{false, 0, 1, pos};
    const char c = text[pos];
    if (c == 't') {
      tok.loop = true;
      ++pos;
    } else if (c == 's') {
      ++pos;
      tok.index = static_cast<int>(digits(pos));
    } else {
      throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
    }
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      long sign = 1;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
      }
      const std::size_t at = pos;
      tok.power = sign * digits(at);
      if (tok.power == 0) throw SyntaxError(at, "exponent must be nonzero");
    }
    tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

MixedBraidWord parse_braid(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<BraidLetter> letters;
  for (const auto& tok : tokenize(text)) {
    if (!tok.loop && (tok.index < 1 || tok.index >= n))
      throw IndexOutOfRange("s" + std::to_string(tok.index) + " at position " +
                            std::to_string(tok.position) + " out of range for n = " +
                            std::to_string(n));
    const int e = tok.power > 0 ? 1 : -1;
    const BraidLetter letter = tok.loop ? BraidLetter::loop(e) : BraidLetter::sigma(tok.index, e);
    letters.insert(letters.end(), static_cast<std::size_t>(std::labs(tok.power)), letter);
  }
  return MixedBraidWord(n, std::move(letters));
}

PlainBraidWord parse_plain_braid(std::string_view text, int m) {
  if (m < 1) throw std::invalid_argument("strand count must be positive");
  std::vector<PlainLetter> letters;
  for (const auto& tok : tokenize(text)) {
    if (tok.loop) throw SyntaxError(tok.position, "'t' is not a generator of a plain braid group");
    if (tok.index < 1 || tok.index >= m)
      throw IndexOutOfRange("s" + std::to_string(tok.index) + " at position " +
                            std::to_string(tok.position) + " out of range for " +
                            std::to_string(m) + " strands");
    const PlainLetter letter{tok.index, tok.power > 0 ? 1 : -1};
    letters.insert(letters.end(), static_cast<std::size_t>(std::labs(tok.power)), letter);
  }
  return PlainBraidWord(m, std::move(letters));
}

namespace {

// Collapses runs of equal letters into `x^k`.
template <typename Letter, typename Name>
std::string render_runs(const std::vector<Letter>& letters, Name name) {
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long power = static_cast<long>(j - i) * letters[i].exponent;
    if (!out.empty()) out += ' ';
    out += name(letters[i]);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

}  // namespace

std::string to_string(const MixedBraidWord& w) {
  return render_runs(w.letters(), [](const BraidLetter& l) {
    return l.is_loop() ? std::string("t") : "s" + std::to_string(l.index);
  });
}

std::string to_string(const PlainBraidWord& w) {
  return render_runs(w.letters(),
                     [](const PlainLetter& l) { return "s" + std::to_string(l.index); });
}

// ---------------------------------------------------------------------------
// Combinatorics

long t_exponent_sum(const MixedBraidWord& w) {
  long sum = 0;
  for (const auto& l : w.letters())
    if (l.is_loop()) sum += l.exponent;
  return sum;
}

StrandPermutation::StrandPermutation(int m) : images_(static_cast<std::size_t>(m)) {
  std::iota(images_.begin(), images_.end(), 1);
}

StrandPermutation::StrandPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x - 1)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

bool StrandPermutation::is_identity() const {
  for (int j = 1; j <= size(); ++j)
    if (image(j) != j) return false;
  return true;
}

StrandPermutation StrandPermutation::compose(const StrandPermutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> out(images_.size());
  for (int j = 1; j <= size(); ++j) out[static_cast<std::size_t>(j - 1)] = image(other.image(j));
  return StrandPermutation(std::move(out));
}

namespace {

// Walks strands upward: position_of[s] is the current position of the strand
// that started at bottom position s + 1.
template <typename Indices>
StrandPermutation walk(int m, const Indices& crossing_indices) {
  std::vector<int> strand_at(static_cast<std::size_t>(m));
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (int i : crossing_indices)
    std::swap(strand_at[static_cast<std::size_t>(i - 1)], strand_at[static_cast<std::size_t>(i)]);
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int pos = 0; pos < m; ++pos)
    images[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(pos)])] = pos + 1;
  return StrandPermutation(std::move(images));
}

}  // namespace

StrandPermutation permutation(const MixedBraidWord& w) {
  std::vector<int> indices;
  for (const auto& l : w.letters())
    if (!l.is_loop()) indices.push_back(l.index);
  return walk(w.strands(), indices);
}

StrandPermutation permutation(const PlainBraidWord& w) {
  std::vector<int> indices;
  for (const auto& l : w.letters()) indices.push_back(l.index);
  return walk(w.strands(), indices);
}

ComponentPartition component_partition(const StrandPermutation& perm) {
  ComponentPartition out;
  out.component_of.assign(static_cast<std::size_t>(perm.size()), -1);
  for (int start = 1; start <= perm.size(); ++start) {
    if (out.component_of[static_cast<std::size_t>(start - 1)] >= 0) continue;
    const int id = out.count();
    std::vector<int> cycle;
    for (int j = start; out.component_of[static_cast<std::size_t>(j - 1)] < 0; j = perm.image(j)) {
      out.component_of[static_cast<std::size_t>(j - 1)] = id;
      cycle.push_back(j);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

ComponentPartition component_partition(const MixedBraidWord& w) {
  return component_partition(permutation(w));
}

ComponentPartition component_partition(const PlainBraidWord& w) {
  return component_partition(permutation(w));
}

PlainBraidWord embed_in_plain(const MixedBraidWord& w) {
  std::vector<PlainLetter> letters;
  for (const auto& l : w.letters()) {
    if (l.is_loop()) {
      letters.push_back({1, l.exponent});
      letters.push_back({1, l.exponent});
    } else {
      letters.push_back({l.index + 1, l.exponent});
    }
  }
  return PlainBraidWord(w.strands() + 1, std::move(letters));
}

PlainBraidWord forget_fixed_strand(const MixedBraidWord& w) {
  std::vector<PlainLetter> letters;
  for (const auto& l : w.letters())
    if (!l.is_loop()) letters.push_back({l.index, l.exponent});
  return PlainBraidWord(w.strands(), std::move(letters));
}

MixedBraidWord conjugate(const MixedBraidWord& w, const MixedBraidWord& g) {
  return g * w * g.inverse();
}

MixedBraidWord stabilize(const MixedBraidWord& w, int sign) {
  const int n = w.strands();
  std::vector<BraidLetter> letters = w.letters();
  letters.push_back(BraidLetter::sigma(n, sign >= 0 ? 1 : -1));
  return MixedBraidWord(n + 1, std::move(letters));
}

MixedBraidWord free_reduce(const MixedBraidWord& w) {
  std::vector<BraidLetter> stack;
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) stack.pop_back();
    else stack.push_back(l);
  }
  return MixedBraidWord(w.strands(), std::move(stack));
}

}  // namespace lensalex
