#ifndef LENSALEX_BRAID_HPP_
#define LENSALEX_BRAID_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace lensalex {

// Generator of the mixed braid group B_{1,n}: the loop t (first moving strand
// winding around the fixed strand) or σ_i, with exponent ±1.
struct BraidLetter {
  enum class Kind { Loop, Sigma };

  Kind kind = Kind::Loop;
  int index = 0;  // σ index, 1-based; 0 for the loop
  int exponent = 1;

  static BraidLetter loop(int exponent = 1) { return {Kind::Loop, 0, exponent}; }
  static BraidLetter sigma(int i, int exponent = 1) { return {Kind::Sigma, i, exponent}; }

  BraidLetter inverse() const { return {kind, index, -exponent}; }
  bool is_loop() const noexcept { return kind == Kind::Loop; }

  friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

// A word in B_{1,n}. Letters are read bottom to top: the first letter is the
// crossing nearest the bottom endpoints. n counts moving strands only; the
// fixed strand sits at position 0 and never appears in permutations.
class MixedBraidWord {
 public:
  MixedBraidWord() = default;
  MixedBraidWord(int n, std::vector<BraidLetter> letters);

  int strands() const noexcept { return n_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  MixedBraidWord inverse() const;
  // this followed by (above) other.
  MixedBraidWord operator*(const MixedBraidWord& other) const;

  friend bool operator==(const MixedBraidWord&, const MixedBraidWord&) = default;

 private:
  int n_ = 1;
  std::vector<BraidLetter> letters_;
};

struct PlainLetter {
  int index = 1;
  int exponent = 1;
  friend auto operator<=>(const PlainLetter&, const PlainLetter&) = default;
};

// A word in the Artin braid group B_m, same bottom-to-top convention.
class PlainBraidWord {
 public:
  PlainBraidWord() = default;
  PlainBraidWord(int m, std::vector<PlainLetter> letters);

  int strands() const noexcept { return m_; }
  const std::vector<PlainLetter>& letters() const noexcept { return letters_; }

  PlainBraidWord inverse() const;
  PlainBraidWord operator*(const PlainBraidWord& other) const;

  friend bool operator==(const PlainBraidWord&, const PlainBraidWord&) = default;

 private:
  int m_ = 1;
  std::vector<PlainLetter> letters_;
};

// Bijection of {1..m}: bottom position j ends at top position image(j).
class StrandPermutation {
 public:
  explicit StrandPermutation(int m = 0);
  explicit StrandPermutation(std::vector<int> images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int image(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }
  bool is_identity() const;

  // (*this ∘ other)(j) = image(other.image(j))
  StrandPermutation compose(const StrandPermutation& other) const;

  friend bool operator==(const StrandPermutation&, const StrandPermutation&) = default;

 private:
  std::vector<int> images_;
};

struct ComponentPartition {
  // Each cycle lists bottom positions, starting at its smallest element;
  // cycles are ordered by that element.
  std::vector<std::vector<int>> cycles;
  // component_of[j-1] is the index into cycles of position j.
  std::vector<int> component_of;

  int count() const noexcept { return static_cast<int>(cycles.size()); }
};

// Grammar: whitespace-separated tokens `t` or `sK`, each with an optional
// `^E` suffix (E a nonzero integer). Exponents are expanded into repeated
// letters. Throws SyntaxError or IndexOutOfRange.
MixedBraidWord parse_braid(std::string_view text, int n);
// Same grammar without `t`.
PlainBraidWord parse_plain_braid(std::string_view text, int m);

std::string to_string(const MixedBraidWord& w);
std::string to_string(const PlainBraidWord& w);

long t_exponent_sum(const MixedBraidWord& w);

StrandPermutation permutation(const MixedBraidWord& w);
StrandPermutation permutation(const PlainBraidWord& w);
ComponentPartition component_partition(const StrandPermutation& perm);
ComponentPartition component_partition(const MixedBraidWord& w);
ComponentPartition component_partition(const PlainBraidWord& w);

// t ↦ σ_1², σ_i ↦ σ_{i+1}, landing in B_{1+n}.
PlainBraidWord embed_in_plain(const MixedBraidWord& w);
// Drops the fixed strand: t ↦ 1, σ_i ↦ σ_i, landing in B_n.
PlainBraidWord forget_fixed_strand(const MixedBraidWord& w);

// g · w · g^{-1}
MixedBraidWord conjugate(const MixedBraidWord& w, const MixedBraidWord& g);
// w · σ_n^{±1} in B_{1,n+1}.
MixedBraidWord stabilize(const MixedBraidWord& w, int sign = 1);
MixedBraidWord free_reduce(const MixedBraidWord& w);

}  // namespace lensalex

#endif  // LENSALEX_BRAID_HPP_
