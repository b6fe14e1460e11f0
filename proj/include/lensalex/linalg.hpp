#ifndef LENSALEX_LINALG_HPP_
#define LENSALEX_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "lensalex/laurent.hpp"

namespace lensalex {

// Dense square matrix over LaurentPoly, row-major.
class RingMatrix {
 public:
  RingMatrix() = default;
  explicit RingMatrix(std::size_t n);  // zero matrix
  RingMatrix(std::size_t n, std::vector<LaurentPoly> entries);

  static RingMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  const std::vector<LaurentPoly>& entries() const noexcept { return entries_; }

  // Square submatrix on the given (sorted) row and column indices.
  RingMatrix submatrix(std::span<const std::size_t> rows,
                       std::span<const std::size_t> cols) const;

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> entries_;
};

// Applies a substitution to every entry.
RingMatrix substitute(const RingMatrix& a,
                      const std::vector<std::pair<VarId, Monomial>>& images);

// Determinant of a 0×0 matrix is 1.
LaurentPoly det(const RingMatrix& a);
LaurentPoly det_cofactor(const RingMatrix& a);
LaurentPoly det_bareiss(const RingMatrix& a);

RingMatrix adjugate(const RingMatrix& a);

// Exact inverse when det(a) = ±monomial; throws NotUnimodular otherwise.
RingMatrix invert_unimodular(const RingMatrix& a);

}  // namespace lensalex

#endif  // LENSALEX_LINALG_HPP_
