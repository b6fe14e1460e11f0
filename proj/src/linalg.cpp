#include "lensalex/linalg.hpp"

#include <numeric>
#include <string>

#include "lensalex/errors.hpp"

namespace lensalex {

RingMatrix::RingMatrix(std::size_t n) : n_(n), entries_(n * n) {}

RingMatrix::RingMatrix(std::size_t n, std::vector<LaurentPoly> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n)
    throw SizeMismatch("expected " + std::to_string(n * n) + " entries, got " +
                       std::to_string(entries_.size()));
}

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

RingMatrix RingMatrix::submatrix(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) const {
  if (rows.size() != cols.size()) throw SizeMismatch("submatrix must be square");
  RingMatrix s(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.n_ != b.n_)
    throw SizeMismatch("matrix sizes " + std::to_string(a.n_) + " and " + std::to_string(b.n_));
  const std::size_t n = a.n_;
  RingMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
  if (a.n_ != b.n_) throw SizeMismatch("matrix sizes differ");
  RingMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
  return c;
}

RingMatrix substitute(const RingMatrix& a,
                      const std::vector<std::pair<VarId, Monomial>>& images) {
  std::vector<LaurentPoly> entries;
  entries.reserve(a.entries().size());
  for (const auto& e : a.entries()) entries.push_back(substitute(e, images));
  return RingMatrix(a.size(), std::move(entries));
}

namespace {

LaurentPoly cofactor_expand(const RingMatrix& a, std::vector<std::size_t>& rows,
                            std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return LaurentPoly(1);
  if (k == 1) return a(rows[0], cols[0]);
  if (k == 2)
    return a(rows[0], cols[0]) * a(rows[1], cols[1]) -
           a(rows[0], cols[1]) * a(rows[1], cols[0]);
  const std::size_t r = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  LaurentPoly sum;
  for (std::size_t j = 0; j < k; ++j) {
    const LaurentPoly& entry = a(r, cols[j]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(k - 1);
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    LaurentPoly term = entry * cofactor_expand(a, sub_rows, sub_cols);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

}  // namespace

LaurentPoly det_cofactor(const RingMatrix& a) {
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto cols = idx;
  return cofactor_expand(a, idx, cols);
}

LaurentPoly det_bareiss(const RingMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly(1);
  RingMatrix m = a;
  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(num, prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly d = m(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

LaurentPoly det(const RingMatrix& a) {
  return a.size() <= 4 ? det_cofactor(a) : det_bareiss(a);
}

RingMatrix adjugate(const RingMatrix& a) {
  const std::size_t n = a.size();
  RingMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = LaurentPoly(1);
    return adj;
  }
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows.clear();
      cols.clear();
      for (std::size_t r = 0; r < n; ++r)
        if (r != i) rows.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) cols.push_back(c);
      LaurentPoly minor = det(a.submatrix(rows, cols));
      // adj(j, i) = (-1)^{i+j} M_{ij}
      adj(j, i) = (i + j) % 2 ? -minor : minor;
    }
  return adj;
}

RingMatrix invert_unimodular(const RingMatrix& a) {
  const LaurentPoly d = det(a);
  const auto unit = d.as_unit();
  if (!unit) throw NotUnimodular("determinant is not a unit");
  const LaurentPoly inv(Integer(unit->second), unit->first.inverse());
  RingMatrix adj = adjugate(a);
  std::vector<LaurentPoly> entries;
  entries.reserve(adj.entries().size());
  for (const auto& e : adj.entries()) entries.push_back(e * inv);
  return RingMatrix(a.size(), std::move(entries));
}

}  // namespace lensalex
