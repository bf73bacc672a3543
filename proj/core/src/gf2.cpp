#include "cfk/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace cfk::gf2 {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

BitVector& BitVector::operator^=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::any() const noexcept {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> BitVector::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return std::nullopt;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool BitVector::dot(const BitVector& other) const noexcept {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (test(r, c)) v.set(r);
  return v;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto c : rows_[r].ones()) t.set(c, r);
  return t;
}

bool BitMatrix::isZero() const noexcept {
  for (const auto& r : rows_)
    if (r.any()) return false;
  return true;
}

std::size_t BitMatrix::countOnes() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

BitVector BitMatrix::apply(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("BitMatrix::apply: size mismatch");
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (rows_[r].dot(v)) out.set(r);
  return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (rows() != other.rows() || cols_ != other.cols_)
    throw std::invalid_argument("BitMatrix::operator+=: shape mismatch");
  for (std::size_t r = 0; r < rows(); ++r) rows_[r] ^= other.rows_[r];
  return *this;
}

BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("BitMatrix::operator*: shape mismatch");
  BitMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (auto k : lhs.row(r).ones()) out.row(r) ^= rhs.row(k);
  return out;
}

BitVector BitMatrix::flatten() const {
  BitVector v(rows() * cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto c : rows_[r].ones()) v.set(r * cols_ + c);
  return v;
}

BitMatrix BitMatrix::unflatten(const BitVector& v, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (auto i : v.ones()) m.set(i / cols, i % cols);
  return m;
}

std::size_t rank(BitMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !m.test(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(m.row(pivot), m.row(rank));
    for (std::size_t r = rank + 1; r < m.rows(); ++r)
      if (m.test(r, c)) m.row(r) ^= m.row(rank);
    ++rank;
  }
  return rank;
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  BitMatrix a = m;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && !a.test(pivot, c)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a.row(pivot), a.row(c));
    std::swap(inv.row(pivot), inv.row(c));
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && a.test(r, c)) {
        a.row(r) ^= a.row(c);
        inv.row(r) ^= inv.row(c);
      }
    }
  }
  return inv;
}

bool EchelonBasis::insert(const BitVector& v) {
  BitVector combo(dim_);
  BitVector residue = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (residue.test(pivots_[i])) {
      residue ^= rows_[i];
      combo ^= history_[i];
    }
  }
  auto pivot = residue.first();
  if (!pivot) return false;
  combo.set(rows_.size());
  rows_.push_back(std::move(residue));
  pivots_.push_back(*pivot);
  history_.push_back(std::move(combo));
  return true;
}

BitVector EchelonBasis::reduce(BitVector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.test(pivots_[i])) v ^= rows_[i];
  return v;
}

std::optional<BitVector> EchelonBasis::express(const BitVector& v) const {
  BitVector combo(dim_);
  BitVector residue = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (residue.test(pivots_[i])) {
      residue ^= rows_[i];
      combo ^= history_[i];
    }
  }
  if (residue.any()) return std::nullopt;
  return combo;
}

std::optional<LinearSolution> solve(const BitMatrix& a, const BitVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw std::invalid_argument("gf2::solve: size mismatch");

  // Augmented reduced row echelon form.
  std::vector<BitVector> rows(m, BitVector(n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (auto c : a.row(r).ones()) rows[r].set(c);
    if (b.test(r)) rows[r].set(n);
  }
  std::vector<std::size_t> pivotCols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t pivot = rank;
    while (pivot < m && !rows[pivot].test(c)) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < m; ++r)
      if (r != rank && rows[r].test(c)) rows[r] ^= rows[rank];
    pivotCols.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r)
    if (rows[r].test(n)) return std::nullopt;

  LinearSolution sol{BitVector(n), {}};
  std::vector<bool> isPivot(n, false);
  for (std::size_t i = 0; i < rank; ++i) {
    isPivot[pivotCols[i]] = true;
    if (rows[i].test(n)) sol.particular.set(pivotCols[i]);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (isPivot[free]) continue;
    BitVector k(n);
    k.set(free);
    for (std::size_t i = 0; i < rank; ++i)
      if (rows[i].test(free)) k.set(pivotCols[i]);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::vector<BitVector> nullspace(const BitMatrix& a) {
  return solve(a, BitVector(a.rows()))->kernel;
}

}  // namespace cfk::gf2
