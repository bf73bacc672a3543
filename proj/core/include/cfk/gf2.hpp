#pragma once

// Dense linear algebra over the field with two elements.
//
// Every map in this library is homogeneous, so the U-power of each matrix
// entry is fixed by the gradings of its row and column. That lets all of the
// F2[U, U^-1] algebra run on plain bit matrices; the grading bookkeeping lives
// with the callers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cfk::gf2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other) noexcept;
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) noexcept {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept;
  /// Lowest set index, if any.
  std::optional<std::size_t> first() const noexcept;
  std::vector<std::size_t> ones() const;
  /// Parity of the bitwise AND.
  bool dot(const BitVector& other) const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool test(std::size_t r, std::size_t c) const noexcept { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) noexcept { rows_[r].flip(c); }

  const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
  BitVector& row(std::size_t r) noexcept { return rows_[r]; }
  BitVector column(std::size_t c) const;

  BitMatrix transposed() const;
  bool isZero() const noexcept;
  std::size_t countOnes() const noexcept;

  /// Matrix-vector product.
  BitVector apply(const BitVector& v) const;

  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix lhs, const BitMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  /// Row-major flattening, used when a space of matrices is itself treated
  /// as a vector space.
  BitVector flatten() const;
  static BitMatrix unflatten(const BitVector& v, std::size_t rows, std::size_t cols);

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

std::size_t rank(BitMatrix m);
std::optional<BitMatrix> inverse(const BitMatrix& m);

/// Incrementally built row-echelon basis of a subspace. `reduce` is a linear
/// projection onto a fixed complement, so residues can be added.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds `v` to the span; returns false if it was already there.
  bool insert(const BitVector& v);
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }

  /// Expresses `v` in terms of the inserted vectors. Returns the indices (in
  /// insertion order of independent vectors) whose sum is `v`, or nullopt.
  std::optional<BitVector> express(const BitVector& v) const;

 private:
  std::size_t dim_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
  // Combination of original inserted vectors giving each echelon row.
  std::vector<BitVector> history_;
};

struct LinearSolution {
  BitVector particular;
  std::vector<BitVector> kernel;
};

/// All solutions of A x = b, or nullopt when the system is inconsistent.
std::optional<LinearSolution> solve(const BitMatrix& a, const BitVector& b);
std::vector<BitVector> nullspace(const BitMatrix& a);

}  // namespace cfk::gf2
