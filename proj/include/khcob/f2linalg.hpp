#pragma once
// Dense bit-packed linear algebra over F2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace khcob::f2 {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    if (v) w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  bool any() const;
  std::size_t count() const;
  BitVector& operator^=(const BitVector& o);
  bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }

  std::vector<std::uint64_t>& words() { return w_; }
  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    auto& w = bits_[r * wpr_ + (c >> 6)];
    if (v) w |= std::uint64_t{1} << (c & 63);
    else w &= ~(std::uint64_t{1} << (c & 63));
  }
  void flip(std::size_t r, std::size_t c) {
    bits_[r * wpr_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
  }

  std::uint64_t* row(std::size_t r) { return bits_.data() + r * wpr_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * wpr_; }
  BitVector row_vector(std::size_t r) const;
  BitVector column_vector(std::size_t c) const;

  BitMatrix transpose() const;
  BitVector operator*(const BitVector& x) const;
  BitMatrix operator*(const BitMatrix& o) const;
  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Row-reduced echelon form. pivots[i] is the pivot column of row i.
struct Echelon {
  BitMatrix rref;
  std::vector<std::size_t> pivots;
};

Echelon echelon(BitMatrix m);
std::size_t rank(const BitMatrix& m);
// Rank that consumes its argument (no copy).
std::size_t rank_inplace(BitMatrix& m);
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);
std::vector<BitVector> kernel_basis(const BitMatrix& m);
std::vector<BitVector> image_basis(const BitMatrix& m);

}  // namespace khcob::f2
