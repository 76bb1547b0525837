#pragma once
// Column-sparse F2 matrices. Column j lists the rows r with entry (r, j) = 1,
// sorted and without repeats.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "khcob/f2linalg.hpp"

namespace khcob::f2 {

using Index = std::uint32_t;
using SparseVec = std::vector<Index>;  // sorted support of an F2 vector

// a ^= b on sorted supports.
void xor_into(SparseVec& a, const SparseVec& b);
// Sort and cancel repeated indices in pairs.
void normalize(SparseVec& v);

class SparseMap {
 public:
  SparseMap() = default;
  SparseMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  static SparseMap identity(std::size_t n);
  static SparseMap from_entries(std::size_t rows, std::size_t cols,
                                const std::vector<std::pair<Index, Index>>& rc);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec& column(std::size_t j) const;
  // Replaces column j; v may be unsorted and contain repeats (F2 sum).
  void set_column(std::size_t j, SparseVec v);
  void toggle(Index r, Index c);
  bool get(Index r, Index c) const;
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }
  std::vector<std::pair<Index, Index>> entries() const;  // (row, col), column-major

  SparseVec apply(const SparseVec& x) const;
  // (*this) ∘ other
  SparseMap compose(const SparseMap& other) const;
  SparseMap operator*(const SparseMap& other) const { return compose(other); }
  SparseMap operator+(const SparseMap& other) const;
  SparseMap& operator+=(const SparseMap& other);
  SparseMap transpose() const;
  bool operator==(const SparseMap& o) const;

  BitMatrix to_dense() const;
  static SparseMap from_dense(const BitMatrix& m);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  // Lazily sized: columns_ may be shorter than cols_ (missing = zero).
  std::vector<SparseVec> columns_;
  void ensure(std::size_t j);
};

}  // namespace khcob::f2
