#include "khcob/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace khcob::f2 {

bool BitVector::any() const {
  return std::any_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.n_ != n_) throw DimensionMismatch("BitVector xor: size mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector BitMatrix::row_vector(std::size_t r) const {
  BitVector v(cols_);
  std::copy(row(r), row(r) + wpr_, v.words().begin());
  return v;
}

BitVector BitMatrix::column_vector(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto* rw = row(r);
    for (std::size_t k = 0; k < wpr_; ++k) {
      auto w = rw[k];
      while (w) {
        auto b = static_cast<std::size_t>(std::countr_zero(w));
        t.set(k * 64 + b, r);
        w &= w - 1;
      }
    }
  }
  return t;
}

BitVector BitMatrix::operator*(const BitVector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("BitMatrix * BitVector: size mismatch");
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const auto* rw = row(r);
    for (std::size_t k = 0; k < wpr_; ++k) acc ^= rw[k] & x.words()[k];
    if (std::popcount(acc) & 1) y.set(r);
  }
  return y;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("BitMatrix product: size mismatch");
  BitMatrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto* out = p.row(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!get(r, c)) continue;
      const auto* in = o.row(c);
      for (std::size_t k = 0; k < p.wpr_; ++k) out[k] ^= in[k];
    }
  }
  return p;
}

bool BitMatrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

namespace {

// Forward elimination with full back-substitution. Pivot = first nonzero row
// at or below the current one.
std::vector<std::size_t> eliminate(BitMatrix& m, bool reduce_above) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), wpr = m.words_per_row();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
    const std::size_t word = c >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    std::size_t p = r;
    while (p < rows && !(m.row(p)[word] & mask)) ++p;
    if (p == rows) continue;
    if (p != r) std::swap_ranges(m.row(p), m.row(p) + wpr, m.row(r));
    const auto* pr = m.row(r);
    for (std::size_t i = reduce_above ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      auto* ri = m.row(i);
      if (!(ri[word] & mask)) continue;
      for (std::size_t k = word; k < wpr; ++k) ri[k] ^= pr[k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon echelon(BitMatrix m) {
  auto piv = eliminate(m, true);
  return {std::move(m), std::move(piv)};
}

std::size_t rank_inplace(BitMatrix& m) { return eliminate(m, false).size(); }

std::size_t rank(const BitMatrix& m) {
  BitMatrix copy = m;
  return rank_inplace(copy);
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs size mismatch");
  BitMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r), m.row(r) + m.words_per_row(), aug.row(r));
    if (b.get(r)) aug.set(r, m.cols());
  }
  auto piv = eliminate(aug, true);
  BitVector x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == m.cols()) return std::nullopt;  // inconsistent row 0 = 1
    if (aug.get(i, m.cols())) x.set(piv[i]);
  }
  if (!(m * x == b)) throw std::logic_error("solve: re-verification failed");
  return x;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  auto e = echelon(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (e.rref.get(i, f)) v.set(e.pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BitVector> image_basis(const BitMatrix& m) {
  auto e = echelon(m);
  std::vector<BitVector> basis;
  basis.reserve(e.pivots.size());
  for (auto c : e.pivots) basis.push_back(m.column_vector(c));
  return basis;
}

}  // namespace khcob::f2
