#include "khcob/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace khcob::f2 {

namespace {
const SparseVec kEmpty;
}

void xor_into(SparseVec& a, const SparseVec& b) {
  if (b.empty()) return;
  if (a.empty()) {
    a = b;
    return;
  }
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  a.swap(out);
}

void normalize(SparseVec& v) {
  std::sort(v.begin(), v.end());
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) & 1) v[w++] = v[i];
    i = j;
  }
  v.resize(w);
}

SparseMap SparseMap::identity(std::size_t n) {
  SparseMap m(n, n);
  m.columns_.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = {static_cast<Index>(i)};
  return m;
}

SparseMap SparseMap::from_entries(std::size_t rows, std::size_t cols,
                                  const std::vector<std::pair<Index, Index>>& rc) {
  SparseMap m(rows, cols);
  m.columns_.resize(cols);
  for (auto [r, c] : rc) {
    if (r >= rows || c >= cols) throw DimensionMismatch("SparseMap entry out of range");
    m.columns_[c].push_back(r);
  }
  for (auto& col : m.columns_) normalize(col);
  return m;
}

void SparseMap::ensure(std::size_t j) {
  if (j >= cols_) throw DimensionMismatch("SparseMap column out of range");
  if (columns_.size() < cols_) columns_.resize(cols_);
}

const SparseVec& SparseMap::column(std::size_t j) const {
  return j < columns_.size() ? columns_[j] : kEmpty;
}

void SparseMap::set_column(std::size_t j, SparseVec v) {
  ensure(j);
  normalize(v);
  if (!v.empty() && v.back() >= rows_) throw DimensionMismatch("SparseMap row out of range");
  columns_[j] = std::move(v);
}

void SparseMap::toggle(Index r, Index c) {
  ensure(c);
  if (r >= rows_) throw DimensionMismatch("SparseMap row out of range");
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r);
  if (it != col.end() && *it == r) col.erase(it);
  else col.insert(it, r);
}

bool SparseMap::get(Index r, Index c) const {
  const auto& col = column(c);
  return std::binary_search(col.begin(), col.end(), r);
}

std::size_t SparseMap::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::vector<std::pair<Index, Index>> SparseMap::entries() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(nnz());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (auto r : columns_[c]) out.emplace_back(r, static_cast<Index>(c));
  return out;
}

SparseVec SparseMap::apply(const SparseVec& x) const {
  SparseVec out;
  for (auto j : x) {
    if (j >= cols_) throw DimensionMismatch("SparseMap::apply: index out of range");
    const auto& col = column(j);
    out.insert(out.end(), col.begin(), col.end());
  }
  normalize(out);
  return out;
}

SparseMap SparseMap::compose(const SparseMap& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("SparseMap compose: inner size mismatch");
  SparseMap out(rows_, other.cols_);
  out.columns_.resize(other.cols_);
  std::vector<std::uint8_t> mark(rows_, 0);
  SparseVec touched;
  for (std::size_t j = 0; j < other.cols_; ++j) {
    touched.clear();
    for (auto k : other.column(j))
      for (auto r : column(k)) {
        if (!mark[r]) touched.push_back(r);
        mark[r] ^= 1;
        mark[r] |= 2;  // bit 1 = seen
      }
    SparseVec col;
    for (auto r : touched) {
      if (mark[r] & 1) col.push_back(r);
      mark[r] = 0;
    }
    std::sort(col.begin(), col.end());
    out.columns_[j] = std::move(col);
  }
  return out;
}

SparseMap SparseMap::operator+(const SparseMap& other) const {
  SparseMap out = *this;
  out += other;
  return out;
}

SparseMap& SparseMap::operator+=(const SparseMap& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("SparseMap sum: shape mismatch");
  if (columns_.size() < cols_) columns_.resize(cols_);
  for (std::size_t j = 0; j < other.columns_.size(); ++j) xor_into(columns_[j], other.columns_[j]);
  return *this;
}

SparseMap SparseMap::transpose() const {
  SparseMap t(cols_, rows_);
  t.columns_.resize(rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (auto r : columns_[c]) t.columns_[r].push_back(static_cast<Index>(c));
  return t;  // pushed in increasing c, so already sorted
}

bool SparseMap::operator==(const SparseMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t j = 0; j < cols_; ++j)
    if (column(j) != o.column(j)) return false;
  return true;
}

BitMatrix SparseMap::to_dense() const {
  BitMatrix m(rows_, cols_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (auto r : columns_[c]) m.set(r, c);
  return m;
}

SparseMap SparseMap::from_dense(const BitMatrix& m) {
  SparseMap s(m.rows(), m.cols());
  s.columns_.resize(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) s.columns_[c].push_back(static_cast<Index>(r));
  return s;
}

}  // namespace khcob::f2
