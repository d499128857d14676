#pragma once

// Dense GF(2) vectors and matrices, packed 64 bits per word.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rsquad/error.hpp"

namespace rsquad {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVec unit(std::size_t size, std::size_t index) {
    BitVec v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  /// Inner product over GF(2).
  bool dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
  }

  bool is_zero() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set bit, or size() if zero.
  std::size_t first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  /// out[i] = in[(i + shift) mod size]
  BitVec rotated(std::size_t shift) const {
    BitVec out(size_);
    if (size_ == 0) return out;
    shift %= size_;
    for (std::size_t i = 0; i < size_; ++i)
      if (get((i + shift) % size_)) out.set(i);
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }

  BitVec operator*(const BitVec& x) const {
    BitVec y(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      if (rows_[r].dot(x)) y.set(r);
    return y;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

  bool is_symmetric() const {
    if (rows() != cols_) return false;
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if (get(r, c) != get(c, r)) return false;
    return true;
  }

  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix s = a;
    for (std::size_t r = 0; r < s.rows(); ++r) s.rows_[r] ^= b.rows_[r];
    return s;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

namespace detail {

/// Reduced row echelon form in place; returns pivot column of each nonzero row.
inline std::vector<std::size_t> rref(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    std::swap(m.row(p), m.row(r));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(BitMatrix m) { return detail::rref(m).size(); }

/// Basis of { x : m x = 0 }, one vector per free column, in increasing
/// free-column order.
inline std::vector<BitVec> null_space(BitMatrix m) {
  const auto pivots = detail::rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec x(m.cols());
    x.set(free);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (m.get(r, free)) x.set(pivots[r]);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace rsquad
