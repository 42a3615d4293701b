#include "gscomm/gf2.hpp"

#include <algorithm>
#include <utility>

namespace gscomm {

BitVector BitVector::from_string(std::string_view s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') {
      throw Error("bit string must contain only '0'/'1', got '" + std::string(s) + "'");
    }
    v.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
  }
  return v;
}

BitVector BitVector::from_unsigned(std::uint64_t value, std::size_t len) {
  BitVector v(len);
  for (std::size_t i = 0; i < len; ++i) {
    v.bits_[i] = static_cast<std::uint8_t>((value >> (len - 1 - i)) & 1u);
  }
  return v;
}

BitVector BitVector::of(std::initializer_list<int> bits) {
  BitVector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) v.bits_[i++] = static_cast<std::uint8_t>(b & 1);
  return v;
}

bool BitVector::any() const {
  return std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
}

std::uint64_t BitVector::to_unsigned() const {
  std::uint64_t value = 0;
  for (std::uint8_t b : bits_) value = (value << 1) | b;
  return value;
}

std::string BitVector::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

BitVector BitVector::slice(std::size_t pos, std::size_t count) const {
  if (pos + count > bits_.size()) throw DimensionError("slice out of range");
  BitVector v(count);
  std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(pos), count, v.bits_.begin());
  return v;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector v(bits_.size() + tail.bits_.size());
  std::copy(bits_.begin(), bits_.end(), v.bits_.begin());
  std::copy(tail.bits_.begin(), tail.bits_.end(),
            v.bits_.begin() + static_cast<std::ptrdiff_t>(bits_.size()));
  return v;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
  if (bits_.size() != rhs.bits_.size()) throw DimensionError("vector length mismatch in xor");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= rhs.bits_[i];
  return *this;
}

int dot(const BitVector& u, const BitVector& v) {
  if (u.size() != v.size()) throw DimensionError("vector length mismatch in dot");
  int acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc ^= u[i] & v[i];
  return acc;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  BitMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged row in matrix literal");
    std::size_t j = 0;
    for (int v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

bool BitMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::uint8_t b) { return b == 0; });
}

std::string BitMatrix::row_string(std::size_t r) const {
  std::string s(cols_, '0');
  for (std::size_t c = 0; c < cols_; ++c) s[c] = static_cast<char>('0' + (*this)(r, c));
  return s;
}

namespace {

void xor_row_into(BitMatrix& m, std::size_t target, std::size_t source) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    m.set(target, c, m(target, c) ^ m(source, c));
  }
}

void swap_rows(BitMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const int t = m(a, c);
    m.set(a, c, m(b, c));
    m.set(b, c, t);
  }
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
  BitMatrix w = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < w.cols() && r < w.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < w.rows() && w(pivot, col) == 0) ++pivot;
    if (pivot == w.rows()) continue;
    swap_rows(w, r, pivot);
    for (std::size_t row = pivot + 1; row < w.rows(); ++row) {
      if (w(row, col)) xor_row_into(w, row, r);
    }
    ++r;
  }
  return r;
}

BitMatrix invert(const BitMatrix& m) {
  if (!m.is_square()) throw NonSquareError("invert requires a square matrix");
  const std::size_t n = m.rows();
  // Gauss-Jordan on the augmented matrix [M | I].
  BitMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, 1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularError("matrix is singular over GF(2)");
    swap_rows(aug, col, pivot);
    for (std::size_t row = 0; row < n; ++row) {
      if (row != col && aug(row, col)) xor_row_into(aug, row, col);
    }
  }
  BitMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug(i, n + j));
  }
  return inv;
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t.set(c, r, m(r, c));
  }
  return t;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix shape mismatch in product");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      int acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc ^= a(i, k) & b(k, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

BitVector operator*(const BitMatrix& m, const BitVector& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix/vector shape mismatch in product");
  BitVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc ^= m(i, j) & v[j];
    out.set(i, acc);
  }
  return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shape mismatch in sum");
  }
  BitMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c) ^ b(r, c));
  }
  return out;
}

BitMatrix strictly_lower(const BitMatrix& m) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < r && c < m.cols(); ++c) out.set(r, c, m(r, c));
  }
  return out;
}

BitMatrix strictly_upper(const BitMatrix& m) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r + 1; c < m.cols(); ++c) out.set(r, c, m(r, c));
  }
  return out;
}

}  // namespace gscomm
