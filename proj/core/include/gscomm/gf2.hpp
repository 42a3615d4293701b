#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "gscomm/errors.hpp"

// Exact linear algebra over GF(2). Addition is XOR, multiplication is AND.
//
// Indices are 0-based in code; everywhere a vector is tied to graph
// vertices, index 0 corresponds to vertex 1. The string form of a vector is
// most-significant-first, so "10" has bit 1 at index 0.

namespace gscomm {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : bits_(len, 0) {}

  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(std::string_view s);
  /// The low `len` bits of `value`, index 0 = most significant of the field.
  static BitVector from_unsigned(std::uint64_t value, std::size_t len);
  static BitVector of(std::initializer_list<int> bits);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, int v) { bits_[i] = static_cast<std::uint8_t>(v & 1); }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  bool any() const;
  std::uint64_t to_unsigned() const;
  std::string to_string() const;

  BitVector slice(std::size_t pos, std::size_t count) const;
  BitVector concat(const BitVector& tail) const;

  BitVector& operator^=(const BitVector& rhs);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// XOR-accumulated AND pairing: dot(u, v) = ⊕_i u_i v_i.
int dot(const BitVector& u, const BitVector& v);

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  int operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, int v) {
    entries_[r * cols_ + c] = static_cast<std::uint8_t>(v & 1);
  }
  void flip(std::size_t r, std::size_t c) { entries_[r * cols_ + c] ^= 1; }

  bool is_zero() const;
  /// Row rendered as '0'/'1' characters, column 0 first.
  std::string row_string(std::size_t r) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> entries_;
};

/// GF(2) row rank by Gaussian elimination. Pivots are chosen as the first
/// available 1 scanning columns left to right, rows top to bottom.
std::size_t rank(const BitMatrix& m);

/// Inverse over GF(2) via Gauss-Jordan on [M | I].
/// Throws NonSquareError for rectangular input, SingularError when
/// rank(m) < dimension.
BitMatrix invert(const BitMatrix& m);

BitMatrix transpose(const BitMatrix& m);

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
BitVector operator*(const BitMatrix& m, const BitVector& v);
BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);

/// Entries strictly below / strictly above the diagonal; the rest zeroed.
BitMatrix strictly_lower(const BitMatrix& m);
BitMatrix strictly_upper(const BitMatrix& m);

}  // namespace gscomm
