#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gscomm/gf2.hpp"

using namespace gscomm;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<int>(rng() & 1));
  }
  return m;
}

BitVector random_vector(std::size_t len, std::mt19937_64& rng) {
  BitVector v(len);
  for (std::size_t i = 0; i < len; ++i) v.set(i, static_cast<int>(rng() & 1));
  return v;
}

BitMatrix random_symmetric_zero_diagonal(std::size_t n, std::mt19937_64& rng) {
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      const int bit = static_cast<int>(rng() & 1);
      m.set(r, c, bit);
      m.set(c, r, bit);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("bit vector basics") {
  const BitVector v = BitVector::from_string("0101");
  CHECK(v.size() == 4);
  CHECK(v[0] == 0);
  CHECK(v[1] == 1);
  CHECK(v.to_string() == "0101");
  CHECK(v.to_unsigned() == 0b0101u);
  CHECK(BitVector::from_unsigned(0b0101u, 4) == v);

  CHECK(v.slice(0, 2) == BitVector::from_string("01"));
  CHECK(v.slice(2, 2) == BitVector::from_string("01"));
  CHECK(v.slice(0, 2).concat(v.slice(2, 2)) == v);

  CHECK_FALSE(BitVector(3).any());
  CHECK(v.any());
  CHECK_THROWS_AS(BitVector::from_string("01x"), Error);
}

TEST_CASE("xor is addition: a + a = 0") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const BitVector a = random_vector(1 + rng() % 12, rng);
    CHECK_FALSE((a ^ a).any());
  }
  CHECK_THROWS_AS(BitVector(3) ^ BitVector(4), DimensionError);
}

TEST_CASE("rank examples") {
  CHECK(rank(BitMatrix::identity(2)) == 2);
  // second row zero after elimination
  CHECK(rank(BitMatrix::from_rows({{1, 1}, {0, 0}})) == 1);
  // pivots in both columns
  CHECK(rank(BitMatrix::from_rows({{1, 0}, {1, 1}})) == 2);
  CHECK(rank(BitMatrix(3, 5)) == 0);
}

TEST_CASE("invert examples") {
  CHECK(invert(BitMatrix::identity(3)) == BitMatrix::identity(3));

  const BitMatrix m = BitMatrix::from_rows({{1, 0}, {1, 1}});
  const BitMatrix inv = invert(m);
  CHECK(inv == m);  // self-inverse: squaring gives I
  CHECK(m * inv == BitMatrix::identity(2));
  CHECK(inv * m == BitMatrix::identity(2));

  CHECK_THROWS_AS(invert(BitMatrix::from_rows({{1, 1}, {0, 0}})), SingularError);
  CHECK_THROWS_AS(invert(BitMatrix(2, 3)), NonSquareError);
}

TEST_CASE("matvec examples") {
  const BitVector v = BitVector::of({1, 0});
  CHECK(BitMatrix::identity(2) * v == v);
  CHECK(BitMatrix::from_rows({{1, 0}, {1, 1}}) * BitVector::of({1, 1}) == BitVector::of({1, 0}));
  CHECK_FALSE((BitMatrix(2, 2) * BitVector::of({1, 1})).any());
  CHECK_THROWS_AS(BitMatrix(2, 3) * BitVector(2), DimensionError);
}

TEST_CASE("matmul, add, transpose, dot examples") {
  CHECK(dot(BitVector::of({1, 1}), BitVector::of({1, 0})) == 1);
  CHECK(transpose(BitMatrix::from_rows({{1, 1}, {0, 0}})) ==
        BitMatrix::from_rows({{1, 0}, {1, 0}}));

  std::mt19937_64 rng(12);
  const BitMatrix m = random_matrix(3, 3, rng);
  CHECK(BitMatrix::identity(3) * m == m);
  CHECK((m + m).is_zero());
  CHECK_THROWS_AS(BitMatrix(2, 2) * BitMatrix(3, 3), DimensionError);
  CHECK_THROWS_AS(BitMatrix(2, 2) + BitMatrix(2, 3), DimensionError);
}

TEST_CASE("full-rank square matrices invert to a two-sided inverse") {
  std::mt19937_64 rng(13);
  int inverted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const BitMatrix m = random_matrix(n, n, rng);
    if (rank(m) == n) {
      const BitMatrix inv = invert(m);
      CHECK(m * inv == BitMatrix::identity(n));
      CHECK(inv * m == BitMatrix::identity(n));
      ++inverted;
    } else {
      CHECK_THROWS_AS(invert(m), SingularError);
    }
  }
  CHECK(inverted > 20);  // the sweep must exercise the invertible path
}

TEST_CASE("rank is invariant under elementary row operations") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 2 + rng() % 10;
    const std::size_t cols = 1 + rng() % 12;
    const BitMatrix m = random_matrix(rows, cols, rng);
    const std::size_t target = rng() % rows;
    std::size_t source = rng() % rows;
    while (source == target) source = rng() % rows;

    BitMatrix rowsum = m;
    for (std::size_t c = 0; c < cols; ++c) {
      rowsum.set(target, c, rowsum(target, c) ^ rowsum(source, c));
    }
    CHECK(rank(rowsum) == rank(m));
  }
}

TEST_CASE("rank equals the rank of the transpose") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const BitMatrix m = random_matrix(1 + rng() % 12, 1 + rng() % 12, rng);
    CHECK(rank(m) == rank(transpose(m)));
    CHECK(transpose(transpose(m)) == m);
  }
}

TEST_CASE("triangular splits of symmetric matrices are transposes of each other") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const BitMatrix m = random_symmetric_zero_diagonal(1 + rng() % 12, rng);
    const BitMatrix lower = strictly_lower(m);
    const BitMatrix upper = strictly_upper(m);
    CHECK(transpose(upper) == lower);
    CHECK(lower + upper == m);
  }
}

TEST_CASE("dot is bilinear") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t len = 1 + rng() % 12;
    const BitVector u = random_vector(len, rng);
    const BitVector w = random_vector(len, rng);
    const BitVector v = random_vector(len, rng);
    CHECK(dot(u ^ w, v) == (dot(u, v) ^ dot(w, v)));
  }
}
