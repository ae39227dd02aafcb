#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "framed/error.hpp"
#include "framed/gf2.hpp"

using namespace framed;

namespace {

BitMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& gen) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, gen() & 1U);
  return m;
}

// Size of the row span is 2^rank.
std::size_t span_rank(const BitMatrix& m) {
  std::set<std::vector<bool>> span;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
    std::vector<bool> v(m.cols(), false);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (mask >> i & 1U)
        for (std::size_t j = 0; j < m.cols(); ++j) v[j] = v[j] != m(i, j);
    span.insert(v);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

// Over GF(2) the determinant is the permanent mod 2.
bool permutation_det(const BitMatrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), std::size_t{0});
  bool d = false;
  do {
    bool term = true;
    for (std::size_t i = 0; i < p.size() && term; ++i) term = m(i, p[i]);
    d = d != term;
  } while (std::next_permutation(p.begin(), p.end()));
  return d;
}

const BitMatrix u1_plus_e{{0, 1, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 1}};
const BitMatrix u1_inverse{{0, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};

}  // namespace

TEST_CASE("rank of small examples") {
  CHECK(rank(BitMatrix{{1, 1}, {1, 1}}) == 1);
  CHECK(rank(BitMatrix::identity(4)) == 4);
  CHECK(rank(u1_plus_e) == 4);
  CHECK(rank(BitMatrix(3, 5)) == 0);
  CHECK(corank(BitMatrix{{1, 1}, {1, 1}}) == 1);
  CHECK(rank(BitMatrix{}) == 0);
}

TEST_CASE("rank agrees with the size of the row span") {
  std::mt19937_64 gen(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + gen() % 7, c = 1 + gen() % 7;
    const BitMatrix m = random_matrix(r, c, gen);
    REQUIRE(rank(m) == span_rank(m));
    CHECK(rank(m) == rank(m.transposed()));
  }
}

TEST_CASE("rank across word boundaries") {
  std::mt19937_64 gen(8);
  for (std::size_t n : {63, 64, 65, 130}) {
    BitMatrix m = BitMatrix::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, gen() & 1U);
    CHECK(rank(m) == n);  // unit upper triangular
    m.add_row(n - 1, 0);
    m.set(n - 1, n - 1, false);
    BitMatrix dup = m;
    dup.add_row(1, 0);
    CHECK(rank(dup) == rank(m));
  }
}

TEST_CASE("det") {
  CHECK_FALSE(det(BitMatrix{{1, 1}, {1, 1}}));
  CHECK(det(BitMatrix{}));
  CHECK(det(u1_plus_e));
  CHECK_THROWS_AS(det(BitMatrix(2, 3)), Error);
}

TEST_CASE("det agrees with the permutation expansion") {
  std::mt19937_64 gen(9);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = gen() % 7;
    const BitMatrix m = random_matrix(n, n, gen);
    REQUIRE(det(m) == permutation_det(m));
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(BitMatrix::identity(3)) == BitMatrix::identity(3));
  CHECK(inverse(u1_plus_e) == u1_inverse);
  CHECK((u1_plus_e * u1_inverse).is_identity());
  CHECK(inverse(BitMatrix{}) == BitMatrix{});
  try {
    inverse(BitMatrix{{1, 1}, {1, 1}});
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Singular);
  }

  std::mt19937_64 gen(10);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + gen() % 9;
    const BitMatrix m = random_matrix(n, n, gen);
    if (!det(m)) {
      CHECK_THROWS_AS(inverse(m), Error);
      continue;
    }
    const BitMatrix inv = inverse(m);
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
  }
}

TEST_CASE("delete_rows_cols") {
  // Adjacency with Gaussian diagonal entry of d replaced by 0.
  const BitMatrix five_chords{{0, 1, 0, 0, 0},
                       {1, 0, 1, 0, 1},
                       {0, 1, 1, 0, 1},
                       {0, 0, 0, 0, 1},
                       {0, 1, 1, 1, 1}};
  const std::vector<std::size_t> d{3};
  CHECK(delete_rows_cols(five_chords, d) ==
        BitMatrix{{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}});
  const std::vector<std::size_t> all{0, 1, 2, 3, 4};
  const BitMatrix empty = delete_rows_cols(five_chords, all);
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 0);
  CHECK(delete_rows_cols(five_chords, {}) == five_chords);
  const std::vector<std::size_t> bad{5};
  CHECK_THROWS_AS(delete_rows_cols(five_chords, bad), Error);
}

TEST_CASE("matrix text format") {
  const BitMatrix m = parse_bit_matrix("3\n1 0 1\n0 1 1\n1 1 0\n");
  CHECK(m == BitMatrix{{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  CHECK(parse_bit_matrix(to_text(u1_inverse)) == u1_inverse);
  CHECK(to_text(BitMatrix{}) == "0\n");
  for (const char* bad : {"", "2\n1 0\n", "2\n1 0\n0 2\n", "x\n", "1\n1 1\n"}) {
    INFO(bad);
    try {
      parse_bit_matrix(bad);
      FAIL("expected Format");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::Format);
    }
  }
}

TEST_CASE("arithmetic") {
  const BitMatrix a{{1, 0}, {1, 1}};
  CHECK(a + a == BitMatrix(2, 2));
  CHECK(a * BitMatrix::identity(2) == a);
  CHECK(a.transposed() == BitMatrix{{1, 1}, {0, 1}});
  CHECK_FALSE(a.is_symmetric());
  CHECK(u1_inverse.is_symmetric());
  CHECK_THROWS_AS(a + BitMatrix(3, 3), Error);
}
