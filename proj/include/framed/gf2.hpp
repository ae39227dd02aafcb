#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace framed {

/// Dense matrix over GF(2). Rows are packed into 64-bit words; row XOR is
/// the elementary operation. 0x0 matrices are valid values.
class BitMatrix {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  bool operator()(std::size_t i, std::size_t j) const noexcept {
    return (data_[i * stride_ + j / word_bits] >> (j % word_bits)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value) noexcept;
  void flip(std::size_t i, std::size_t j) noexcept {
    data_[i * stride_ + j / word_bits] ^= word_type{1} << (j % word_bits);
  }

  std::span<word_type> row(std::size_t i) noexcept { return {data_.data() + i * stride_, stride_}; }
  std::span<const word_type> row(std::size_t i) const noexcept {
    return {data_.data() + i * stride_, stride_};
  }
  /// row(dst) += row(src)
  void add_row(std::size_t dst, std::size_t src) noexcept;
  void swap_rows(std::size_t a, std::size_t b) noexcept;

  bool is_symmetric() const noexcept;
  bool is_identity() const noexcept;
  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept;
  /// Row-major lexicographic order; only meaningful between equal shapes.
  friend bool operator<(const BitMatrix& a, const BitMatrix& b) noexcept;

  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<word_type> data_;
};

std::size_t rank(const BitMatrix& m);
/// cols - rank
std::size_t corank(const BitMatrix& m);
bool det(const BitMatrix& m);
BitMatrix inverse(const BitMatrix& m);
BitMatrix delete_rows_cols(const BitMatrix& m, std::span<const std::size_t> indices);

/// Text format: first line n, then n rows of n tokens from {0,1}.
BitMatrix parse_bit_matrix(std::string_view text);
std::string to_text(const BitMatrix& m);

}  // namespace framed
