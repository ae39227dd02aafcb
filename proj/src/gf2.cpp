#include "framed/gf2.hpp"

#include <algorithm>

#include "framed/error.hpp"
#include "text.hpp"

namespace framed {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Syntax: return "SyntaxError";
    case Errc::Format: return "FormatError";
    case Errc::LetterCount: return "LetterCountError";
    case Errc::MarkMismatch: return "MarkMismatch";
    case Errc::NonSquare: return "NonSquare";
    case Errc::Singular: return "Singular";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::UnknownLetter: return "UnknownLetter";
    case Errc::NotInterlaced: return "NotInterlaced";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::InvalidTour: return "InvalidTour";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NoGaussCircuit: return "NoGaussCircuit";
    case Errc::HasGaussianChord: return "HasGaussianChord";
    case Errc::DiagonalNotOne: return "DiagonalNotOne";
    case Errc::NotSymPlus: return "NotSymPlus";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Error";
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      stride_((cols + word_bits - 1) / word_bits),
      data_(rows * stride_, 0) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : BitMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::Format, "ragged matrix literal");
    std::size_t j = 0;
    for (int v : r) {
      if (v != 0 && v != 1) throw Error(Errc::Format, "matrix entries must be 0 or 1");
      set(i, j++, v == 1);
    }
    ++i;
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) noexcept {
  auto& w = data_[i * stride_ + j / word_bits];
  const word_type bit = word_type{1} << (j % word_bits);
  w = value ? (w | bit) : (w & ~bit);
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) noexcept {
  auto d = row(dst);
  auto s = row(src);
  for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

bool BitMatrix::is_symmetric() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool BitMatrix::is_identity() const noexcept { return is_square() && *this == identity(rows_); }

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j)) t.set(j, i, true);
  return t;
}

bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const BitMatrix& a, const BitMatrix& b) noexcept {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (a(i, j) != b(i, j)) return b(i, j);
  return false;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(Errc::SizeMismatch, "matrix sum of different shapes");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] ^= other.data_[k];
  return *this;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::SizeMismatch, "matrix product shape mismatch");
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k)) continue;
      auto in = b.row(k);
      for (std::size_t w = 0; w < out.size(); ++w) out[w] ^= in[w];
    }
  }
  return c;
}

namespace {

// Forward elimination in place; returns the rank.
std::size_t eliminate(BitMatrix& m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i)
      if (m(i, c)) m.add_row(i, r);
    ++r;
  }
  return r;
}

void require_square(const BitMatrix& m, const char* what) {
  if (!m.is_square())
    throw Error(Errc::NonSquare, std::string(what) + " of a " + std::to_string(m.rows()) + "x" +
                                     std::to_string(m.cols()) + " matrix");
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
  BitMatrix work = m;
  return eliminate(work);
}

std::size_t corank(const BitMatrix& m) { return m.cols() - rank(m); }

bool det(const BitMatrix& m) {
  require_square(m, "determinant");
  return rank(m) == m.rows();
}

BitMatrix inverse(const BitMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  // Gauss-Jordan on (m | E).
  BitMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j)) aug.set(i, j, true);
    aug.set(i, n + i, true);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !aug(p, c)) ++p;
    if (p == n) throw Error(Errc::Singular, "matrix has determinant 0");
    aug.swap_rows(c, p);
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && aug(i, c)) aug.add_row(i, c);
  }
  BitMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (aug(i, n + j)) inv.set(i, j, true);
  return inv;
}

BitMatrix delete_rows_cols(const BitMatrix& m, std::span<const std::size_t> indices) {
  require_square(m, "row/column deletion");
  std::vector<bool> drop(m.rows(), false);
  for (std::size_t k : indices) {
    if (k >= m.rows())
      throw Error(Errc::IndexOutOfRange,
                  "index " + std::to_string(k) + " for size " + std::to_string(m.rows()));
    drop[k] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!drop[i]) keep.push_back(i);
  BitMatrix out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (m(keep[i], keep[j])) out.set(i, j, true);
  return out;
}

BitMatrix parse_bit_matrix(std::string_view text) {
  const auto tokens = detail::split_tokens(text);
  const std::size_t n = detail::matrix_header(tokens);
  BitMatrix m(n, n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const auto tok = tokens[1 + k];
    if (tok == "1")
      m.set(k / n, k % n, true);
    else if (tok != "0")
      throw Error(Errc::Format, "matrix entry '" + std::string(tok) + "' is not 0 or 1");
  }
  return m;
}

std::string to_text(const BitMatrix& m) {
  std::string out = std::to_string(m.rows()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace framed
