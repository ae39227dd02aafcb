#pragma once

// Tokenizer shared by the matrix text formats.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "framed/error.hpp"

namespace framed::detail {

inline std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

/// Parses the leading size token and checks that exactly n*n tokens follow.
inline std::size_t matrix_header(const std::vector<std::string_view>& tokens) {
  if (tokens.empty()) throw Error(Errc::Format, "empty matrix text");
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(tokens[0].data(), tokens[0].data() + tokens[0].size(), n);
  if (ec != std::errc{} || ptr != tokens[0].data() + tokens[0].size())
    throw Error(Errc::Format, "bad matrix size '" + std::string(tokens[0]) + "'");
  if (tokens.size() != 1 + n * n)
    throw Error(Errc::Format, "expected " + std::to_string(n * n) + " entries, got " +
                                  std::to_string(tokens.size() - 1));
  return n;
}

}  // namespace framed::detail
