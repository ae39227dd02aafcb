#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "framed/gf2.hpp"

namespace framed {

/// Superscript carried by one occurrence of a letter.
enum class Mark { Plus, Minus, Gauss };

/// How a tour passes a vertex: straight through (Gauss), or turning with the
/// two passes marked alike (Zero) or unlike (One).
enum class Framing { Zero, One, Gauss };

char framing_symbol(Framing f) noexcept;
Framing framing_of_marks(Mark first, Mark second);

/// A framed double-occurrence cyclic word.
///
/// Letters are indices into `alphabet()`; that order is also the row order of
/// every matrix built from the word. Only the framing of a letter is stored:
/// the per-occurrence marks are a presentation detail (Zero prints as two
/// plain occurrences, One as plain then `^-1`, Gauss as `^G` twice).
///
/// `operator==` compares representations. Use `equivalent` for equality of
/// cyclic classes, or compare `canonical` forms for equality up to renaming.
class FramedWord {
 public:
  FramedWord() = default;
  FramedWord(std::vector<std::string> alphabet, std::vector<std::size_t> sequence,
             std::vector<Framing> framings);

  std::size_t letter_count() const noexcept { return alphabet_.size(); }
  std::size_t length() const noexcept { return sequence_.size(); }
  bool empty() const noexcept { return sequence_.empty(); }

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }
  const std::vector<Framing>& framings() const noexcept { return framings_; }

  std::size_t at(std::size_t pos) const noexcept { return sequence_[pos]; }
  Framing framing(std::size_t letter) const noexcept { return framings_[letter]; }
  Mark mark_at(std::size_t pos) const noexcept;
  /// Positions of the two occurrences, ascending.
  std::array<std::size_t, 2> occurrences(std::size_t letter) const noexcept { return occ_[letter]; }

  std::size_t gaussian_count() const noexcept;
  std::optional<std::size_t> find_letter(std::string_view name) const noexcept;
  /// Throws UnknownLetter.
  std::size_t letter_index(std::string_view name) const;

  friend bool operator==(const FramedWord&, const FramedWord&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::size_t> sequence_;
  std::vector<Framing> framings_;
  std::vector<std::array<std::size_t, 2>> occ_;
};

/// Grammar: `"(" token* ")"`, `token := ident ("^G" | "^-1" | "^+1" | "^1")?`.
/// Braced suffixes (`^{-1}`, `^{G}`) are accepted. Without any whitespace in
/// the body, every alphabetic character starts a new identifier, so
/// `(ab^{-1}acd^Ge^{-1}d^Gb^{-1}c^{-1}e)` and `(v1v4v2v1^{-1}...)` both parse.
FramedWord parse_word(std::string_view text);
std::string to_text(const FramedWord& w);

/// Same word with its letters re-indexed in the given name order. Throws
/// UnknownLetter unless `order` is a permutation of the alphabet.
FramedWord with_alphabet(const FramedWord& w, const std::vector<std::string>& order);

FramedWord rotate(const FramedWord& w, std::size_t k);
/// Reversal with mark conjugation; framings are unchanged.
FramedWord mirror_bar(const FramedWord& w);

/// Same labelled class, read from the rotation/reflection whose index
/// sequence is least. Names and alphabet order are kept.
FramedWord least_reading(const FramedWord& w);

/// Unique representative of the cyclic class up to renaming: letters are
/// relabelled v1..vn by first occurrence and the lexicographically least
/// rotation/reflection is chosen.
FramedWord canonical(const FramedWord& w);

/// Same cyclic class with letter names respected.
bool equivalent(const FramedWord& a, const FramedWord& b);
/// Hashable key of the labelled cyclic class; `equivalent(a, b)` iff keys match
/// (for words over the same alphabet).
std::vector<std::size_t> class_key(const FramedWord& w);

bool interlaced(const FramedWord& w, std::size_t a, std::size_t b);

/// Symmetric adjacency of a framed chord diagram: interlacement off the
/// diagonal, framing on it.
struct FramedAdjacency {
  BitMatrix offdiag;
  std::vector<Framing> diag;

  FramedAdjacency() = default;
  FramedAdjacency(BitMatrix off, std::vector<Framing> d);

  std::size_t size() const noexcept { return diag.size(); }
  /// Zero/One diagonal as bits; Gaussian entries must be absent.
  BitMatrix bits() const;

  friend bool operator==(const FramedAdjacency&, const FramedAdjacency&) = default;
};

FramedAdjacency adjacency(const FramedWord& w);

/// Text format: n, then n rows; diagonal tokens in {0,1,G}, off-diagonal in {0,1}.
FramedAdjacency parse_framed_adjacency(std::string_view text);
std::string to_text(const FramedAdjacency& a);

/// Framed star at letter `a`: the segment between the two occurrences of `a`
/// is reversed with marks conjugated, and `a` goes Gauss->Zero, Zero->Gauss,
/// One->One.
FramedWord framed_star(const FramedWord& w, std::size_t a);
/// ((w * a) * b) * a for interlaced a, b.
FramedWord star_pivot(const FramedWord& w, std::size_t a, std::size_t b);

}  // namespace framed
