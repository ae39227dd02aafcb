#include "framed/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "framed/error.hpp"
#include "text.hpp"

namespace framed {

char framing_symbol(Framing f) noexcept {
  switch (f) {
    case Framing::Zero: return '0';
    case Framing::One: return '1';
    case Framing::Gauss: return 'G';
  }
  return '?';
}

Framing framing_of_marks(Mark first, Mark second) {
  if (first == Mark::Gauss && second == Mark::Gauss) return Framing::Gauss;
  if (first == Mark::Gauss || second == Mark::Gauss)
    throw Error(Errc::MarkMismatch, "a letter carries one Gauss mark and one +-1 mark");
  return first == second ? Framing::Zero : Framing::One;
}

FramedWord::FramedWord(std::vector<std::string> alphabet, std::vector<std::size_t> sequence,
                       std::vector<Framing> framings)
    : alphabet_(std::move(alphabet)), sequence_(std::move(sequence)), framings_(std::move(framings)) {
  const std::size_t n = alphabet_.size();
  if (framings_.size() != n) throw Error(Errc::SizeMismatch, "one framing per letter required");
  if (sequence_.size() != 2 * n)
    throw Error(Errc::LetterCount, "word length " + std::to_string(sequence_.size()) +
                                       " does not match " + std::to_string(n) + " letters");
  std::vector<std::size_t> seen(n, 0);
  occ_.assign(n, {0, 0});
  for (std::size_t pos = 0; pos < sequence_.size(); ++pos) {
    const std::size_t l = sequence_[pos];
    if (l >= n) throw Error(Errc::UnknownLetter, "letter index " + std::to_string(l));
    if (seen[l] == 2)
      throw Error(Errc::LetterCount, "letter '" + alphabet_[l] + "' occurs more than twice");
    occ_[l][seen[l]++] = pos;
  }
  for (std::size_t l = 0; l < n; ++l)
    if (seen[l] != 2) throw Error(Errc::LetterCount, "letter '" + alphabet_[l] + "' occurs once");
}

Mark FramedWord::mark_at(std::size_t pos) const noexcept {
  const std::size_t l = sequence_[pos];
  switch (framings_[l]) {
    case Framing::Gauss: return Mark::Gauss;
    case Framing::Zero: return Mark::Plus;
    case Framing::One: return pos == occ_[l][0] ? Mark::Plus : Mark::Minus;
  }
  return Mark::Plus;
}

std::size_t FramedWord::gaussian_count() const noexcept {
  return static_cast<std::size_t>(std::count(framings_.begin(), framings_.end(), Framing::Gauss));
}

std::optional<std::size_t> FramedWord::find_letter(std::string_view name) const noexcept {
  for (std::size_t l = 0; l < alphabet_.size(); ++l)
    if (alphabet_[l] == name) return l;
  return std::nullopt;
}

std::size_t FramedWord::letter_index(std::string_view name) const {
  if (auto l = find_letter(name)) return *l;
  throw Error(Errc::UnknownLetter, "no letter '" + std::string(name) + "' in word");
}

// ---------------------------------------------------------------------------
// Parsing and printing

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Mark parse_suffix(std::string_view body, std::size_t& i) {
  // body[i] == '^'
  ++i;
  std::string_view sfx;
  if (i < body.size() && body[i] == '{') {
    const auto close = body.find('}', i);
    if (close == std::string_view::npos) throw Error(Errc::Syntax, "unterminated '^{'");
    sfx = body.substr(i + 1, close - i - 1);
    i = close + 1;
  } else {
    std::size_t j = i;
    if (j < body.size() && (body[j] == 'G' || body[j] == 'g')) {
      ++j;
    } else {
      if (j < body.size() && (body[j] == '-' || body[j] == '+')) ++j;
      while (j < body.size() && is_digit(body[j])) ++j;
    }
    sfx = body.substr(i, j - i);
    i = j;
  }
  if (sfx == "G" || sfx == "g") return Mark::Gauss;
  if (sfx == "-1") return Mark::Minus;
  if (sfx == "1" || sfx == "+1") return Mark::Plus;
  throw Error(Errc::Syntax, "unknown superscript '^" + std::string(sfx) + "'");
}

}  // namespace

FramedWord parse_word(std::string_view text) {
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw Error(Errc::Syntax, "a word must be enclosed in parentheses");
  const std::string_view body = text.substr(1, text.size() - 2);
  const bool spaced = std::any_of(body.begin(), body.end(), is_space);

  std::vector<std::string> alphabet;
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<std::size_t> sequence;
  std::vector<std::vector<Mark>> marks;

  std::size_t i = 0;
  while (true) {
    while (i < body.size() && is_space(body[i])) ++i;
    if (i == body.size()) break;
    if (!is_alpha(body[i]))
      throw Error(Errc::Syntax, "unexpected '" + std::string(1, body[i]) + "' at offset " +
                                    std::to_string(i + 1));
    const std::size_t start = i++;
    while (i < body.size() &&
           (is_digit(body[i]) || body[i] == '_' || (spaced && is_alpha(body[i]))))
      ++i;
    std::string name(body.substr(start, i - start));
    Mark mark = Mark::Plus;
    if (i < body.size() && body[i] == '^') mark = parse_suffix(body, i);
    if (spaced && i < body.size() && !is_space(body[i]))
      throw Error(Errc::Syntax, "unexpected '" + std::string(1, body[i]) + "' after '" + name + "'");

    auto it = index.find(name);
    if (it == index.end()) {
      it = index.emplace(name, alphabet.size()).first;
      alphabet.push_back(name);
      marks.emplace_back();
    }
    sequence.push_back(it->second);
    marks[it->second].push_back(mark);
  }

  std::vector<Framing> framings;
  framings.reserve(alphabet.size());
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    if (marks[l].size() != 2)
      throw Error(Errc::LetterCount, "letter '" + alphabet[l] + "' occurs " +
                                         std::to_string(marks[l].size()) + " times");
    framings.push_back(framing_of_marks(marks[l][0], marks[l][1]));
  }
  return FramedWord(std::move(alphabet), std::move(sequence), std::move(framings));
}

std::string to_text(const FramedWord& w) {
  std::string out = "(";
  for (std::size_t pos = 0; pos < w.length(); ++pos) {
    if (pos) out += ' ';
    out += w.alphabet()[w.at(pos)];
    switch (w.mark_at(pos)) {
      case Mark::Gauss: out += "^G"; break;
      case Mark::Minus: out += "^-1"; break;
      case Mark::Plus: break;
    }
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Symmetries

FramedWord with_alphabet(const FramedWord& w, const std::vector<std::string>& order) {
  if (order.size() != w.letter_count())
    throw Error(Errc::UnknownLetter, "alphabet has " + std::to_string(order.size()) +
                                         " names, word has " + std::to_string(w.letter_count()));
  std::vector<std::size_t> to_new(w.letter_count(), w.letter_count());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t old = w.letter_index(order[k]);
    if (to_new[old] != w.letter_count())
      throw Error(Errc::UnknownLetter, "letter '" + order[k] + "' listed twice");
    to_new[old] = k;
  }
  std::vector<std::size_t> seq;
  seq.reserve(w.length());
  for (std::size_t l : w.sequence()) seq.push_back(to_new[l]);
  std::vector<Framing> fr(w.letter_count());
  for (std::size_t l = 0; l < w.letter_count(); ++l) fr[to_new[l]] = w.framing(l);
  return FramedWord(order, std::move(seq), std::move(fr));
}

FramedWord rotate(const FramedWord& w, std::size_t k) {
  if (w.empty()) return w;
  std::vector<std::size_t> seq(w.sequence());
  std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k % seq.size()), seq.end());
  return FramedWord(w.alphabet(), std::move(seq), w.framings());
}

FramedWord mirror_bar(const FramedWord& w) {
  std::vector<std::size_t> seq(w.sequence().rbegin(), w.sequence().rend());
  return FramedWord(w.alphabet(), std::move(seq), w.framings());
}

namespace {

// Visits the 2 * length readings of the cyclic word (every start, both directions).
template <typename F>
void for_each_reading(const FramedWord& w, F&& f) {
  const std::size_t len = w.length();
  std::vector<std::size_t> reading(len);
  for (int dir = 0; dir < 2; ++dir)
    for (std::size_t s = 0; s < len; ++s) {
      for (std::size_t k = 0; k < len; ++k)
        reading[k] = w.at(dir == 0 ? (s + k) % len : (s + len - k) % len);
      f(reading);
    }
}

}  // namespace

FramedWord canonical(const FramedWord& w) {
  const std::size_t n = w.letter_count();
  std::vector<std::size_t> best_key;
  std::vector<std::size_t> best_seq;
  std::vector<Framing> best_framings;
  std::vector<std::size_t> relabel(n);
  std::vector<std::size_t> key(w.length());
  std::vector<std::size_t> seq(w.length());
  for_each_reading(w, [&](const std::vector<std::size_t>& reading) {
    std::fill(relabel.begin(), relabel.end(), n);
    std::size_t next = 0;
    for (std::size_t k = 0; k < reading.size(); ++k) {
      auto& r = relabel[reading[k]];
      if (r == n) r = next++;
      seq[k] = r;
      key[k] = 3 * r + static_cast<std::size_t>(w.framing(reading[k]));
    }
    if (best_key.empty() || key < best_key) {
      best_key = key;
      best_seq = seq;
      best_framings.assign(n, Framing::Zero);
      for (std::size_t l = 0; l < n; ++l) best_framings[relabel[l]] = w.framing(l);
    }
  });
  std::vector<std::string> names;
  for (std::size_t l = 0; l < n; ++l) names.push_back("v" + std::to_string(l + 1));
  return FramedWord(std::move(names), std::move(best_seq), std::move(best_framings));
}

FramedWord least_reading(const FramedWord& w) {
  FramedWord best = w;
  const FramedWord m = mirror_bar(w);
  for (std::size_t k = 0; k < w.length(); ++k)
    for (const FramedWord* src : {&w, &m}) {
      FramedWord r = rotate(*src, k);
      if (r.sequence() < best.sequence()) best = std::move(r);
    }
  return best;
}

std::vector<std::size_t> class_key(const FramedWord& w) {
  std::vector<std::size_t> best;
  for_each_reading(w, [&](const std::vector<std::size_t>& reading) {
    if (best.empty() || reading < best) best = reading;
  });
  for (Framing f : w.framings()) best.push_back(static_cast<std::size_t>(f));
  return best;
}

bool equivalent(const FramedWord& a, const FramedWord& b) {
  if (a.letter_count() != b.letter_count()) return false;
  // Re-express b over a's alphabet.
  std::vector<std::size_t> to_a(b.letter_count());
  for (std::size_t l = 0; l < b.letter_count(); ++l) {
    auto idx = a.find_letter(b.alphabet()[l]);
    if (!idx) return false;
    to_a[l] = *idx;
  }
  std::vector<std::size_t> seq;
  for (std::size_t l : b.sequence()) seq.push_back(to_a[l]);
  std::vector<Framing> fr(a.letter_count());
  for (std::size_t l = 0; l < b.letter_count(); ++l) fr[to_a[l]] = b.framing(l);
  return class_key(a) == class_key(FramedWord(a.alphabet(), std::move(seq), std::move(fr)));
}

// ---------------------------------------------------------------------------
// Interlacement and adjacency

namespace {

void require_letter(const FramedWord& w, std::size_t l) {
  if (l >= w.letter_count())
    throw Error(Errc::UnknownLetter, "letter index " + std::to_string(l) + " out of " +
                                         std::to_string(w.letter_count()));
}

bool interlaced_unchecked(const FramedWord& w, std::size_t a, std::size_t b) {
  const auto [a1, a2] = w.occurrences(a);
  const auto [b1, b2] = w.occurrences(b);
  return ((a1 < b1 && b1 < a2) != (a1 < b2 && b2 < a2));
}

}  // namespace

bool interlaced(const FramedWord& w, std::size_t a, std::size_t b) {
  require_letter(w, a);
  require_letter(w, b);
  if (a == b) throw Error(Errc::PreconditionViolated, "interlacement of a letter with itself");
  return interlaced_unchecked(w, a, b);
}

FramedAdjacency::FramedAdjacency(BitMatrix off, std::vector<Framing> d)
    : offdiag(std::move(off)), diag(std::move(d)) {
  if (offdiag.rows() != diag.size() || offdiag.cols() != diag.size())
    throw Error(Errc::SizeMismatch, "off-diagonal block does not match the diagonal length");
  if (!offdiag.is_symmetric()) throw Error(Errc::Format, "adjacency is not symmetric");
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (offdiag(i, i)) throw Error(Errc::Format, "off-diagonal block has a diagonal entry");
}

BitMatrix FramedAdjacency::bits() const {
  BitMatrix m = offdiag;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == Framing::Gauss)
      throw Error(Errc::PreconditionViolated, "Gaussian diagonal entry has no bit value");
    m.set(i, i, diag[i] == Framing::One);
  }
  return m;
}

FramedAdjacency adjacency(const FramedWord& w) {
  const std::size_t n = w.letter_count();
  BitMatrix off(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (interlaced_unchecked(w, i, j)) {
        off.set(i, j, true);
        off.set(j, i, true);
      }
  return FramedAdjacency(std::move(off), w.framings());
}

FramedAdjacency parse_framed_adjacency(std::string_view text) {
  const auto tokens = detail::split_tokens(text);
  const std::size_t n = detail::matrix_header(tokens);
  BitMatrix off(n, n);
  std::vector<Framing> diag(n, Framing::Zero);
  for (std::size_t k = 0; k < n * n; ++k) {
    const auto tok = tokens[1 + k];
    const std::size_t i = k / n, j = k % n;
    if (i == j) {
      if (tok == "0") diag[i] = Framing::Zero;
      else if (tok == "1") diag[i] = Framing::One;
      else if (tok == "G") diag[i] = Framing::Gauss;
      else throw Error(Errc::Format, "diagonal entry '" + std::string(tok) + "' not in {0,1,G}");
    } else if (tok == "1") {
      off.set(i, j, true);
    } else if (tok != "0") {
      throw Error(Errc::Format, "off-diagonal entry '" + std::string(tok) + "' not in {0,1}");
    }
  }
  return FramedAdjacency(std::move(off), std::move(diag));
}

std::string to_text(const FramedAdjacency& a) {
  std::string out = std::to_string(a.size()) + "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) out += ' ';
      out += i == j ? framing_symbol(a.diag[i]) : (a.offdiag(i, j) ? '1' : '0');
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Framed star

FramedWord framed_star(const FramedWord& w, std::size_t a) {
  require_letter(w, a);
  const auto [p1, p2] = w.occurrences(a);
  std::vector<std::size_t> seq(w.sequence());
  std::reverse(seq.begin() + static_cast<std::ptrdiff_t>(p1 + 1),
               seq.begin() + static_cast<std::ptrdiff_t>(p2));

  std::vector<std::size_t> inside(w.letter_count(), 0);
  for (std::size_t pos = p1 + 1; pos < p2; ++pos) ++inside[w.at(pos)];

  std::vector<Framing> fr(w.framings());
  for (std::size_t l = 0; l < fr.size(); ++l) {
    if (l == a || inside[l] != 1) continue;
    // Conjugating exactly one of the two marks toggles a non-Gaussian framing.
    if (fr[l] == Framing::Zero) fr[l] = Framing::One;
    else if (fr[l] == Framing::One) fr[l] = Framing::Zero;
  }
  if (fr[a] == Framing::Gauss) fr[a] = Framing::Zero;
  else if (fr[a] == Framing::Zero) fr[a] = Framing::Gauss;
  return FramedWord(w.alphabet(), std::move(seq), std::move(fr));
}

FramedWord star_pivot(const FramedWord& w, std::size_t a, std::size_t b) {
  if (!interlaced(w, a, b))
    throw Error(Errc::NotInterlaced,
                "'" + w.alphabet()[a] + "' and '" + w.alphabet()[b] + "' do not alternate");
  return framed_star(framed_star(framed_star(w, a), b), a);
}

}  // namespace framed
