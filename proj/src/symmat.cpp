#include "framed/symmat.hpp"

#include <deque>
#include <set>
#include <utility>

#include "framed/error.hpp"

namespace framed {

SymMatrix::SymMatrix(BitMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw Error(Errc::NonSquare, "symmetric matrix must be square");
  if (!m_.is_symmetric()) throw Error(Errc::Format, "matrix is not symmetric");
}

void SymMatrix::set(std::size_t i, std::size_t j, bool value) noexcept {
  m_.set(i, j, value);
  m_.set(j, i, value);
}

void SymMatrix::flip(std::size_t i, std::size_t j) noexcept {
  m_.flip(i, j);
  if (i != j) m_.flip(j, i);
}

SymMatrix parse_sym_matrix(std::string_view text) { return SymMatrix(parse_bit_matrix(text)); }

std::string to_text(const SymMatrix& a) { return to_text(a.bits()); }

bool in_sym_plus(const SymMatrix& a) { return det(a.bits() + BitMatrix::identity(a.size())); }

namespace {

void require_index(const SymMatrix& a, std::size_t k) {
  if (k >= a.size())
    throw Error(Errc::IndexOutOfRange,
                "index " + std::to_string(k) + " for size " + std::to_string(a.size()));
}

}  // namespace

SymMatrix loc_formal(const SymMatrix& a, std::size_t k) {
  require_index(a, k);
  SymMatrix r = a;
  const std::size_t n = a.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (p == k || !a(p, k)) continue;
    for (std::size_t q = p; q < n; ++q)
      if (q != k && a(k, q)) r.flip(p, q);
  }
  return r;
}

SymMatrix loc(const SymMatrix& a, std::size_t k) {
  require_index(a, k);
  if (!a(k, k))
    throw Error(Errc::DiagonalNotOne, "local complementation needs a_kk = 1 at k = " + std::to_string(k));
  return loc_formal(a, k);
}

SymMatrix pivot(const SymMatrix& a, std::size_t i, std::size_t j) {
  require_index(a, i);
  require_index(a, j);
  if (i == j || a(i, i) || a(j, j) || !a(i, j))
    throw Error(Errc::PreconditionViolated, "pivot needs a_ii = a_jj = 0 and a_ij = 1");
  SymMatrix r = loc_formal(loc_formal(loc_formal(a, i), j), i);
  for (std::size_t k = 0; k < a.size(); ++k) r.set(k, k, a(k, k));
  return r;
}

bool equiv_D(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw Error(Errc::SizeMismatch, "matrices of different sizes");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

std::vector<SymMatrix> orbit_C(const SymMatrix& a, std::size_t bound) {
  const std::size_t n = a.size();
  if (n > bound)
    throw Error(Errc::TooLarge,
                "orbit search for n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::set<SymMatrix> seen{a};
  std::deque<SymMatrix> queue{a};
  auto visit = [&](SymMatrix m) {
    if (seen.insert(m).second) queue.push_back(std::move(m));
  };
  while (!queue.empty()) {
    const SymMatrix m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < n; ++k)
      if (m(k, k)) visit(loc(m, k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!m(i, i) && !m(j, j) && m(i, j)) visit(pivot(m, i, j));
  }
  return {seen.begin(), seen.end()};
}

DiagClass diag_class(const SymMatrix& a) {
  SymMatrix r = a;
  for (std::size_t k = 0; k < a.size(); ++k) r.set(k, k, false);
  return {std::move(r)};
}

CircuitClass circuit_class(const SymMatrix& a, std::size_t bound) {
  if (a.size() > bound) return {a, false};
  return {orbit_C(a, bound).front(), true};
}

DiagClass chi(const SymMatrix& a) {
  const BitMatrix b = a.bits() + BitMatrix::identity(a.size());
  if (!det(b)) throw Error(Errc::NotSymPlus, "det(A + E) = 0");
  return diag_class(SymMatrix(inverse(b)));
}

SymMatrix det1_representative(const DiagClass& c) {
  SymMatrix b = diag_class(c.rep).rep;
  const std::size_t n = b.size();
  std::vector<std::size_t> tail;
  for (std::size_t k = 0; k < n; ++k) {
    // Leading (k+1)x(k+1) minor: drop indices k+1..n-1.
    tail.clear();
    for (std::size_t t = k + 1; t < n; ++t) tail.push_back(t);
    if (!det(delete_rows_cols(b.bits(), tail))) b.set(k, k, true);
  }
  return b;
}

CircuitClass chi_inverse(const DiagClass& c, std::size_t bound) {
  const SymMatrix b = det1_representative(c);
  const SymMatrix rep(inverse(b.bits()) + BitMatrix::identity(b.size()));
  return circuit_class(rep, bound);
}

namespace {

// Backtracking over cyclic words starting with letter 0. When a letter closes,
// its whole interlacement row is already determined, so rows are checked then.
class Realizer {
 public:
  explicit Realizer(const FramedAdjacency& target)
      : target_(target),
        n_(target.size()),
        first_(n_, unset),
        second_(n_, unset),
        seq_(2 * n_) {}

  std::optional<FramedWord> run() {
    if (n_ == 0) return FramedWord{};
    place(0, 0);
    if (!search(1)) return std::nullopt;
    std::vector<std::string> names;
    for (std::size_t l = 0; l < n_; ++l) names.push_back("v" + std::to_string(l + 1));
    return FramedWord(std::move(names), seq_, target_.diag);
  }

 private:
  static constexpr std::size_t unset = static_cast<std::size_t>(-1);

  void place(std::size_t pos, std::size_t l) {
    seq_[pos] = l;
    (first_[l] == unset ? first_[l] : second_[l]) = pos;
  }
  void unplace(std::size_t l) { (second_[l] != unset ? second_[l] : first_[l]) = unset; }

  bool row_consistent(std::size_t x, std::size_t f, std::size_t p) const {
    for (std::size_t y = 0; y < n_; ++y) {
      if (y == x) continue;
      int inside = 0;
      if (first_[y] != unset && first_[y] > f && first_[y] < p) ++inside;
      if (second_[y] != unset && second_[y] > f && second_[y] < p) ++inside;
      const bool open_inside = second_[y] == unset && first_[y] != unset && first_[y] > f;
      const bool linked = open_inside || (second_[y] != unset && inside == 1);
      if (linked != target_.offdiag(x, y)) return false;
    }
    return true;
  }

  bool search(std::size_t pos) {
    if (pos == 2 * n_) return true;
    const std::size_t remaining = 2 * n_ - pos;
    std::size_t open = 0;
    for (std::size_t l = 0; l < n_; ++l)
      if (first_[l] != unset && second_[l] == unset) ++open;
    for (std::size_t l = 0; l < n_; ++l) {
      if (second_[l] != unset) continue;
      if (first_[l] == unset) {
        // Every open letter still needs a closing position.
        if (open + 2 > remaining) continue;
        place(pos, l);
        if (search(pos + 1)) return true;
        unplace(l);
      } else {
        const std::size_t f = first_[l];
        if (!row_consistent(l, f, pos)) continue;
        place(pos, l);
        if (search(pos + 1)) return true;
        unplace(l);
      }
    }
    return false;
  }

  const FramedAdjacency& target_;
  std::size_t n_;
  std::vector<std::size_t> first_;
  std::vector<std::size_t> second_;
  std::vector<std::size_t> seq_;
};

}  // namespace

std::optional<FramedWord> realize(const FramedAdjacency& target, std::size_t max_n) {
  if (target.size() > max_n)
    throw Error(Errc::TooLarge, "realization search for n = " + std::to_string(target.size()) +
                                    " exceeds bound " + std::to_string(max_n));
  return Realizer(target).run();
}

}  // namespace framed
