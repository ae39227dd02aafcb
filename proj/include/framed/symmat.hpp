#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "framed/gf2.hpp"
#include "framed/words.hpp"

namespace framed {

/// Symmetric matrix over GF(2) with a bit diagonal.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : m_(n, n) {}
  /// Throws NonSquare or Format (not symmetric).
  explicit SymMatrix(BitMatrix m);

  std::size_t size() const noexcept { return m_.rows(); }
  bool operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, bool value) noexcept;
  void flip(std::size_t i, std::size_t j) noexcept;
  const BitMatrix& bits() const noexcept { return m_; }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;
  friend bool operator<(const SymMatrix& a, const SymMatrix& b) noexcept { return a.m_ < b.m_; }

 private:
  BitMatrix m_;
};

SymMatrix parse_sym_matrix(std::string_view text);
std::string to_text(const SymMatrix& a);

/// det(A + E) = 1
bool in_sym_plus(const SymMatrix& a);

/// Local complementation at k (requires a_kk = 1; throws DiagonalNotOne):
/// a_pq += a_pk a_kq for p, q != k, diagonal included.
SymMatrix loc(const SymMatrix& a, std::size_t k);
/// The same toggle rule with no condition on a_kk.
SymMatrix loc_formal(const SymMatrix& a, std::size_t k);
/// Off-diagonal of loc_formal^3 at (i, j, i); diagonal kept. Requires
/// a_ii = a_jj = 0 and a_ij = 1 (PreconditionViolated otherwise).
SymMatrix pivot(const SymMatrix& a, std::size_t i, std::size_t j);

/// Equal off the diagonal. Throws SizeMismatch.
bool equiv_D(const SymMatrix& a, const SymMatrix& b);

inline constexpr std::size_t default_orbit_bound = 8;

/// Closure under every applicable loc and pivot, sorted ascending.
/// Throws TooLarge when size() > bound.
std::vector<SymMatrix> orbit_C(const SymMatrix& a, std::size_t bound = default_orbit_bound);

/// Class up to diagonal; the representative has zero diagonal.
struct DiagClass {
  SymMatrix rep;
  friend bool operator==(const DiagClass&, const DiagClass&) = default;
};
DiagClass diag_class(const SymMatrix& a);

/// Class up to loc/pivot. `canonical` says whether `rep` is the least element
/// of the orbit (it is only computed within the orbit bound).
struct CircuitClass {
  SymMatrix rep;
  bool canonical = false;
};
CircuitClass circuit_class(const SymMatrix& a, std::size_t bound = default_orbit_bound);

/// [A]_C -> [(A + E)^-1]_D. Throws NotSymPlus.
DiagClass chi(const SymMatrix& a);
/// A matrix of the class with determinant 1, choosing diagonal entries so that
/// every leading principal minor is 1.
SymMatrix det1_representative(const DiagClass& c);
/// [C]_D -> [B^-1 + E]_C with B = det1_representative(c).
CircuitClass chi_inverse(const DiagClass& c, std::size_t bound = default_orbit_bound);

/// Exhaustive search for a word whose adjacency equals `target` (letter i of
/// the result is row i). Throws TooLarge above max_n.
std::optional<FramedWord> realize(const FramedAdjacency& target, std::size_t max_n = 7);

}  // namespace framed
