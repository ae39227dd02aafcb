#include <doctest.h>

#include <algorithm>
#include <random>

#include "framed/error.hpp"
#include "framed/graphs.hpp"
#include "framed/symmat.hpp"
#include "framed/words.hpp"

using namespace framed;

namespace {

SymMatrix sym(std::initializer_list<std::initializer_list<int>> rows) { return SymMatrix(BitMatrix(rows)); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Syntax;
}

SymMatrix random_sym(std::size_t n, std::mt19937_64& gen) {
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a.set(i, j, gen() & 1U);
  return a;
}

// Pivot on the edge ij of a graph: toggle adjacency between vertices of
// different classes among N(i) only, N(j) only and both, then exchange i and j.
SymMatrix graph_pivot(const SymMatrix& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.size();
  auto cls = [&](std::size_t v) {
    if (v == i || v == j) return 0;
    return (a(v, i) ? 1 : 0) + (a(v, j) ? 2 : 0);
  };
  SymMatrix b = a;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (cls(p) && cls(q) && cls(p) != cls(q)) b.flip(p, q);
  SymMatrix out = b;
  auto swap_ij = [&](std::size_t v) { return v == i ? j : v == j ? i : v; };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p != q) out.set(p, q, b(swap_ij(p), swap_ij(q)));
  for (std::size_t p = 0; p < n; ++p) out.set(p, p, a(p, p));
  return out;
}

const SymMatrix a_u1 = sym({{1, 1, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 1, 0}});
const SymMatrix a_u2 = sym({{0, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}});
const SymMatrix inv_u1 = sym({{0, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}});
const SymMatrix inv_u2 = sym({{1, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 0}});

}  // namespace

TEST_CASE("symmetric matrix construction") {
  CHECK(code_of([] { SymMatrix(BitMatrix{{0, 1}, {0, 0}}); }) == Errc::Format);
  CHECK(code_of([] { SymMatrix(BitMatrix(2, 3)); }) == Errc::NonSquare);
  CHECK(parse_sym_matrix(to_text(inv_u1)) == inv_u1);
  SymMatrix a(3);
  a.set(0, 2, true);
  CHECK(a(2, 0));
}

TEST_CASE("local complementation") {
  CHECK(loc(sym({{1, 1}, {1, 0}}), 0) == sym({{1, 1}, {1, 1}}));
  const SymMatrix isolated = sym({{1, 0, 0}, {0, 0, 1}, {0, 1, 1}});
  CHECK(loc(isolated, 0) == isolated);
  CHECK(code_of([] { loc(sym({{0, 1}, {1, 0}}), 0); }) == Errc::DiagonalNotOne);
  CHECK(code_of([] { loc(sym({{1}}), 1); }) == Errc::IndexOutOfRange);
  CHECK(loc_formal(sym({{0, 1}, {1, 0}}), 0) == sym({{0, 1}, {1, 1}}));

  std::mt19937_64 gen(11);
  for (int t = 0; t < 300; ++t) {
    const SymMatrix a = random_sym(1 + gen() % 8, gen);
    for (std::size_t k = 0; k < a.size(); ++k) {
      REQUIRE(loc_formal(loc_formal(a, k), k) == a);
      if (a(k, k)) REQUIRE(loc(a, k) == loc_formal(a, k));
    }
  }
}

TEST_CASE("pivot examples") {
  CHECK(pivot(sym({{0, 1}, {1, 0}}), 0, 1) == sym({{0, 1}, {1, 0}}));
  CHECK(pivot(sym({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}), 0, 1) == sym({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}}));
  CHECK(code_of([] { pivot(sym({{1, 1}, {1, 0}}), 0, 1); }) == Errc::PreconditionViolated);
  CHECK(code_of([] { pivot(sym({{0, 0}, {0, 0}}), 0, 1); }) == Errc::PreconditionViolated);
  CHECK(code_of([] { pivot(sym({{0, 1}, {1, 0}}), 0, 0); }) == Errc::PreconditionViolated);
}

TEST_CASE("pivot is the graph pivot on an edge and symmetric in its arguments") {
  std::mt19937_64 gen(12);
  for (int t = 0; t < 2000; ++t) {
    SymMatrix a = random_sym(2 + gen() % 7, gen);
    const std::size_t i = gen() % a.size();
    std::size_t j = gen() % (a.size() - 1);
    if (j >= i) ++j;
    a.set(i, i, false);
    a.set(j, j, false);
    a.set(i, j, true);
    const SymMatrix p = pivot(a, i, j);
    REQUIRE(p == graph_pivot(a, i, j));
    REQUIRE(p == pivot(a, j, i));
    REQUIRE(pivot(p, i, j) == a);
  }
}

TEST_CASE("equality up to diagonal") {
  CHECK(equiv_D(inv_u1, inv_u2));
  CHECK(equiv_D(a_u1, a_u1));
  CHECK_FALSE(equiv_D(sym({{0, 1}, {1, 0}}), sym({{0, 0}, {0, 0}})));
  CHECK(code_of([] { equiv_D(SymMatrix(2), SymMatrix(3)); }) == Errc::SizeMismatch);
  CHECK(diag_class(inv_u1) == diag_class(inv_u2));
}

TEST_CASE("orbits") {
  const auto zero = orbit_C(SymMatrix(3));
  REQUIRE(zero.size() == 1);
  CHECK(zero.front() == SymMatrix(3));
  CHECK(code_of([] { orbit_C(a_u1, 3); }) == Errc::TooLarge);

  std::mt19937_64 gen(13);
  for (int t = 0; t < 100; ++t) {
    const SymMatrix a = random_sym(1 + gen() % 4, gen);
    const auto orbit = orbit_C(a, 4);
    REQUIRE(std::is_sorted(orbit.begin(), orbit.end()));
    REQUIRE(std::binary_search(orbit.begin(), orbit.end(), a));
    for (const SymMatrix& b : orbit) {
      REQUIRE(in_sym_plus(b) == in_sym_plus(a));
      for (std::size_t k = 0; k < b.size(); ++k)
        if (b(k, k)) REQUIRE(std::binary_search(orbit.begin(), orbit.end(), loc(b, k)));
    }
    const CircuitClass c = circuit_class(a, 4);
    CHECK(c.canonical);
    CHECK(c.rep == orbit.front());
  }
}

TEST_CASE("chi") {
  CHECK(chi(a_u1) == diag_class(inv_u1));
  CHECK(chi(a_u2) == diag_class(inv_u1));
  CHECK(chi(SymMatrix(1)) == diag_class(sym({{1}})));
  CHECK(code_of([] { chi(sym({{1}})); }) == Errc::NotSymPlus);
}

TEST_CASE("det-1 representatives") {
  const SymMatrix two = det1_representative(diag_class(sym({{0, 1}, {1, 0}})));
  // Every leading minor is 1, so b_11 = 1; (0, 0) would also have det 1.
  CHECK(two == sym({{1, 1}, {1, 0}}));
  CHECK(det(two.bits()));
  CHECK(det1_representative(diag_class(SymMatrix(1))) == sym({{1}}));
  const SymMatrix k3 = det1_representative(diag_class(sym({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})));
  CHECK(k3 == sym({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  CHECK(det(k3.bits()));
  CHECK(det1_representative(diag_class(SymMatrix(0))).size() == 0);
}

TEST_CASE("chi_inverse") {
  const CircuitClass c = chi_inverse(diag_class(inv_u1));
  const auto orbit = orbit_C(c.rep);
  CHECK(std::binary_search(orbit.begin(), orbit.end(), a_u1));
  CHECK(std::binary_search(orbit.begin(), orbit.end(), a_u2));
  CHECK(chi(c.rep) == diag_class(inv_u1));
}

TEST_CASE("one diagonal flip of B is one loc of the inverses") {
  std::mt19937_64 gen(14);
  int checked = 0;
  while (checked < 300) {
    const std::size_t n = 1 + gen() % 7;
    const SymMatrix b = random_sym(n, gen);
    if (!det(b.bits())) continue;
    const std::size_t k = gen() % n;
    SymMatrix b2 = b;
    b2.flip(k, k);
    if (!det(b2.bits())) continue;
    const SymMatrix x(inverse(b.bits()) + BitMatrix::identity(n));
    const SymMatrix y(inverse(b2.bits()) + BitMatrix::identity(n));
    REQUIRE(x(k, k));
    REQUIRE(loc(x, k) == y);
    ++checked;
  }
}

TEST_CASE("realize") {
  const auto ab = realize(FramedAdjacency(BitMatrix{{0, 1}, {1, 0}}, {Framing::Zero, Framing::Zero}));
  REQUIRE(ab);
  CHECK(canonical(*ab) == canonical(parse_word("(a b a b)")));

  const auto empty = realize(FramedAdjacency{});
  REQUIRE(empty);
  CHECK(empty->empty());

  BitMatrix w5(6, 6);
  for (std::size_t v = 1; v <= 5; ++v) {
    const std::size_t u = v % 5 + 1;
    w5.set(0, v, true);
    w5.set(v, 0, true);
    w5.set(v, u, true);
    w5.set(u, v, true);
  }
  CHECK_FALSE(realize(FramedAdjacency(w5, std::vector<Framing>(6, Framing::Zero))));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const FramedWord w = random_word(seed % 8, seed, WordMode::Any);
    const FramedAdjacency target = adjacency(w);
    const auto r = realize(target);
    REQUIRE(r);
    REQUIRE(adjacency(*r) == target);
  }
  CHECK(code_of([] { realize(FramedAdjacency(BitMatrix(8, 8), std::vector<Framing>(8, Framing::Zero))); }) ==
        Errc::TooLarge);
}
