#include <doctest.h>

#include <algorithm>
#include <set>

#include "framed/circuits.hpp"
#include "framed/error.hpp"
#include "framed/graphs.hpp"
#include "framed/words.hpp"

using namespace framed;

namespace {

const char* u1 = "(v1 v4 v2 v1^-1 v2 v3 v4 v3)";
const char* u2 = "(v1 v4 v3 v4 v2 v3 v1 v2^-1)";
const char* gauss_u = "(v1^G v4^G v3^G v1^G v2^G v4^G v3^G v2^G)";

// Chords in `keep` with the given framings; the rest are dropped.
FramedWord restrict(const FramedWord& w, const std::vector<std::size_t>& keep,
                    const std::vector<Framing>& framings) {
  std::vector<std::size_t> index(w.letter_count(), w.letter_count());
  std::vector<std::string> names;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    index[keep[k]] = k;
    names.push_back(w.alphabet()[keep[k]]);
  }
  std::vector<std::size_t> seq;
  for (std::size_t l : w.sequence())
    if (index[l] != w.letter_count()) seq.push_back(index[l]);
  return FramedWord(names, seq, framings);
}

// At each vertex a transition system either follows the given tour or uses
// one of the two smoothings of the chord. It is an Euler tour iff the
// smoothed diagram is a single circle.
std::size_t tour_count_by_smoothing(const FramedWord& w) {
  const std::size_t n = w.letter_count();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t l = 0; l < n; ++l)
      if (mask >> l & 1U) keep.push_back(l);
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << keep.size()); ++f) {
      std::vector<Framing> fr;
      for (std::size_t k = 0; k < keep.size(); ++k) fr.push_back(f >> k & 1U ? Framing::One : Framing::Zero);
      count += surgery_components(restrict(w, keep, fr)) == 1;
    }
  }
  return count;
}

std::set<std::vector<std::uint8_t>> k_closure(const FramedGraph& g, const EulerTour& start) {
  std::set<std::vector<std::uint8_t>> seen{transition_key(g, start)};
  std::vector<EulerTour> todo{start};
  while (!todo.empty()) {
    const EulerTour t = todo.back();
    todo.pop_back();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      EulerTour next = k_transform(g, t, v);
      if (seen.insert(transition_key(g, next)).second) todo.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("from_word and tour_word are inverse") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const FramedWord w = random_word(seed % 12, seed, static_cast<WordMode>(seed % 3));
    const auto [g, t] = from_word(w);
    CHECK_NOTHROW(validate_tour(g, t));
    REQUIRE(tour_word(g, t) == w);
  }
}

TEST_CASE("one Gaussian vertex") {
  const auto [g, t] = from_word(parse_word("(v^G v^G)"));
  CHECK(g.vertex_count() == 1);
  REQUIRE(t.visits.size() == 2);
  for (const Visit& v : t.visits) CHECK(v.out == opposite_slot(v.in));
  const auto gt = gauss_traverse(g);
  REQUIRE(gt);
  CHECK(tour_word(g, *gt) == parse_word("(v^G v^G)"));
  CHECK(tour_word(g, rotating_circuit(g)) == parse_word("(v v)"));
}

TEST_CASE("free loop") {
  const auto [g, t] = from_word(FramedWord{});
  CHECK(g.vertex_count() == 0);
  CHECK(tour_word(g, t).empty());
  CHECK(all_euler_tours(g).size() == 1);
}

TEST_CASE("invalid graphs and tours") {
  CHECK_THROWS_AS(FramedGraph({"v"}, {{0, 1}, {0, 0}, {0, 2}, {0, 3}}), Error);
  // Two disjoint loops-with-a-vertex.
  CHECK_THROWS_AS(FramedGraph({"a", "b"}, {{0, 1}, {0, 0}, {0, 3}, {0, 2}, {1, 1}, {1, 0}, {1, 3}, {1, 2}}),
                  Error);
  const auto [g, t] = from_word(parse_word("(a b a b)"));
  EulerTour broken = t;
  broken.visits.pop_back();
  CHECK_THROWS_AS(validate_tour(g, broken), Error);
  CHECK_THROWS_AS(k_transform(g, t, 5), Error);
}

TEST_CASE("k-transform is the framed star on words") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const FramedWord w = random_word(1 + seed % 9, seed, WordMode::Any);
    const auto [g, t] = from_word(w);
    for (std::size_t v = 0; v < w.letter_count(); ++v) {
      const EulerTour k = k_transform(g, t, v);
      CHECK_NOTHROW(validate_tour(g, k));
      REQUIRE(equivalent(tour_word(g, k), framed_star(w, v)));
      REQUIRE(transition_key(g, k_transform(g, k, v)) == transition_key(g, t));
    }
  }
  const auto [g, t] = from_word(parse_word("(a^G b a^G b)"));
  CHECK(equivalent(tour_word(g, k_transform(g, t, 0)), parse_word("(a b^-1 a b)")));
}

TEST_CASE("tour count agrees with counting single-circle smoothings") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const FramedWord& w : all_words(n, WordMode::Any)) {
      const auto [g, t] = from_word(w);
      REQUIRE(all_euler_tours(g).size() == tour_count_by_smoothing(w));
    }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const FramedWord w = random_word(4 + seed % 4, seed, WordMode::Any);
    const auto [g, t] = from_word(w);
    REQUIRE(all_euler_tours(g).size() == tour_count_by_smoothing(w));
  }
}

TEST_CASE("one vertex has two tours") {
  const auto [g, t] = from_word(parse_word("(v v)"));
  const auto tours = all_euler_tours(g);
  REQUIRE(tours.size() == 2);
  std::set<std::vector<std::size_t>> keys;
  for (const auto& tour : tours) keys.insert(class_key(tour_word(g, tour)));
  CHECK(keys == std::set<std::vector<std::size_t>>{class_key(parse_word("(v v)")),
                                                    class_key(parse_word("(v^G v^G)"))});
}

TEST_CASE("the four-vertex example graph") {
  const FramedWord w1 = parse_word(u1);
  const auto [g, t] = from_word(w1);
  std::vector<FramedWord> words;
  for (const auto& tour : all_euler_tours(g)) words.push_back(tour_word(g, tour));
  auto contains = [&](const char* text) {
    const FramedWord x = parse_word(text);
    return std::any_of(words.begin(), words.end(), [&](const FramedWord& y) { return equivalent(x, y); });
  };
  CHECK(contains(u1));
  CHECK(contains(u2));
  CHECK(contains(gauss_u));

  const auto gt = gauss_traverse(g);
  REQUIRE(gt);
  CHECK(equivalent(tour_word(g, *gt), parse_word(gauss_u)));
  const FramedWord rot = tour_word(g, rotating_circuit(g));
  CHECK(rot.gaussian_count() == 0);
  CHECK(contains(to_text(rot).c_str()));
}

TEST_CASE("gauss traversal is the same from every half-edge") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const FramedWord w = random_word(1 + seed % 8, seed, WordMode::Any);
    const auto [g, t] = from_word(w);
    const auto ref = gauss_traverse(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      for (std::uint8_t s = 0; s < 4; ++s) {
        const auto other = gauss_traverse_from(g, {v, s});
        REQUIRE(other.has_value() == ref.has_value());
        if (ref) REQUIRE(transition_key(g, *other) == transition_key(g, *ref));
      }
    if (ref) {
      for (const Visit& v : ref->visits) REQUIRE(v.out == opposite_slot(v.in));
    }
  }
  const auto [g, t] = from_word(parse_word("(a b a b)"));
  CHECK_FALSE(gauss_traverse(g));
}

TEST_CASE("k-transform closure reaches every tour") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const FramedWord& w : all_words(n, WordMode::Any)) {
      const auto [g, t] = from_word(w);
      std::set<std::vector<std::uint8_t>> all;
      for (const auto& tour : all_euler_tours(g)) all.insert(transition_key(g, tour));
      REQUIRE(k_closure(g, t) == all);
    }
}

TEST_CASE("rotating circuit has no Gaussian vertex") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const FramedWord w = random_word(seed % 13, seed, WordMode::Any);
    const auto [g, t] = from_word(w);
    const EulerTour r = rotating_circuit(g);
    CHECK_NOTHROW(validate_tour(g, r));
    REQUIRE(tour_word(g, r).gaussian_count() == 0);
  }
}

TEST_CASE("enumeration bound") {
  const auto [g, t] = from_word(random_word(11, 1, WordMode::Any));
  CHECK_THROWS_AS(all_euler_tours(g), Error);
  try {
    all_euler_tours(g, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("random and exhaustive word generation") {
  CHECK(random_word(7, 42, WordMode::Any) == random_word(7, 42, WordMode::Any));
  CHECK(random_word(0, 1, WordMode::Any).empty());
  CHECK(random_word(9, 5, WordMode::GaussianOnly).gaussian_count() == 9);
  CHECK(random_word(9, 5, WordMode::RotatingOnly).gaussian_count() == 0);
  CHECK(all_words(0, WordMode::Any).size() == 1);
  CHECK(all_words(3, WordMode::Any).size() == 15 * 27);
  CHECK(all_words(4, WordMode::RotatingOnly).size() == 105 * 16);
  CHECK(all_words(4, WordMode::GaussianOnly).size() == 105);
  std::set<std::vector<std::size_t>> distinct;
  for (const FramedWord& w : all_words(3, WordMode::Any)) {
    std::vector<std::size_t> key = w.sequence();
    for (Framing f : w.framings()) key.push_back(static_cast<std::size_t>(f));
    distinct.insert(key);
  }
  CHECK(distinct.size() == 15 * 27);
}
