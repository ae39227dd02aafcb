#include "framed/graphs.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "framed/error.hpp"

namespace framed {

FramedGraph::FramedGraph(std::vector<std::string> names, std::vector<HalfEdge> partners)
    : names_(std::move(names)), partner_(std::move(partners)) {
  const std::size_t n = names_.size();
  if (partner_.size() != 4 * n)
    throw Error(Errc::InvalidGraph, "expected 4 half-edges per vertex");
  for (std::size_t v = 0; v < n; ++v)
    for (std::uint8_t s = 0; s < 4; ++s) {
      const HalfEdge h{v, s};
      const HalfEdge p = partner(h);
      if (p.vertex >= n || p.slot > 3) throw Error(Errc::InvalidGraph, "half-edge out of range");
      if (p == h) throw Error(Errc::InvalidGraph, "half-edge matched with itself");
      if (partner(p) != h) throw Error(Errc::InvalidGraph, "edge matching is not symmetric");
    }
  if (n == 0) return;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::uint8_t s = 0; s < 4; ++s) {
      const std::size_t u = partner({v, s}).vertex;
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) throw Error(Errc::InvalidGraph, "graph is not connected");
}

namespace {

bool is_gaussian_visit(const Visit& v) noexcept { return v.out == opposite_slot(v.in); }

// Slot paired with `slot` at a vertex whose transition pairs 0 with `t`.
std::uint8_t transition_mate(std::uint8_t t, std::uint8_t slot) noexcept {
  if (slot == 0) return t;
  if (slot == t) return 0;
  // The remaining two slots pair with each other; their sum is 6 - t.
  return static_cast<std::uint8_t>(6 - t - slot);
}

}  // namespace

void validate_tour(const FramedGraph& g, const EulerTour& t) {
  const std::size_t n = g.vertex_count();
  const auto& vs = t.visits;
  if (vs.size() != 2 * n)
    throw Error(Errc::InvalidTour, "tour has " + std::to_string(vs.size()) + " visits, expected " +
                                       std::to_string(2 * n));
  std::vector<int> used(4 * n, 0);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const Visit& a = vs[k];
    if (a.vertex >= n || a.in > 3 || a.out > 3 || a.in == a.out)
      throw Error(Errc::InvalidTour, "malformed visit " + std::to_string(k));
    if (used[4 * a.vertex + a.in]++ || used[4 * a.vertex + a.out]++)
      throw Error(Errc::InvalidTour, "half-edge used twice at visit " + std::to_string(k));
    const Visit& b = vs[(k + 1) % vs.size()];
    if (g.partner({a.vertex, a.out}) != HalfEdge{b.vertex, b.in})
      throw Error(Errc::InvalidTour, "visits " + std::to_string(k) + " and " +
                                         std::to_string((k + 1) % vs.size()) + " are not joined by an edge");
  }
}

std::vector<std::uint8_t> transition_key(const FramedGraph& g, const EulerTour& t) {
  validate_tour(g, t);
  std::vector<std::uint8_t> key(g.vertex_count(), 0);
  for (const Visit& v : t.visits) {
    if (v.in == 0) key[v.vertex] = v.out;
    if (v.out == 0) key[v.vertex] = v.in;
  }
  return key;
}

std::optional<EulerTour> tour_from_transitions(const FramedGraph& g,
                                               const std::vector<std::uint8_t>& transitions) {
  const std::size_t n = g.vertex_count();
  if (transitions.size() != n) throw Error(Errc::SizeMismatch, "one transition per vertex required");
  EulerTour tour;
  if (n == 0) return tour;
  const HalfEdge start{0, 0};
  HalfEdge at = start;
  do {
    const std::uint8_t out = transition_mate(transitions[at.vertex], at.slot);
    tour.visits.push_back({at.vertex, at.slot, out});
    at = g.partner({at.vertex, out});
  } while (at != start && tour.visits.size() <= 2 * n);
  if (tour.visits.size() != 2 * n) return std::nullopt;
  return tour;
}

GraphWithTour from_word(const FramedWord& w) {
  const std::size_t len = w.length();
  std::vector<Visit> visits(len);
  for (std::size_t pos = 0; pos < len; ++pos) {
    const std::size_t l = w.at(pos);
    const bool first = w.occurrences(l)[0] == pos;
    Visit v{l, 0, 0};
    switch (w.framing(l)) {
      case Framing::Gauss: v.in = first ? 0 : 1; v.out = first ? 2 : 3; break;
      case Framing::Zero: v.in = first ? 0 : 2; v.out = first ? 1 : 3; break;
      case Framing::One: v.in = first ? 0 : 3; v.out = first ? 1 : 2; break;
    }
    visits[pos] = v;
  }
  std::vector<HalfEdge> partner(4 * w.letter_count());
  for (std::size_t pos = 0; pos < len; ++pos) {
    const Visit& a = visits[pos];
    const Visit& b = visits[(pos + 1) % len];
    partner[4 * a.vertex + a.out] = {b.vertex, b.in};
    partner[4 * b.vertex + b.in] = {a.vertex, a.out};
  }
  return {FramedGraph(w.alphabet(), std::move(partner)), EulerTour{std::move(visits)}};
}

FramedWord tour_word(const FramedGraph& g, const EulerTour& t) {
  validate_tour(g, t);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> seq;
  seq.reserve(t.visits.size());
  // Direction of slots 0 and 2 at each vertex: true when the tour leaves through it.
  std::vector<std::array<bool, 4>> leaves(n);
  std::vector<bool> gaussian(n, false);
  for (const Visit& v : t.visits) {
    seq.push_back(v.vertex);
    leaves[v.vertex][v.out] = true;
    leaves[v.vertex][v.in] = false;
    if (is_gaussian_visit(v)) gaussian[v.vertex] = true;
  }
  std::vector<Framing> fr(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (gaussian[v]) fr[v] = Framing::Gauss;
    else fr[v] = leaves[v][0] == leaves[v][2] ? Framing::Zero : Framing::One;
  }
  return FramedWord(g.names(), std::move(seq), std::move(fr));
}

EulerTour k_transform(const FramedGraph& g, const EulerTour& t, std::size_t v) {
  if (v >= g.vertex_count())
    throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " out of " +
                                         std::to_string(g.vertex_count()));
  validate_tour(g, t);
  const auto& vs = t.visits;
  std::size_t i = vs.size(), j = vs.size();
  for (std::size_t k = 0; k < vs.size(); ++k)
    if (vs[k].vertex == v) (i == vs.size() ? i : j) = k;

  EulerTour r;
  r.visits.reserve(vs.size());
  for (std::size_t k = 0; k < i; ++k) r.visits.push_back(vs[k]);
  r.visits.push_back({v, vs[i].in, vs[j].in});
  for (std::size_t k = j; k-- > i + 1;) r.visits.push_back({vs[k].vertex, vs[k].out, vs[k].in});
  r.visits.push_back({v, vs[i].out, vs[j].out});
  for (std::size_t k = j + 1; k < vs.size(); ++k) r.visits.push_back(vs[k]);
  return r;
}

std::vector<EulerTour> all_euler_tours(const FramedGraph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices)
    throw Error(Errc::TooLarge, std::to_string(n) + " vertices exceeds the enumeration bound " +
                                    std::to_string(max_vertices));
  std::vector<EulerTour> tours;
  std::vector<std::uint8_t> trans(n, 1);
  while (true) {
    if (auto t = tour_from_transitions(g, trans)) tours.push_back(std::move(*t));
    std::size_t k = n;
    while (k > 0 && trans[k - 1] == 3) trans[--k] = 1;
    if (k == 0) break;
    ++trans[k - 1];
  }
  return tours;
}

namespace {

// Circuit id for each (vertex, slot) under the given transitions.
std::vector<std::size_t> circuit_ids(const FramedGraph& g, const std::vector<std::uint8_t>& trans) {
  const std::size_t n = g.vertex_count();
  const std::size_t unset = 4 * n;
  std::vector<std::size_t> id(4 * n, unset);
  std::size_t next = 0;
  for (std::size_t h = 0; h < 4 * n; ++h) {
    if (id[h] != unset) continue;
    HalfEdge at{h / 4, static_cast<std::uint8_t>(h % 4)};
    while (id[4 * at.vertex + at.slot] == unset) {
      const std::uint8_t out = transition_mate(trans[at.vertex], at.slot);
      id[4 * at.vertex + at.slot] = next;
      id[4 * at.vertex + out] = next;
      at = g.partner({at.vertex, out});
    }
    ++next;
  }
  return id;
}

}  // namespace

EulerTour rotating_circuit(const FramedGraph& g) {
  const std::size_t n = g.vertex_count();
  // Start from the straight-through transitions and splice circuits together
  // at vertices where two of them meet.
  std::vector<std::uint8_t> trans(n, 2);
  while (true) {
    const auto id = circuit_ids(g, trans);
    std::size_t v = 0;
    while (v < n && id[4 * v] == id[4 * v + 1] && id[4 * v] == id[4 * v + 2]) ++v;
    if (v == n) break;
    trans[v] = trans[v] == 2 ? 1 : 2;
  }
  auto tour = tour_from_transitions(g, trans);
  if (!tour) throw Error(Errc::InvalidGraph, "no Euler tour found");
  EulerTour t = std::move(*tour);
  while (true) {
    std::size_t v = n;
    for (const Visit& visit : t.visits)
      if (is_gaussian_visit(visit) && visit.vertex < v) v = visit.vertex;
    if (v == n) return t;
    t = k_transform(g, t, v);
  }
}

std::optional<EulerTour> gauss_traverse_from(const FramedGraph& g, HalfEdge start) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return EulerTour{};
  if (start.vertex >= n || start.slot > 3)
    throw Error(Errc::UnknownVertex, "start half-edge out of range");
  EulerTour tour;
  HalfEdge at = start;
  do {
    const std::uint8_t out = opposite_slot(at.slot);
    tour.visits.push_back({at.vertex, at.slot, out});
    at = g.partner({at.vertex, out});
  } while (at != start && tour.visits.size() <= 2 * n);
  if (tour.visits.size() != 2 * n) return std::nullopt;
  return tour;
}

std::optional<EulerTour> gauss_traverse(const FramedGraph& g) { return gauss_traverse_from(g, {0, 0}); }

FramedWord random_word(std::size_t n, std::uint64_t seed, WordMode mode) {
  std::mt19937_64 gen(seed);
  std::vector<std::size_t> seq(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) seq[k] = k / 2;
  // Fisher-Yates with raw engine output keeps the result identical across
  // standard libraries.
  for (std::size_t k = seq.size(); k > 1; --k) std::swap(seq[k - 1], seq[gen() % k]);
  std::vector<std::size_t> relabel(n, n);
  std::size_t next = 0;
  for (auto& l : seq) {
    if (relabel[l] == n) relabel[l] = next++;
    l = relabel[l];
  }
  std::vector<Framing> fr(n);
  for (auto& f : fr) {
    switch (mode) {
      case WordMode::Any: f = static_cast<Framing>(gen() % 3); break;
      case WordMode::GaussianOnly: f = Framing::Gauss; break;
      case WordMode::RotatingOnly: f = static_cast<Framing>(gen() % 2); break;
    }
  }
  std::vector<std::string> names;
  for (std::size_t l = 0; l < n; ++l) names.push_back("v" + std::to_string(l + 1));
  return FramedWord(std::move(names), std::move(seq), std::move(fr));
}

std::vector<FramedWord> all_words(std::size_t n, WordMode mode) {
  std::vector<std::vector<std::size_t>> patterns;
  std::vector<std::size_t> seq;
  std::vector<int> count(n, 0);
  auto extend = [&](auto&& self, std::size_t opened) -> void {
    if (seq.size() == 2 * n) {
      patterns.push_back(seq);
      return;
    }
    for (std::size_t l = 0; l < opened; ++l)
      if (count[l] == 1) {
        ++count[l];
        seq.push_back(l);
        self(self, opened);
        seq.pop_back();
        --count[l];
      }
    if (opened < n) {
      ++count[opened];
      seq.push_back(opened);
      self(self, opened + 1);
      seq.pop_back();
      --count[opened];
    }
  };
  extend(extend, 0);

  std::vector<Framing> choices;
  switch (mode) {
    case WordMode::Any: choices = {Framing::Zero, Framing::One, Framing::Gauss}; break;
    case WordMode::GaussianOnly: choices = {Framing::Gauss}; break;
    case WordMode::RotatingOnly: choices = {Framing::Zero, Framing::One}; break;
  }
  std::vector<std::string> names;
  for (std::size_t l = 0; l < n; ++l) names.push_back("v" + std::to_string(l + 1));

  std::vector<FramedWord> words;
  std::vector<std::size_t> digits(n, 0);
  for (const auto& p : patterns) {
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      std::vector<Framing> fr(n);
      for (std::size_t l = 0; l < n; ++l) fr[l] = choices[digits[l]];
      words.emplace_back(names, p, std::move(fr));
      std::size_t k = n;
      while (k > 0 && digits[k - 1] + 1 == choices.size()) digits[--k] = 0;
      if (k == 0) break;
      ++digits[k - 1];
    }
  }
  return words;
}

}  // namespace framed
