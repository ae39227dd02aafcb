#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framed/words.hpp"

namespace framed {

/// Half-edge `slot` (0..3) at `vertex`. Slots 0/2 and 1/3 are opposite.
struct HalfEdge {
  std::size_t vertex = 0;
  std::uint8_t slot = 0;

  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

constexpr std::uint8_t opposite_slot(std::uint8_t s) noexcept { return static_cast<std::uint8_t>((s + 2) % 4); }

/// Connected 4-valent graph with an opposite-edge structure at each vertex.
/// The vertex-free graph is the free loop.
class FramedGraph {
 public:
  FramedGraph() = default;
  /// `partner[4 * v + s]` is the half-edge joined to (v, s). Validates that the
  /// matching is a fixed-point-free involution and that the graph is connected.
  FramedGraph(std::vector<std::string> names, std::vector<HalfEdge> partner);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  HalfEdge partner(HalfEdge h) const noexcept { return partner_[4 * h.vertex + h.slot]; }

 private:
  std::vector<std::string> names_;
  std::vector<HalfEdge> partner_;
};

/// One pass of a tour through a vertex.
struct Visit {
  std::size_t vertex = 0;
  std::uint8_t in = 0;
  std::uint8_t out = 0;

  friend bool operator==(const Visit&, const Visit&) = default;
};

/// Closed edge traversal: the out half-edge of each visit is joined to the in
/// half-edge of the next (cyclically).
struct EulerTour {
  std::vector<Visit> visits;

  friend bool operator==(const EulerTour&, const EulerTour&) = default;
};

/// Throws InvalidTour unless `t` traverses every edge of `g` exactly once.
void validate_tour(const FramedGraph& g, const EulerTour& t);

/// Per-vertex transition: the slot paired with slot 0 (1, 2 or 3). Two tours
/// are the same unoriented circuit iff their transition keys agree.
std::vector<std::uint8_t> transition_key(const FramedGraph& g, const EulerTour& t);

/// Follows the given transitions from (vertex 0, in-slot 0); returns the tour
/// if the closed walk covers every edge.
std::optional<EulerTour> tour_from_transitions(const FramedGraph& g,
                                               const std::vector<std::uint8_t>& transitions);

struct GraphWithTour {
  FramedGraph graph;
  EulerTour tour;
};

GraphWithTour from_word(const FramedWord& w);
FramedWord tour_word(const FramedGraph& g, const EulerTour& t);

/// Kotzig's transformation at `v`: the closed path between the two visits of
/// `v` is traversed backwards.
EulerTour k_transform(const FramedGraph& g, const EulerTour& t, std::size_t v);

inline constexpr std::size_t default_tour_bound = 10;

/// Every Euler tour, one per circuit, ordered by transition key. Throws
/// TooLarge above `max_vertices`.
std::vector<EulerTour> all_euler_tours(const FramedGraph& g,
                                       std::size_t max_vertices = default_tour_bound);

/// A tour without Gaussian vertices.
EulerTour rotating_circuit(const FramedGraph& g);

/// Walks straight through every vertex. Returns the Gauss circuit if that walk
/// covers the graph.
std::optional<EulerTour> gauss_traverse(const FramedGraph& g);
std::optional<EulerTour> gauss_traverse_from(const FramedGraph& g, HalfEdge start);

enum class WordMode { Any, GaussianOnly, RotatingOnly };

/// Uniform double-occurrence pattern on n letters named v1..vn (first
/// occurrence order), framings drawn per `mode`. Deterministic in `seed`.
FramedWord random_word(std::size_t n, std::uint64_t seed, WordMode mode);

/// Every double-occurrence pattern on n letters (letters numbered by first
/// occurrence, so (2n-1)!! patterns) with every framing assignment `mode` allows.
std::vector<FramedWord> all_words(std::size_t n, WordMode mode);

}  // namespace framed
