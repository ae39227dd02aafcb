#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "framed/gf2.hpp"
#include "framed/words.hpp"

namespace framed {

/// corank(Â + E), where Â drops the rows and columns of Gaussian letters.
std::size_t gauss_corank(const FramedWord& w);
/// True iff the graph of `w` has a Gauss circuit.
bool gauss_exists(const FramedWord& w);

/// Stars the lowest-index Gaussian letter until none is left.
FramedWord to_rotating(const FramedWord& w);

/// Adjacency of the Gauss circuit: off-diagonal part of (A + E)^-1 for a
/// rotating word of the same graph, all-Gauss diagonal. Throws NoGaussCircuit.
FramedAdjacency gauss_matrix(const FramedWord& w);

struct GaussResult {
  FramedAdjacency matrix;
  FramedWord word;
  /// Formula and traversal agree off the diagonal.
  bool consistent = false;
};

/// Gauss circuit by the inversion formula, cross-checked against walking the graph.
GaussResult gauss_word(const FramedWord& w);

/// Number of circles after surgery along every chord (parallel for framing
/// Zero, crossed for framing One). Throws HasGaussianChord.
std::size_t surgery_components(const FramedWord& w);

struct Bipartition {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

/// A split of the chords into two non-interlaced families, if every chord has
/// framing Zero and such a split exists.
std::optional<Bipartition> is_d_diagram(const FramedWord& w);

enum class RealizationCheck { NotApplicable, Realized, NotRealized, Unchecked };

struct InverseDiagonalReport {
  /// ((A + E)^-1 + diag(lambda))^-1
  BitMatrix matrix;
  bool diagonal_all_ones = false;
  RealizationCheck d_diagram = RealizationCheck::NotApplicable;
};

inline constexpr std::size_t default_realize_bound = 7;

/// Checks the all-ones diagonal of ((A + E)^-1 + diag(lambda))^-1 and, for
/// d-diagrams with at most `realize_bound` chords, whether that matrix minus E
/// is the adjacency of a d-diagram. Throws PreconditionViolated.
InverseDiagonalReport inverse_diagonal_probe(const FramedWord& w, const std::vector<bool>& lambdas,
                                    std::size_t realize_bound = default_realize_bound);

}  // namespace framed
