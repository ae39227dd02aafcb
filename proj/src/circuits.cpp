#include "framed/circuits.hpp"

#include <numeric>

#include "framed/error.hpp"
#include "framed/graphs.hpp"
#include "framed/symmat.hpp"

namespace framed {

std::size_t gauss_corank(const FramedWord& w) {
  std::vector<std::size_t> gaussian;
  std::vector<Framing> diag(w.framings());
  for (std::size_t l = 0; l < w.letter_count(); ++l)
    if (diag[l] == Framing::Gauss) {
      gaussian.push_back(l);
      diag[l] = Framing::Zero;
    }
  const FramedAdjacency a = adjacency(w);
  const BitMatrix bits = FramedAdjacency(a.offdiag, std::move(diag)).bits();
  BitMatrix reduced = delete_rows_cols(bits, gaussian);
  reduced += BitMatrix::identity(reduced.rows());
  return corank(reduced);
}

bool gauss_exists(const FramedWord& w) { return gauss_corank(w) == 0; }

FramedWord to_rotating(const FramedWord& w) {
  FramedWord r = w;
  while (true) {
    std::size_t l = 0;
    while (l < r.letter_count() && r.framing(l) != Framing::Gauss) ++l;
    if (l == r.letter_count()) return r;
    r = framed_star(r, l);
  }
}

FramedAdjacency gauss_matrix(const FramedWord& w) {
  const FramedWord rot = to_rotating(w);
  BitMatrix b = adjacency(rot).bits();
  b += BitMatrix::identity(b.rows());
  if (!det(b)) throw Error(Errc::NoGaussCircuit, "det(A + E) = 0");
  BitMatrix off = inverse(b);
  for (std::size_t i = 0; i < off.rows(); ++i) off.set(i, i, false);
  return FramedAdjacency(std::move(off), std::vector<Framing>(w.letter_count(), Framing::Gauss));
}

GaussResult gauss_word(const FramedWord& w) {
  GaussResult r{gauss_matrix(w), FramedWord{}, false};
  const auto gt = from_word(w);
  const auto circuit = gauss_traverse(gt.graph);
  if (!circuit) return r;  // formula says yes, traversal says no
  r.word = least_reading(tour_word(gt.graph, *circuit));
  r.consistent = adjacency(r.word).offdiag == r.matrix.offdiag;
  return r;
}

std::size_t surgery_components(const FramedWord& w) {
  if (w.gaussian_count() != 0)
    throw Error(Errc::HasGaussianChord, "surgery is defined for words without Gaussian letters");
  // Endpoint p splits into p- (end of the arc arriving at p) = node 2p and
  // p+ (start of the arc leaving p) = node 2p+1. Every node has one arc edge
  // and one chord edge, so components are cycles.
  const std::size_t len = w.length();
  std::vector<std::size_t> parent(2 * len);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = 2 * len;
  auto join = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };
  for (std::size_t p = 0; p < len; ++p) join(2 * p + 1, 2 * ((p + 1) % len));
  for (std::size_t l = 0; l < w.letter_count(); ++l) {
    const auto [p, q] = w.occurrences(l);
    if (w.framing(l) == Framing::Zero) {
      // Parallel band.
      join(2 * p, 2 * q + 1);
      join(2 * p + 1, 2 * q);
    } else {
      // Crossed band.
      join(2 * p, 2 * q);
      join(2 * p + 1, 2 * q + 1);
    }
  }
  return len == 0 ? 1 : components;
}

std::optional<Bipartition> is_d_diagram(const FramedWord& w) {
  const std::size_t n = w.letter_count();
  for (Framing f : w.framings())
    if (f != Framing::Zero) return std::nullopt;
  const BitMatrix off = adjacency(w).offdiag;
  std::vector<int> colour(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u) {
        if (!off(v, u)) continue;
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition split;
  for (std::size_t l = 0; l < n; ++l) (colour[l] == 0 ? split.first : split.second).push_back(l);
  return split;
}

InverseDiagonalReport inverse_diagonal_probe(const FramedWord& w, const std::vector<bool>& lambdas,
                                    std::size_t realize_bound) {
  const std::size_t n = w.letter_count();
  for (Framing f : w.framings())
    if (f != Framing::Zero)
      throw Error(Errc::PreconditionViolated, "every chord must have framing 0");
  if (lambdas.size() != n) throw Error(Errc::SizeMismatch, "one lambda per chord required");
  BitMatrix b = adjacency(w).bits();
  b += BitMatrix::identity(n);
  if (!det(b)) throw Error(Errc::PreconditionViolated, "det(A + E) = 0");
  BitMatrix c = inverse(b);
  for (std::size_t i = 0; i < n; ++i)
    if (lambdas[i]) c.flip(i, i);
  if (!det(c)) throw Error(Errc::PreconditionViolated, "det((A + E)^-1 + diag(lambda)) = 0");

  InverseDiagonalReport report;
  report.matrix = inverse(c);
  report.diagonal_all_ones = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!report.matrix(i, i)) report.diagonal_all_ones = false;

  if (!is_d_diagram(w)) return report;
  if (n > realize_bound || !report.diagonal_all_ones) {
    report.d_diagram = n > realize_bound ? RealizationCheck::Unchecked : RealizationCheck::NotRealized;
    return report;
  }
  // M - E has zero diagonal: all chords framing 0.
  BitMatrix off = report.matrix;
  for (std::size_t i = 0; i < n; ++i) off.set(i, i, false);
  const FramedAdjacency target(std::move(off), std::vector<Framing>(n, Framing::Zero));
  const auto word = realize(target, realize_bound);
  report.d_diagram = word && is_d_diagram(*word) ? RealizationCheck::Realized
                                                 : RealizationCheck::NotRealized;
  return report;
}

}  // namespace framed
