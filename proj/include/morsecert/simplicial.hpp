#pragma once

#include "morsecert/numbers.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace morsecert {

/// Abstract simplicial complex on labeled vertices, stored by its maximal
/// simplices. Every label is a vertex; the closure is computed on demand.
class SimplicialComplex {
 public:
  /// Sorted vertex indices.
  using Simplex = std::vector<int>;

  SimplicialComplex() = default;

  /// `generators` may contain non-maximal and repeated simplices; they are
  /// normalized away. Throws InvalidInput on out-of-range indices.
  SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> generators);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<Simplex>& maximal() const { return maximal_; }

  /// -1 for the complex with no vertices.
  int dimension() const;

  /// All simplices of the given dimension, sorted lexicographically.
  std::vector<Simplex> simplices(int dim) const;

  /// Counts of simplices in dimensions 0..dimension().
  std::vector<std::size_t> f_vector() const;

  bool contains(const Simplex& s) const;

  /// Pairs of vertices spanning an edge.
  std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.maximal_ == b.maximal_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Simplex> maximal_;
};

/// Simplicial join. Vertices of `b` follow those of `a`; labels are
/// prefixed with "L." / "R." only when the two label sets collide.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Renames and reorders vertices: new index of old vertex i is perm[i].
SimplicialComplex relabel(const SimplicialComplex& s, const std::vector<int>& perm,
                          std::vector<std::string> new_labels);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // elementary divisors > 1

  bool vanishes() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced integral homology in dimensions 0..dim.
struct HomologyProfile {
  std::vector<HomologyGroup> groups;

  const HomologyGroup& at(int dim) const;
  /// "Z" style rendering, e.g. "0 | Z | Z^2 + Z/2".
  std::string describe() const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

std::string describe(const HomologyGroup& g);

/// Invariant factors (absolute values, in divisibility order) of an integer
/// matrix, via Smith normal form. Their count is the rank.
std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> matrix);

/// Reduced simplicial homology over Z, computed exactly.
HomologyProfile homology(const SimplicialComplex& s);

}  // namespace morsecert
