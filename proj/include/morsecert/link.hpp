#pragma once

#include "morsecert/complex.hpp"
#include "morsecert/simplicial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace morsecert {

enum class Polarity { none, ascending, descending };

const char* to_string(Polarity p);

/// A corner of a face: corner k sits between boundary letters k-1 and k.
struct CornerRef {
  std::size_t face = 0;
  std::size_t corner = 0;

  friend bool operator==(const CornerRef&, const CornerRef&) = default;
  friend auto operator<=>(const CornerRef&, const CornerRef&) = default;
};

/// Link edge produced by a single face corner. Endpoints index into
/// LinkComplex::vertices() and may coincide (a loop) or repeat (a multi-edge).
struct LinkEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  CornerRef corner;
};

struct LinkVertex {
  std::string label;
  Polarity polarity = Polarity::none;
  std::size_t factor = 0;  // factor index for product links
  EdgeEnd end;             // edge-end inside that factor
};

/// Link of a vertex, either of a polygonal complex (a multigraph whose edges
/// are face corners) or of a formal product (the join of factor links).
class LinkComplex {
 public:
  enum class Kind { graph, join };

  /// Graph link of a polygonal complex vertex.
  LinkComplex(std::vector<LinkVertex> vertices, std::vector<LinkEdge> edges);

  /// Join of factor links. Every part must be simplicial.
  static LinkComplex join_of(std::vector<LinkComplex> parts);

  Kind kind() const { return kind_; }
  const std::vector<LinkVertex>& vertices() const { return vertices_; }
  /// Corner edges; empty for join links.
  const std::vector<LinkEdge>& edges() const { return edges_; }
  /// Factor links; empty for graph links.
  const std::vector<LinkComplex>& parts() const { return parts_; }

  /// True when no corner edge is a loop or parallel to another, so that the
  /// link is faithfully a simplicial complex.
  bool is_simplicial() const { return simplicial_; }

  /// Underlying simplicial complex (multi-edges collapsed, loops dropped).
  const SimplicialComplex& complex() const { return complex_; }

  int dimension() const;
  std::size_t vertex_count() const { return vertices_.size(); }

  /// Number of 1-cells counted with multiplicity.
  std::size_t edge_count() const;

  /// Full sub-link on the vertices of the given polarity: for graph links
  /// the corners whose two ends both carry it, for joins the join of the
  /// parts' sub-links.
  LinkComplex restrict_to(Polarity p) const;

  /// Sets polarity on every vertex via a callback on (factor, edge-end).
  template <typename F>
  void set_polarity(F&& polarity_of);

 private:
  LinkComplex() = default;
  void rebuild_complex();

  Kind kind_ = Kind::graph;
  std::vector<LinkVertex> vertices_;
  std::vector<LinkEdge> edges_;
  std::vector<LinkComplex> parts_;
  SimplicialComplex complex_;
  bool simplicial_ = true;
};

template <typename F>
void LinkComplex::set_polarity(F&& polarity_of) {
  for (auto& v : vertices_) v.polarity = polarity_of(v.factor, v.end);
  for (auto& p : parts_) p.set_polarity(polarity_of);
}

/// Link of vertex v in c: vertices are edge-ends at v (a loop contributes
/// two), edges are face corners at v. Throws InvalidInput on unknown v or
/// an invalid complex.
LinkComplex vertex_link(const PolygonalComplex& c, const std::string& v);

/// Link at a vertex tuple of a formal product: the iterated join of factor
/// links. A single factor returns its vertex link unchanged.
LinkComplex product_link(const ProductComplex& p, const std::vector<std::string>& v);

/// Homology of a link. Graph links use the exact multigraph formula (so
/// loops and multi-edges count); join links use the simplicial complex.
HomologyProfile link_homology(const LinkComplex& l);

}  // namespace morsecert
