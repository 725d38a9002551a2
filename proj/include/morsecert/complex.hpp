#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace morsecert {

/// Raised when an operation receives data that violates its precondition
/// (unknown ids, invalid complexes, arity mismatches, ...).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Sign { plus, minus };

inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }
inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline int to_int(Sign s) { return s == Sign::plus ? 1 : -1; }
inline const char* to_token(Sign s) { return s == Sign::plus ? "+" : "-"; }

struct SignedEdge {
  std::string edge;
  Sign sign = Sign::plus;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

inline SignedEdge inverse(const SignedEdge& s) { return {s.edge, flip(s.sign)}; }

struct Edge {
  std::string id;
  std::string tail;
  std::string head;
};

/// A polygonal 2-cell, given by its cyclic boundary word. Corner k of the
/// face sits at the start vertex of boundary letter k, between letters k-1
/// and k.
struct Face {
  std::string id;
  std::vector<SignedEdge> boundary;
};

enum class End { tail, head };

inline End opposite(End e) { return e == End::tail ? End::head : End::tail; }

/// One end of an edge; the vertices of a vertex link.
struct EdgeEnd {
  std::size_t edge = 0;
  End end = End::tail;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Combinatorial polygonal 2-complex. Records are stored as given so that
/// malformed input can be diagnosed by validate_complex(); every other
/// operation requires a valid complex.
class PolygonalComplex {
 public:
  PolygonalComplex() = default;
  PolygonalComplex(std::vector<std::string> vertices, std::vector<Edge> edges,
                   std::vector<Face> faces);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_edge(const std::string& id) const;
  std::optional<std::size_t> find_face(const std::string& id) const;

  /// Index lookups that throw InvalidInput on unknown ids.
  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;
  std::size_t face_index(const std::string& id) const;

  /// Vertex at which a signed edge starts / ends when traversed.
  const std::string& start_of(const SignedEdge& s) const;
  const std::string& end_of(const SignedEdge& s) const;

  /// Edge-end used when leaving / arriving along a signed edge.
  EdgeEnd outgoing_end(const SignedEdge& s) const;
  EdgeEnd incoming_end(const SignedEdge& s) const;

  const std::string& vertex_of(const EdgeEnd& end) const;
  std::string label(const EdgeEnd& end) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
  std::unordered_map<std::string, std::size_t> face_lookup_;
};

/// Lists every violated invariant; empty iff the complex is valid.
std::vector<std::string> validate_complex(const PolygonalComplex& c);

/// Throws InvalidInput carrying the first diagnostic when c is invalid.
void require_valid(const PolygonalComplex& c);

/// |V| - |E| + |F|.
long euler_characteristic(const PolygonalComplex& c);

/// Whether the 1-skeleton is connected (a complex with no vertices is not).
bool is_connected(const PolygonalComplex& c);

/// Formal product of polygonal complexes. Never expanded into cells; all
/// queries go through links of factors.
class ProductComplex {
 public:
  explicit ProductComplex(std::vector<PolygonalComplex> factors);

  const std::vector<PolygonalComplex>& factors() const { return factors_; }
  std::size_t arity() const { return factors_.size(); }

 private:
  std::vector<PolygonalComplex> factors_;
};

}  // namespace morsecert
