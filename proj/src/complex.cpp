#include "morsecert/complex.hpp"

#include <numeric>
#include <set>

namespace morsecert {

namespace {

template <typename Map>
std::optional<std::size_t> lookup(const Map& map, const std::string& id) {
  const auto it = map.find(id);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

}  // namespace

PolygonalComplex::PolygonalComplex(std::vector<std::string> vertices, std::vector<Edge> edges,
                                   std::vector<Face> faces)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), faces_(std::move(faces)) {
  // First occurrence wins; duplicates are reported by validate_complex.
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_lookup_.emplace(vertices_[i], i);
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_lookup_.emplace(edges_[i].id, i);
  for (std::size_t i = 0; i < faces_.size(); ++i) face_lookup_.emplace(faces_[i].id, i);
}

std::optional<std::size_t> PolygonalComplex::find_vertex(const std::string& id) const {
  return lookup(vertex_lookup_, id);
}
std::optional<std::size_t> PolygonalComplex::find_edge(const std::string& id) const {
  return lookup(edge_lookup_, id);
}
std::optional<std::size_t> PolygonalComplex::find_face(const std::string& id) const {
  return lookup(face_lookup_, id);
}

std::size_t PolygonalComplex::vertex_index(const std::string& id) const {
  if (auto i = find_vertex(id)) return *i;
  throw InvalidInput("unknown vertex '" + id + "'");
}
std::size_t PolygonalComplex::edge_index(const std::string& id) const {
  if (auto i = find_edge(id)) return *i;
  throw InvalidInput("unknown edge '" + id + "'");
}
std::size_t PolygonalComplex::face_index(const std::string& id) const {
  if (auto i = find_face(id)) return *i;
  throw InvalidInput("unknown face '" + id + "'");
}

const std::string& PolygonalComplex::start_of(const SignedEdge& s) const {
  const Edge& e = edges_[edge_index(s.edge)];
  return s.sign == Sign::plus ? e.tail : e.head;
}

const std::string& PolygonalComplex::end_of(const SignedEdge& s) const {
  const Edge& e = edges_[edge_index(s.edge)];
  return s.sign == Sign::plus ? e.head : e.tail;
}

EdgeEnd PolygonalComplex::outgoing_end(const SignedEdge& s) const {
  return {edge_index(s.edge), s.sign == Sign::plus ? End::tail : End::head};
}

EdgeEnd PolygonalComplex::incoming_end(const SignedEdge& s) const {
  return {edge_index(s.edge), s.sign == Sign::plus ? End::head : End::tail};
}

const std::string& PolygonalComplex::vertex_of(const EdgeEnd& end) const {
  const Edge& e = edges_.at(end.edge);
  return end.end == End::tail ? e.tail : e.head;
}

std::string PolygonalComplex::label(const EdgeEnd& end) const {
  return edges_.at(end.edge).id + (end.end == End::tail ? "-tail" : "-head");
}

std::vector<std::string> validate_complex(const PolygonalComplex& c) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& v : c.vertices()) {
    if (!seen.insert(v).second) out.push_back("duplicate vertex id '" + v + "'");
  }
  seen.clear();
  for (const auto& e : c.edges()) {
    if (!seen.insert(e.id).second) out.push_back("duplicate edge id '" + e.id + "'");
    if (!c.find_vertex(e.tail)) out.push_back("edge '" + e.id + "' has unknown tail '" + e.tail + "'");
    if (!c.find_vertex(e.head)) out.push_back("edge '" + e.id + "' has unknown head '" + e.head + "'");
  }
  seen.clear();
  for (const auto& f : c.faces()) {
    if (!seen.insert(f.id).second) out.push_back("duplicate face id '" + f.id + "'");
    if (f.boundary.size() < 3) out.push_back("face '" + f.id + "': face length < 3");
    bool refs_ok = true;
    for (const auto& s : f.boundary) {
      const auto e = c.find_edge(s.edge);
      if (!e) {
        out.push_back("face '" + f.id + "' references unknown edge '" + s.edge + "'");
        refs_ok = false;
      } else if (!c.find_vertex(c.edges()[*e].tail) || !c.find_vertex(c.edges()[*e].head)) {
        refs_ok = false;
      }
    }
    if (!refs_ok || f.boundary.empty()) continue;
    const std::size_t n = f.boundary.size();
    for (std::size_t k = 0; k < n; ++k) {
      const auto& here = f.boundary[k];
      const auto& next = f.boundary[(k + 1) % n];
      if (c.end_of(here) != c.start_of(next)) {
        out.push_back("face '" + f.id + "': boundary breaks between letters " + std::to_string(k) +
                      " and " + std::to_string((k + 1) % n) + " ('" + c.end_of(here) +
                      "' != '" + c.start_of(next) + "')");
      }
    }
  }
  return out;
}

void require_valid(const PolygonalComplex& c) {
  const auto diagnostics = validate_complex(c);
  if (!diagnostics.empty()) throw InvalidInput("invalid complex: " + diagnostics.front());
}

long euler_characteristic(const PolygonalComplex& c) {
  require_valid(c);
  return static_cast<long>(c.vertices().size()) - static_cast<long>(c.edges().size()) +
         static_cast<long>(c.faces().size());
}

bool is_connected(const PolygonalComplex& c) {
  const std::size_t n = c.vertices().size();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : c.edges()) {
    const auto a = root(c.vertex_index(e.tail));
    const auto b = root(c.vertex_index(e.head));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

ProductComplex::ProductComplex(std::vector<PolygonalComplex> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidInput("product complex needs at least one factor");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto d = validate_complex(factors_[i]);
    if (!d.empty()) throw InvalidInput("factor " + std::to_string(i) + ": " + d.front());
  }
}

}  // namespace morsecert
