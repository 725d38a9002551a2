#include "morsecert/link.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace morsecert {

const char* to_string(Polarity p) {
  switch (p) {
    case Polarity::ascending: return "ascending";
    case Polarity::descending: return "descending";
    case Polarity::none: break;
  }
  return "none";
}

LinkComplex::LinkComplex(std::vector<LinkVertex> vertices, std::vector<LinkEdge> edges)
    : kind_(Kind::graph), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.a >= vertices_.size() || e.b >= vertices_.size()) {
      throw InvalidInput("link edge endpoint out of range");
    }
  }
  rebuild_complex();
}

void LinkComplex::rebuild_complex() {
  std::vector<std::string> labels;
  labels.reserve(vertices_.size());
  for (const auto& v : vertices_) labels.push_back(v.label);
  if (kind_ == Kind::graph) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<SimplicialComplex::Simplex> simplices;
    simplicial_ = true;
    for (const auto& e : edges_) {
      if (e.a == e.b) {
        simplicial_ = false;
        continue;
      }
      const auto key = std::minmax(e.a, e.b);
      if (!seen.insert(key).second) {
        simplicial_ = false;
        continue;
      }
      simplices.push_back({static_cast<int>(key.first), static_cast<int>(key.second)});
    }
    complex_ = SimplicialComplex(std::move(labels), std::move(simplices));
    return;
  }
  SimplicialComplex acc({}, {});
  for (const auto& p : parts_) acc = join(acc, p.complex());
  // Keep the join's vertex order but use the factor-qualified labels.
  complex_ = SimplicialComplex(std::move(labels), acc.maximal());
  simplicial_ = true;
}

LinkComplex LinkComplex::join_of(std::vector<LinkComplex> parts) {
  LinkComplex out;
  out.kind_ = Kind::join;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].is_simplicial()) {
      throw InvalidInput("factor link " + std::to_string(i) +
                         " has loops or multi-edges; joins need simplicial factor links");
    }
    for (auto& v : parts[i].vertices_) v.factor = i;
    for (const auto& v : parts[i].vertices_) {
      LinkVertex q = v;
      q.label = std::to_string(i + 1) + ":" + v.label;
      out.vertices_.push_back(std::move(q));
    }
  }
  out.parts_ = std::move(parts);
  out.rebuild_complex();
  return out;
}

int LinkComplex::dimension() const {
  if (kind_ == Kind::join) return complex_.dimension();
  if (vertices_.empty()) return -1;
  return edges_.empty() ? 0 : 1;
}

std::size_t LinkComplex::edge_count() const {
  if (kind_ == Kind::graph) return edges_.size();
  return complex_.simplices(1).size();
}

LinkComplex LinkComplex::restrict_to(Polarity p) const {
  if (kind_ == Kind::join) {
    std::vector<LinkComplex> parts;
    parts.reserve(parts_.size());
    for (const auto& part : parts_) parts.push_back(part.restrict_to(p));
    return join_of(std::move(parts));
  }
  std::vector<std::size_t> remap(vertices_.size(), SIZE_MAX);
  std::vector<LinkVertex> kept;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].polarity == p) {
      remap[i] = kept.size();
      kept.push_back(vertices_[i]);
    }
  }
  std::vector<LinkEdge> edges;
  for (const auto& e : edges_) {
    if (remap[e.a] != SIZE_MAX && remap[e.b] != SIZE_MAX) {
      edges.push_back({remap[e.a], remap[e.b], e.corner});
    }
  }
  return LinkComplex(std::move(kept), std::move(edges));
}

LinkComplex vertex_link(const PolygonalComplex& c, const std::string& v) {
  require_valid(c);
  if (!c.find_vertex(v)) throw InvalidInput("unknown vertex '" + v + "'");

  std::vector<LinkVertex> vertices;
  std::vector<std::size_t> index_of_end(2 * c.edges().size(), SIZE_MAX);
  auto slot = [](const EdgeEnd& e) { return 2 * e.edge + (e.end == End::head ? 1 : 0); };
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    for (End end : {End::tail, End::head}) {
      const EdgeEnd ee{i, end};
      if (c.vertex_of(ee) != v) continue;
      index_of_end[slot(ee)] = vertices.size();
      vertices.push_back({c.label(ee), Polarity::none, 0, ee});
    }
  }

  std::vector<LinkEdge> edges;
  for (std::size_t f = 0; f < c.faces().size(); ++f) {
    const auto& boundary = c.faces()[f].boundary;
    const std::size_t n = boundary.size();
    for (std::size_t k = 0; k < n; ++k) {
      const auto& out = boundary[k];
      if (c.start_of(out) != v) continue;
      const auto& in = boundary[(k + n - 1) % n];
      const auto a = index_of_end[slot(c.incoming_end(in))];
      const auto b = index_of_end[slot(c.outgoing_end(out))];
      edges.push_back({a, b, {f, k}});
    }
  }
  return LinkComplex(std::move(vertices), std::move(edges));
}

LinkComplex product_link(const ProductComplex& p, const std::vector<std::string>& v) {
  if (v.size() != p.arity()) {
    throw InvalidInput("vertex tuple has " + std::to_string(v.size()) + " coordinates, product has " +
                       std::to_string(p.arity()) + " factors");
  }
  if (p.arity() == 1) return vertex_link(p.factors()[0], v[0]);
  std::vector<LinkComplex> parts;
  parts.reserve(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) parts.push_back(vertex_link(p.factors()[i], v[i]));
  return LinkComplex::join_of(std::move(parts));
}

HomologyProfile link_homology(const LinkComplex& l) {
  if (l.kind() == LinkComplex::Kind::join) return homology(l.complex());
  HomologyProfile out;
  const std::size_t n = l.vertex_count();
  if (n == 0) return out;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : l.edges()) {
    const auto a = root(e.a);
    const auto b = root(e.b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  out.groups.push_back({components - 1, {}});
  if (!l.edges().empty()) out.groups.push_back({l.edges().size() + components - n, {}});
  return out;
}

}  // namespace morsecert
